"""Workbench for Maker-Breaker percolation games on finite boards.

Subpackages:
    board      -- lattice windows, tree truncations, generic multigraphs,
                  planar-dual coordinates and annulus geometry
    engine     -- game state, legality, win detection, delete/contract reduction
    solver     -- exact minimax, Lehman two-tree criterion, closed-form tree deciders
    strategies -- executable winning strategies and the sub-games backing them
    harness    -- property suites turning potentials and turn bounds into checks
    service    -- FastAPI session API for interactive play
"""

__version__ = "0.1.0"
