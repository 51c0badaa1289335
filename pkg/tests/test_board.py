import itertools

import pytest

from perc_arena.board import (
    Board,
    BoardError,
    BiRegularTreeSpec,
    RegularTreeSpec,
    build_generic,
    build_lattice_window,
    build_tree,
    contract_boundary,
    coord_edge,
    dual_of,
    edge_of_dual,
    sup_norm,
)


def brute_force_unit_edges(vertices):
    """Independent oracle: count unordered pairs at Euclidean distance 1."""
    vs = list(vertices)
    count = 0
    for a, b in itertools.combinations(vs, 2):
        if sum((x - y) ** 2 for x, y in zip(a, b)) == 1:
            count += 1
    return count


class TestLatticeWindow:
    def test_3x3_counts(self):
        b = build_lattice_window(2, 1, (0, 0))
        assert b.n_vertices == 9
        assert b.n_edges == 12
        assert len(b.boundary) == 8

    def test_1d_path(self):
        b = build_lattice_window(1, 2, (0,))
        assert b.n_vertices == 5
        assert b.n_edges == 4
        labels = {b.vertices[i] for i in b.boundary}
        assert labels == {(-2,), (2,)}

    def test_3d_window_counts_match_brute_force(self):
        b = build_lattice_window(3, 1, (0, 0, 0))
        assert b.n_vertices == 27
        assert b.n_edges == brute_force_unit_edges(b.vertices) == 54

    def test_boundary_is_exactly_the_shell(self):
        b = build_lattice_window(2, 3, (1, 0))
        for i, v in enumerate(b.vertices):
            assert (i in b.boundary) == (sup_norm(v) == 3)

    @pytest.mark.parametrize("root", [(1, 1), (2, 0), (5, 5)])
    def test_root_outside_interior_rejected(self, root):
        with pytest.raises(BoardError):
            build_lattice_window(2, 1, root)

    def test_bad_dims_rejected(self):
        with pytest.raises(BoardError):
            build_lattice_window(0, 2, ())
        with pytest.raises(BoardError):
            build_lattice_window(2, 0, (0, 0))

    def test_indexing_row_major_stable(self):
        b = build_lattice_window(2, 1, (0, 0))
        assert b.vertices == tuple(sorted(b.vertices))
        assert list(b.edges) == sorted(b.edges)


class TestTrees:
    def test_regular_depth2_edge_count(self):
        b = build_tree(RegularTreeSpec(3), 2)
        assert b.n_edges == 9  # 3 + 6

    def test_regular_d2_is_a_path(self):
        b = build_tree(RegularTreeSpec(2), 5)
        assert b.n_edges == 10
        assert len(b.boundary) == 2
        degs = [b.degree(v) for v in range(b.n_vertices)]
        assert sorted(degs)[:2] == [1, 1] and max(degs) == 2

    def test_biregular_root_type_II_children(self):
        b = build_tree(BiRegularTreeSpec(2, 3, root_type="II"), 1)
        assert b.degree(b.root) == 3
        assert all(b.meta["vtype"][v] == "I" for v in b.boundary)

    def test_biregular_degrees_internal(self):
        b = build_tree(BiRegularTreeSpec(2, 3, root_type="I"), 4)
        for v in range(b.n_vertices):
            if v in b.boundary:
                continue
            expected = 2 if b.meta["vtype"][v] == "I" else 3
            assert b.degree(v) == expected

    def test_boundary_is_depth_shell(self):
        b = build_tree(RegularTreeSpec(4), 3)
        for v in range(b.n_vertices):
            assert (v in b.boundary) == (b.meta["depth"][v] == 3)

    def test_invalid_specs(self):
        with pytest.raises(BoardError):
            build_tree(RegularTreeSpec(3), 0)
        with pytest.raises(BoardError):
            build_tree(BiRegularTreeSpec(3, 2), 2)  # a > b


class TestDualCoords:
    def test_horizontal_edge_midpoint(self):
        b = build_lattice_window(2, 2, (0, 0))
        e = coord_edge(b, (0, 0), (1, 0))
        d = dual_of(b, e)
        assert d.midpoint == (0.5, 0) and d.orientation == "horizontal"

    def test_vertical_edge_midpoint(self):
        b = build_lattice_window(2, 2, (0, 0))
        e = coord_edge(b, (2, -1), (2, 0))
        d = dual_of(b, e)
        assert d.midpoint == (2, -0.5) and d.orientation == "vertical"

    def test_dual_injective_and_invertible(self):
        b = build_lattice_window(2, 2, (0, 0))
        seen = set()
        for e in range(b.n_edges):
            d = dual_of(b, e)
            assert d.midpoint not in seen
            seen.add(d.midpoint)
            assert edge_of_dual(b, d) == e

    def test_dual_requires_2d_window(self):
        b = build_tree(RegularTreeSpec(3), 2)
        with pytest.raises(BoardError):
            dual_of(b, 0)


class TestContractBoundary:
    def test_3x3_contracts_to_center_plus_terminal(self):
        b = build_lattice_window(2, 1, (0, 0))
        g = contract_boundary(b)
        # Oracle: edges incident to the boundary minus the 8 ring edges,
        # which become loops and are dropped -> 4 parallel spokes.
        ring = sum(1 for u, v in b.edges if u in b.boundary and v in b.boundary)
        incident = sum(1 for u, v in b.edges if u in b.boundary or v in b.boundary)
        assert ring == 8 and incident == 12
        assert g.n_vertices == 2
        assert g.n_edges == incident - ring == 4
        assert g.boundary == {g.n_vertices - 1}

    def test_path_both_ends_boundary(self):
        b = build_generic(
            vertices=["a", "v0", "b"], edges=[(0, 1), (1, 2)], root=1, boundary=[0, 2]
        )
        g = contract_boundary(b)
        assert g.n_vertices == 2
        assert g.edges == ((0, 1), (0, 1))  # two parallel edges

    def test_single_edge(self):
        b = build_generic(vertices=["v0", "b"], edges=[(0, 1)], root=0, boundary=[1])
        g = contract_boundary(b)
        assert g.n_edges == 1 and g.n_vertices == 2

    def test_empty_boundary_rejected(self):
        b = build_generic(vertices=["v0"], edges=[], root=0, boundary=[])
        with pytest.raises(BoardError):
            contract_boundary(b)


class TestSerialization:
    def test_lattice_roundtrip_by_params(self):
        b = build_lattice_window(2, 2, (1, 0))
        b2 = Board.from_json(b.to_json())
        assert b2.vertices == b.vertices
        assert b2.edges == b.edges
        assert b2.root == b.root and b2.boundary == b.boundary

    def test_roundtrip_with_structure_included(self):
        b = build_tree(BiRegularTreeSpec(2, 4, root_type="I"), 3)
        b2 = Board.from_json(b.to_json(include_structure=True))
        assert b2.edges == b.edges and b2.boundary == b.boundary

    def test_generic_roundtrip(self):
        b = build_generic(
            vertices=["r", "x", "y", "z"],
            edges=[(0, 1), (0, 1), (1, 2), (1, 3)],
            root=0,
            boundary=[2, 3],
        )
        b2 = Board.from_json(b.to_json())
        assert b2.edges == b.edges
        assert b2.root == 0 and b2.boundary == {2, 3}

    def test_mismatched_declared_edges_rejected(self):
        import json

        b = build_lattice_window(2, 1, (0, 0))
        data = json.loads(b.to_json(include_structure=True))
        data["edges"][0] = [0, 2]
        with pytest.raises(BoardError):
            Board.from_json(json.dumps(data))

    def test_loops_rejected(self):
        with pytest.raises(BoardError):
            build_generic(vertices=["a", "b"], edges=[(0, 0)], root=0, boundary=[1])

    def test_disconnected_rejected(self):
        with pytest.raises(BoardError):
            build_generic(
                vertices=["a", "b", "c"], edges=[(0, 1)], root=0, boundary=[1]
            )
