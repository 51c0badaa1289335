"""Property reports: pass/fail per parameter cell, replayable on failure."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CellResult:
    params: dict
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None  # transcript text or move list repr

    def to_dict(self) -> dict:
        out = {"params": self.params, "passed": self.passed, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class PropertyReport:
    property_id: str
    seed: Optional[int] = None
    cells: list[CellResult] = field(default_factory=list)

    def add(self, params: dict, passed: bool, detail: str = "", counterexample=None) -> None:
        if not passed and counterexample is None:
            counterexample = "missing"  # a fail must carry something replayable
        self.cells.append(CellResult(params, passed, detail, counterexample))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def failures(self) -> list[CellResult]:
        return [c for c in self.cells if not c.passed]

    def to_json(self) -> str:
        return json.dumps(
            {
                "property": self.property_id,
                "seed": self.seed,
                "passed": self.passed,
                "cells": [c.to_dict() for c in self.cells],
            },
            indent=2,
            sort_keys=True,
            default=str,
        )
