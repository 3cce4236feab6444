"""Built-in example models, stored as model-file dictionaries.

Each entry records the Gorenstein flag it is expected to have, so the catalog
doubles as a regression table.  ``None`` marks G-set models, where the flag
does not apply.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    data: dict
    gorenstein: Optional[bool]


def _diag(entries):
    n = len(entries)
    return [[entries[i] if i == j else "0" for j in range(n)] for i in range(n)]


def _an(k: int) -> dict:
    """[C^2/Z_(k+1)] acting by diag(z, z^-1)."""
    N = k + 1
    gen = _diag(["z", f"z^{k}" if k > 1 else "z"])
    return {"name": f"A{k}", "kind": "affine", "root_order": N, "dimension": 2, "generators": [gen],
            "description": f"C^2/Z_{N} with weights (1, {k})"}


def _pn(n: int) -> dict:
    return {"name": f"P{n}-trivial", "kind": "projective", "root_order": 1, "dimension": n + 1,
            "generators": [], "description": f"P^{n} with the trivial group"}


def _entries() -> list[CatalogEntry]:
    out = []
    for k in (1, 2, 3, 4):
        out.append(CatalogEntry(f"A{k}", f"[C^2/Z_{k + 1}], ADE type A_{k}", _an(k), True))
    out.append(CatalogEntry("C3-Z3-111", "[C^3/Z_3] with weights (1,1,1)", {
        "name": "C3-Z3-111", "kind": "affine", "root_order": 3, "dimension": 3,
        "generators": [_diag(["z", "z", "z"])],
    }, True))
    out.append(CatalogEntry("P2-Z3", "[P^2/Z_3] acting by diag(1, z, z^2)", {
        "name": "P2-Z3", "kind": "projective", "root_order": 3, "dimension": 3,
        "generators": [_diag(["1", "z", "z^2"])],
    }, True))
    out.append(CatalogEntry("P1-Z2", "[P^1/Z_2] acting by diag(1, -1); not Gorenstein", {
        "name": "P1-Z2", "kind": "projective", "root_order": 2, "dimension": 2,
        "generators": [_diag(["1", "-1"])],
    }, False))
    for n in (1, 2, 3, 4):
        out.append(CatalogEntry(f"P{n}-trivial", f"P^{n} with the trivial group", _pn(n), True))
    out.append(CatalogEntry("S3-perm", "S_3 permuting the coordinates of C^3; not Gorenstein", {
        "name": "S3-perm", "kind": "affine", "root_order": 3, "dimension": 3,
        "generators": [
            [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
            [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]],
        ],
    }, False))
    out.append(CatalogEntry("Q8-2d", "quaternion group in SL(2) acting on C^2", {
        "name": "Q8-2d", "kind": "affine", "root_order": 4, "dimension": 2,
        "generators": [_diag(["z", "-z"]), [["0", "1"], ["-1", "0"]]],
    }, True))
    out.append(CatalogEntry("C2-Z2-refl", "reflection diag(1, -1) on C^2; a quasi-reflection", {
        "name": "C2-Z2-refl", "kind": "affine", "root_order": 2, "dimension": 2,
        "generators": [_diag(["1", "-1"])],
    }, False))
    out.append(CatalogEntry("gset-S3-points", "S_3 permuting three points", {
        "name": "gset-S3-points", "kind": "gset", "group": "S3", "points": 3,
        "actions": [[1, 0, 2], [1, 2, 0]],
    }, None))
    out.append(CatalogEntry("gset-Z2-free-plus-fixed", "Z_2 swapping two points and fixing a third", {
        "name": "gset-Z2-free-plus-fixed", "kind": "gset", "generators": [[1, 0]], "points": 3,
        "actions": [[1, 0, 2]],
    }, None))
    out.append(CatalogEntry("gset-D4-square", "D_4 acting on the vertices and edges of a square", {
        "name": "gset-D4-square", "kind": "gset", "group": "D4", "points": 8,
        "actions": [[1, 2, 3, 0, 5, 6, 7, 4], [3, 2, 1, 0, 6, 5, 4, 7]],
    }, None))
    out.append(CatalogEntry("gset-suite", "exhaustive pushforward suite over small G-sets", {
        "name": "gset-suite", "kind": "gset", "group": "1", "points": 1, "actions": [],
        "suite": {"max_points": 6, "max_group_order": 8},
    }, None))
    return out


CATALOG = {e.name: e for e in _entries()}


def names() -> list[str]:
    return list(CATALOG)


def entry(name: str) -> CatalogEntry:
    return CATALOG[name]


def export(directory: str) -> list[str]:
    """Write every catalog entry as ``<name>.json``; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for e in CATALOG.values():
        path = os.path.join(directory, f"{e.name}.json")
        with open(path, "w") as fh:
            json.dump(e.data, fh, sort_keys=True, indent=2)
            fh.write("\n")
        paths.append(path)
    return paths
