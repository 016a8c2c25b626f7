"""Family files.

Plain format (canonical)::

    n m
    v0 v1 ... v_{n-1}      # m lines, one canonical path each

The structured format is a JSON document with ``n``, ``m``, ``paths`` and a
free-form ``metadata`` object.  Tree families use the same header followed by
lines of ``u-v`` edge tokens.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from hampaths import __version__
from hampaths.graph_core import EdgeSet, HamPath


class FamilyFormatError(ValueError):
    pass


def format_lines(paths: Sequence[HamPath], n: int | None = None) -> str:
    if n is None:
        if not paths:
            raise ValueError("n is required for an empty family")
        n = paths[0].n
    out = [f"{n} {len(paths)}"]
    out += [" ".join(map(str, p.order)) for p in paths]
    return "\n".join(out) + "\n"


def format_doc(paths: Sequence[HamPath], n: int | None = None, **metadata: object) -> str:
    if n is None:
        n = paths[0].n
    meta = {"generator": f"hampaths {__version__}", **metadata}
    return json.dumps({"n": n, "m": len(paths), "paths": [list(p.order) for p in paths], "metadata": meta}, indent=1) + "\n"


def _parse_path(tokens: Sequence[object], n: int, where: str) -> HamPath:
    try:
        order = tuple(int(t) for t in tokens)
    except (TypeError, ValueError):
        raise FamilyFormatError(f"{where}: non-integer vertex id") from None
    if len(order) != n:
        raise FamilyFormatError(f"{where}: expected {n} vertices, got {len(order)}")
    try:
        p = HamPath(order)
    except ValueError as exc:
        raise FamilyFormatError(f"{where}: {exc}") from None
    if p.order != order:
        raise FamilyFormatError(f"{where}: path not in canonical orientation (first id must be below last)")
    return p


def parse_family(text: str) -> tuple[int, list[HamPath], dict]:
    """Parse either format; duplicates are kept so that verification can report them."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            n, m, rows = int(doc["n"]), int(doc["m"]), doc["paths"]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FamilyFormatError(f"bad family document: {exc}") from None
        meta = doc.get("metadata", {})
    else:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise FamilyFormatError("empty family file")
        head = lines[0].split()
        if len(head) != 2:
            raise FamilyFormatError("header must be 'n m'")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise FamilyFormatError("header must be two integers") from None
        rows = [ln.split() for ln in lines[1:]]
        meta = {}
    if n < 1:
        raise FamilyFormatError(f"vertex count {n} must be positive")
    if len(rows) != m:
        raise FamilyFormatError(f"header announces {m} paths but {len(rows)} follow")
    return n, [_parse_path(r, n, f"path {i}") for i, r in enumerate(rows)], meta


def read_family(path: str | Path) -> tuple[int, list[HamPath], dict]:
    return parse_family(Path(path).read_text())


def write_family(path: str | Path, paths: Sequence[HamPath], fmt: str = "lines", n: int | None = None, **metadata: object) -> None:
    text = format_lines(paths, n) if fmt == "lines" else format_doc(paths, n, **metadata)
    Path(path).write_text(text)


def format_edge_family(graphs: Sequence[EdgeSet]) -> str:
    n = graphs[0].n if graphs else 0
    out = [f"{n} {len(graphs)}"]
    out += [" ".join(f"{u}-{v}" for u, v in g.pairs()) for g in graphs]
    return "\n".join(out) + "\n"


def parse_edge_family(text: str) -> list[EdgeSet]:
    lines = text.splitlines()
    try:
        n, m = map(int, lines[0].split())
        graphs = []
        for ln in lines[1:m + 1]:
            pairs = [tuple(map(int, tok.split("-"))) for tok in ln.split()]
            graphs.append(EdgeSet.from_pairs(n, pairs))
    except (IndexError, ValueError) as exc:
        raise FamilyFormatError(f"bad edge family: {exc}") from None
    if len(graphs) != m:
        raise FamilyFormatError(f"header announces {m} graphs but {len(graphs)} follow")
    return graphs
