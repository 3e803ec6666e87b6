"""File formats.

All documents are JSON.  Rationals are strings "p" or "p/q" (floats are
rejected everywhere), indices in files are 1-based while everything in
memory is 0-based, and machine output is canonical: sorted keys, no
whitespace, one trailing newline, so identical runs are byte-identical.

algebra:  {"name": ..., "dim": n, "basis_names": [...],
           "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
tensor:   {"space": tag, "dim": n, "entries": [[i, j, "p/q"], ...]}
map:      {"source": tag, "target": tag, "matrix": [["p/q", ...], ...]}
report:   {"ok": bool, "kind": ..., "context": ...,
           "nonzero": [[[indices...], "p/q"], ...]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .algebra import LieAlgebra, LinearMap, Space
from .linalg import Q
from .reports import Report
from .tensors import Tensor2, Tensor3, tensor2_from_entries

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class FormatError(ValueError):
    """Malformed document."""


def rational_to_str(q: Q) -> str:
    return str(Fraction(q))


def parse_rational(x) -> Q:
    if isinstance(x, bool):
        raise FormatError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, float):
        raise FormatError(f"floating point value not allowed: {x!r}")
    if isinstance(x, str) and _RATIONAL.match(x):
        return Q(x)
    raise FormatError(f"not a rational: {x!r}")


def _expect(doc: dict, key: str, kind) -> object:
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, kind):
        raise FormatError(f"field {key!r} has wrong type")
    return val


def algebra_to_doc(L: LieAlgebra) -> dict:
    brackets = []
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            comps = [[k + 1, rational_to_str(L.c[i][j][k])] for k in range(n) if L.c[i][j][k]]
            if comps:
                brackets.append([i + 1, j + 1, comps])
    return {
        "name": L.name,
        "dim": n,
        "basis_names": list(L.basis_names),
        "brackets": brackets,
    }


def algebra_from_doc(doc: dict, fallback_name: str = "L") -> LieAlgebra:
    dim = _expect(doc, "dim", int)
    names = _expect(doc, "basis_names", list)
    if len(names) != dim or not all(isinstance(nm, str) for nm in names):
        raise FormatError("basis_names must list dim strings")
    raw = _expect(doc, "brackets", list)
    brackets: dict[tuple[int, int], dict[int, Q]] = {}
    for item in raw:
        if not (isinstance(item, list) and len(item) == 3):
            raise FormatError(f"malformed bracket entry: {item!r}")
        i, j, comps = item
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= dim and 1 <= j <= dim):
            raise FormatError(f"bracket index out of range: {item!r}")
        if (i - 1, j - 1) in brackets:
            raise FormatError(f"duplicate bracket entry for ({i}, {j})")
        table = {}
        for comp in comps:
            if not (isinstance(comp, list) and len(comp) == 2 and isinstance(comp[0], int)):
                raise FormatError(f"malformed bracket component: {comp!r}")
            k, v = comp
            if not 1 <= k <= dim:
                raise FormatError(f"bracket component out of range: {comp!r}")
            if k - 1 in table:
                raise FormatError(f"duplicate component {k} in bracket ({i}, {j})")
            table[k - 1] = parse_rational(v)
        brackets[(i - 1, j - 1)] = table
    name = doc.get("name", fallback_name)
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    try:
        return LieAlgebra.from_brackets(name, tuple(names), brackets)
    except ValueError as e:
        raise FormatError(str(e)) from None


def tensor2_to_doc(r: Tensor2) -> dict:
    return {
        "space": r.spaces[0].tag,
        "dim": r.spaces[0].dim,
        "entries": sorted([i + 1, j + 1, rational_to_str(v)] for i, j, v in r.items()),
    }


def tensor2_from_doc(doc: dict, space: Space) -> Tensor2:
    tag = _expect(doc, "space", str)
    if tag != space.tag:
        raise FormatError(f"tensor space {tag!r} does not match {space.tag!r}")
    if "dim" in doc and doc["dim"] != space.dim:
        raise FormatError(f"tensor dim {doc['dim']!r} does not match {space.dim}")
    entries = []
    for item in _expect(doc, "entries", list):
        if not (isinstance(item, list) and len(item) == 3):
            raise FormatError(f"malformed tensor entry: {item!r}")
        i, j, v = item
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= space.dim and 1 <= j <= space.dim):
            raise FormatError(f"tensor index out of range: {item!r}")
        entries.append((i - 1, j - 1, parse_rational(v)))
    seen = set()
    for i, j, _ in entries:
        if (i, j) in seen:
            raise FormatError(f"duplicate tensor entry ({i + 1}, {j + 1})")
        seen.add((i, j))
    return tensor2_from_entries((space, space), entries)


def tensor3_to_doc(t: Tensor3) -> dict:
    return {
        "space": t.spaces[0].tag,
        "entries": sorted(
            [i + 1, j + 1, k + 1, rational_to_str(v)] for i, j, k, v in t.items()
        ),
    }


def map_to_doc(m: LinearMap) -> dict:
    return {
        "source": m.source.tag,
        "target": m.target.tag,
        "matrix": [[rational_to_str(v) for v in row] for row in m.entries],
    }


def map_from_doc(doc: dict, source: Space, target: Space) -> LinearMap:
    src = _expect(doc, "source", str)
    dst = _expect(doc, "target", str)
    if src != source.tag or dst != target.tag:
        raise FormatError(
            f"map spaces {src!r} -> {dst!r} do not match {source.tag!r} -> {target.tag!r}"
        )
    rows = _expect(doc, "matrix", list)
    if len(rows) != target.dim or any(
        not isinstance(row, list) or len(row) != source.dim for row in rows
    ):
        raise FormatError(
            f"matrix must be {target.dim} rows of {source.dim} entries"
        )
    entries = tuple(tuple(parse_rational(v) for v in row) for row in rows)
    return LinearMap(source, target, entries)


def report_to_doc(rep: Report) -> dict:
    # indices are 1-based on the wire, like every other file format here
    return {
        "ok": rep.ok,
        "kind": rep.kind,
        "context": rep.context,
        "nonzero": [[[i + 1 for i in ix], rational_to_str(v)] for ix, v in rep.nonzero],
    }


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def load_json(path) -> dict:
    text = Path(path).read_text()
    try:
        doc = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON in {path}: {e}") from None
    return doc


def save_json(path, doc) -> None:
    Path(path).write_text(dumps(doc))


def _reject_float(s):
    raise FormatError(f"floating point value not allowed: {s}")
