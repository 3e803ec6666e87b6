"""Residual reports.

Every checker in this package reduces to a table of exact rational
residual entries indexed by basis tuples.  A Report stores only the
nonzero entries, sorted by index, so ok == (no nonzero entries) and
two runs of the same check produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .linalg import Q, Vector

Entry = tuple[tuple[int, ...], Q]


@dataclass(frozen=True)
class Report:
    kind: str
    context: str
    nonzero: tuple[Entry, ...]

    @property
    def ok(self) -> bool:
        return not self.nonzero

    def __bool__(self) -> bool:
        return self.ok


def from_entries(kind: str, context: str, entries: Iterable[Entry]) -> Report:
    kept = sorted((tuple(ix), v) for ix, v in entries if v)
    return Report(kind, context, tuple(kept))


def from_table(kind: str, context: str, table: Mapping[tuple[int, ...], Vector]) -> Report:
    """Flatten a {basis index tuple: residual vector} table, one entry per nonzero component."""
    entries = []
    for ix, v in table.items():
        for comp, val in enumerate(v):
            if val:
                entries.append((tuple(ix) + (comp,), val))
    return from_entries(kind, context, entries)


def merge(kind: str, context: str, reports: Iterable[Report]) -> Report:
    entries: list[Entry] = []
    for rep in reports:
        entries.extend(rep.nonzero)
    return from_entries(kind, context, entries)
