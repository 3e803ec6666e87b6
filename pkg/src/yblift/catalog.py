"""Built-in algebras with verified distinguished tensors and operators.

Every entry is validated on first access: the algebra must satisfy
Jacobi, tensors named "skew-solution" must be skew Yang-Baxter solutions,
"casimir" must be the symmetric invariant tensor of the inverse Killing
form, and operators named "rb0" must be weight-0 Rota-Baxter operators.
A corrupted entry raises CatalogError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import LieAlgebra, LinearMap, check_invariant_form, killing_form, map_from_matrix
from .linalg import inverse
from .operators import rota_baxter_residual
from .tensors import Tensor2, is_skew, is_symmetric, wedge
from .ybe import cybe_residual, is_invariant, table_is_zero


class CatalogError(RuntimeError):
    """A built-in entry failed its self-validation."""


@dataclass(frozen=True)
class CatalogEntry:
    algebra: LieAlgebra
    description: str
    tensors: dict[str, Tensor2] = field(default_factory=dict)
    operators: dict[str, LinearMap] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.algebra.name


def casimir_tensor(L: LieAlgebra) -> Tensor2:
    """The symmetric invariant tensor with coefficient matrix inverse to
    the Killing form; only defined when the Killing form is nondegenerate."""
    form = killing_form(L)
    try:
        inv = inverse(form.gram)
    except ValueError:
        raise CatalogError(f"Killing form of {L.name} is degenerate") from None
    return Tensor2((L.space, L.space), inv)


def _A(name, names, brackets):
    return LieAlgebra.from_brackets(name, names, brackets)


def _build_entries() -> list[CatalogEntry]:
    entries = []
    for n in range(1, 5):
        entries.append(
            CatalogEntry(
                _A(f"abelian-{n}", tuple(f"e{i+1}" for i in range(n)), {}),
                f"abelian algebra of dimension {n}",
            )
        )

    aff1 = _A("aff1", ("e1", "e2"), {(0, 1): {0: 1}})
    entries.append(
        CatalogEntry(
            aff1,
            "nonabelian 2-dimensional algebra, [e1,e2] = e1",
            tensors={"skew-solution": wedge(aff1.space, 0, 1)},
            operators={"rb0": map_from_matrix(aff1.space, aff1.space, [[0, 1], [0, 0]])},
        )
    )

    heis = _A("heisenberg3", ("e1", "e2", "e3"), {(0, 1): {2: 1}})
    entries.append(
        CatalogEntry(
            heis,
            "3-dimensional Heisenberg algebra, [e1,e2] = e3",
            tensors={"skew-solution": wedge(heis.space, 0, 2)},
            operators={
                "rb0": map_from_matrix(
                    heis.space, heis.space, [[0, 0, 0], [0, 0, 0], [1, 0, 0]]
                )
            },
        )
    )

    sl2 = _A("sl2", ("e", "h", "f"), {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}})
    entries.append(
        CatalogEntry(
            sl2,
            "sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h",
            tensors={
                "casimir": casimir_tensor(sl2),
                "skew-solution": wedge(sl2.space, 0, 1),
            },
            operators={
                "rb0": map_from_matrix(
                    sl2.space, sl2.space, [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
                )
            },
        )
    )

    so3 = _A("so3", ("e1", "e2", "e3"), {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})
    entries.append(
        CatalogEntry(
            so3,
            "so3 with cyclic brackets [e1,e2] = e3 etc.",
            tensors={"casimir": casimir_tensor(so3)},
            operators={
                "rb0": map_from_matrix(
                    so3.space, so3.space, [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
                )
            },
        )
    )
    return entries


def _validate(entry: CatalogEntry) -> None:
    L = entry.algebra
    if not L.check_jacobi().ok:
        raise CatalogError(f"{L.name}: Jacobi identity fails")
    for nm, t in entry.tensors.items():
        if nm == "skew-solution":
            if not is_skew(t) or not cybe_residual(L, t).is_zero():
                raise CatalogError(f"{L.name}: {nm} is not a skew Yang-Baxter solution")
        elif nm == "casimir":
            if not is_symmetric(t) or not is_invariant(L, t):
                raise CatalogError(f"{L.name}: {nm} is not symmetric invariant")
            form = killing_form(L)
            if not check_invariant_form(L, form).ok:
                raise CatalogError(f"{L.name}: Killing form fails invariance")
        else:
            raise CatalogError(f"{L.name}: unknown tensor kind {nm!r}")
    for nm, m in entry.operators.items():
        if nm == "rb0":
            if not table_is_zero(rota_baxter_residual(L, m, 0)):
                raise CatalogError(f"{L.name}: {nm} is not Rota-Baxter of weight 0")
        else:
            raise CatalogError(f"{L.name}: unknown operator kind {nm!r}")


@lru_cache(maxsize=1)
def entries() -> dict[str, CatalogEntry]:
    built = _build_entries()
    for entry in built:
        _validate(entry)
    return {entry.name: entry for entry in built}


def get(name: str) -> CatalogEntry:
    table = entries()
    if name not in table:
        raise CatalogError(f"unknown catalog algebra {name!r}; have {sorted(table)}")
    return table[name]
