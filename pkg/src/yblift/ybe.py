"""Checkers for Yang-Baxter-type tensor equations.

All checkers return exact residuals: a tensor, a family of tensors
indexed by a basis element, or a table of element residuals indexed by
basis tuples.  A residual of exactly zero means the equation holds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import reports
from .algebra import Element, LieAlgebra, LinearMap, adjoint_representation
from .linalg import (
    Matrix,
    Q,
    Vector,
    ZERO,
    basis_vec,
    is_zero_vec,
    mat_add,
    mat_scale,
    mat_vec,
    transpose,
    vec_add,
    vec_sub,
)
from .reports import Report
from .tensors import (
    Tensor2,
    Tensor3,
    _pair_brackets,
    _require_on_algebra,
    mass_term,
    sym_skew_parts,
    tensor2_from_entries,
    tensor3_from_entries,
    tensor_to_map,
    twist,
    yang_baxter_brackets,
)

ResidualTable = dict[tuple[int, ...], Vector]


def table_is_zero(table: ResidualTable) -> bool:
    return all(is_zero_vec(v) for v in table.values())


def table_report(kind: str, context: str, table: ResidualTable) -> Report:
    return reports.from_table(kind, context, table)


def tensor3_report(kind: str, context: str, t: Tensor3) -> Report:
    return reports.from_entries(kind, context, (((i, j, k), v) for i, j, k, v in t.items()))


def family_report(kind: str, context: str, family) -> Report:
    entries = []
    for x, t in enumerate(family):
        if isinstance(t, Tensor3):
            entries.extend(((x, i, j, k), v) for i, j, k, v in t.items())
        else:
            entries.extend(((x, i, j), v) for i, j, v in t.items())
    return reports.from_entries(kind, context, entries)


def cybe_residual(L: LieAlgebra, r: Tensor2) -> Tensor3:
    """[r12, r13] + [r12, r23] + [r13, r23]."""
    b1, b2, b3 = yang_baxter_brackets(L, r, r)
    return b1 + b2 + b3


def ecybe_residual(L: LieAlgebra, r: Tensor2, eps) -> Tensor3:
    """Extended equation of mass eps: cybe_residual(r) - eps * mass_term(r)."""
    return cybe_residual(L, r) - (Q(eps) * mass_term(L, r))


def invariance_residual(L: LieAlgebra, r: Tensor2) -> tuple[Tensor2, ...]:
    """(ad(x) (x) id + id (x) ad(x)) r for each basis element x of g."""
    _require_on_algebra(L, r)
    pb = _pair_brackets(L)
    out = []
    spaces = (L.space, L.space)
    for x in range(L.dim):
        entries = []
        for a, b, v in r.items():
            for k, cv in pb.get((x, a), ()):
                entries.append((k, b, v * cv))
            for k, cv in pb.get((x, b), ()):
                entries.append((a, k, v * cv))
        out.append(tensor2_from_entries(spaces, entries))
    return tuple(out)


def is_invariant(L: LieAlgebra, r: Tensor2) -> bool:
    return all(t.is_zero() for t in invariance_residual(L, r))


def gcybe_residual(L: LieAlgebra, r: Tensor2) -> tuple[Tensor3, ...]:
    """(ad(x) (x) id (x) id + id (x) ad(x) (x) id + id (x) id (x) ad(x))
    applied to the Yang-Baxter residual, for each basis element x."""
    t = cybe_residual(L, r)
    pb = _pair_brackets(L)
    spaces = (L.space, L.space, L.space)
    items = list(t.items())
    out = []
    for x in range(L.dim):
        entries = []
        for a, b, c, v in items:
            for k, cv in pb.get((x, a), ()):
                entries.append((k, b, c, v * cv))
            for k, cv in pb.get((x, b), ()):
                entries.append((a, k, c, v * cv))
            for k, cv in pb.get((x, c), ()):
                entries.append((a, b, k, v * cv))
        out.append(tensor3_from_entries(spaces, entries))
    return tuple(out)


def _coaction_matrix(L: LieAlgebra, y: Element) -> Matrix:
    """Matrix of the dual action of y on g*-coordinates, -ad(y)^T."""
    ad = adjoint_representation(L)
    return mat_scale(Q(-1), transpose(ad.matrix_of(y)))


@dataclass(frozen=True)
class SymmetricTensorChecks:
    """The three equivalent descriptions of an invariant symmetric tensor:
    (a) the tensor is killed by every ad(x) (x) id + id (x) ad(x),
    (b) the induced map r^ : g* -> g satisfies
        coad(r^ a)(b) + coad(r^ b)(a) = 0 for all a, b in g*,
    (c) r^ intertwines the coadjoint and adjoint actions,
        r^(coad(x) a) = [x, r^ a].
    For symmetric r the three verdicts always agree.
    """

    tensor_invariant: Report
    map_antisymmetric: Report
    map_equivariant: Report

    @property
    def verdicts(self) -> tuple[bool, bool, bool]:
        return (self.tensor_invariant.ok, self.map_antisymmetric.ok, self.map_equivariant.ok)

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts)) == 1

    @property
    def ok(self) -> bool:
        return self.agree and self.tensor_invariant.ok


def symmetric_invariance_checks(L: LieAlgebra, r: Tensor2) -> SymmetricTensorChecks:
    _require_on_algebra(L, r)
    if not (twist(r) - r).is_zero():
        raise ValueError("tensor is not symmetric")
    n = L.dim
    inv = family_report(
        "invariance", f"invariance of symmetric tensor on {L.name}", invariance_residual(L, r)
    )
    h = tensor_to_map(r)
    anti: ResidualTable = {}
    for i in range(n):
        for j in range(i, n):
            a, b = basis_vec(n, i), basis_vec(n, j)
            v = vec_add(
                mat_vec(_coaction_matrix(L, h(a)), b),
                mat_vec(_coaction_matrix(L, h(b)), a),
            )
            anti[(i, j)] = v
    equi: ResidualTable = {}
    for x in range(n):
        cm = _coaction_matrix(L, L.basis_element(x))
        for j in range(n):
            a = basis_vec(n, j)
            v = vec_sub(h(mat_vec(cm, a)), L.bracket(L.basis_element(x), h(a)))
            equi[(x, j)] = v
    return SymmetricTensorChecks(
        inv,
        table_report("map-antisymmetry", f"induced map antisymmetry on {L.name}", anti),
        table_report("map-equivariance", f"induced map equivariance on {L.name}", equi),
    )


def modified_ybe_residual(L: LieAlgebra, op: LinearMap) -> ResidualTable:
    """[Rx, Ry] - R([Rx, y] + [x, Ry]) + [x, y] over basis pairs x < y."""
    if op.source.dim != L.dim or op.target.dim != L.dim:
        raise ValueError("operator does not act on the algebra")
    table: ResidualTable = {}
    for i, j in itertools.combinations(range(L.dim), 2):
        x, y = L.basis_element(i), L.basis_element(j)
        rx, ry = op(x), op(y)
        val = vec_add(
            vec_sub(L.bracket(rx, ry), op(vec_add(L.bracket(rx, y), L.bracket(x, ry)))),
            L.bracket(x, y),
        )
        table[(i, j)] = val
    return table


def kupershmidt_residual(L: LieAlgebra, r: Tensor2) -> ResidualTable:
    """Dual-space operator form of the Yang-Baxter equation.

    Requires the symmetric part of r to be invariant (error otherwise).
    For a, b ranging over the dual basis the residual is

        [r^ a, r^ b] - r^( coad(r^ a) b - coad(r^ b) a - coad((r + r^t)^ a) b )

    and it vanishes for all pairs iff cybe_residual(L, r) vanishes.  For
    skew r the last term drops and this is the classical operator form.
    """
    _require_on_algebra(L, r)
    plus, _ = sym_skew_parts(r)
    if not is_invariant(L, plus):
        raise ValueError("symmetric part of the tensor is not invariant")
    n = L.dim
    h = transpose(r.coeffs)
    sym2 = mat_add(h, transpose(h))
    hmap = tensor_to_map(r)
    table: ResidualTable = {}
    for i, j in itertools.combinations(range(n), 2):
        a, b = basis_vec(n, i), basis_vec(n, j)
        x, y = mat_vec(h, a), mat_vec(h, b)
        t = vec_sub(
            vec_sub(
                mat_vec(_coaction_matrix(L, x), b),
                mat_vec(_coaction_matrix(L, y), a),
            ),
            mat_vec(_coaction_matrix(L, mat_vec(sym2, a)), b),
        )
        table[(i, j)] = vec_sub(L.bracket(x, y), mat_vec(h, t))
    return table
