"""Lifting operator identities to tensor solutions and back.

Each lift builds an enlarged algebra (a semidirect product, with the
original algebra in the first block), places the operator's tensor in
the off-diagonal blocks, and then recomputes both the operator-side
residual and the tensor-side residual.  The two verdicts must agree by
the corresponding equivalence theorem; a disagreement would mean a bug
in this package and raises LiftInternalError.

The module also contains the coboundary cocommutator and the Lie
coalgebra verdicts, which compare a direct dual-bracket computation
against the invariance + adjoint-family criterion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import reports
from .algebra import (
    GLieAlgebra,
    LieAlgebra,
    LinearMap,
    Representation,
    Space,
    adjoint_representation,
    coadjoint_representation,
    dual_representation,
    identity_map,
    module_target,
    semidirect_product,
    semidirect_with_module,
)
from .linalg import (
    Q,
    ZERO,
    basis_vec,
    frac,
    identity,
    inverse,
    mat_scale,
    mat_vec,
    transpose,
    vec_add,
    vec_sub,
    zeros,
)
from .operators import (
    cocycle_residuals,
    extended_o_residual,
    o_operator_residual,
    o_operator_weighted_residual,
    relative_differential_residual,
    rota_baxter_residual,
)
from .reports import Report
from .tensors import (
    Tensor2,
    map_to_tensor,
    sym_skew_parts,
    tensor2_from_entries,
    tensor_to_map,
    twist,
)
from .ybe import (
    ResidualTable,
    _coaction_matrix,
    cybe_residual,
    ecybe_residual,
    gcybe_residual,
    invariance_residual,
    is_invariant,
    table_is_zero,
)


class LiftInternalError(RuntimeError):
    """An equivalence theorem failed on a concrete instance."""


@dataclass(frozen=True)
class LiftResult:
    construction: str
    big: LieAlgebra
    tensors: tuple[Tensor2, ...] = ()
    maps: tuple[LinearMap, ...] = ()
    params: tuple[tuple[str, Q], ...] = ()
    operator_ok: bool = False
    lifted_ok: bool = False

    @property
    def is_solution(self) -> bool:
        return self.lifted_ok


def _check_agreement(construction: str, operator_ok: bool, lifted_ok: bool) -> None:
    if operator_ok != lifted_ok:
        raise LiftInternalError(
            f"{construction}: operator residual zero is {operator_ok} but "
            f"lifted residual zero is {lifted_ok}; the equivalence is violated"
        )


def _embed_tensor(t: Tensor2, big: LieAlgebra, row_offset: int, col_offset: int) -> Tensor2:
    entries = [(row_offset + i, col_offset + j, v) for i, j, v in t.items()]
    return tensor2_from_entries((big.space, big.space), entries)


def _operator_block_tensor(g: LieAlgebra, op: LinearMap, big: LieAlgebra) -> Tensor2:
    """The tensor of op : V -> g inside big = g + V*, rows in the V* block."""
    return _embed_tensor(map_to_tensor(op), big, g.dim, 0)


@lru_cache(maxsize=None)
def double_algebra(g: LieAlgebra, rho: Representation, name: str | None = None) -> LieAlgebra:
    """g + V* with the dualized action; the stage on which lifts live.

    Memoized: campaigns call this with the same handful of arguments
    thousands of times and construction revalidates the action.
    """
    return semidirect_with_module(g, dual_representation(rho), name)


def lift_o_operator(g: LieAlgebra, rho: Representation, op: LinearMap) -> LiftResult:
    """Skew lift of a relative operator; solves the Yang-Baxter equation on
    g + V* exactly when op is a relative (O-)operator."""
    big = double_algebra(g, rho)
    raw = _operator_block_tensor(g, op, big)
    r = Q(1, 2) * (raw - twist(raw))
    operator_ok = table_is_zero(o_operator_residual(g, rho, op))
    lifted_ok = cybe_residual(big, r).is_zero()
    _check_agreement("skew operator lift", operator_ok, lifted_ok)
    return LiftResult(
        "skew operator lift", big, tensors=(r,), operator_ok=operator_ok, lifted_ok=lifted_ok
    )


def lift_generalized(g: LieAlgebra, rho: Representation, op: LinearMap) -> LiftResult:
    """Skew lift of an arbitrary linear map op : V -> g; satisfies the
    generalized Yang-Baxter equation on g + V* exactly when op satisfies
    the cyclic condition on its obstruction together with the obstruction
    equivariance condition.  No operator identity on op is assumed."""
    big = double_algebra(g, rho)
    raw = _operator_block_tensor(g, op, big)
    r = Q(1, 2) * (raw - twist(raw))
    cyclic, equi = cocycle_residuals(g, rho, op)
    operator_ok = table_is_zero(cyclic) and table_is_zero(equi)
    lifted_ok = all(t.is_zero() for t in gcybe_residual(big, r))
    _check_agreement("generalized skew lift", operator_ok, lifted_ok)
    return LiftResult(
        "generalized skew lift", big, tensors=(r,), operator_ok=operator_ok, lifted_ok=lifted_ok
    )


def lift_extended(
    g: LieAlgebra,
    rho: Representation,
    op: LinearMap,
    ext: LinearMap,
    mass,
    sign: int = 1,
) -> LiftResult:
    """Skew lift of op plus sign * symmetric lift of ext; solves the
    extended equation of mass (mass + 1)/4 on g + V* exactly when op is an
    extended relative operator with extension ext of the given mass.

    The equivalence additionally requires the symmetric part of the lift
    to be invariant, which holds exactly when ext is genuinely
    antisymmetric and equivariant; this is checked and violations are
    reported as errors rather than silently producing a one-sided check.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    kappa = frac(mass)
    big = double_algebra(g, rho)
    raw_a = _operator_block_tensor(g, op, big)
    raw_b = _operator_block_tensor(g, ext, big)
    r_minus = Q(1, 2) * (raw_a - twist(raw_a))
    r_plus = Q(sign, 2) * (raw_b + twist(raw_b))
    r = r_minus + r_plus
    if not is_invariant(big, r_plus):
        raise ValueError(
            "symmetric part of the lift is not invariant; the extension map "
            "must be genuinely antisymmetric and equivariant"
        )
    operator_ok = table_is_zero(
        extended_o_residual(g, module_target(rho), op, ext, 0, kappa)
    )
    eps = (kappa + 1) / 4
    lifted_ok = ecybe_residual(big, r, eps).is_zero()
    _check_agreement("extended operator lift", operator_ok, lifted_ok)
    return LiftResult(
        "extended operator lift",
        big,
        tensors=(r,),
        params=(("mass", kappa), ("sign", Q(sign)), ("eps", eps)),
        operator_ok=operator_ok,
        lifted_ok=lifted_ok,
    )


def lift_baxter(g: LieAlgebra, op: LinearMap) -> LiftResult:
    """Both lifts of a candidate solution of the modified equation:
    skew lift of op plus and minus the symmetric identity lift.  Each is a
    Yang-Baxter solution on g + g* exactly when op solves the modified
    equation, i.e. is an extended operator with extension id of mass -1."""
    plus = lift_extended(g, adjoint_representation(g), op, identity_map(g.space), -1, 1)
    minus = lift_extended(g, adjoint_representation(g), op, identity_map(g.space), -1, -1)
    if plus.operator_ok != minus.operator_ok or plus.lifted_ok != minus.lifted_ok:
        raise LiftInternalError("the two signed lifts disagree")
    return LiftResult(
        "modified-equation pair lift",
        plus.big,
        tensors=(plus.tensors[0], minus.tensors[0]),
        params=(("mass", Q(-1)),),
        operator_ok=plus.operator_ok,
        lifted_ok=plus.lifted_ok,
    )


def lift_rb_weight(g: LieAlgebra, op: LinearMap, weight) -> LiftResult:
    """Two tensors on g + g* from a weighted Rota-Baxter candidate P:

        r1 = (2/weight) * skew(T(P)) + T(id)
        r2 = (2/weight) * skew(T(P)) - twist(T(id))

    where T places an operator tensor in the off-diagonal blocks.  Both
    solve the Yang-Baxter equation exactly when P is Rota-Baxter of the
    given (nonzero) weight.  The pair is the modified-equation lift of
    (2/weight) P + id, with the top-right and bottom-left identity blocks
    recombined.
    """
    lam = frac(weight)
    if not lam:
        raise ValueError("weight must be nonzero")
    big = double_algebra(g, adjoint_representation(g))
    t_p = _operator_block_tensor(g, op, big)
    t_id = _operator_block_tensor(g, identity_map(g.space), big)
    p_minus = Q(1, 2) * (t_p - twist(t_p))
    r1 = (2 / lam) * p_minus + t_id
    r2 = (2 / lam) * p_minus - twist(t_id)
    operator_ok = table_is_zero(rota_baxter_residual(g, op, lam))
    ok1 = cybe_residual(big, r1).is_zero()
    ok2 = cybe_residual(big, r2).is_zero()
    if ok1 != ok2:
        raise LiftInternalError("the two weighted lifts disagree")
    _check_agreement("weighted Rota-Baxter lift", operator_ok, ok1)
    return LiftResult(
        "weighted Rota-Baxter lift",
        big,
        tensors=(r1, r2),
        params=(("weight", lam),),
        operator_ok=operator_ok,
        lifted_ok=ok1,
    )


def _block_map(big: LieAlgebra, n: int, m: int, tl, tr, bl, br) -> LinearMap:
    rows = []
    for a in range(n):
        rows.append(tuple(tl[a]) + tuple(tr[a]))
    for b in range(m):
        rows.append(tuple(bl[b]) + tuple(br[b]))
    return LinearMap(big.space, big.space, tuple(rows))


def o_operator_to_rb(
    g: LieAlgebra, target: GLieAlgebra, op: LinearMap, weight, scale=1
) -> LiftResult:
    """Extend op : k -> g to (x, u) |-> (scale * op(u) - weight * x, 0) on
    the semidirect product g + k; it is Rota-Baxter of the given weight
    exactly when op is a relative operator of that weight.  The companion
    -weight * id - opbar is Rota-Baxter of the same weight exactly as often.

    A scale other than 1 is only meaningful when k is abelian (a module),
    where relative operators are weight-independent and stable under
    scaling.
    """
    lam, mu = frac(weight), frac(scale)
    if not mu:
        raise ValueError("scale must be nonzero")
    if mu != 1 and not target.k.is_abelian():
        raise ValueError("scaling the operator needs an abelian target")
    n, m = g.dim, target.k.dim
    big = semidirect_product(g, target)
    opbar = _block_map(
        big, n, m,
        mat_scale(-lam, identity(n)),
        mat_scale(mu, op.entries),
        zeros(m, n),
        zeros(m, m),
    )
    companion = (-lam) * identity_map(big.space) - opbar
    operator_ok = table_is_zero(o_operator_weighted_residual(g, target, op, lam))
    bar_ok = table_is_zero(rota_baxter_residual(big, opbar, lam))
    comp_ok = table_is_zero(rota_baxter_residual(big, companion, lam))
    if bar_ok != comp_ok:
        raise LiftInternalError("companion operator disagrees")
    _check_agreement("relative operator to Rota-Baxter", operator_ok, bar_ok)
    return LiftResult(
        "relative operator to Rota-Baxter",
        big,
        maps=(opbar, companion),
        params=(("weight", lam), ("scale", mu)),
        operator_ok=operator_ok,
        lifted_ok=bar_ok,
    )


def invertible_o_operator_to_rb(
    g: LieAlgebra, rho: Representation, op: LinearMap, weight, mu1, mu2
) -> LiftResult:
    """For invertible op : V -> g (dim V = dim g) and parameters
    mu1 != 0, mu2 != +-weight, the two-sided extension

        (x, u) |-> ( mu1 op(u) - (mu2+weight)/2 x,
                     (weight^2 - mu2^2)/(4 mu1) op^{-1}(x) + (mu2-weight)/2 u )

    on g + V is Rota-Baxter of the given weight exactly when op is a
    relative operator."""
    lam, m1, m2 = frac(weight), frac(mu1), frac(mu2)
    if not m1:
        raise ValueError("mu1 must be nonzero")
    if m2 == lam or m2 == -lam:
        raise ValueError("mu2 must differ from +-weight")
    n, m = g.dim, rho.space.dim
    if n != m:
        raise ValueError("invertible extension needs dim V = dim g")
    try:
        inv_entries = inverse(op.entries)
    except ValueError as e:
        raise ValueError(f"operator is not invertible: {e}") from None
    big = semidirect_with_module(g, rho)
    opbar = _block_map(
        big, n, m,
        mat_scale(-(m2 + lam) / 2, identity(n)),
        mat_scale(m1, op.entries),
        mat_scale((lam * lam - m2 * m2) / (4 * m1), inv_entries),
        mat_scale((m2 - lam) / 2, identity(m)),
    )
    operator_ok = table_is_zero(o_operator_residual(g, rho, op))
    lifted_ok = table_is_zero(rota_baxter_residual(big, opbar, lam))
    _check_agreement("invertible operator extension", operator_ok, lifted_ok)
    return LiftResult(
        "invertible operator extension",
        big,
        maps=(opbar,),
        params=(("weight", lam), ("mu1", m1), ("mu2", m2)),
        operator_ok=operator_ok,
        lifted_ok=lifted_ok,
    )


def reldiff_to_rb(
    g: LieAlgebra, target: GLieAlgebra, op: LinearMap, weight=None, scale=None
) -> LiftResult:
    """Relative differential operators as Rota-Baxter operators.

    Base form (weight and scale omitted): (x, u) |-> (x, f(x)) on g + k is
    Rota-Baxter of weight -1 exactly when f = op is a relative
    differential operator of weight 1; the companion id - fbar is
    Rota-Baxter of weight -1 exactly as often.

    Module form (both weight != 0 and scale != 0 given, abelian target):
    (x, u) |-> (-weight * x, scale * f(x)) is Rota-Baxter of the given
    weight exactly when f is a relative differential operator.
    """
    k = target.k
    if op.source.dim != g.dim or op.target.dim != k.dim:
        raise ValueError(f"operator must map {g.name} into {k.name}")
    n, m = g.dim, k.dim
    big = semidirect_product(g, target)
    if weight is None and scale is None:
        fbar = _block_map(big, n, m, identity(n), zeros(n, m), op.entries, zeros(m, m))
        companion = _block_map(
            big, n, m, zeros(n, n), zeros(n, m), mat_scale(Q(-1), op.entries), identity(m)
        )
        rb_weight = Q(-1)
        op_weight = Q(1)
        params = (("weight", rb_weight),)
        maps = (fbar, companion)
    else:
        lam = frac(weight if weight is not None else 0)
        mu = frac(scale if scale is not None else 1)
        if not lam or not mu:
            raise ValueError("module form needs nonzero weight and scale")
        if not k.is_abelian():
            raise ValueError("module form needs an abelian target")
        fbar = _block_map(
            big, n, m,
            mat_scale(-lam, identity(n)),
            zeros(n, m),
            mat_scale(mu, op.entries),
            zeros(m, m),
        )
        rb_weight = lam
        op_weight = Q(1)  # irrelevant on an abelian target
        params = (("weight", lam), ("scale", mu))
        maps = (fbar,)
    operator_ok = table_is_zero(relative_differential_residual(g, target, op, op_weight))
    verdicts = [table_is_zero(rota_baxter_residual(big, f, rb_weight)) for f in maps]
    if len(set(verdicts)) != 1:
        raise LiftInternalError("companion operator disagrees")
    _check_agreement("relative differential to Rota-Baxter", operator_ok, verdicts[0])
    return LiftResult(
        "relative differential to Rota-Baxter",
        big,
        maps=maps,
        params=params,
        operator_ok=operator_ok,
        lifted_ok=verdicts[0],
    )


def cocommutator(g: LieAlgebra, r: Tensor2) -> tuple[Tensor2, ...]:
    """delta(x) = (ad(x) (x) id + id (x) ad(x)) r for each basis x."""
    return invariance_residual(g, r)


def dual_bracket_tables(g: LieAlgebra, r: Tensor2) -> tuple[ResidualTable, ResidualTable]:
    """The bracket induced on g* by the cocommutator, computed two ways.

    pairing:  <[a, b], x> = <a (x) b, delta(x)>
    formula:  [a, b] = coad(r^ a) b + coad((r^t)^ b) a

    The two tables agree identically (the formula is the pairing computation
    unwound) and are returned over all ordered dual-basis pairs.
    """
    delta = cocommutator(g, r)
    n = g.dim
    pairing: ResidualTable = {}
    for i in range(n):
        for j in range(n):
            pairing[(i, j)] = tuple(delta[x].coeffs[i][j] for x in range(n))
    h = transpose(r.coeffs)
    ht = transpose(h)
    formula: ResidualTable = {}
    for i in range(n):
        a = basis_vec(n, i)
        for j in range(n):
            b = basis_vec(n, j)
            formula[(i, j)] = vec_add(
                mat_vec(_coaction_matrix(g, mat_vec(h, a)), b),
                mat_vec(_coaction_matrix(g, mat_vec(ht, b)), a),
            )
    return pairing, formula


def skew_dual_bracket(g: LieAlgebra, r: Tensor2) -> ResidualTable:
    """[a, b] = coad(r^_- a) b - coad(r^_- b) a, the skew-part form of the
    dual bracket.  For skew r this equals dual_bracket_tables output; for
    general r it keeps only the skew part of the tensor."""
    _, minus = sym_skew_parts(r)
    hm = transpose(minus.coeffs)
    n = g.dim
    out: ResidualTable = {}
    for i in range(n):
        a = basis_vec(n, i)
        for j in range(n):
            b = basis_vec(n, j)
            out[(i, j)] = vec_sub(
                mat_vec(_coaction_matrix(g, mat_vec(hm, a)), b),
                mat_vec(_coaction_matrix(g, mat_vec(hm, b)), a),
            )
    return out


@dataclass(frozen=True)
class CoalgebraReport:
    """Two verdicts on whether the cocommutator of r makes g* a Lie algebra.

    direct: antisymmetry and Jacobi of the induced dual bracket.
    criterion: invariance of the symmetric part of r plus vanishing of the
    adjoint family of the Yang-Baxter residual.
    The verdicts agree on every input.
    """

    antisymmetric: bool
    jacobi: Report | None
    plus_invariant: bool
    adjoint_family_zero: bool

    @property
    def direct_ok(self) -> bool:
        return self.antisymmetric and self.jacobi is not None and self.jacobi.ok

    @property
    def criterion_ok(self) -> bool:
        return self.plus_invariant and self.adjoint_family_zero

    @property
    def agree(self) -> bool:
        return self.direct_ok == self.criterion_ok

    @property
    def ok(self) -> bool:
        return self.direct_ok


def lie_coalgebra_report(g: LieAlgebra, r: Tensor2) -> CoalgebraReport:
    pairing, _ = dual_bracket_tables(g, r)
    n = g.dim
    antisym = all(
        all(pairing[(i, j)][x] == -pairing[(j, i)][x] for x in range(n))
        for i in range(n)
        for j in range(i, n)
    )
    jacobi = None
    if antisym:
        brackets = {}
        for i, j in itertools.combinations(range(n), 2):
            comps = {x: v for x, v in enumerate(pairing[(i, j)]) if v}
            if comps:
                brackets[(i, j)] = comps
        names = tuple(f"{nm}*" for nm in g.basis_names)
        dual_alg = LieAlgebra.from_brackets(f"{g.name}*[delta]", names, brackets)
        jacobi = dual_alg.check_jacobi()
    plus, _ = sym_skew_parts(r)
    plus_invariant = is_invariant(g, plus)
    family_zero = all(t.is_zero() for t in gcybe_residual(g, r))
    report = CoalgebraReport(antisym, jacobi, plus_invariant, family_zero)
    if not report.agree:
        raise LiftInternalError(
            "coalgebra verdicts disagree: direct "
            f"{report.direct_ok}, criterion {report.criterion_ok}"
        )
    return report
