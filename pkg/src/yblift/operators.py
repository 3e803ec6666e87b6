"""Checkers for operator identities: relative (O-)operators of any weight,
Rota-Baxter operators, extensions, cocycle conditions and relative
differential operators.

Targets are GLieAlgebra values: a module is the special case whose
underlying algebra is abelian, in which case every bracket term below
drops out and weights are irrelevant.  Operators map the target space
into the acting algebra except for relative differential operators,
which go the other way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import reports
from .algebra import (
    Element,
    GLieAlgebra,
    LieAlgebra,
    LinearMap,
    Representation,
    module_target,
)
from .linalg import Q, Vector, ZERO, frac, is_zero_vec, vec_add, vec_scale, vec_sub
from .reports import Report
from .ybe import ResidualTable, table_report


def _require_operator_shape(g: LieAlgebra, target: GLieAlgebra, op: LinearMap) -> None:
    if op.source.dim != target.k.dim or op.target.dim != g.dim:
        raise ValueError(
            f"operator must map {target.k.name} (dim {target.k.dim}) into "
            f"{g.name} (dim {g.dim}), got {op.source.tag} -> {op.target.tag}"
        )


def o_operator_residual(g: LieAlgebra, rho: Representation, op: LinearMap) -> ResidualTable:
    """[op u, op v] - op(rho(op u) v - rho(op v) u) over module basis pairs."""
    return o_operator_weighted_residual(g, module_target(rho), op, 0)


def o_operator_weighted_residual(
    g: LieAlgebra, target: GLieAlgebra, op: LinearMap, weight
) -> ResidualTable:
    """Weighted version: the bracket of the target enters with the weight.

    [op u, op v] - op(rho(op u) v - rho(op v) u + weight * [u, v]_k).
    """
    _require_operator_shape(g, target, op)
    lam = frac(weight)
    k, rho = target.k, target.action
    table: ResidualTable = {}
    for a, b in itertools.combinations(range(k.dim), 2):
        u, v = k.basis_element(a), k.basis_element(b)
        au, av = op(u), op(v)
        inner = vec_sub(rho.act(au, v), rho.act(av, u))
        if lam and not k.is_abelian():
            inner = vec_add(inner, vec_scale(lam, k.bracket(u, v)))
        table[(a, b)] = vec_sub(g.bracket(au, av), op(inner))
    return table


def rota_baxter_residual(L: LieAlgebra, op: LinearMap, weight) -> ResidualTable:
    """[Pu, Pv] - P([Pu, v] + [u, Pv] + weight * [u, v]) on the algebra itself."""
    if op.source.dim != L.dim or op.target.dim != L.dim:
        raise ValueError("operator does not act on the algebra")
    lam = frac(weight)
    table: ResidualTable = {}
    for i, j in itertools.combinations(range(L.dim), 2):
        u, v = L.basis_element(i), L.basis_element(j)
        pu, pv = op(u), op(v)
        inner = vec_add(L.bracket(pu, v), L.bracket(u, pv))
        if lam:
            inner = vec_add(inner, vec_scale(lam, L.bracket(u, v)))
        table[(i, j)] = vec_sub(L.bracket(pu, pv), op(inner))
    return table


@dataclass(frozen=True)
class ExtensionChecks:
    """Compatibility of an extension map ext : k -> g of mass (mass, mass2).

    antisymmetry:   mass * (rho(ext u) v + rho(ext v) u) = 0
    equivariance:   mass * (ext(rho(x) u) - [x, ext u]) = 0
    bracket_compat: mass2 * (rho(ext([u,v]_k)) w - [rho(ext u) v, w]_k) = 0

    A zero mass makes the corresponding condition vacuous; a nonzero mass
    is divided out, the field being the rationals.
    """

    antisymmetry: Report
    equivariance: Report
    bracket_compat: Report

    @property
    def ok(self) -> bool:
        return self.antisymmetry.ok and self.equivariance.ok and self.bracket_compat.ok


def antisymmetric_hom_report(
    g: LieAlgebra, target: GLieAlgebra, ext: LinearMap, mass, mass2=None
) -> ExtensionChecks:
    _require_operator_shape(g, target, ext)
    kappa = frac(mass)
    mu = frac(mass2) if mass2 is not None else ZERO
    k, rho = target.k, target.action
    anti: ResidualTable = {}
    equi: ResidualTable = {}
    compat: ResidualTable = {}
    if kappa:
        for a in range(k.dim):
            for b in range(a, k.dim):
                u, v = k.basis_element(a), k.basis_element(b)
                anti[(a, b)] = vec_add(rho.act(ext(u), v), rho.act(ext(v), u))
        for x in range(g.dim):
            for a in range(k.dim):
                u = k.basis_element(a)
                equi[(x, a)] = vec_sub(
                    ext(rho.act(g.basis_element(x), u)), g.bracket(g.basis_element(x), ext(u))
                )
    if mu and not k.is_abelian():
        # the right-hand side is not antisymmetric in (u, v), so all ordered
        # pairs matter, the diagonal included
        for a in range(k.dim):
            for b in range(k.dim):
                u, v = k.basis_element(a), k.basis_element(b)
                lhs_op = ext(k.bracket(u, v))
                inner = rho.act(ext(u), v)
                for d in range(k.dim):
                    w = k.basis_element(d)
                    compat[(a, b, d)] = vec_sub(rho.act(lhs_op, w), k.bracket(inner, w))
    ref = f"extension of {target.k.name} -> {g.name}"
    return ExtensionChecks(
        table_report("ext-antisymmetry", f"{ref}: action antisymmetry", anti),
        table_report("ext-equivariance", f"{ref}: equivariance", equi),
        table_report("ext-bracket", f"{ref}: bracket compatibility", compat),
    )


def extended_o_residual(
    g: LieAlgebra,
    target: GLieAlgebra,
    op: LinearMap,
    ext: LinearMap,
    weight,
    mass,
    mass2=None,
) -> ResidualTable:
    """[op u, op v] - op(rho(op u) v - rho(op v) u + weight [u,v]_k)
    - mass [ext u, ext v] - mass2 ext([u,v]_k)."""
    _require_operator_shape(g, target, op)
    _require_operator_shape(g, target, ext)
    lam, kappa = frac(weight), frac(mass)
    mu = frac(mass2) if mass2 is not None else ZERO
    k, rho = target.k, target.action
    table: ResidualTable = {}
    for a, b in itertools.combinations(range(k.dim), 2):
        u, v = k.basis_element(a), k.basis_element(b)
        au, av = op(u), op(v)
        inner = vec_sub(rho.act(au, v), rho.act(av, u))
        res = vec_sub(g.bracket(au, av), vec_scale(kappa, g.bracket(ext(u), ext(v))))
        if not k.is_abelian():
            kb = k.bracket(u, v)
            if lam:
                inner = vec_add(inner, vec_scale(lam, kb))
            if mu:
                res = vec_sub(res, vec_scale(mu, ext(kb)))
        table[(a, b)] = vec_sub(res, op(inner))
    return table


def o_operator_obstruction(
    g: LieAlgebra, rho: Representation, op: LinearMap, u: Vector, v: Vector
) -> Element:
    """[op u, op v] - op(rho(op u) v - rho(op v) u) on arbitrary vectors."""
    au, av = op(u), op(v)
    return vec_sub(g.bracket(au, av), op(vec_sub(rho.act(au, v), rho.act(av, u))))


def induced_bracket(g: LieAlgebra, rho: Representation, op: LinearMap) -> LieAlgebra:
    """The candidate bracket [u, v] = rho(op u) v - rho(op v) u on the module.

    Always antisymmetric; it satisfies Jacobi exactly when the cyclic
    residual below vanishes.
    """
    m = rho.space.dim
    brackets = {}
    for a, b in itertools.combinations(range(m), 2):
        u, v = [ZERO] * m, [ZERO] * m
        u[a] = Q(1)
        v[b] = Q(1)
        w = vec_sub(rho.act(op(tuple(u)), tuple(v)), rho.act(op(tuple(v)), tuple(u)))
        comps = {d: val for d, val in enumerate(w) if val}
        if comps:
            brackets[(a, b)] = comps
    names = tuple(f"u{a+1}" for a in range(m))
    return LieAlgebra.from_brackets(f"{rho.space.tag}[op]", names, brackets)


def induced_bracket_jacobi(g: LieAlgebra, rho: Representation, op: LinearMap) -> Report:
    return induced_bracket(g, rho, op).check_jacobi()


def cocycle_residuals(
    g: LieAlgebra, rho: Representation, op: LinearMap
) -> tuple[ResidualTable, ResidualTable]:
    """(cyclic, equivariance) residual tables of the obstruction B(u, v).

    cyclic:       rho(B(v, u)) w + rho(B(u, w)) v + rho(B(w, v)) u
    equivariance: [x, B(u, v)] - B(rho(x) u, v) - B(u, rho(x) v)

    The cyclic sum vanishes iff the induced bracket satisfies Jacobi; the
    equivariance table vanishes identically when op is equivariant enough,
    and both are zero for any relative operator.
    """
    m = rho.space.dim

    def basis(a: int) -> Vector:
        out = [ZERO] * m
        out[a] = Q(1)
        return tuple(out)

    bcache: dict[tuple[int, int], Element] = {}
    for a in range(m):
        for b in range(m):
            bcache[(a, b)] = o_operator_obstruction(g, rho, op, basis(a), basis(b))
    cyclic: ResidualTable = {}
    for a, b, c in itertools.combinations(range(m), 3):
        u, v, w = basis(a), basis(b), basis(c)
        s = vec_add(
            vec_add(rho.act(bcache[(b, a)], w), rho.act(bcache[(a, c)], v)),
            rho.act(bcache[(c, b)], u),
        )
        cyclic[(a, b, c)] = s
    equi: ResidualTable = {}
    for x in range(g.dim):
        xe = g.basis_element(x)
        for a, b in itertools.combinations(range(m), 2):
            u, v = basis(a), basis(b)
            val = vec_sub(
                g.bracket(xe, bcache[(a, b)]),
                vec_add(
                    o_operator_obstruction(g, rho, op, rho.act(xe, u), v),
                    o_operator_obstruction(g, rho, op, u, rho.act(xe, v)),
                ),
            )
            equi[(x, a, b)] = val
    return cyclic, equi


def relative_differential_residual(
    g: LieAlgebra, target: GLieAlgebra, op: LinearMap, weight
) -> ResidualTable:
    """f([x,y]) - rho(x) f(y) + rho(y) f(x) - weight [f(x), f(y)]_k
    for f = op : g -> k over basis pairs of g."""
    k, rho = target.k, target.action
    if op.source.dim != g.dim or op.target.dim != k.dim:
        raise ValueError(
            f"relative differential operator must map {g.name} into {k.name}"
        )
    lam = frac(weight)
    table: ResidualTable = {}
    for i, j in itertools.combinations(range(g.dim), 2):
        x, y = g.basis_element(i), g.basis_element(j)
        val = vec_sub(
            op(g.bracket(x, y)),
            vec_sub(rho.act(x, op(y)), rho.act(y, op(x))),
        )
        if lam and not k.is_abelian():
            val = vec_sub(val, vec_scale(lam, k.bracket(op(x), op(y))))
        table[(i, j)] = val
    return table


def weighted_cocycle_residuals(
    g: LieAlgebra, target: GLieAlgebra, op: LinearMap, weight
) -> tuple[ResidualTable, ResidualTable]:
    """The two obstructions for a weighted operator lift to kill the
    whole adjoint family of the Yang-Baxter residual:

        l1: weight * ( rho(op([u,v]_k)) w + cyclic )
        l2: weight * ( [x, op([u,v]_k)] - op([rho(x)u, v]_k) - op([u, rho(x)v]_k) )

    Both tables are identically zero when the weight is zero.
    """
    _require_operator_shape(g, target, op)
    lam = frac(weight)
    k, rho = target.k, target.action
    l1: ResidualTable = {}
    l2: ResidualTable = {}
    if lam and not k.is_abelian():
        for a, b, c in itertools.combinations(range(k.dim), 3):
            u, v, w = (k.basis_element(t) for t in (a, b, c))
            s = vec_add(
                vec_add(
                    rho.act(op(k.bracket(u, v)), w),
                    rho.act(op(k.bracket(w, u)), v),
                ),
                rho.act(op(k.bracket(v, w)), u),
            )
            l1[(a, b, c)] = vec_scale(lam, s)
        for x in range(g.dim):
            xe = g.basis_element(x)
            for a, b in itertools.combinations(range(k.dim), 2):
                u, v = k.basis_element(a), k.basis_element(b)
                val = vec_sub(
                    g.bracket(xe, op(k.bracket(u, v))),
                    vec_add(
                        op(k.bracket(rho.act(xe, u), v)),
                        op(k.bracket(u, rho.act(xe, v))),
                    ),
                )
                l2[(x, a, b)] = vec_scale(lam, val)
    return l1, l2
