"""Finite-dimensional Lie algebras, representations and semidirect products
over the rationals.

Conventions used throughout the package:

  * A Lie algebra of dimension n is stored by dense structure constants
    c[i][j][k] with 0-based indices, so [e_i, e_j] = sum_k c[i][j][k] e_k.
  * Elements are coordinate tuples of Fraction in the chosen basis.
  * A representation rho of g on V is one matrix per basis element of g,
    acting on column coordinate vectors: (rho(e_i) v)_a = mats[i][a][b] v_b.
  * The dual space V* is identified with coordinate vectors in the dual
    basis; the pairing <a, v> is the plain dot product.  The dual of a
    representation acts by -transpose, and the double dual is literally
    the original space again.
  * In every semidirect product the algebra block comes first and the
    module/ideal block second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from . import reports
from .linalg import (
    Matrix,
    Q,
    Vector,
    ZERO,
    basis_vec,
    commutator,
    determinant,
    frac,
    identity,
    is_zero_mat,
    is_zero_vec,
    mat,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_vec,
    shape,
    trace,
    transpose,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vec,
    zeros,
)
from .reports import Report

Element = Vector


@dataclass(frozen=True)
class Space:
    """A tagged coordinate space; is_dual tracks primal vs dual so that
    taking the dual twice returns the original space.  Direct sums carry
    their summands so that the dual distributes over them."""

    name: str
    dim: int
    is_dual: bool = False
    parts: tuple["Space", ...] = ()

    @property
    def tag(self) -> str:
        return self.name + ("*" if self.is_dual else "")

    def dual(self) -> "Space":
        if self.parts:
            return direct_sum_space(*(p.dual() for p in self.parts))
        return Space(self.name, self.dim, not self.is_dual)

    def __str__(self) -> str:
        return self.tag


def direct_sum_space(*summands: Space) -> Space:
    name = "(+)".join(s.tag for s in summands)
    return Space(name, sum(s.dim for s in summands), False, tuple(summands))


@dataclass(frozen=True)
class LieAlgebra:
    name: str
    basis_names: tuple[str, ...]
    c: tuple[tuple[Vector, ...], ...]  # c[i][j][k], antisymmetric in (i, j)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @cached_property
    def space(self) -> Space:
        return Space(self.name, self.dim)

    @cached_property
    def _nonzero(self) -> tuple[tuple[int, int, int, Q], ...]:
        n = self.dim
        return tuple(
            (i, j, k, self.c[i][j][k])
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if self.c[i][j][k]
        )

    @classmethod
    def from_brackets(
        cls,
        name: str,
        basis_names: Sequence[str],
        brackets: Mapping[tuple[int, int], Mapping[int, object]],
    ) -> "LieAlgebra":
        """Build from a sparse 0-based table {(i, j): {k: coeff}}.

        Missing pairs are zero; [e_j, e_i] is filled in by antisymmetry.
        Giving (i, i), or both (i, j) and (j, i) inconsistently, is an error.
        """
        n = len(basis_names)
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for (i, j), comps in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bracket index out of range: ({i}, {j})")
            if i == j and any(frac(v) for v in comps.values()):
                raise ValueError(f"nonzero bracket [e_{i}, e_{i}]")
            if (j, i) in seen:
                for k, v in comps.items():
                    if c[j][i][k] != -frac(v):
                        raise ValueError(
                            f"conflicting entries for ({i}, {j}) and ({j}, {i})"
                        )
                continue
            seen.add((i, j))
            for k, v in comps.items():
                if not 0 <= k < n:
                    raise ValueError(f"bracket component out of range: {k}")
                c[i][j][k] = frac(v)
                c[j][i][k] = -frac(v)
        frozen = tuple(tuple(tuple(row) for row in plane) for plane in c)
        return cls(name, tuple(basis_names), frozen)

    def basis_element(self, i: int) -> Element:
        return basis_vec(self.dim, i)

    def element(self, coeffs: Mapping[str, object]) -> Element:
        out = [ZERO] * self.dim
        for nm, v in coeffs.items():
            out[self.basis_names.index(nm)] = frac(v)
        return tuple(out)

    def format_element(self, v: Element) -> str:
        parts = []
        for coeff, nm in zip(v, self.basis_names):
            if not coeff:
                continue
            if coeff == 1:
                parts.append(nm)
            elif coeff == -1:
                parts.append(f"-{nm}")
            else:
                parts.append(f"{coeff}*{nm}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def bracket(self, x: Element, y: Element) -> Element:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(
                f"element dimension mismatch: {self.name} has dim {self.dim}, "
                f"got {len(x)} and {len(y)}"
            )
        out = [ZERO] * self.dim
        for i, j, k, v in self._nonzero:
            if x[i] and y[j]:
                out[k] += x[i] * y[j] * v
        return tuple(out)

    def is_abelian(self) -> bool:
        return not self._nonzero

    def check_jacobi(self) -> Report:
        """Jacobi residual [[x,y],z] + [[z,x],y] + [[y,z],x] over basis triples
        i < j < k; triples with a repeated index vanish for any antisymmetric
        bracket and are omitted."""
        table = {}
        for i, j, k in itertools.combinations(range(self.dim), 3):
            x, y, z = (self.basis_element(t) for t in (i, j, k))
            s = vec_add(
                vec_add(self.bracket(self.bracket(x, y), z), self.bracket(self.bracket(z, x), y)),
                self.bracket(self.bracket(y, z), x),
            )
            if not is_zero_vec(s):
                table[(i, j, k)] = s
        return reports.from_table("jacobi", f"Jacobi identity on {self.name}", table)


def abelian_algebra(n: int, name: str | None = None, basis_names: Sequence[str] | None = None) -> LieAlgebra:
    if basis_names is None:
        basis_names = tuple(f"e{i+1}" for i in range(n))
    return LieAlgebra.from_brackets(name or f"abelian-{n}", basis_names, {})


@dataclass(frozen=True)
class Representation:
    """An action of `algebra` on the coordinate space `space`."""

    algebra: LieAlgebra
    space: Space
    mats: tuple[Matrix, ...]

    def act(self, x: Element, v: Vector) -> Vector:
        if len(x) != self.algebra.dim or len(v) != self.space.dim:
            raise ValueError("representation argument dimension mismatch")
        out = zero_vec(self.space.dim)
        for i, xi in enumerate(x):
            if xi:
                out = vec_add(out, vec_scale(xi, mat_vec(self.mats[i], v)))
        return out

    def matrix_of(self, x: Element) -> Matrix:
        out = zeros(self.space.dim, self.space.dim)
        for i, xi in enumerate(x):
            if xi:
                out = mat_add(out, mat_scale(xi, self.mats[i]))
        return out


def adjoint_representation(L: LieAlgebra) -> Representation:
    n = L.dim
    mats = tuple(
        tuple(tuple(L.c[i][j][k] for j in range(n)) for k in range(n))
        for i in range(n)
    )
    return Representation(L, L.space, mats)


def dual_representation(rho: Representation) -> Representation:
    """The action on the dual space, rho*(x) = -rho(x)^T."""
    mats = tuple(mat_scale(Q(-1), transpose(m)) for m in rho.mats)
    return Representation(rho.algebra, rho.space.dual(), mats)


def coadjoint_representation(L: LieAlgebra) -> Representation:
    return dual_representation(adjoint_representation(L))


def trivial_representation(L: LieAlgebra, n: int, name: str = "triv") -> Representation:
    mats = tuple(zeros(n, n) for _ in range(L.dim))
    return Representation(L, Space(name, n), mats)


def check_representation(rho: Representation) -> Report:
    """rho([e_i, e_j]) - [rho(e_i), rho(e_j)] over basis pairs i < j."""
    L = rho.algebra
    entries = []
    for i, j in itertools.combinations(range(L.dim), 2):
        lhs = rho.matrix_of(L.bracket(L.basis_element(i), L.basis_element(j)))
        diff = mat_sub(lhs, commutator(rho.mats[i], rho.mats[j]))
        for a in range(rho.space.dim):
            for b in range(rho.space.dim):
                if diff[a][b]:
                    entries.append(((i, j, a, b), diff[a][b]))
    return reports.from_entries(
        "representation", f"homomorphism property of action of {L.name} on {rho.space}", entries
    )


@dataclass(frozen=True)
class GLieAlgebra:
    """A Lie algebra k together with an action of an outer algebra g on it.

    When k is abelian this is just a module; otherwise semidirect products
    additionally require g to act by derivations of the bracket of k.
    """

    k: LieAlgebra
    action: Representation

    @property
    def g(self) -> LieAlgebra:
        return self.action.algebra

    def __post_init__(self):
        if self.action.space.dim != self.k.dim:
            raise ValueError("action space does not match k")


def module_target(rho: Representation, basis_names: Sequence[str] | None = None) -> GLieAlgebra:
    """View a module as a g-Lie-algebra target with zero bracket."""
    if basis_names is None:
        basis_names = _module_basis_names(rho)
    k = LieAlgebra.from_brackets(rho.space.tag, basis_names, {})
    return GLieAlgebra(k, rho)


def self_target(L: LieAlgebra) -> GLieAlgebra:
    """The algebra acting on itself by the adjoint action, keeping its bracket."""
    return GLieAlgebra(L, adjoint_representation(L))


def _module_basis_names(rho: Representation) -> tuple[str, ...]:
    g = rho.algebra
    if rho.space == g.space:
        return g.basis_names
    if rho.space == g.space.dual():
        return tuple(f"{nm}*" for nm in g.basis_names)
    return tuple(f"v{a+1}" for a in range(rho.space.dim))


def check_derivation_action(target: GLieAlgebra) -> Report:
    """The action must be a representation and act by derivations of [,]_k."""
    rho, k = target.action, target.k
    rep = check_representation(rho)
    if k.is_abelian():
        return reports.merge("derivation-action", rep.context, [rep])
    g = target.g
    entries = list(rep.nonzero)
    for i in range(g.dim):
        m = rho.mats[i]
        for a, b in itertools.combinations(range(k.dim), 2):
            u, v = k.basis_element(a), k.basis_element(b)
            lhs = mat_vec(m, k.bracket(u, v))
            rhs = vec_add(k.bracket(mat_vec(m, u), v), k.bracket(u, mat_vec(m, v)))
            for comp, val in enumerate(vec_sub(lhs, rhs)):
                if val:
                    entries.append(((i, a, b, comp), val))
    return reports.from_entries(
        "derivation-action",
        f"{g.name} acting on {k.name} by derivations",
        entries,
    )


@lru_cache(maxsize=None)
def semidirect_product(g: LieAlgebra, target: GLieAlgebra, name: str | None = None) -> LieAlgebra:
    """g + k with [(x,u),(y,v)] = ([x,y], pi(x)v - pi(y)u + [u,v]_k).

    The g block comes first.  Raises if the action fails the derivation
    (or, for abelian k, representation) requirement.  Memoized: campaign
    loops rebuild the same product thousands of times.
    """
    if target.g is not g and target.g != g:
        raise ValueError("action algebra differs from g")
    bad = check_derivation_action(target)
    if not bad.ok:
        raise ValueError(f"invalid action for semidirect product: {bad.nonzero[:3]}")
    k, pi = target.k, target.action
    n, m = g.dim, k.dim
    names = list(g.basis_names)
    for nm in k.basis_names:
        names.append(nm if nm not in names else nm + "'")
    brackets: dict[tuple[int, int], dict[int, Q]] = {}
    for i, j, kk, v in g._nonzero:
        if i < j:
            brackets.setdefault((i, j), {})[kk] = v
    for i in range(n):
        mi = pi.mats[i]
        for a in range(m):
            comps = {n + b: mi[b][a] for b in range(m) if mi[b][a]}
            if comps:
                brackets[(i, n + a)] = comps
    for a, b, d, v in k._nonzero:
        if a < b:
            brackets.setdefault((n + a, n + b), {})[n + d] = v
    return LieAlgebra.from_brackets(name or f"{g.name}|x|{k.name}", names, brackets)


def semidirect_with_module(g: LieAlgebra, rho: Representation, name: str | None = None) -> LieAlgebra:
    return semidirect_product(g, module_target(rho), name)


@dataclass(frozen=True)
class BilinearForm:
    space: Space
    gram: Matrix  # B(e_i, e_j) = gram[i][j]

    def pair(self, x: Vector, y: Vector) -> Q:
        return sum(
            (x[i] * self.gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and self.gram[i][j] and y[j]),
            ZERO,
        )


@dataclass(frozen=True)
class FormReport:
    symmetric: bool
    nondegenerate: bool
    invariant: bool
    symmetry_failures: tuple
    invariance_failures: tuple

    @property
    def ok(self) -> bool:
        return self.symmetric and self.nondegenerate and self.invariant


def check_invariant_form(L: LieAlgebra, form: BilinearForm) -> FormReport:
    """Symmetry, nondegeneracy and invariance B([x,y],z) = B(x,[y,z])."""
    if form.space.dim != L.dim:
        raise ValueError("form space does not match algebra")
    n = L.dim
    sym = []
    for i in range(n):
        for j in range(i + 1, n):
            if form.gram[i][j] != form.gram[j][i]:
                sym.append(((i, j), form.gram[i][j] - form.gram[j][i]))
    nondeg = bool(determinant(form.gram))
    inv = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum((L.c[i][j][l] * form.gram[l][k] for l in range(n) if L.c[i][j][l]), ZERO)
                rhs = sum((L.c[j][k][l] * form.gram[i][l] for l in range(n) if L.c[j][k][l]), ZERO)
                if lhs != rhs:
                    inv.append(((i, j, k), lhs - rhs))
    return FormReport(not sym, nondeg, not inv, tuple(sym), tuple(inv))


def killing_form(L: LieAlgebra) -> BilinearForm:
    ad = adjoint_representation(L)
    n = L.dim
    gram = tuple(
        tuple(trace(mat_mul(ad.mats[i], ad.mats[j])) for j in range(n))
        for i in range(n)
    )
    return BilinearForm(L.space, gram)


@dataclass(frozen=True)
class LinearMap:
    """A linear map stored as a target.dim x source.dim matrix."""

    source: Space
    target: Space
    entries: Matrix

    def __post_init__(self):
        rows, cols = shape(self.entries)
        if (rows, cols) != (self.target.dim, self.source.dim):
            raise ValueError(
                f"map shape {(rows, cols)} does not match "
                f"{self.target.tag}x{self.source.tag} = {(self.target.dim, self.source.dim)}"
            )

    def __call__(self, v: Vector) -> Vector:
        return mat_vec(self.entries, v)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._require_same_spaces(other)
        return LinearMap(self.source, self.target, mat_add(self.entries, other.entries))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._require_same_spaces(other)
        return LinearMap(self.source, self.target, mat_sub(self.entries, other.entries))

    def __rmul__(self, c) -> "LinearMap":
        return LinearMap(self.source, self.target, mat_scale(frac(c), self.entries))

    def __neg__(self) -> "LinearMap":
        return Q(-1) * self

    def _require_same_spaces(self, other: "LinearMap") -> None:
        if self.source != other.source or self.target != other.target:
            raise ValueError("maps live on different spaces")

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.target != self.source:
            raise ValueError("composition space mismatch")
        return LinearMap(other.source, self.target, mat_mul(self.entries, other.entries))

    def dual(self) -> "LinearMap":
        """The dual map between dual spaces; the matrix is the transpose."""
        return LinearMap(self.target.dual(), self.source.dual(), transpose(self.entries))

    def is_zero(self) -> bool:
        return is_zero_mat(self.entries)


def zero_map(source: Space, target: Space) -> LinearMap:
    return LinearMap(source, target, zeros(target.dim, source.dim))


def identity_map(space: Space) -> LinearMap:
    return LinearMap(space, space, identity(space.dim))


def map_from_matrix(source: Space, target: Space, rows) -> LinearMap:
    return LinearMap(source, target, mat(rows))
