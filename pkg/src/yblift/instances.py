"""Random generators and constructed witness suites for the campaigns.

Witnesses are small hand-picked inputs whose defining identity is
re-checked the first time a suite is built; a failing witness raises
WitnessError immediately, since these are frozen data and a failure
means a coding mistake rather than bad luck.

Random draws use small rationals (numerators in a fixed span,
denominators 1 or 2) so residuals stay readable and exact arithmetic
stays fast.  Each campaign trial owns a child generator derived from the
root seed and the trial index, which keeps batches order-independent
and reproducible from the ``(seed, index)`` pair alone.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import (
    GLieAlgebra,
    LieAlgebra,
    LinearMap,
    Representation,
    adjoint_representation,
    coadjoint_representation,
    identity_map,
    map_from_matrix,
    module_target,
    self_target,
    trivial_representation,
    zero_map,
)
from .algebra import Space
from .catalog import get
from .linalg import Q, Matrix, determinant, frac
from .operators import (
    extended_o_residual,
    o_operator_residual,
    o_operator_weighted_residual,
    relative_differential_residual,
    rota_baxter_residual,
)
from .tensors import Tensor2, tensor2_from_entries, tensor_to_map
from .ybe import modified_ybe_residual, table_is_zero


class WitnessError(RuntimeError):
    """A constructed witness failed its own defining identity."""


_SEED_STRIDE = 1_000_003


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * _SEED_STRIDE + index)


def rand_rational(rng: random.Random, span: int = 3) -> Q:
    return Q(rng.randint(-span, span), rng.choice((1, 2)))


def rand_nonzero_rational(rng: random.Random, span: int = 3) -> Q:
    while True:
        q = rand_rational(rng, span)
        if q:
            return q


def rand_matrix(rng: random.Random, rows: int, cols: int, span: int = 3) -> Matrix:
    return tuple(tuple(rand_rational(rng, span) for _ in range(cols)) for _ in range(rows))


def rand_map(rng: random.Random, source: Space, target: Space, span: int = 3) -> LinearMap:
    return map_from_matrix(source, target, rand_matrix(rng, target.dim, source.dim, span))


def rand_invertible_map(rng: random.Random, space: Space, span: int = 3) -> LinearMap:
    while True:
        m = rand_matrix(rng, space.dim, space.dim, span)
        if determinant(m):
            return map_from_matrix(space, space, m)


def rand_tensor2(rng: random.Random, space: Space, span: int = 3) -> Tensor2:
    entries = [
        (i, j, rand_rational(rng, span))
        for i in range(space.dim)
        for j in range(space.dim)
    ]
    return tensor2_from_entries((space, space), entries)


def rand_skew_tensor(rng: random.Random, space: Space, span: int = 3) -> Tensor2:
    entries = []
    for i, j in itertools.combinations(range(space.dim), 2):
        v = rand_rational(rng, span)
        entries.append((i, j, v))
        entries.append((j, i, -v))
    return tensor2_from_entries((space, space), entries)


def rand_symmetric_tensor(rng: random.Random, space: Space, span: int = 3) -> Tensor2:
    entries = []
    for i in range(space.dim):
        entries.append((i, i, rand_rational(rng, span)))
    for i, j in itertools.combinations(range(space.dim), 2):
        v = rand_rational(rng, span)
        entries.append((i, j, v))
        entries.append((j, i, v))
    return tensor2_from_entries((space, space), entries)


# ---------------------------------------------------------------------------
# constructed witnesses


@dataclass(frozen=True)
class OperatorWitness:
    """A linear map into g together with the module it acts through."""

    label: str
    g: LieAlgebra
    rho: Representation
    op: LinearMap


@dataclass(frozen=True)
class EndoWitness:
    """An endomorphism witness on a single algebra."""

    label: str
    g: LieAlgebra
    op: LinearMap


# complementary pairs of subalgebra projections, as diagonal 0/1 masks;
# both the mask and its complement must span subalgebras
_SPLITS = {
    "aff1": ((1, 0), (0, 1)),
    "heisenberg3": ((1, 0, 1), (0, 1, 1)),
    "sl2": ((1, 1, 0), (0, 1, 1)),
    "so3": (),
}

# square roots of -id (kappa = +1 witnesses); none exist on sl2 or so3
# over the rationals
_COMPLEX_STRUCTURES = {
    "aff1": (((0, -1), (1, 0)),),
    "heisenberg3": (((0, -1, 0), (1, 0, 0), (0, 0, 1)),),
    "abelian-2": (((0, -1), (1, 0)),),
}

_NONABELIAN = ("aff1", "heisenberg3", "sl2", "so3")
_ALL_NAMES = ("abelian-2", "abelian-3") + _NONABELIAN


def _diag(space: Space, mask, scale=Q(1)) -> LinearMap:
    rows = tuple(
        tuple(frac(scale) * Q(mask[i]) if i == j else Q(0) for j in range(space.dim))
        for i in range(space.dim)
    )
    return map_from_matrix(space, space, rows)


def _checked(witnesses, residual, what):
    for w in witnesses:
        if not table_is_zero(residual(w)):
            raise WitnessError(f"{what} witness {w.label} fails its identity")
    return tuple(witnesses)


def o_operator_suite() -> tuple[OperatorWitness, ...]:
    """Verified relative operators of weight zero, across several modules."""
    out = []
    for name in _NONABELIAN:
        entry = get(name)
        g = entry.algebra
        ad = adjoint_representation(g)
        out.append(OperatorWitness(f"{name}/ad/zero", g, ad, zero_map(g.space, g.space)))
        if "rb0" in entry.operators:
            out.append(OperatorWitness(f"{name}/ad/rb0", g, ad, entry.operators["rb0"]))
        if "skew-solution" in entry.tensors:
            coad = coadjoint_representation(g)
            alpha = tensor_to_map(entry.tensors["skew-solution"])
            out.append(OperatorWitness(f"{name}/coad/solution", g, coad, alpha))
    for name in ("abelian-2", "abelian-3"):
        g = get(name).algebra
        triv = trivial_representation(g, 2)
        m = map_from_matrix(triv.space, g.space, tuple(tuple(Q(1) if i == j else Q(0) for j in range(2)) for i in range(g.dim)))
        out.append(OperatorWitness(f"{name}/trivial/embed", g, triv, m))
    return _checked(out, lambda w: o_operator_residual(w.g, w.rho, w.op), "weight-0 operator")


def invertible_o_operator_suite() -> tuple[OperatorWitness, ...]:
    """Verified weight-0 operators that are invertible as linear maps."""
    out = []
    entry = get("aff1")
    g = entry.algebra
    out.append(
        OperatorWitness(
            "aff1/coad/solution",
            g,
            coadjoint_representation(g),
            tensor_to_map(entry.tensors["skew-solution"]),
        )
    )
    for name in ("abelian-2", "abelian-3", "abelian-4"):
        g = get(name).algebra
        triv = trivial_representation(g, g.dim)
        m = identity_map(g.space)
        out.append(
            OperatorWitness(
                f"{name}/trivial/id",
                g,
                triv,
                map_from_matrix(triv.space, g.space, m.entries),
            )
        )
    suite = _checked(out, lambda w: o_operator_residual(w.g, w.rho, w.op), "invertible operator")
    for w in suite:
        if not determinant(w.op.entries):
            raise WitnessError(f"invertible operator witness {w.label} is singular")
    return suite


def rota_baxter_zero_suite() -> tuple[EndoWitness, ...]:
    """Verified Rota-Baxter operators of weight zero."""
    out = []
    for name in _NONABELIAN:
        entry = get(name)
        g = entry.algebra
        out.append(EndoWitness(f"{name}/zero", g, zero_map(g.space, g.space)))
        if "rb0" in entry.operators:
            out.append(EndoWitness(f"{name}/rb0", g, entry.operators["rb0"]))
    return _checked(out, lambda w: rota_baxter_residual(w.g, w.op, Q(0)), "weight-0 Rota-Baxter")


def rota_baxter_weighted_suite(weight) -> tuple[EndoWitness, ...]:
    """Verified Rota-Baxter operators of the given nonzero weight.

    -weight * P for a projection P onto a subalgebra along a complementary
    subalgebra always qualifies, as do 0 and -weight * id.
    """
    lam = frac(weight)
    if not lam:
        raise ValueError("weight must be nonzero")
    out = []
    for name in _NONABELIAN:
        g = get(name).algebra
        out.append(EndoWitness(f"{name}/zero", g, zero_map(g.space, g.space)))
        out.append(EndoWitness(f"{name}/-id", g, _diag(g.space, (1,) * g.dim, -lam)))
        for mask in _SPLITS[name]:
            out.append(EndoWitness(f"{name}/proj{mask}", g, _diag(g.space, mask, -lam)))
    return _checked(
        out, lambda w: rota_baxter_residual(w.g, w.op, lam), f"weight-{lam} Rota-Baxter"
    )


def modified_equation_suite() -> tuple[EndoWitness, ...]:
    """Verified solutions of the modified equation: differences of the
    complementary subalgebra projections, and +-id."""
    out = []
    for name in _NONABELIAN:
        g = get(name).algebra
        out.append(EndoWitness(f"{name}/id", g, identity_map(g.space)))
        out.append(EndoWitness(f"{name}/-id", g, _diag(g.space, (1,) * g.dim, Q(-1))))
        for mask in _SPLITS[name]:
            rows = tuple(
                tuple(Q(2 * mask[i] - 1) if i == j else Q(0) for j in range(g.dim))
                for i in range(g.dim)
            )
            out.append(EndoWitness(f"{name}/split{mask}", g, map_from_matrix(g.space, g.space, rows)))
    return _checked(out, lambda w: modified_ybe_residual(w.g, w.op), "modified equation")


def complex_structure_suite() -> tuple[EndoWitness, ...]:
    """Verified extended operators with extension id of mass +1."""
    out = []
    for name, mats in _COMPLEX_STRUCTURES.items():
        g = get(name).algebra
        for idx, rows in enumerate(mats):
            op = map_from_matrix(g.space, g.space, tuple(tuple(Q(v) for v in row) for row in rows))
            out.append(EndoWitness(f"{name}/J{idx}", g, op))
    return _checked(
        out,
        lambda w: extended_o_residual(
            w.g, self_target(w.g), w.op, identity_map(w.g.space), Q(0), Q(1)
        ),
        "mass +1 extended operator",
    )


def relative_differential_suite() -> tuple[OperatorWitness, ...]:
    """Verified relative differential operators of weight one.

    Includes the zero map, -id on the self target, and coboundaries
    u(x) = rho(x) v0 on module targets (where the weight term drops out).
    """
    out = []
    checks = []
    for name in _NONABELIAN:
        g = get(name).algebra
        tgt = self_target(g)
        out.append(OperatorWitness(f"{name}/self/zero", g, tgt.action, zero_map(g.space, g.space)))
        checks.append((out[-1], tgt))
        out.append(OperatorWitness(f"{name}/self/-id", g, tgt.action, _diag(g.space, (1,) * g.dim, Q(-1))))
        checks.append((out[-1], tgt))
        coad = coadjoint_representation(g)
        # coboundary x -> rho(x) v0 with v0 the first dual basis vector
        rows = tuple(
            tuple(coad.mats[j][i][0] for j in range(g.dim)) for i in range(g.dim)
        )
        cob = map_from_matrix(g.space, coad.space, rows)
        out.append(OperatorWitness(f"{name}/coad/coboundary", g, coad, cob))
        checks.append((out[-1], module_target(coad)))
    for w, tgt in checks:
        if not table_is_zero(relative_differential_residual(w.g, tgt, w.op, Q(1))):
            raise WitnessError(f"relative differential witness {w.label} fails its identity")
    return tuple(out)


def weighted_operator_suite(weight) -> tuple[tuple[OperatorWitness, GLieAlgebra], ...]:
    """Verified relative operators of the given nonzero weight on proper
    g-Lie-algebra targets (nonabelian k, so the weight term matters)."""
    lam = frac(weight)
    if not lam:
        raise ValueError("weight must be nonzero")
    out = []
    for name in _NONABELIAN:
        g = get(name).algebra
        tgt = self_target(g)
        out.append((OperatorWitness(f"{name}/self/zero", g, tgt.action, zero_map(g.space, g.space)), tgt))
        out.append((OperatorWitness(f"{name}/self/-lam-id", g, tgt.action, _diag(g.space, (1,) * g.dim, -lam)), tgt))
        pi0 = Representation(
            g,
            g.space,
            tuple(
                tuple(tuple(Q(0) for _ in range(g.dim)) for _ in range(g.dim))
                for _ in range(g.dim)
            ),
        )
        tgt0 = GLieAlgebra(g, pi0)
        out.append((OperatorWitness(f"{name}/static/lam-id", g, pi0, _diag(g.space, (1,) * g.dim, lam)), tgt0))
    for w, tgt in out:
        if not table_is_zero(o_operator_weighted_residual(w.g, tgt, w.op, lam)):
            raise WitnessError(f"weight-{lam} operator witness {w.label} fails its identity")
    return tuple(out)


def catalog_modules(g_name: str) -> tuple[tuple[str, Representation], ...]:
    """The standard modules campaigns draw from for a catalog algebra."""
    g = get(g_name).algebra
    return (
        ("ad", adjoint_representation(g)),
        ("coad", coadjoint_representation(g)),
        ("trivial-2", trivial_representation(g, 2)),
    )


def campaign_algebras() -> tuple[str, ...]:
    return _ALL_NAMES
