"""Rank-2 and rank-3 tensors and the tensor/operator dictionary.

A tensor r = sum_{ij} coeffs[i][j] v_i (x) w_j over V (x) W is identified
with the map r^ : V* -> W sending the dual basis vector v_i* to the i-th
row of coeffs; conversely a map alpha : V -> W is identified with the
tensor sum_i v_i* (x) alpha(v_i) over V* (x) W.  With the dual-basis
pairing both identifications are transposes of the coefficient matrix,
and

    tensor_to_map(twist(r)) == tensor_to_map(r).dual()
    map_to_tensor(double_embed_map(a)) == double_embed_tensor(map_to_tensor(a))

hold exactly.  The Yang-Baxter bracket contractions at the bottom are the
building blocks for the equation checkers; they exploit sparsity of both
the tensors and the structure constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import LieAlgebra, LinearMap, Space, direct_sum_space
from .linalg import Q, ZERO, frac, is_zero_mat, mat_add, mat_scale, mat_sub, shape, transpose


@dataclass(frozen=True)
class Tensor2:
    spaces: tuple[Space, Space]
    coeffs: tuple[tuple[Q, ...], ...]

    def __post_init__(self):
        rows, cols = shape(self.coeffs)
        if (rows, cols) != (self.spaces[0].dim, self.spaces[1].dim):
            raise ValueError(
                f"tensor shape {(rows, cols)} does not match spaces "
                f"{self.spaces[0].tag}(x){self.spaces[1].tag}"
            )

    def items(self) -> Iterator[tuple[int, int, Q]]:
        for i, row in enumerate(self.coeffs):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def is_zero(self) -> bool:
        return is_zero_mat(self.coeffs)

    def __add__(self, other: "Tensor2") -> "Tensor2":
        if self.spaces != other.spaces:
            raise ValueError("tensors live on different spaces")
        return Tensor2(self.spaces, mat_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        if self.spaces != other.spaces:
            raise ValueError("tensors live on different spaces")
        return Tensor2(self.spaces, mat_sub(self.coeffs, other.coeffs))

    def __rmul__(self, c) -> "Tensor2":
        return Tensor2(self.spaces, mat_scale(frac(c), self.coeffs))

    def __neg__(self) -> "Tensor2":
        return Q(-1) * self


def tensor2_from_entries(spaces: tuple[Space, Space], entries) -> Tensor2:
    rows, cols = spaces[0].dim, spaces[1].dim
    m = [[ZERO] * cols for _ in range(rows)]
    for i, j, v in entries:
        m[i][j] += frac(v)
    return Tensor2(spaces, tuple(tuple(row) for row in m))


def zero_tensor2(spaces: tuple[Space, Space]) -> Tensor2:
    return tensor2_from_entries(spaces, ())


def simple_tensor(space: Space, i: int, j: int, coeff=1) -> Tensor2:
    return tensor2_from_entries((space, space), [(i, j, coeff)])


def wedge(space: Space, i: int, j: int) -> Tensor2:
    """e_i (x) e_j - e_j (x) e_i."""
    return tensor2_from_entries((space, space), [(i, j, 1), (j, i, -1)])


def twist(r: Tensor2) -> Tensor2:
    return Tensor2((r.spaces[1], r.spaces[0]), transpose(r.coeffs))


def is_skew(r: Tensor2) -> bool:
    return (twist(r) + r).is_zero()


def is_symmetric(r: Tensor2) -> bool:
    return (twist(r) - r).is_zero()


def sym_skew_parts(r: Tensor2) -> tuple[Tensor2, Tensor2]:
    """(r_+, r_-) with r_+ symmetric, r_- skew, r = r_+ + r_-.

    Only defined when both factors are the same space.
    """
    if r.spaces[0] != r.spaces[1]:
        raise ValueError(
            f"symmetric/skew split needs equal factors, got "
            f"{r.spaces[0].tag}(x){r.spaces[1].tag}"
        )
    half = Q(1, 2)
    t = twist(r)
    return (half * (r + t), half * (r - t))


def tensor_to_map(r: Tensor2) -> LinearMap:
    """The induced map V* -> W of r in V (x) W."""
    return LinearMap(r.spaces[0].dual(), r.spaces[1], transpose(r.coeffs))


def map_to_tensor(alpha: LinearMap) -> Tensor2:
    """The tensor in V* (x) W of a map alpha : V -> W."""
    return Tensor2((alpha.source.dual(), alpha.target), transpose(alpha.entries))


def map_sym_skew_parts(alpha: LinearMap) -> tuple[LinearMap, LinearMap]:
    """(alpha_+, alpha_-) for a map V* -> V, halves of alpha +- alpha.dual()."""
    if alpha.source != alpha.target.dual():
        raise ValueError(
            f"symmetric/skew split needs a map between dual-paired spaces, got "
            f"{alpha.source.tag} -> {alpha.target.tag}"
        )
    dual = alpha.dual()
    half = Q(1, 2)
    return (half * (alpha + dual), half * (alpha - dual))


def double_embed_tensor(r: Tensor2) -> Tensor2:
    """Place r in V (x) W into the top-right block of (V + W)^(x)2."""
    v, w = r.spaces
    big = direct_sum_space(v, w)
    entries = [(i, v.dim + j, val) for i, j, val in r.items()]
    return tensor2_from_entries((big, big), entries)


def double_embed_map(alpha: LinearMap) -> LinearMap:
    """The map V + W* -> V* + W that is alpha on V and zero on W*.

    Its tensor is exactly double_embed_tensor(map_to_tensor(alpha)).
    """
    v, w = alpha.source, alpha.target
    src = direct_sum_space(v, w.dual())
    dst = direct_sum_space(v.dual(), w)
    rows = []
    for a in range(dst.dim):
        if a < v.dim:
            rows.append((ZERO,) * src.dim)
        else:
            row = alpha.entries[a - v.dim]
            rows.append(tuple(row) + (ZERO,) * w.dim)
    return LinearMap(src, dst, tuple(rows))


@dataclass(frozen=True)
class Tensor3:
    spaces: tuple[Space, Space, Space]
    coeffs: tuple[tuple[tuple[Q, ...], ...], ...]

    def __post_init__(self):
        dims = (len(self.coeffs), len(self.coeffs[0]) if self.coeffs else 0, 0)
        if self.coeffs and self.coeffs[0]:
            dims = (dims[0], dims[1], len(self.coeffs[0][0]))
        if dims != tuple(s.dim for s in self.spaces):
            raise ValueError("tensor shape does not match spaces")

    def items(self) -> Iterator[tuple[int, int, int, Q]]:
        for i, plane in enumerate(self.coeffs):
            for j, row in enumerate(plane):
                for k, v in enumerate(row):
                    if v:
                        yield i, j, k, v

    def is_zero(self) -> bool:
        return not any(True for _ in self.items())

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.spaces != other.spaces:
            raise ValueError("tensors live on different spaces")
        return Tensor3(
            self.spaces,
            tuple(
                tuple(
                    tuple(a + b for a, b in zip(ra, rb))
                    for ra, rb in zip(pa, pb)
                )
                for pa, pb in zip(self.coeffs, other.coeffs)
            ),
        )

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        return self + (Q(-1) * other)

    def __rmul__(self, c) -> "Tensor3":
        c = frac(c)
        return Tensor3(
            self.spaces,
            tuple(
                tuple(tuple(c * v for v in row) for row in plane)
                for plane in self.coeffs
            ),
        )


def tensor3_from_entries(spaces: tuple[Space, Space, Space], entries) -> Tensor3:
    d0, d1, d2 = (s.dim for s in spaces)
    m = [[[ZERO] * d2 for _ in range(d1)] for _ in range(d0)]
    for i, j, k, v in entries:
        m[i][j][k] += frac(v)
    return Tensor3(spaces, tuple(tuple(tuple(row) for row in plane) for plane in m))


def zero_tensor3(spaces: tuple[Space, Space, Space]) -> Tensor3:
    return tensor3_from_entries(spaces, ())


def _require_on_algebra(L: LieAlgebra, r: Tensor2) -> None:
    for s in r.spaces:
        if s != L.space:
            raise ValueError(
                f"tensor lives on {r.spaces[0].tag}(x){r.spaces[1].tag}, "
                f"not on {L.name}(x){L.name}"
            )


def _pair_brackets(L: LieAlgebra) -> dict[tuple[int, int], list[tuple[int, Q]]]:
    table: dict[tuple[int, int], list[tuple[int, Q]]] = {}
    for i, j, k, v in L._nonzero:
        table.setdefault((i, j), []).append((k, v))
    return table


def yang_baxter_brackets(L: LieAlgebra, r: Tensor2, s: Tensor2) -> tuple[Tensor3, Tensor3, Tensor3]:
    """([r12, s13], [r12, s23], [r13, s23]) in g (x) g (x) g.

    With r = sum a_i (x) b_i and s = sum c_j (x) d_j these are
        [r12, s13] = sum [a_i, c_j] (x) b_i (x) d_j
        [r12, s23] = sum a_i (x) [b_i, c_j] (x) d_j
        [r13, s23] = sum a_i (x) c_j (x) [b_i, d_j].
    """
    _require_on_algebra(L, r)
    _require_on_algebra(L, s)
    pb = _pair_brackets(L)
    spaces = (L.space, L.space, L.space)
    e12_13, e12_23, e13_23 = [], [], []
    for a, b, vr in r.items():
        for c, d, vs in s.items():
            w = vr * vs
            for k, cv in pb.get((a, c), ()):
                e12_13.append((k, b, d, w * cv))
            for k, cv in pb.get((b, c), ()):
                e12_23.append((a, k, d, w * cv))
            for k, cv in pb.get((b, d), ()):
                e13_23.append((a, c, k, w * cv))
    return (
        tensor3_from_entries(spaces, e12_13),
        tensor3_from_entries(spaces, e12_23),
        tensor3_from_entries(spaces, e13_23),
    )


def mass_term(L: LieAlgebra, r: Tensor2) -> Tensor3:
    """[(r13 + r31), (r23 + r32)] = [s13, s23] for s = r + twist(r).

    This is the right-hand side of the extended Yang-Baxter equation; it
    depends only on the symmetric part of r.
    """
    _require_on_algebra(L, r)
    s = r + twist(r)
    return yang_baxter_brackets(L, s, s)[2]
