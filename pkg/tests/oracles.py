"""Brute-force reference computations the tests compare against.

The Yang-Baxter oracles here materialize r12, r13, r23 (and the flipped
slots) as elements of a degree-2 truncation of the universal enveloping
algebra, tensor-cubed, with explicit unit slots, and multiply them
associatively.  Out-of-order products reduce by e_q e_p = e_p e_q +
[e_q, e_p].  The package never takes this route (it contracts structure
constants in closed form), so agreement between the two is an actual
check and not a tautology.

Operator oracles evaluate identities on random rational vectors instead
of basis pairs, which exercises bilinearity the same way a hand
computation would.
"""

from fractions import Fraction as Q

# ---------------------------------------------------------------------------
# truncated enveloping product

# A monomial is () for the unit, (i,) for e_i, (p, q) with p <= q for
# e_p e_q.  An element is {monomial: coefficient}.  Yang-Baxter brackets
# only ever multiply two degree <= 1 slots, so degree 2 is enough.


def _mono_mul(g, m1, m2):
    if not m1:
        return {m2: Q(1)}
    if not m2:
        return {m1: Q(1)}
    if len(m1) + len(m2) > 2:
        raise ValueError(f"degree overflow: {m1} * {m2}")
    (i,), (j,) = m1, m2
    if i <= j:
        return {(i, j): Q(1)}
    out = {(j, i): Q(1)}
    for k, c in enumerate(g.c[i][j]):
        if c:
            out[(k,)] = c
    return out


def _cube_add(a, b, scale=Q(1)):
    out = dict(a)
    for key, v in b.items():
        w = out.get(key, Q(0)) + scale * v
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


def _cube_mul(g, a, b):
    out = {}
    for (x1, x2, x3), va in a.items():
        for (y1, y2, y3), vb in b.items():
            for p1, c1 in _mono_mul(g, x1, y1).items():
                for p2, c2 in _mono_mul(g, x2, y2).items():
                    for p3, c3 in _mono_mul(g, x3, y3).items():
                        key = (p1, p2, p3)
                        w = out.get(key, Q(0)) + va * vb * c1 * c2 * c3
                        if w:
                            out[key] = w
                        else:
                            out.pop(key, None)
    return out


def _cube_commutator(g, a, b):
    return _cube_add(_cube_mul(g, a, b), _cube_mul(g, b, a), Q(-1))


def embed_slots(r, first, second):
    """Place a 2-tensor into two of three slots, units elsewhere.

    embed_slots(r, 0, 2) is r13; embed_slots(r, 2, 0) is r31.
    """
    out = {}
    for i, row in enumerate(r.coeffs):
        for j, v in enumerate(row):
            if v:
                mono = [(), (), ()]
                mono[first] = (i,)
                mono[second] = (j,)
                out[tuple(mono)] = Q(v)
    return out


def _extract_deg111(cube):
    """Project a fully reduced cube onto g (x) g (x) g.

    Any surviving monomial of the wrong degree means the classical
    cancellation failed, which would be an oracle bug, so raise.
    """
    out = {}
    for (m1, m2, m3), v in cube.items():
        if len(m1) == len(m2) == len(m3) == 1:
            out[(m1[0], m2[0], m3[0])] = v
        else:
            raise AssertionError(f"unreduced monomial {(m1, m2, m3)}: {v}")
    return out


def oracle_cybe(g, r):
    """[r12,r13] + [r12,r23] + [r13,r23] as {(i,j,k): coeff}, nonzero only."""
    r12 = embed_slots(r, 0, 1)
    r13 = embed_slots(r, 0, 2)
    r23 = embed_slots(r, 1, 2)
    total = {}
    for a, b in ((r12, r13), (r12, r23), (r13, r23)):
        total = _cube_add(total, _cube_commutator(g, a, b))
    return _extract_deg111(total)


def oracle_ecybe(g, r, eps):
    """C(r) - eps * [(r13+r31), (r23+r32)] as {(i,j,k): coeff}."""
    lhs = oracle_cybe(g, r)
    first = _cube_add(embed_slots(r, 0, 2), embed_slots(r, 2, 0))
    second = _cube_add(embed_slots(r, 1, 2), embed_slots(r, 2, 1))
    rhs = _extract_deg111(_cube_commutator(g, first, second))
    out = dict(lhs)
    for key, v in rhs.items():
        w = out.get(key, Q(0)) - eps * v
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


def ad_family(g, entries, arity):
    """Apply ad(e_x) slotwise to a sparse tensor given as {index tuple: coeff}.

    Returns {(x,) + index tuple: coeff} with zeros dropped; empty means
    the tensor is invariant.
    """
    n = g.dim
    out = {}
    for x in range(n):
        for ix, v in entries.items():
            for slot in range(arity):
                a = ix[slot]
                for k, c in enumerate(g.c[x][a]):
                    if c:
                        jx = ix[:slot] + (k,) + ix[slot + 1:]
                        key = (x,) + jx
                        w = out.get(key, Q(0)) + c * v
                        if w:
                            out[key] = w
                        else:
                            out.pop(key, None)
    return out


def oracle_gcybe(g, r):
    """Slotwise ad-invariance family of the oracle's own C(r)."""
    return ad_family(g, oracle_cybe(g, r), 3)


def oracle_invariance(g, t):
    """Slotwise ad-invariance family of a 2-tensor."""
    entries = {(i, j): v for i, j, v in t.items()}
    return ad_family(g, entries, 2)


# ---------------------------------------------------------------------------
# sparse comparison helpers


def tensor3_entries(t):
    return {(i, j, k): v for i, j, k, v in t.items()}


def report_entries(rep):
    return {tuple(ix): v for ix, v in rep.nonzero}


def family_entries(family):
    """Flatten the per-basis-element tensor families from gcybe/invariance."""
    out = {}
    for x, t in enumerate(family):
        for ix in t.items():
            *idx, v = ix
            out[(x, *idx)] = v
    return out


# ---------------------------------------------------------------------------
# random-vector operator oracles


def rand_vector(rng, dim, span=6):
    return tuple(Q(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(dim))


def apply_map(op, vec):
    """op as a LinearMap; unrolled row-times-column arithmetic."""
    return tuple(
        sum((row[c] * vec[c] for c in range(len(vec))), Q(0)) for row in op.entries
    )


def o_operator_residual_on(g, rho, op, u, v):
    """[au, av] - a(rho(au) v - rho(av) u) evaluated at two concrete vectors."""
    au, av = apply_map(op, u), apply_map(op, v)
    act = tuple(
        x - y for x, y in zip(rho.act(au, v), rho.act(av, u))
    )
    inner = apply_map(op, act)
    return tuple(x - y for x, y in zip(g.bracket(au, av), inner))


def rota_baxter_residual_on(g, op, weight, u, v):
    """[Pu, Pv] - P([Pu,v] + [u,Pv] + weight [u,v]) at two concrete vectors."""
    pu, pv = apply_map(op, u), apply_map(op, v)
    inner = tuple(
        a + b + weight * c
        for a, b, c in zip(g.bracket(pu, v), g.bracket(u, pv), g.bracket(u, v))
    )
    return tuple(x - y for x, y in zip(g.bracket(pu, pv), apply_map(op, inner)))
