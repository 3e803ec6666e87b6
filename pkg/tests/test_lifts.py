"""Lifts into doubled algebras and the equivalences they certify."""

from fractions import Fraction as Q

import pytest

from oracles import oracle_cybe, tensor3_entries
from yblift.algebra import (
    adjoint_representation,
    coadjoint_representation,
    identity_map,
    map_from_matrix,
    module_target,
    self_target,
    trivial_representation,
    zero_map,
)
from yblift.catalog import get
from yblift.instances import (
    complex_structure_suite,
    modified_equation_suite,
    o_operator_suite,
    rand_map,
    rand_tensor2,
    trial_rng,
)
from yblift.lifts import (
    dual_bracket_tables,
    invertible_o_operator_to_rb,
    lie_coalgebra_report,
    lift_baxter,
    lift_extended,
    lift_generalized,
    lift_o_operator,
    lift_rb_weight,
    o_operator_to_rb,
    reldiff_to_rb,
    skew_dual_bracket,
)
from yblift.tensors import is_skew, sym_skew_parts, wedge
from yblift.ybe import ecybe_residual, is_invariant


def test_known_operator_lift_solves_in_dimension_four():
    g = get("aff1").algebra
    ad = adjoint_representation(g)
    op = map_from_matrix(g.space, g.space, ((0, 1), (0, 0)))
    res = lift_o_operator(g, ad, op)
    assert res.is_solution
    assert res.big.dim == 4
    assert is_skew(res.tensors[0])
    # full brute-force expansion in the doubled algebra
    assert oracle_cybe(res.big, res.tensors[0]) == {}


def test_identity_does_not_lift_to_a_solution():
    g = get("aff1").algebra
    res = lift_o_operator(g, adjoint_representation(g), identity_map(g.space))
    assert not res.operator_ok
    assert not res.is_solution
    assert oracle_cybe(res.big, res.tensors[0]) != {}


def test_operator_lift_verdicts_agree_on_random_maps():
    seen = {True: 0, False: 0}
    for t in range(60):
        rng = trial_rng(41, t)
        g = get(("aff1", "heisenberg3", "sl2", "so3")[t % 4]).algebra
        rho = (adjoint_representation, coadjoint_representation)[t % 2](g)
        op = rand_map(rng, rho.space, g.space)
        res = lift_o_operator(g, rho, op)  # raises if the two verdicts split
        assert is_skew(res.tensors[0])
        seen[res.is_solution] += 1
    for w in o_operator_suite():
        res = lift_o_operator(w.g, w.rho, w.op)
        assert res.is_solution
        seen[True] += 1
    assert seen[True] and seen[False]


def test_generalized_lift_needs_no_operator_identity():
    sl2 = get("sl2").algebra
    ad = adjoint_representation(sl2)
    # the identity is not a relative operator here, yet its obstruction
    # is -[u,v], whose cyclic and equivariance conditions both hold
    res = lift_generalized(sl2, ad, identity_map(sl2.space))
    assert res.is_solution
    assert not lift_o_operator(sl2, ad, identity_map(sl2.space)).is_solution
    for t in range(40):
        rng = trial_rng(42, t)
        g = get(("aff1", "heisenberg3", "sl2", "so3")[t % 4]).algebra
        rho = adjoint_representation(g)
        lift_generalized(g, rho, rand_map(rng, g.space, g.space))


def test_extended_lift_grid_two_sided():
    grid_hits = set()
    for kappa in (-1, 0, 1):
        eps = Q(kappa + 1, 4)
        # beta = 0: the identity reduces to the plain operator condition
        for w in o_operator_suite():
            ext = zero_map(w.rho.space, w.g.space)
            res = lift_extended(w.g, w.rho, w.op, ext, kappa)
            assert res.is_solution
            assert dict(res.params)["eps"] == eps
            assert tensor3_entries(ecybe_residual(res.big, res.tensors[0], eps)) == {}
            grid_hits.add(("zero", kappa, True))
        g = get("aff1").algebra
        bad = lift_extended(
            g,
            adjoint_representation(g),
            identity_map(g.space),
            zero_map(g.space, g.space),
            kappa,
        )
        assert not bad.is_solution
        grid_hits.add(("zero", kappa, False))
    # beta = id on the adjoint module
    for kappa, suite in ((-1, modified_equation_suite()), (1, complex_structure_suite())):
        for w in suite:
            res = lift_extended(
                w.g,
                adjoint_representation(w.g),
                w.op,
                identity_map(w.g.space),
                kappa,
            )
            assert res.is_solution
            plus = sym_skew_parts(res.tensors[0])[0]
            assert is_invariant(res.big, plus)
            grid_hits.add(("id", kappa, True))
        g = get("aff1").algebra
        bad = lift_extended(
            g,
            adjoint_representation(g),
            Q(2) * identity_map(g.space),
            identity_map(g.space),
            kappa,
        )
        assert not bad.is_solution
        grid_hits.add(("id", kappa, False))
    # weight-0 Rota-Baxter maps are the kappa = 0, beta = id positives
    for w in o_operator_suite():
        if w.rho.space != w.g.space:
            continue
        res = lift_extended(
            w.g, adjoint_representation(w.g), w.op, identity_map(w.g.space), 0
        )
        assert res.is_solution
        grid_hits.add(("id", 0, True))
    bad = lift_extended(
        get("sl2").algebra,
        adjoint_representation(get("sl2").algebra),
        identity_map(get("sl2").algebra.space),
        identity_map(get("sl2").algebra.space),
        0,
    )
    assert not bad.is_solution
    grid_hits.add(("id", 0, False))
    assert grid_hits == {
        (beta, kappa, verdict)
        for beta in ("zero", "id")
        for kappa in (-1, 0, 1)
        for verdict in (True, False)
    }


def test_extended_lift_rejects_non_invariant_extensions():
    g = get("aff1").algebra
    rot = map_from_matrix(g.space, g.space, ((0, -1), (1, 0)))
    with pytest.raises(ValueError):
        lift_extended(g, adjoint_representation(g), zero_map(g.space, g.space), rot, 1)


def test_baxter_pair_lift():
    for name in ("aff1", "heisenberg3", "sl2", "so3"):
        g = get(name).algebra
        res = lift_baxter(g, identity_map(g.space))
        assert res.is_solution
        assert len(res.tensors) == 2
        for t in res.tensors:
            assert oracle_cybe(res.big, t) == {}
    g = get("aff1").algebra
    assert not lift_baxter(g, Q(2) * identity_map(g.space)).is_solution


def test_weighted_rb_lift():
    g = get("aff1").algebra
    # zero map and scaled projections are weighted Rota-Baxter
    assert lift_rb_weight(g, zero_map(g.space, g.space), Q(2)).is_solution
    proj = map_from_matrix(g.space, g.space, ((1, 0), (0, 0)))
    assert lift_rb_weight(g, proj, Q(-1)).is_solution
    scaled = map_from_matrix(g.space, g.space, ((-3, 0), (0, 0)))
    res = lift_rb_weight(g, scaled, Q(3))
    assert res.is_solution
    for t in res.tensors:
        assert oracle_cybe(res.big, t) == {}
    assert not lift_rb_weight(g, identity_map(g.space), Q(1)).is_solution
    with pytest.raises(ValueError):
        lift_rb_weight(g, proj, 0)


def test_relative_operator_to_rota_baxter():
    g = get("sl2").algebra
    res = o_operator_to_rb(g, self_target(g), identity_map(g.space), Q(-1))
    assert res.is_solution
    assert len(res.maps) == 2  # the extension and its companion
    # scaling sweep on an abelian-image operator over a trivial module
    aff1 = get("aff1").algebra
    triv = trivial_representation(aff1, 2)
    into_line = map_from_matrix(triv.space, aff1.space, ((1, 1), (0, 0)))
    for lam, mu in ((Q(1), Q(1)), (Q(2), Q(3)), (Q(-1), Q(2))):
        res = o_operator_to_rb(aff1, module_target(triv), into_line, lam, mu)
        assert res.is_solution
    with pytest.raises(ValueError):
        o_operator_to_rb(g, self_target(g), identity_map(g.space), 1, scale=2)


def test_invertible_operator_extension():
    aff1 = get("aff1").algebra
    co = coadjoint_representation(aff1)
    hat = map_from_matrix(co.space, aff1.space, ((0, -1), (1, 0)))
    res = invertible_o_operator_to_rb(aff1, co, hat, Q(2), Q(1), Q(3))
    assert res.is_solution
    bad = invertible_o_operator_to_rb(
        aff1, adjoint_representation(aff1), identity_map(aff1.space), 0, 1, 1
    )
    assert not bad.is_solution
    with pytest.raises(ValueError):
        invertible_o_operator_to_rb(aff1, co, hat, 1, 0, 3)
    with pytest.raises(ValueError):
        invertible_o_operator_to_rb(aff1, co, hat, 1, 1, -1)
    with pytest.raises(ValueError):
        invertible_o_operator_to_rb(
            aff1, co, zero_map(co.space, aff1.space), 1, 1, 3
        )


def test_relative_differential_to_rota_baxter():
    g = get("sl2").algebra
    tgt = self_target(g)
    res = reldiff_to_rb(g, tgt, Q(-1) * identity_map(g.space))
    assert res.is_solution
    assert dict(res.params)["weight"] == Q(-1)
    assert len(res.maps) == 2
    assert not reldiff_to_rb(g, tgt, identity_map(g.space)).is_solution
    # module form: coboundaries x -> rho(x) v0 qualify at any parameters
    ad = adjoint_representation(g)
    v0 = (Q(1), Q(-2), Q(3))
    cob = map_from_matrix(
        g.space,
        g.space,
        tuple(zip(*(ad.act(g.basis_element(i), v0) for i in range(g.dim)))),
    )
    res = reldiff_to_rb(g, module_target(ad), cob, weight=Q(3), scale=Q(2))
    assert res.is_solution
    with pytest.raises(ValueError):
        reldiff_to_rb(g, tgt, identity_map(g.space), weight=1, scale=1)
    with pytest.raises(ValueError):
        reldiff_to_rb(g, module_target(ad), cob, weight=0, scale=1)


def test_dual_bracket_computed_two_ways_agrees():
    for t in range(40):
        rng = trial_rng(43, t)
        g = get(("aff1", "heisenberg3", "sl2", "so3")[t % 4]).algebra
        r = rand_tensor2(rng, g.space)
        pairing, formula = dual_bracket_tables(g, r)
        assert pairing == formula
        plus, minus = sym_skew_parts(r)
        if plus.is_zero():
            assert skew_dual_bracket(g, r) == pairing


def test_lie_coalgebra_verdicts():
    aff1 = get("aff1").algebra
    rep = lie_coalgebra_report(aff1, wedge(aff1.space, 0, 1))
    assert rep.agree and rep.direct_ok
    sl2 = get("sl2").algebra
    from yblift.tensors import simple_tensor

    rep2 = lie_coalgebra_report(sl2, simple_tensor(sl2.space, 0, 2))
    assert rep2.agree and not rep2.direct_ok
    for t in range(40):
        rng = trial_rng(44, t)
        g = get(("aff1", "heisenberg3", "sl2", "so3")[t % 4]).algebra
        assert lie_coalgebra_report(g, rand_tensor2(rng, g.space)).agree
