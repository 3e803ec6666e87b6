"""Acceptance gate: one test per criterion, all exact, zero tolerance.

Each test drives the randomized campaign machinery at the contracted
sizes and adds the independent-oracle confirmations where the contract
pins concrete values.  A failure in any line here means the package does
not meet its acceptance bar; nothing below is allowed to be skipped or
loosened.
"""

from fractions import Fraction as Q

from oracles import oracle_cybe, oracle_invariance
from yblift.campaigns import RunConfig, run
from yblift.catalog import casimir_tensor, entries, get
from yblift.instances import o_operator_suite, rand_symmetric_tensor, trial_rng
from yblift.lifts import lift_o_operator
from yblift.serialize import dumps
from yblift.tensors import simple_tensor, wedge
from yblift.ybe import gcybe_residual, symmetric_invariance_checks

CONFIG_100 = RunConfig(seed=7, trials=100)
CONFIG_200 = RunConfig(seed=7, trials=200)


def _passes(result, minimum_instances):
    assert result.ok, f"{result.name} failures: {result.failures[:3]}"
    assert result.positives + result.negatives >= minimum_instances
    return result


def test_criterion_1_duality_suite_exact_on_100_instances():
    res = _passes(run("duality", CONFIG_100), 100)
    assert res.positives >= 100


def test_criterion_2_known_solutions_confirmed_by_oracle():
    aff1 = get("aff1").algebra
    sl2 = get("sl2").algebra
    # the same values, once through the package and once through the
    # truncated enveloping product
    assert oracle_cybe(aff1, wedge(aff1.space, 0, 1)) == {}
    assert oracle_cybe(sl2, simple_tensor(sl2.space, 0, 2)) == {(0, 1, 2): Q(-1)}
    assert oracle_invariance(sl2, casimir_tensor(sl2)) == {}
    _passes(run("known-solutions", CONFIG_100), 100)
    algebras = [e.algebra for e in entries().values()]
    for t in range(100):
        g = algebras[t % len(algebras)]
        r = rand_symmetric_tensor(trial_rng(7, t), g.space)
        assert symmetric_invariance_checks(g, r).agree


def test_criterion_3_operator_lift_iff_two_sided_200_each_direction():
    res = _passes(run("operator-lift", CONFIG_200), 400)
    assert res.positives >= 200
    assert res.negatives >= 200


def test_criterion_4_extended_lift_grid_100_per_direction():
    res = _passes(run("extended-lift", CONFIG_200), 400)
    assert res.positives >= 100
    assert res.negatives >= 100


def test_criterion_5_rota_baxter_extensions_200_instances_each():
    for name in ("semidirect-rb", "invertible-rb", "differential-rb"):
        _passes(run(name, CONFIG_100), 200)


def test_criterion_6_dual_jacobi_and_coalgebra_verdicts():
    _passes(run("induced-bracket", CONFIG_100), 200)
    _passes(run("coalgebra", CONFIG_200), 200)
    # weight-zero relative operators always land in the generalized kernel
    for w in o_operator_suite():
        res = lift_o_operator(w.g, w.rho, w.op)
        assert res.is_solution
        assert all(t.is_zero() for t in gcybe_residual(res.big, res.tensors[0]))


def test_criterion_7_kupershmidt_two_sided_100_instances():
    res = _passes(run("kupershmidt", CONFIG_100), 100)
    assert res.positives and res.negatives


def test_criterion_8_determinism_and_roundtrips():
    res = _passes(run("roundtrip", CONFIG_100), 100)
    assert res.positives >= 100
    # byte-identical machine documents across repeated fixed-seed runs
    config = RunConfig(seed=3, trials=20)
    docs = []
    for _ in range(2):
        results = [run(name, config) for name in ("duality", "known-solutions", "kupershmidt")]
        docs.append(
            dumps(
                [
                    {
                        "name": r.name,
                        "seed": r.seed,
                        "trials": r.trials,
                        "positives": r.positives,
                        "negatives": r.negatives,
                        "ok": r.ok,
                        "failures": list(r.failures),
                    }
                    for r in results
                ]
            )
        )
    assert docs[0] == docs[1]
