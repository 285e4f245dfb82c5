import itertools
from fractions import Fraction

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given
from scipy.optimize import linprog

from belieforder.baselines import (
    Formalism,
    SearchExhausted,
    SingleSetParam,
    bayes_factor_table,
    impartiality_witness,
    min_bayes_factor,
    single_prior_completeness_witness,
    single_prior_order,
    single_set_order,
    single_set_vertices,
    uniform_prior,
)
from belieforder.decider import decide
from belieforder.ensemble import Distribution
from belieforder.evidence import Evidence, PiParam
from belieforder.sentences import Domain

from conftest import evidence_for, pis

F = Fraction


def test_uniform_prior_orders_unrelated_sentences():
    d = Domain(["s", "t", "u"])
    prior = uniform_prior(d)
    assert single_prior_order(prior, d.parse("s or t"), d.atom("u"), None)
    assert not single_prior_order(prior, d.atom("u"), d.parse("s or t"), None)


def test_uniform_prior_dichotomy_orders_both_ways():
    d = Domain(["s", "t"])
    prior = uniform_prior(d)
    s, not_s = d.atom("s"), ~d.atom("s")
    assert single_prior_order(prior, s, not_s, None)
    assert single_prior_order(prior, not_s, s, None)


def test_single_prior_reflexive():
    d = Domain.of_size(3)
    prior = Distribution((F(1, 2), F(1, 3), F(1, 6)))
    ev = Evidence(d, [F(1, 4), 1, F(1, 2)])
    for s in d.all_sentences():
        assert single_prior_order(prior, s, s, ev)


def test_single_prior_impossible_evidence():
    d = Domain(["s", "t"])
    prior = Distribution((F(1), F(0)))
    with pytest.raises(ValueError):
        single_prior_order(prior, d.atom("s"), d.atom("t"), Evidence(d, [0, 1]))


def test_single_set_vertices_three_atoms():
    d = Domain.of_size(3)
    vs = {v.probs for v in single_set_vertices(d, SingleSetParam(F(1, 8), 3))}
    assert vs == set(itertools.permutations((F(3, 4), F(1, 8), F(1, 8))))


def test_single_set_two_atoms_matches_ensemble_vertices():
    d = Domain(["a", "b"])
    pi = F(2, 5)
    vs = [v.probs for v in single_set_vertices(d, SingleSetParam(pi, 2))]
    assert vs == [(1 - pi, pi), (pi, 1 - pi)]


@pytest.mark.parametrize("n, c", [(3, F(1, 8)), (4, F(1, 10)), (5, F(1, 20)), (6, F(1, 11))])
def test_single_set_vertices_against_lp(n, c):
    d = Domain.of_size(n)
    vertices = np.array([[float(p) for p in v.probs] for v in single_set_vertices(d, SingleSetParam(c, n))])
    # each vertex: feasible, with N - 1 of the bounds p >= c tight
    for v in vertices:
        assert np.isclose(v.sum(), 1) and np.all(v >= float(c) - 1e-12)
        assert np.sum(np.isclose(v, float(c))) == n - 1
    # every LP optimum over the polytope lands on one of them
    rng = np.random.default_rng(0)
    hit = set()
    for _ in range(60):
        res = linprog(
            rng.normal(size=n),
            A_eq=np.ones((1, n)),
            b_eq=[1.0],
            bounds=[(float(c), None)] * n,
            method="highs",
        )
        assert res.success
        dist = np.abs(vertices - res.x).max(axis=1)
        assert dist.min() < 1e-9
        hit.add(int(dist.argmin()))
    assert hit == set(range(n))


@pytest.mark.parametrize("c, n", [(0, 3), (F(1, 4), 3), (F(1, 2), 2), (F(-1, 10), 4)])
def test_single_set_param_bounds(c, n):
    with pytest.raises(ValueError):
        SingleSetParam(c, n)


def test_single_set_nil_orders_only_implications():
    d = Domain.of_size(4)
    c = SingleSetParam(F(1, 10), 4)
    for s, t in itertools.product(d.all_sentences(), repeat=2):
        assert single_set_order(d, c, s, t, None) == t.implies(s)


def test_single_set_impartiality_example():
    d = Domain(["s", "t", "u"])
    c = SingleSetParam(F(1, 8), 3)
    ev = Evidence(d, {"s": F(1, 32), "t": F(1, 32), "u": F(1, 5)})
    assert single_set_order(d, c, d.atom("u"), d.atom("s"), ev)
    assert not single_set_order(d, c, d.atom("u"), d.parse("s or t"), ev)


def _brute_bayes_factor(n, c, grid=400):
    # smallest B on a grid of step 1/4 that makes the single set assert s >= not s
    d = Domain.of_size(n)
    s = d.atom("a0")
    param = SingleSetParam(c, n)
    for k in range(1, grid + 1):
        b = F(k, 4)
        x = 1 / b if b > 1 else F(1)
        ev = Evidence(d, [b * x] + [x] * (n - 1))
        if single_set_order(d, param, s, ~s, ev):
            return b
    return None


def test_min_bayes_factor_n4():
    d = Domain.of_size(4)
    assert min_bayes_factor(d, SingleSetParam(F(1, 8), 4)) == 7
    assert _brute_bayes_factor(4, F(1, 8)) == 7


@pytest.mark.parametrize("n, c", [(2, F(1, 3)), (3, F(1, 5)), (5, F(1, 12)), (3, F(1, 7))])
def test_min_bayes_factor_matches_brute_force(n, c):
    d = Domain.of_size(n)
    exact = min_bayes_factor(d, SingleSetParam(c, n))
    # the grid minimum is the exact value rounded up to the grid
    assert _brute_bayes_factor(n, c) == F(-(-exact * 4 // 1), 4)
    # and the exact value itself is the knife edge
    s = d.atom("a0")
    param = SingleSetParam(c, n)
    at = Evidence(d, [F(1)] + [1 / exact] * (n - 1))
    assert single_set_order(d, param, s, ~s, at)
    below = Evidence(d, [F(1)] + [1 / (exact - F(1, 10**6))] * (n - 1))
    assert not single_set_order(d, param, s, ~s, below)


def test_min_bayes_factor_dichotomy_limit():
    d = Domain.of_size(2)
    values = [min_bayes_factor(d, SingleSetParam(F(1, 2) - F(1, k), 2)) for k in (10, 100, 10**4)]
    assert values == sorted(values, reverse=True)
    assert all(v > 1 for v in values)
    assert values[-1] - 1 < F(1, 1000)


def test_bayes_factor_table_bound():
    for n, c, b in bayes_factor_table(range(2, 9)):
        assert b >= n - 1


def test_impartiality_witnesses():
    d = Domain(["s", "t", "u"])
    w = impartiality_witness(Formalism.SINGLE_PRIOR, d)
    ev = w.evidence
    assert ev["s"] == ev["t"] > 0
    prior = uniform_prior(d)
    assert single_prior_order(prior, d.atom("u"), d.atom("s"), ev)
    assert not single_prior_order(prior, d.atom("u"), d.parse("s or t"), ev)

    c = SingleSetParam(F(1, 8), 3)
    w = impartiality_witness(Formalism.SINGLE_SET, d, {"c": c})
    assert single_set_order(d, c, d.atom("u"), d.atom("s"), w.evidence)
    assert not single_set_order(d, c, d.atom("u"), d.parse("s or t"), w.evidence)

    with pytest.raises(SearchExhausted):
        impartiality_witness(Formalism.ENSEMBLE, d, {"pi": PiParam(F(1, 3))}, max_denominator=32)


def test_impartiality_needs_three_atoms():
    with pytest.raises(ValueError):
        impartiality_witness(Formalism.SINGLE_PRIOR, Domain.of_size(2))


@pytest.mark.parametrize("n", [2, 3])
def test_single_prior_completeness(n):
    d = Domain.of_size(n)
    w = single_prior_completeness_witness(uniform_prior(d), d)
    assert not w.first.implies(w.second) and not w.second.implies(w.first)
    assert w.forward or w.backward


@given(pis, st.data())
def test_dichotomous_equivalence(pi, data):
    d = Domain(["a", "b"])
    ev = data.draw(evidence_for(d))
    c = SingleSetParam(pi, 2)
    for s, t in itertools.product(d.all_sentences(), repeat=2):
        assert single_set_order(d, c, s, t, ev) == decide(s, t, ev, PiParam(pi))
