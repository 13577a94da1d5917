import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lipkr.errors import NotBalanced, NotGeneric, ParseError, SamePoint
from lipkr.faces import enumerate_facets
from lipkr.metric import random_generic_metric, uniform_metric
from lipkr.norms import SignedMeasure, delta, kr_norm, kr_norm_dual, lip_norm, load_measure, measure, vertex_measure
from lipkr.oracle import brute_transport


def random_measure(ms, rng, spread=3, den=3):
    vals = [Q(rng.randint(-spread * den, spread * den), den) for _ in ms.points]
    vals[-1] -= sum(vals)
    return measure(ms, vals)


def test_lip_norm_basics(rm3):
    assert lip_norm(rm3, [7, 7, 7, 7]) == 0
    for z in rm3.points:
        assert lip_norm(rm3, [rm3.rho(x, z) for x in rm3.points]) == 1


def test_vertex_measure(rm3):
    e = vertex_measure(rm3, 1, 4)
    assert e.coeffs == (Q(4, 5), 0, 0, Q(-4, 5))
    assert -vertex_measure(rm3, 4, 1) == e
    with pytest.raises(SamePoint):
        vertex_measure(rm3, 2, 2)


def test_vertex_measures_unit_norm(rm3):
    for x, y in itertools.permutations(rm3.points, 2):
        assert kr_norm(rm3, vertex_measure(rm3, x, y)) == 1


def test_kr_norm_examples(rm3):
    for x, y in itertools.permutations(rm3.points, 2):
        assert kr_norm(rm3, delta(rm3, x, y)) == rm3.rho(x, y)
        assert kr_norm_dual(rm3, delta(rm3, x, y)) == rm3.rho(x, y)
    mu = {1: 1, 2: 1, 3: -1, 4: -1}
    assert kr_norm(rm3, mu) == Q(17, 6) == brute_transport(rm3, mu)
    assert kr_norm(rm3, {}) == 0 == brute_transport(rm3, {})


def test_not_balanced(rm3):
    with pytest.raises(NotBalanced):
        kr_norm(rm3, {1: 1})
    with pytest.raises(NotBalanced):
        SignedMeasure((Q(1), Q(0)))


def test_dual_needs_generic():
    with pytest.raises(NotGeneric):
        kr_norm_dual(uniform_metric(4), {1: 1, 2: -1})


def test_load_measure(rm3, tmp_path):
    p = tmp_path / "mu.json"
    p.write_text('{"coeffs": {"1": "1", "4": "-1"}}')
    mu = load_measure(rm3, p)
    assert kr_norm(rm3, mu) == Q(5, 4)
    with pytest.raises(ParseError):
        load_measure(rm3, {"c": {}})


@pytest.mark.parametrize("n", [3, 4])
def test_duality_and_homogeneity(n):
    ms = random_generic_metric(n, 13)
    facets = enumerate_facets(ms)
    rng = random.Random(n)
    for _ in range(40):
        mu = random_measure(ms, rng)
        v = kr_norm(ms, mu)
        assert kr_norm_dual(ms, mu, facets) == v
        lam = Q(rng.randint(1, 9), rng.randint(1, 9))
        assert kr_norm(ms, mu.scale(lam)) == lam * v
        assert kr_norm(ms, -mu) == v


def test_oracle_transport_agrees():
    ms = random_generic_metric(4, 3)
    rng = random.Random(5)
    for _ in range(60):
        units = [rng.randint(-2, 2) for _ in ms.points]
        units[-1] -= sum(units)
        if sum(u for u in units if u > 0) > 8:
            continue
        assert kr_norm(ms, units) == brute_transport(ms, units)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_triangle_inequality_and_lipschitz_pairing(s1, s2):
    ms = random_generic_metric(3, s1 % 20)
    rng = random.Random(s2)
    mu, nu = random_measure(ms, rng), random_measure(ms, rng)
    assert kr_norm(ms, mu + nu) <= kr_norm(ms, mu) + kr_norm(ms, nu)
    # any 1-Lipschitz f pairs below the norm: use distance-to-a-point functions
    for z in ms.points:
        f = [ms.rho(x, z) for x in ms.points]
        assert lip_norm(ms, f) <= 1
        assert mu.pair(f) <= kr_norm(ms, mu)
