import cmath
import math
from collections import Counter
from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spincheck.characters import (
    SatakeClass,
    dimension,
    eval_character,
    eval_character_alternant,
    weyl_denominator,
    k_factor,
    weight_multiplicities,
)
from spincheck.errors import DomainError
from spincheck.lie_core import D5, enumerate_weyl_group
from spincheck.polynomials import LaurentPoly

H = Fraction(1, 2)
VECTOR_WEIGHTS = [tuple(s if k == i else 0 for k in range(5)) for i in range(5) for s in (1, -1)]


def _diagram(label):
    d = weight_multiplicities(D5.from_label(label))
    return Counter({w.coords: m for w, m in d.mults.items()})


def _exterior(k):
    out = Counter()
    for combo in combinations(VECTOR_WEIGHTS, k):
        out[tuple(Fraction(sum(c)) for c in zip(*combo))] += 1
    return out


def test_vector_diagram():
    d = weight_multiplicities(D5.from_label((1, 0, 0, 0, 0)))
    assert d.dimension == 10 and len(d) == 10
    assert set(_diagram((1, 0, 0, 0, 0))) == {tuple(Fraction(c) for c in w) for w in VECTOR_WEIGHTS}
    assert set(_diagram((1, 0, 0, 0, 0)).values()) == {1}


@pytest.mark.parametrize("label,parity", [((0, 0, 0, 0, 1), 0), ((0, 0, 0, 1, 0), 1)])
def test_half_spin_diagrams(label, parity):
    expected = Counter()
    for signs in product((1, -1), repeat=5):
        if signs.count(-1) % 2 == parity:
            expected[tuple(s * H for s in signs)] = 1
    assert _diagram(label) == expected
    assert dimension(D5.from_label(label)) == 16


def test_trivial_diagram():
    d = weight_multiplicities(D5.from_label((0,) * 5))
    assert d.dimension == 1 and dict(d.mults) == {D5.from_label((0,) * 5): 1}


@pytest.mark.parametrize("k,label", [(2, (0, 1, 0, 0, 0)), (3, (0, 0, 1, 0, 0))])
def test_exterior_powers_are_irreducible(k, label):
    # Lambda^2 and Lambda^3 of the vector representation are irreducible for so(10).
    assert _diagram(label) == _exterior(k)


def test_symmetric_square_of_vector():
    sym2 = Counter()
    for a, b in combinations(range(10), 2):
        sym2[tuple(Fraction(x + y) for x, y in zip(VECTOR_WEIGHTS[a], VECTOR_WEIGHTS[b]))] += 1
    for a in VECTOR_WEIGHTS:
        sym2[tuple(Fraction(2 * x) for x in a)] += 1
    sym2[(Fraction(0),) * 5] -= 1  # remove the invariant form
    assert _diagram((2, 0, 0, 0, 0)) == +sym2


def test_dimension_examples():
    assert dimension(D5.from_label((0, 0, 0, 0, 1))) == 16
    assert 2 * dimension(D5.from_label((0, 0, 0, 0, 1))) == 32
    assert dimension(D5.from_label((0, 0, 1, 0, 0))) == 120
    assert dimension(D5.from_label((0, 0, 0, 0, 2))) == 126


@pytest.mark.parametrize("label", list(product(range(2), repeat=5)))
def test_diagram_invariants(label):
    lam = D5.from_label(label)
    d = weight_multiplicities(lam)
    assert sum(d.mults.values()) == d.dimension == dimension(lam)
    assert d.mults[lam] == 1


def test_diagram_weyl_invariant():
    d = weight_multiplicities(D5.from_label((1, 1, 0, 0, 1)))
    for g in enumerate_weyl_group(D5)[::37]:
        for w, m in d.mults.items():
            assert d.mults[g.act(w)] == m


def test_non_dominant_rejected():
    with pytest.raises(DomainError):
        weight_multiplicities(D5.weight((0, 1, 0, 0, 0)))
    with pytest.raises(DomainError):
        dimension(D5.weight((0, 1, 0, 0, 0)))


def test_character_at_identity_is_dimension():
    one = SatakeClass.identity()
    for label in [(0,) * 5, (1, 0, 0, 0, 0), (0, 0, 0, 0, 1), (1, 2, 0, 1, 0), (0, 0, 0, 0, 4)]:
        lam = D5.from_label(label)
        assert eval_character(lam, one) == pytest.approx(dimension(lam), abs=1e-9)


def test_trivial_character_is_one():
    s = SatakeClass.random(np.random.default_rng(0))
    assert eval_character(D5.from_label((0,) * 5), s) == pytest.approx(1.0)


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("label", [(0, 0, 0, 0, 1), (1, 0, 0, 0, 0), (1, 2, 0, 1, 0), (0, 1, 1, 0, 2)])
def test_weight_sum_matches_alternant(seed, label):
    s = SatakeClass.random(np.random.default_rng(seed))
    lam = D5.from_label(label)
    a, b = eval_character(lam, s), eval_character_alternant(lam, s)
    assert abs(a - b) <= 1e-10 * max(1.0, abs(b))


def test_alternant_off_unit_circle():
    s = SatakeClass.random(np.random.default_rng(3), tempered=False)
    lam = D5.from_label((1, 0, 1, 0, 1))
    a, b = eval_character(lam, s), eval_character_alternant(lam, s)
    assert abs(a - b) <= 1e-10 * abs(b)


def test_alternant_rejects_singular_class():
    with pytest.raises(DomainError):
        eval_character_alternant(D5.from_label((1, 0, 0, 0, 0)), SatakeClass.identity())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 1919), st.integers(0, 2**32 - 1))
def test_character_weyl_invariant(idx, seed):
    s = SatakeClass.random(np.random.default_rng(seed))
    g = enumerate_weyl_group(D5)[idx]
    moved = [0.0] * 5
    for i, (p, sg) in enumerate(zip(g.perm, g.signs)):
        moved[p] = sg * s.thetas[i]
    t = SatakeClass(tuple(moved), s.chi)
    lam = D5.from_label((1, 0, 1, 0, 1))
    a, b = eval_character(lam, s), eval_character(lam, t)
    assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


def test_satake_validation():
    with pytest.raises(DomainError):
        SatakeClass((0.0,) * 5, 0)
    with pytest.raises(DomainError):
        SatakeClass((0.0,) * 5, 2.0)
    with pytest.raises(DomainError):
        SatakeClass((1j, 0, 0, 0, 0), 1.0)
    assert SatakeClass((1j, 0, 0, 0, 0), 2.0, tempered=False).chi == 2.0


def test_random_class_sampling():
    rng = np.random.default_rng(42)
    for _ in range(20):
        s = SatakeClass.random(rng)
        assert all(0 <= t < 2 * math.pi for t in s.thetas)
        assert abs(abs(s.chi) - 1) < 1e-12


# --- k_factor against a Gelfand-Tsetlin oracle -------------------------------------

def _schur_gt(top):
    """s_top(chi^2, 1, chi^-2) by summing over Gelfand-Tsetlin patterns."""
    l1, l2, l3 = top
    out = Counter()
    for m1 in range(l2, l1 + 1):
        for m2 in range(l3, l2 + 1):
            for nu in range(m2, m1 + 1):
                x1, x3 = nu, (l1 + l2 + l3) - (m1 + m2)
                out[2 * x1 - 2 * x3] += 1
    return LaurentPoly(dict(out))


def _sym_trace(n):
    return LaurentPoly({n - 2 * j: 1 for j in range(n + 1)})


_SCHUR = {(a, b): _schur_gt((a + b, b, 0)) for a in range(7) for b in range(7)}


@pytest.mark.parametrize("n2,n3", sorted(_SCHUR))
def test_k_factor_matches_schur_oracle(n2, n3):
    for n1 in range(7):
        for n5 in range(7):
            assert k_factor(n1, n2, n3, n5) == _SCHUR[n2, n3] * _sym_trace(n1) * _sym_trace(n5)


def test_k_factor_examples():
    assert k_factor(0, 0, 0, 0) == LaurentPoly({0: 1})
    assert k_factor(1, 0, 0, 0) == LaurentPoly({-1: 1, 1: 1})
    assert k_factor(0, 1, 0, 0) == LaurentPoly({-2: 1, 0: 1, 2: 1})
    # The elementary symmetric function e_2 = s_(1,1,0) has the same value at (chi^2, 1, chi^-2).
    assert k_factor(0, 1, 0, 0) == _schur_gt((1, 1, 0))


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.integers(0, 8)] * 4))
def test_k_factor_at_one(ns):
    n1, n2, n3, n5 = ns
    gl3 = (n2 + 1) * (n3 + 1) * (n2 + n3 + 2) // 2
    assert k_factor(n1, n2, n3, n5).evaluate(1) == gl3 * (n1 + 1) * (n5 + 1)


def test_k_factor_rejects_negative():
    with pytest.raises(DomainError):
        k_factor(-1, 0, 0, 0)


def test_k_factor_symmetric_in_chi():
    for ns in [(1, 2, 0, 3), (2, 1, 1, 0), (0, 3, 2, 1)]:
        k = k_factor(*ns)
        assert k == k.invert_variable()
        z = cmath.exp(0.7j)
        assert abs(k.evaluate(z) - k.evaluate(1 / z)) < 1e-12


def test_alternant_loses_digits_near_walls():
    # Both routes agree to within roughly machine epsilon divided by the Weyl denominator.
    lam = D5.from_label((1, 0, 0, 0, 0))
    dens = []
    for eps in (1e-2, 1e-4, 1e-6):
        s = SatakeClass((0.3, 0.3 + eps, 1.1, 2.0, 2.9), 1.0)
        den = abs(weyl_denominator(s))
        dens.append(den)
        a, b = eval_character(lam, s), eval_character_alternant(lam, s)
        assert abs(a - b) <= 1e-12 / den
    # The denominator vanishes to first order as the class approaches the wall.
    assert dens[1] / dens[0] == pytest.approx(1e-2, rel=0.05)
    assert dens[2] / dens[1] == pytest.approx(1e-2, rel=0.05)


def test_weyl_denominator_vanishes_on_walls():
    assert abs(weyl_denominator(SatakeClass((0.3, 0.3, 1.1, 2.0, 2.9), 1.0))) < 1e-12
    assert abs(weyl_denominator(SatakeClass.identity())) < 1e-12
