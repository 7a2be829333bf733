from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spincheck.errors import ConfigurationError, DomainError
from spincheck.lie_core import (
    D5,
    WeylElement,
    build_root_system,
    dominant_representative,
    enumerate_weyl_group,
)

F = Fraction
H = F(1, 2)


def _reflect(v, root):
    # s_a(v) = v - <v, a^vee> a, done on plain tuples.
    num = 2 * sum(x * y for x, y in zip(v, root))
    den = sum(y * y for y in root)
    return tuple(x - num / den * y for x, y in zip(v, root))


def _orbit_by_reflections(system, v):
    """Weyl orbit of v built only from simple reflections (independent of signed permutations)."""
    simple = [r.coords for r in system.simple_roots]
    seen = {tuple(v)}
    frontier = [tuple(v)]
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple:
                y = _reflect(x, a)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_d5_basic_data():
    assert D5.rank == 5 and len(D5.positive_roots) == 20
    assert D5.rho.coords == (4, 3, 2, 1, 0)
    assert D5.fundamental_weights[4].coords == (H,) * 5
    assert D5.fundamental_weights[3].coords == (H, H, H, H, -H)
    assert D5.fundamental_weights[0].coords == (1, 0, 0, 0, 0)


def test_a1_rho():
    a1 = build_root_system("A", 1)
    assert len(a1.positive_roots) == 1
    assert a1.rho.coords == (H, -H)


@pytest.mark.parametrize("tag,rank", [("A", 1), ("A", 3), ("A", 5), ("D", 3), ("D", 4), ("D", 5)])
def test_fundamental_weights_dual_to_simple_coroots(tag, rank):
    sys = build_root_system(tag, rank)
    for i, fw in enumerate(sys.fundamental_weights):
        pairings = [fw.coroot_pairing(a) for a in sys.simple_roots]
        assert pairings == [1 if j == i else 0 for j in range(rank)]
    total = sys.fundamental_weights[0]
    for fw in sys.fundamental_weights[1:]:
        total = total + fw
    assert total == sys.rho


@pytest.mark.parametrize("tag,rank", [("B", 3), ("D", 2), ("A", 0), ("E", 6)])
def test_unsupported_systems(tag, rank):
    with pytest.raises(ConfigurationError):
        build_root_system(tag, rank)


def test_weyl_group_orders():
    assert len(enumerate_weyl_group(build_root_system("A", 1))) == 2
    assert len(enumerate_weyl_group(build_root_system("A", 2))) == 6
    group = enumerate_weyl_group(D5)
    assert len(group) == 1920 == 2**4 * 120
    assert len({(w.perm, w.signs) for w in group}) == 1920


def test_weyl_group_matches_reflection_closure():
    # The orbit of a regular weight under simple reflections has |W| points,
    # and must coincide with the signed-permutation images.
    regular = (F(5), F(4), F(3), F(2), F(1))
    orbit = _orbit_by_reflections(D5, regular)
    assert len(orbit) == 1920
    w = D5.weight(regular)
    assert {g.act(w).coords for g in enumerate_weyl_group(D5)} == orbit


def test_weyl_action_preserves_roots():
    roots = set(D5.roots)
    for g in enumerate_weyl_group(D5):
        assert all(g.act(r) in roots for r in D5.positive_roots)


def test_weyl_group_too_large():
    big = build_root_system("D", 9)
    with pytest.raises(ConfigurationError):
        enumerate_weyl_group(big)


def test_compose_and_inverse():
    group = enumerate_weyl_group(D5)
    v = D5.weight((5, 4, 3, 2, 1))
    for a, b in zip(group[::97], group[::-89]):
        assert a.compose(b).act(v) == a.act(b.act(v))
        assert a.compose(a.inverse()).is_identity()
        assert a.compose(b).det == a.det * b.det


def _brute_dominant(w):
    """Search the whole group: dominant image, and det if the stabilizer is trivial."""
    hits = [g for g in enumerate_weyl_group(D5) if g.act(w).is_dominant()]
    stab = [g for g in enumerate_weyl_group(D5) if g.act(w) == w]
    image = hits[0].act(w)
    return image, (hits[0].det if len(stab) == 1 else 0)


@pytest.mark.parametrize(
    "coords,expected,sign",
    [
        ((4, 3, 2, 1, 0), (4, 3, 2, 1, 0), 1),
        ((3, 4, 2, 1, 0), (4, 3, 2, 1, 0), -1),
        ((4, 3, 2, 1, 1), (4, 3, 2, 1, 1), 0),
        ((4, 3, 2, 1, -1), (4, 3, 2, 1, -1), 0),
        ((0, 1, 2, 3, 4), (4, 3, 2, 1, 0), None),
    ],
)
def test_dominant_representative_examples(coords, expected, sign):
    w = D5.weight(coords)
    dom, s = dominant_representative(w)
    assert dom.coords == tuple(F(c) for c in expected)
    brute_dom, brute_sign = _brute_dominant(w)
    assert dom == brute_dom and s == brute_sign
    if sign is not None:
        assert s == sign


def test_spin_weight_minus_sign_kept():
    w = D5.weight((H, H, H, H, -H))
    dom, s = dominant_representative(w)
    # Dominant, but fixed by the reflection in e1 - e2.
    assert dom == w and s == 0
    shifted, s_rho = dominant_representative(w + D5.rho)
    assert shifted == w + D5.rho and s_rho == 1
    # Flipping two signs stays in the same class.
    dom2, _ = dominant_representative(D5.weight((-H, H, H, H, H)))
    assert dom2 == w


small = st.integers(min_value=-4, max_value=4)


@settings(max_examples=60, deadline=None)
@given(st.tuples(small, small, small, small, small), st.integers(0, 1919))
def test_dominant_representative_weyl_invariant(coords, idx):
    w = D5.weight(coords)
    g = enumerate_weyl_group(D5)[idx]
    d1, s1 = dominant_representative(w)
    d2, s2 = dominant_representative(g.act(w))
    assert d1 == d2
    assert dominant_representative(d1)[0] == d1
    # The sign is a det of the moving element, so it transforms by det(g).
    assert s2 == s1 * g.det


@settings(max_examples=60, deadline=None)
@given(st.tuples(small, small, small, small, small))
def test_dominant_sign_matches_brute_force(coords):
    w = D5.weight(coords)
    assert dominant_representative(w) == _brute_dominant(w)


@settings(max_examples=40, deadline=None)
@given(st.tuples(small, small, small, small, small), st.integers(0, 4))
def test_simple_reflection_flips_sign(coords, i):
    w = D5.weight(coords)
    _, s = dominant_representative(w)
    r = D5.weight(_reflect(w.coords, D5.simple_roots[i].coords))
    _, s_r = dominant_representative(r)
    assert s_r == -s


def test_weight_validation():
    with pytest.raises(DomainError):
        D5.weight((1, 2, 3))
    with pytest.raises(DomainError):
        D5.from_label((1, 0))
    assert D5.from_label((0, 0, 0, 0, 1)).label() == (0, 0, 0, 0, 1)
    with pytest.raises(DomainError):
        D5.to_scaled(D5.weight((F(1, 3), 0, 0, 0, 0)))


def test_d5_dominance_condition():
    assert D5.weight((3, 2, 1, 1, -1)).is_dominant()
    assert not D5.weight((3, 2, 1, 0, -1)).is_dominant()
    assert not D5.weight((1, 2, 0, 0, 0)).is_dominant()


def test_weyl_element_call_alias():
    g = WeylElement((1, 0, 2, 3, 4), (1, 1, 1, 1, 1))
    v = D5.weight((1, 2, 3, 4, 5))
    assert g(v).coords == (2, 1, 3, 4, 5)
    assert g.det == -1
