from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spincheck.errors import DomainError
from spincheck.orbits import (
    ORBIT_FACTS,
    Comparison,
    Partition,
    all_orthogonal_partitions,
    dominance_compare,
    greater_or_not_related,
    is_orthogonal_partition,
    paper_orbit_facts,
    partitions,
)


def _oracle(p, q):
    """Prefix sums compared one index at a time, written independently of the library."""
    a, b = list(p), list(q)
    n = max(len(a), len(b))
    a += [0] * (n - len(a))
    b += [0] * (n - len(b))
    ge = le = True
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        ge &= sa >= sb
        le &= sa <= sb
    if ge and le:
        return "equal"
    return "greater" if ge else "less" if le else "incomparable"


def _conjugate(p):
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


def test_parse_forms():
    assert Partition.parse("3^3 1").parts == (3, 3, 3, 1)
    assert Partition.parse("4^2,1^2").parts == (4, 4, 1, 1)
    assert Partition.parse("5,2,2,1") == Partition.parse("5 2 2 1") == Partition((5, 2, 2, 1))
    assert str(Partition.parse("3,3,3,1")) == "(3^3 1)"
    assert Partition.parse("(4 1^18)").total == 22


@pytest.mark.parametrize("bad", ["", "3,x", "1,3", "0,2", "3^", "-1"])
def test_parse_rejects(bad):
    with pytest.raises(DomainError):
        Partition.parse(bad)


def test_orthogonality_examples():
    assert is_orthogonal_partition("3,3,3,1", 10)
    assert is_orthogonal_partition("4,4,1,1", 10)
    assert not is_orthogonal_partition("2,1,1", 4)
    assert not is_orthogonal_partition("4 1^18", 22)
    with pytest.raises(DomainError):
        is_orthogonal_partition("3,1", 5)


@pytest.mark.parametrize(
    "p,q,verdict",
    [
        ("5,2,2,1", "3,3,3,1", Comparison.GREATER),
        ("5,1,1,1,1,1", "3,3,3,1", Comparison.INCOMPARABLE),
        ("3,3,3,1", "3,3,3,1", Comparison.EQUAL),
        ("3,3,3,1", "5,2,2,1", Comparison.LESS),
        ("4,4,1,1", "3,3,3,1", Comparison.GREATER),
    ],
)
def test_dominance_examples(p, q, verdict):
    assert dominance_compare(p, q) is verdict


def test_greater_or_not_related_examples():
    assert greater_or_not_related("4,4,1,1", "3,3,3,1")
    assert greater_or_not_related("5 1^5", "3,3,3,1")
    assert not greater_or_not_related("3,3,3,1", "3,3,3,1")
    assert not greater_or_not_related("3,3,3,1", "5,2,2,1")


def test_mismatched_totals():
    with pytest.raises(DomainError):
        dominance_compare("3,1", "2,1")


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(1, 13))
def test_dominance_matches_prefix_oracle(n):
    ps = list(partitions(n))
    for p, q in product(ps, ps):
        assert dominance_compare(p, q).value == _oracle(p.parts, q.parts)


@pytest.mark.parametrize("n", range(1, 11))
def test_conjugation_reverses_dominance(n):
    ps = list(partitions(n))
    flip = {"greater": "less", "less": "greater", "equal": "equal", "incomparable": "incomparable"}
    for p, q in product(ps, ps):
        pc, qc = Partition(_conjugate(p.parts)), Partition(_conjugate(q.parts))
        assert dominance_compare(pc, qc).value == flip[dominance_compare(p, q).value]


ORTH10 = all_orthogonal_partitions(10)
orth10 = st.sampled_from(ORTH10)


def test_orthogonal_partitions_of_ten():
    # Every even part with even multiplicity, checked by brute force over all partitions.
    brute = [p for p in partitions(10)
             if all(p.parts.count(k) % 2 == 0 for k in p.parts if k % 2 == 0)]
    assert ORTH10 == brute
    assert Partition.parse("3^3 1") in ORTH10 and Partition.parse("4^2 1^2") in ORTH10


@settings(max_examples=200, deadline=None)
@given(orth10, orth10, orth10)
def test_partial_order_laws(p, q, r):
    assert dominance_compare(p, p) is Comparison.EQUAL
    pq, qp = dominance_compare(p, q), dominance_compare(q, p)
    assert (pq is Comparison.EQUAL) == (p == q)
    swap = {Comparison.GREATER: Comparison.LESS, Comparison.LESS: Comparison.GREATER}
    assert qp is swap.get(pq, pq)
    ge = {Comparison.GREATER, Comparison.EQUAL}
    if pq in ge and dominance_compare(q, r) in ge:
        assert dominance_compare(p, r) in ge


def test_orbit_facts_table():
    report = paper_orbit_facts()
    assert report.passed
    rows = {(r["group"], r["orbit"]): r for r in report.details["comparisons"]}
    assert rows["SO10", "(9 1)"]["comparison"] == "greater"
    assert rows["SO22", "(4 1^18)"]["comparison"] == "incomparable"
    assert rows["SO22", "(4 1^18)"]["orthogonal"] is False
    for group, n, _, big, ref in ORBIT_FACTS:
        assert greater_or_not_related(big, ref)
        assert _oracle(Partition.parse(big).parts, Partition.parse(ref).parts) in ("greater", "incomparable")
    gl6 = [r for r in report.details["comparisons"] if r["group"] == "GL6"]
    assert {r["orbit"] for r in gl6} == {"(6)", "(5 1)", "(4 2)"}
    assert not greater_or_not_related("3,3", "3,3")
