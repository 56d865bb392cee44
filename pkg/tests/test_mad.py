import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cordial.groups import centered, centered_range
from cordial.mad import (
    alpha,
    disjoint_pairs_in_set,
    expected_family_size,
    family_search,
    mad_pairs,
    verify_additively_disjoint,
)

GOLDEN_31 = {
    frozenset(p)
    for p in [
        (2, 6), (4, 5), (3, 10), (1, 11),
        (-2, -6), (-4, -5), (-3, -10), (-1, -11),
        (-7, 14), (15, -15),
    ]
}


def test_golden_family_31():
    family = mad_pairs(31)
    assert {frozenset((p.a, p.b)) for p in family.pairs} == GOLDEN_31
    assert sorted(p.sum for p in family.pairs) == sorted(
        [0, 7, 8, -8, 9, -9, 12, -12, 13, -13]
    )
    assert family.mu == 10 and len(family.pairs) == 10


def test_alpha():
    assert alpha(31) == 7
    assert alpha(12) == 3
    assert alpha(20) == 5.5  # nearest half-integer to 5, tie rounds up
    assert alpha(9) == 2.5
    assert alpha(13) == 3  # nearest integer to 3.25
    assert alpha(14) == 4  # 3.5 rounds up
    with pytest.raises(ValueError):
        alpha(0)


def test_small_families():
    assert [(p.a, p.b, p.sum) for p in mad_pairs(3).pairs] == [(-1, 1, 0)]
    m6 = mad_pairs(6)
    assert len(m6.pairs) == 1 == expected_family_size(6)
    assert (m6.pairs[0].a, m6.pairs[0].b) == (-1, 2)
    assert len(mad_pairs(18).pairs) == 5  # mu - 1 for m = 6 mod 12
    assert mad_pairs(1).pairs == () and mad_pairs(2).pairs == ()


def test_count_law_and_containment_to_300():
    for m in range(1, 301):
        family = mad_pairs(m)
        assert len(family.pairs) == expected_family_size(m), m
        assert verify_additively_disjoint(family.as_pairs(), m).ok, m
        s = set(centered_range(m))
        for p in family.pairs:
            # no modular wraparound: plain integer sums stay inside S
            assert p.a in s and p.b in s and (p.a + p.b) in s, (m, p)
            assert p.sum == p.a + p.b


def _negation_exceptions(m):
    """Pairs allowed to lack a negated partner: the appended specials and, for
    r in {2, 8}, the survivor of the dropped negative pair."""
    if m < 3:
        return set()
    n, r = divmod(m, 12)
    extra = set()
    if r in (0, 1):
        extra = {(-3 * n, 6 * n), (-2 * n, 2 * n)}
    elif r in (2, 3, 4, 5):
        extra = {(-3 * n - 1, 3 * n + 1)}
        if r == 2:
            extra.add((2 * n - 1, 4 * n + 2))
    elif r in (6, 7):
        extra = {(-3 * n - 1, 6 * n + 2), (-6 * n - 3, 6 * n + 3)}
    else:
        extra = {(-5 * n - 4, 5 * n + 4)}
        if r == 8:
            extra.add((2 * n, 4 * n + 4))
    return extra


@pytest.mark.parametrize("m", list(range(1, 101)))
def test_negation_closure(m):
    family = mad_pairs(m)
    pairs = set(family.as_pairs())
    allowed = _negation_exceptions(m)
    for a, b in pairs:
        if (-a, -b) not in pairs:
            assert (a, b) in allowed, (m, a, b)


def test_verify_additively_disjoint():
    ok = verify_additively_disjoint([(2, 6), (4, 5)], 31)
    assert ok.ok and ok.witness is None
    bad = verify_additively_disjoint([(1, 2), (3, 4)], 5)
    assert not bad.ok and "collides" in bad.witness
    assert verify_additively_disjoint([], 7).ok


@given(st.integers(3, 120))
@settings(max_examples=60)
def test_family_unchanged_by_reporting(m):
    # residue view matches the centered view element-by-element
    family = mad_pairs(m)
    for (ra, rb), p in zip(family.residue_pairs(), family.pairs):
        assert centered(m, ra) == p.a and centered(m, rb) == p.b


def test_disjoint_pairs_in_set():
    s7 = set(centered_range(7)) - {0}
    found = disjoint_pairs_in_set(frozenset(s7), 7, 1)
    assert found is not None and len(found) == 1
    a, b = found[0]
    assert {a, b, centered(7, a + b)} <= s7

    assert disjoint_pairs_in_set(frozenset({0}), 7, 1) is None

    # rescaled situation: allowed = 4*S' inside Z_11 gives two pairs
    m = 11
    s_prime = [x for x in centered_range((m + 3) // 2)]
    allowed = frozenset(centered(m, 4 * x) for x in s_prime)
    found = disjoint_pairs_in_set(allowed, m, 2)
    assert found is not None and len(found) == 2
    used = []
    for a, b in found:
        used += [a % m, b % m, (a + b) % m]
        assert centered(m, a) in allowed and centered(m, b) in allowed
        assert centered(m, a + b) in allowed
    assert len(set(used)) == 6


def test_disjoint_pairs_validates_input():
    with pytest.raises(ValueError):
        disjoint_pairs_in_set(frozenset({99}), 7, 1)
    assert disjoint_pairs_in_set(frozenset(), 7, 0) == []


def test_family_search_converse_blind():
    # exhaustive, no counting certificate: the maximum truly drops for 6, 18
    for m in (6, 18):
        res = family_search(m, m // 3, use_counting_certificate=False)
        assert res.status == "infeasible", (m, res.status)
        res = family_search(m, m // 3 - 1, use_counting_certificate=False)
        assert res.status == "found"
        assert verify_additively_disjoint(res.pairs, m).ok


def test_family_search_certificate():
    for m in (6, 18, 30):
        res = family_search(m, m // 3)
        assert res.status == "infeasible" and res.certificate is not None


def test_family_search_positive():
    for m in (3, 9, 12, 15, 21, 24, 7, 10, 14):
        res = family_search(m, expected_family_size(m))
        assert res.status == "found"
        assert verify_additively_disjoint(res.pairs, m).ok
    assert family_search(5, 0).status == "found"
