import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cordial.groups import (
    KLEIN,
    KLEIN_BY_NAME,
    FiniteAbelianGroup,
    centered,
    centered_range,
    format_element,
    uncentered,
    unit_scale,
    zero_fixing_bijections,
)

A, B, C = KLEIN_BY_NAME["a"], KLEIN_BY_NAME["b"], KLEIN_BY_NAME["c"]


def test_klein_addition_table():
    assert KLEIN.add(A, B) == C
    assert KLEIN.add(A, C) == B
    assert KLEIN.add(B, C) == A
    for x in KLEIN.elements():
        assert KLEIN.add(x, x) == KLEIN.zero


def test_add_identity_and_examples():
    z7 = FiniteAbelianGroup.cyclic(7)
    assert z7.add((5,), (4,)) == (2,)
    for g in (z7, KLEIN, FiniteAbelianGroup((2, 3, 4))):
        for x in g.elements():
            assert g.add(x, g.zero) == x


def test_add_dimension_mismatch():
    with pytest.raises(ValueError):
        KLEIN.add((1, 0), (1,))
    with pytest.raises(ValueError):
        FiniteAbelianGroup.cyclic(5).add((7,), (1,))  # 7 not reduced


def test_neg_examples():
    z31 = FiniteAbelianGroup.cyclic(31)
    assert z31.neg((7,)) == (24,)
    assert centered(31, 24) == -7
    assert KLEIN.neg(C) == C
    assert z31.neg(z31.zero) == z31.zero


@pytest.mark.parametrize("orders", [(2,), (5,), (8,), (2, 2), (3, 4), (2, 2, 2)])
def test_group_laws_exhaustive(orders):
    g = FiniteAbelianGroup(orders)
    els = list(g.elements())
    assert len(els) == g.order
    for x in els:
        assert g.add(x, g.neg(x)) == g.zero
    for x in els:
        for y in els:
            assert g.add(x, y) == g.add(y, x)
    # associativity on a deterministic slice to keep the cube small
    for x in els[:4]:
        for y in els:
            for z in els:
                assert g.add(g.add(x, y), z) == g.add(x, g.add(y, z))


@given(st.integers(1, 500), st.integers(-2000, 2000))
def test_centered_round_trip(m, a):
    v = centered(m, a)
    assert -((m - 1) // 2) <= v <= m // 2
    assert v % m == a % m
    assert uncentered(m, v) == a % m


def test_centered_examples():
    assert centered(31, 24) == -7
    assert centered(31, 15) == 15
    assert centered(4, 2) == 2  # even-order tie goes to +m/2
    assert list(centered_range(5)) == [-2, -1, 0, 1, 2]
    assert list(centered_range(4)) == [-1, 0, 1, 2]


def test_centered_is_a_bijection_onto_s():
    for m in (1, 2, 7, 8, 31, 64):
        image = sorted(centered(m, a) for a in range(m))
        assert image == list(centered_range(m))
        assert [uncentered(m, v) for v in centered_range(m)] == sorted(
            set(range(m)), key=lambda a: centered(m, a)
        )


def test_unit_scale():
    assert {unit_scale(5, 4, a) for a in (1, 2, 3, 4)} == {4, 3, 2, 1}
    assert unit_scale(7, 4, 3) == 5
    with pytest.raises(ValueError):
        unit_scale(6, 3, 1)


@given(st.integers(2, 60), st.integers(1, 59))
@settings(max_examples=200)
def test_unit_scale_bijective(m, u):
    if __import__("math").gcd(u, m) != 1:
        with pytest.raises(ValueError):
            unit_scale(m, u, 0)
        return
    image = {unit_scale(m, u, a) for a in range(m)}
    assert image == set(range(m))


def test_zero_fixing_bijections_count_and_homomorphism():
    maps = zero_fixing_bijections(KLEIN)
    assert len(maps) == 6
    els = list(KLEIN.elements())
    for phi in maps:
        assert phi[KLEIN.zero] == KLEIN.zero
        for x in els:
            for y in els:
                assert phi[KLEIN.add(x, y)] == KLEIN.add(phi[x], phi[y])
    identity = {x: x for x in els}
    assert identity in maps
    swap_ab = {KLEIN.zero: KLEIN.zero, A: B, B: A, C: C}
    assert swap_ab in maps


def test_zero_fixing_bijections_rejects_other_groups():
    with pytest.raises(ValueError):
        zero_fixing_bijections(FiniteAbelianGroup.cyclic(4))


def test_format_element():
    assert format_element(KLEIN, A) == "a"
    assert format_element(FiniteAbelianGroup.cyclic(9), (5,)) == "5"
    assert format_element(FiniteAbelianGroup((2, 3)), (1, 2)) == "(1,2)"


def test_invalid_groups():
    with pytest.raises(ValueError):
        FiniteAbelianGroup((0,))
    with pytest.raises(ValueError):
        FiniteAbelianGroup(())
