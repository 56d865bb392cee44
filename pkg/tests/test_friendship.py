import random

import pytest

from cordial.friendship import (
    FriendshipLabeling,
    add,
    div3_range_construction,
    epsilon,
    half_construction,
    label_friendship,
    mad_construction,
    obstruction,
    shift_circumferential,
    to_half_construction,
    two_thirds_construction,
    uniform_block_even,
    uniform_block_odd,
)
from cordial.graphs import induced_edge_label


def test_obstruction_examples():
    assert obstruction(6, 2)
    assert not obstruction(2, 4)  # 4 | n
    assert not obstruction(5, 2)  # m odd
    assert not obstruction(4, 6)  # 4 does not divide 3*6=18? no: 18 % 4 != 0
    assert obstruction(2, 2) and obstruction(2, 6) and obstruction(6, 6)
    # equivalent form: m = 3n/d for an odd divisor d
    for m in range(1, 13):
        for n in range(0, 13):
            alt = (
                n % 2 == 0
                and n % 4 != 0
                and any(
                    d % 2 == 1 and m * d == 3 * n
                    for d in range(1, 3 * n + 1)
                    if d and (3 * n) % d == 0
                )
            )
            assert obstruction(m, n) == alt, (m, n)


def test_uniform_block_odd_shapes():
    assert uniform_block_odd(5).triangles == ((0, 1), (2, 3), (4, 0), (1, 2), (3, 4))
    for m in range(3, 22, 2):
        block = uniform_block_odd(m)
        assert block.n == m
        report = block.verify()
        assert report.cordial
        f_v, f_e = report.f_V.as_dict(), report.f_E.as_dict()
        assert f_v[(0,)] == 3
        assert all(f_v[(i,)] == 2 for i in range(1, m))
        assert all(f_e[(i,)] == 3 for i in range(m))
    trivial = uniform_block_odd(1)
    assert trivial.triangles == ((0, 0),) and trivial.verify().cordial
    with pytest.raises(ValueError):
        uniform_block_odd(4)


def test_uniform_block_even_shapes():
    assert uniform_block_even(2).triangles == ((0, 1), (1, 0), (0, 0), (1, 1))
    for m in range(2, 13, 2):
        block = uniform_block_even(m)
        assert block.n == 2 * m
        report = block.verify()
        assert report.cordial
        f_v, f_e = report.f_V.as_dict(), report.f_E.as_dict()
        assert f_v[(0,)] == 5
        assert all(f_v[(i,)] == 4 for i in range(1, m))
        assert all(f_e[(i,)] == 6 for i in range(m))
    with pytest.raises(ValueError):
        uniform_block_even(3)


def test_mad_construction():
    lab = mad_construction(31, 10)
    assert lab.n == 10 and lab.verify().cordial
    labels = [0] + [x for pair in lab.triangles for x in pair]
    assert len(set(labels)) == 21  # all vertex labels distinct
    edge_labels = set()
    for x, y in lab.triangles:
        edge_labels.update({x, y, (x + y) % 31})
    assert len(edge_labels) == 30

    assert mad_construction(7, 0).n == 0
    assert mad_construction(18, 5).verify().cordial
    with pytest.raises(ValueError):
        mad_construction(18, 6)


def test_half_construction_examples():
    assert half_construction(7).triangles == ((1, 2), (3, 4), (5, 6))
    assert half_construction(5).triangles == ((1, 4), (2, 3))
    assert half_construction(9, "alternate").triangles == ((1, 8), (2, 7), (3, 4), (5, 6))
    with pytest.raises(ValueError):
        half_construction(4)
    with pytest.raises(ValueError):
        half_construction(5, "weird")


@pytest.mark.parametrize("m", range(1, 22, 2))
def test_half_construction_cordial_both_variants(m):
    for variant in ("primary", "alternate"):
        lab = half_construction(m, variant)
        assert lab.n == m // 2
        assert lab.verify().cordial


@pytest.mark.parametrize("m", range(3, 22, 2))
def test_half_alternate_doubled_edge_classes(m):
    # the doubled edge classes sit exactly on {+-(2+4i)}, plus 0 when k is even
    k = (m - 1) // 2
    report = half_construction(m, "alternate").verify()
    doubled = {el[0] for el, c in report.f_E.counts if c == 2}
    if k % 2 == 1:
        expected = {(2 + 4 * i) % m for i in range((k - 1) // 2)}
        expected |= {(-(2 + 4 * i)) % m for i in range((k - 1) // 2)}
    else:
        expected = {0}
        expected |= {(2 + 4 * i) % m for i in range((k - 2) // 2)}
        expected |= {(-(2 + 4 * i)) % m for i in range((k - 2) // 2)}
    assert doubled == expected, (m, doubled, expected)


def test_to_half_examples():
    assert to_half_construction(13, 6).verify().cordial
    assert to_half_construction(15, 7).verify().cordial
    assert to_half_construction(14, 6).verify().cordial  # bound floor(m/2)-1 for r=2
    with pytest.raises(ValueError):
        to_half_construction(14, 7)
    with pytest.raises(ValueError):
        to_half_construction(16, 2)  # residue 4 not covered


def test_to_half_full_ranges():
    for m in list(range(1, 40, 2)) + [12, 14, 24, 26, 36, 38]:
        if m % 12 in (4, 6, 8, 10):
            continue
        bound = m // 2 - (1 if m % 12 == 2 else 0)
        for j in range(bound + 1):
            lab = to_half_construction(m, j)
            assert lab.n == j and lab.verify().cordial, (m, j)


def test_epsilon():
    assert epsilon(9) == 1  # k = 4: even, not divisible by 3
    assert epsilon(11) == 0  # k = 5 odd
    assert epsilon(13) == 0  # k = 6: even but divisible by 3
    assert epsilon(1) == 0  # k = 0: 3 | 0
    with pytest.raises(ValueError):
        epsilon(4)


def test_two_thirds_examples():
    assert two_thirds_construction(11, 7).verify().cordial  # floor(22/3)
    assert two_thirds_construction(13, 8).verify().cordial  # floor(26/3)
    assert two_thirds_construction(9, 5).verify().cordial  # floor(18/3) - 1
    with pytest.raises(ValueError):
        two_thirds_construction(9, 6)  # epsilon = 1 caps at 5
    with pytest.raises(ValueError):
        two_thirds_construction(11, 2)  # below floor(m/2)


def test_two_thirds_full_ranges():
    for m in range(1, 40, 2):
        k = (m - 1) // 2
        top = (2 * m) // 3 - epsilon(m)
        for j in range(k, top + 1):
            lab = two_thirds_construction(m, j)
            assert lab.n == j and lab.verify().cordial, (m, j)


def test_div3_examples():
    assert div3_range_construction(9, 6).verify().cordial
    assert div3_range_construction(9, 8).verify().cordial  # the m-1 special case
    for j in range(10, 16):
        assert div3_range_construction(15, j).verify().cordial
    with pytest.raises(ValueError):
        div3_range_construction(9, 5)
    with pytest.raises(ValueError):
        div3_range_construction(15, 16)
    with pytest.raises(ValueError):
        div3_range_construction(6, 5)


def test_div3_full_ranges():
    for m in (3, 9, 15, 21, 27, 33):
        for j in range(2 * m // 3, m + 1):
            lab = div3_range_construction(m, j)
            assert lab.n == j and lab.verify().cordial, (m, j)


def test_add():
    empty = FriendshipLabeling(5, ())
    block = uniform_block_odd(5)
    assert add(block, empty).triangles == block.triangles
    two = FriendshipLabeling(5, ((4, 1), (2, 3)))
    assert two.verify().cordial
    seven = add(two, block)
    assert seven.n == 7 and seven.verify().cordial
    one_plus_two = add(FriendshipLabeling(7, ((1, 2),)), FriendshipLabeling(7, ((3, 4), (5, 6))))
    assert one_plus_two.n == 3
    with pytest.raises(ValueError):
        add(two, FriendshipLabeling(7, ()))


def test_shift_circumferential():
    lab = FriendshipLabeling(9, ((8, 1), (2, 4), (5, 7)))
    assert shift_circumferential(lab, 0).triangles == lab.triangles
    assert (
        shift_circumferential(shift_circumferential(lab, 4), -4).triangles
        == lab.triangles
    )
    shifted = shift_circumferential(lab, 1)
    base_radials = sorted(x for pair in lab.triangles for x in pair)
    new_radials = sorted(x for pair in shifted.triangles for x in pair)
    assert new_radials == sorted((x + 1) % 9 for x in base_radials)
    # circumferential edges move by twice the shift
    base_edges = sorted((x + y) % 9 for x, y in lab.triangles)
    new_edges = sorted((x + y) % 9 for x, y in shifted.triangles)
    assert new_edges == sorted((e + 2) % 9 for e in base_edges)


def test_label_friendship_dispatcher():
    for n in range(0, 31):
        res = label_friendship(9, n)
        assert res.status == "constructed", (n, res.status)
        assert res.labeling.verify().cordial
    assert label_friendship(6, 2).status == "obstructed"
    res = label_friendship(5, 13)
    assert res.status == "constructed" and "blocks" in res.method
    assert label_friendship(1, 17).status == "constructed"
    assert label_friendship(2, 2).status == "obstructed"
    res = label_friendship(2, 3)
    assert res.status == "constructed"


def test_label_friendship_methods_route_sensibly():
    assert label_friendship(31, 5).method == "mad-prefix"
    assert label_friendship(31, 14).method == "to-half"
    assert label_friendship(31, 20).method == "two-thirds"
    assert label_friendship(9, 7).method == "div3-range"
    assert label_friendship(7, 6).method == "oracle"


def test_label_friendship_small_grid_against_obstruction():
    for m in range(1, 9):
        for n in range(0, 9):
            res = label_friendship(m, n)
            if obstruction(m, n):
                assert res.status == "obstructed", (m, n)
            else:
                assert res.status == "constructed", (m, n)


def test_constructed_always_verified():
    rng = random.Random(0)
    for _ in range(25):
        m = rng.randrange(1, 16)
        n = rng.randrange(0, 3 * m + 2)
        res = label_friendship(m, n)
        if res.status == "constructed":
            assert res.labeling.verify().cordial


def test_odd_multiples_of_three_fully_covered():
    # every n is constructible without search for odd m <= 21 divisible by 3
    for m in (3, 9, 15, 21):
        for n in range(0, 3 * m + 1):
            res = label_friendship(m, n, search_budget=0)
            assert res.status == "constructed", (m, n, res.status)


def test_block_addition_preserves_cordiality():
    rng = random.Random(2)
    for m in (3, 5, 7, 9, 11):
        block = uniform_block_odd(m)
        for _ in range(8):
            n = rng.randrange(0, m)
            seed = label_friendship(m, n)
            assert seed.status == "constructed"
            combined = add(seed.labeling, block)
            assert combined.verify().cordial, (m, n)


def test_edge_sum_parity_even_m():
    rng = random.Random(13)
    for _ in range(50):
        m = rng.choice([2, 4, 6, 8, 10, 12])
        n = rng.randrange(0, 6)
        lab = FriendshipLabeling(
            m, tuple((rng.randrange(m), rng.randrange(m)) for _ in range(n))
        )
        labeling = lab.to_labeling()
        total = sum(
            induced_edge_label(labeling, e)[0] for e in labeling.graph.edges
        )
        assert (total % m) % 2 == 0
