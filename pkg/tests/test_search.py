import random
from itertools import combinations

import pytest

from cordial.graphs import Graph, friendship, is_cordial, path, star
from cordial.groups import KLEIN, FiniteAbelianGroup
from cordial.search import SearchConfig, search_cordial

Z = lambda m: FiniteAbelianGroup.cyclic(m)


def test_known_infeasible():
    assert search_cordial(path(4), KLEIN).status == "infeasible"
    assert search_cordial(path(5), KLEIN).status == "infeasible"
    assert search_cordial(friendship(2), Z(6)).status == "infeasible"
    assert search_cordial(friendship(2), Z(2)).status == "infeasible"


def test_known_feasible():
    res = search_cordial(star(3), KLEIN)
    assert res.found and is_cordial(res.labeling).cordial
    assert search_cordial(friendship(4), Z(4)).found
    for n in (1, 2, 3, 6, 7, 8):
        assert search_cordial(path(n), KLEIN).found


def test_empty_and_trivial():
    assert search_cordial(Graph(0, ()), KLEIN).found
    assert search_cordial(Graph(3, ()), Z(1)).found


def _unpruned():
    return SearchConfig(fix_zero=False, group_symmetry=False, balanced_value_order=False)


def test_pruning_soundness_exhaustive_four_vertices():
    groups = [Z(k) for k in (2, 3, 4, 5, 6)] + [KLEIN]
    pairs = list(combinations(range(4), 2))
    for mask in range(64):
        g = Graph(4, tuple(e for i, e in enumerate(pairs) if mask >> i & 1))
        for grp in groups:
            fast = search_cordial(g, grp)
            slow = search_cordial(g, grp, _unpruned())
            assert fast.found == slow.found, (g.edges, grp.orders)


def test_pruning_soundness_random_graphs():
    rng = random.Random(7)
    groups = [Z(k) for k in (2, 3, 4, 5, 6)] + [KLEIN]
    for trial in range(30):
        n = rng.choice([5, 6])
        pairs = [e for e in combinations(range(n), 2) if rng.random() < 0.45]
        g = Graph(n, tuple(pairs))
        for grp in groups:
            fast = search_cordial(g, grp)
            slow = search_cordial(g, grp, _unpruned())
            assert fast.found == slow.found, (g.edges, grp.orders)


def test_budget_semantics():
    g = friendship(6)
    res = search_cordial(g, Z(6), SearchConfig(node_budget=100))
    assert res.status == "budget_exhausted" and res.nodes > 0
    # determinism: identical runs agree node-for-node
    a = search_cordial(friendship(3), Z(5))
    b = search_cordial(friendship(3), Z(5))
    assert a.nodes == b.nodes and a.labeling == b.labeling


def test_fixed_labels():
    g = friendship(2)
    res = search_cordial(g, Z(5), SearchConfig(fixed_labels={0: (0,)}))
    assert res.found and res.labeling.vertex_labels[0] == (0,)
    # an impossible fixture is recognized
    forced = {0: (0,), 1: (0,), 2: (0,), 3: (0,), 4: (0,)}
    res = search_cordial(g, Z(5), SearchConfig(fixed_labels=forced))
    assert res.status == "infeasible"
    with pytest.raises(ValueError):
        search_cordial(g, Z(5), SearchConfig(fixed_labels={99: (0,)}))


def test_friendship_over_z2_characterization():
    # F_n over Z_2 is labelable exactly when n is odd or divisible by 4
    for n in range(0, 13):
        res = search_cordial(friendship(n), Z(2))
        expected = n % 2 == 1 or n % 4 == 0
        assert res.found == expected, (n, res.status)


def test_found_labelings_verified():
    rng = random.Random(1)
    for trial in range(20):
        n = rng.randrange(2, 7)
        pairs = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(n, tuple(pairs))
        grp = Z(rng.choice([2, 3, 4, 5]))
        res = search_cordial(g, grp)
        if res.found:
            assert is_cordial(res.labeling).cordial
