import json

from cordial.harness import verify_friendship_conjecture, verify_trees


def test_verify_trees_small():
    report = verify_trees(7, oracle_n_max=7)
    assert report.clean
    assert report.counts_by_size == {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11}
    assert sorted(n for n, _ in report.not_cordial) == [4, 5]
    assert report.oracle_confirmed == 25
    payload = report.to_json_dict()
    json.dumps(payload)
    assert payload["clean"] is True
    table = report.to_table()
    assert "discrepancies: 0" in table


def test_verify_friendship_small():
    report = verify_friendship_conjecture(4, 6, budget=500_000)
    assert report.clean
    statuses = {(c.m, c.n): c.status for c in report.cells}
    assert statuses[(2, 2)] == "obstructed"
    assert statuses[(2, 6)] == "obstructed"
    assert statuses[(4, 6)] == "constructed"
    assert all(
        c.oracle_status in ("found", "infeasible") for c in report.cells
    )
    payload = report.to_json_dict()
    json.dumps(payload)
    assert payload["counts"]["obstructed"] == 2
    assert "X" in report.to_table()


def test_verify_friendship_parallel_smoke():
    seq = verify_friendship_conjecture(3, 3, budget=200_000, jobs=1)
    par = verify_friendship_conjecture(3, 3, budget=200_000, jobs=2)
    key = lambda r: sorted((c.m, c.n, c.status) for c in r.cells)
    assert key(seq) == key(par)


def test_verify_trees_parallel_smoke():
    seq = verify_trees(6, oracle_n_max=6, jobs=1)
    par = verify_trees(6, oracle_n_max=6, jobs=2)
    assert seq.clean and par.clean
    assert seq.counts_by_size == par.counts_by_size
    assert sorted(seq.not_cordial) == sorted(par.not_cordial)
