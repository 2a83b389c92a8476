import json

import pytest

import treelect


def test_intro_line_xi():
    t = treelect.gen_intro_line()
    assert treelect.xi_record(t)["xi"] == 2


def test_tree_round_trip():
    t = treelect.gen_random(12, 3)
    back = treelect.PortTree.parse(t.format())
    assert back == t
    assert back.node_count() == 12


def test_elect_full_code():
    t = treelect.gen_random(20, 5)
    if treelect.is_symmetric(t):
        pytest.skip("symmetric sample")
    out = treelect.elect_outcome(t, "full_code")
    assert out["success"]
    assert 0 <= out["leader"] < t.node_count()


def test_path_diam_minus_one():
    out = treelect.elect_outcome(treelect.gen_path(5), "diam_minus_1")
    assert out["success"]
    assert out["advice_bits"] == 5


def test_scheme_names_and_errors():
    assert "trie" in treelect.scheme_names()
    with pytest.raises(treelect.TreelectError):
        treelect.elect(treelect.gen_path(4), "odd_elect")
    with pytest.raises(treelect.TreelectError):
        treelect.PortTree.parse("tree 2\n0:1:0\n0:0:1\n")


def test_sweep_csv():
    config = {"schemes": ["full_view"], "generators": [{"kind": "path", "k": 4}]}
    lines = treelect.sweep_csv(json.dumps(config)).splitlines()
    assert lines[0] == "tree,n,diam,tau,scheme,success,leader,advice_bits,xi,ms"
    assert len(lines) == 2


def test_pair_breaking():
    assert treelect.min_colours(5) == 3
    assert not treelect.breaker_exists(3, [[1, 2, 1], [1, 3, 1], [2, 3, 1]])
    assert treelect.breaker_exists(2, [[1, 2, 1]])
