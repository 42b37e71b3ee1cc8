import pytest

import hiveflow


def test_decide_reference_instance():
    r = hiveflow.decide([5, 5, 5, 5, 3, 2, 1, 1, 1], [8, 8, 7, 5, 3, 3, 3, 3], [10, 9, 9, 9, 7, 4, 4, 4, 4, 4, 4])
    assert r["positive"]
    assert r["throughput"] == 68
    assert r["n"] == 11
    assert list(r)[:2] == ["positive", "n"]


def test_decide_negative_and_plain():
    assert not hiveflow.decide([1, 1], [1, 1], [3, 1])["positive"]
    assert hiveflow.decide([1], [1], [1, 1], algorithm="plain")["algorithm"] == "plain"


def test_counts_agree_with_oracle():
    for n in range(1, 5):
        lam = mu = [2 * n, n]
        nu = [3 * n, 2 * n, n]
        assert hiveflow.count(lam, mu, nu) == n + 1
        assert hiveflow.lr_count(lam, mu, nu) == n + 1


def test_multiplicity_free():
    assert hiveflow.multiplicity_free([1], [1], [1, 1])
    assert not hiveflow.multiplicity_free([2, 1], [2, 1], [3, 2, 1])


def test_render_round_trip():
    r = hiveflow.decide([2, 1], [2, 1], [3, 2, 1])
    assert hiveflow.render_flow(r, "tikz") == hiveflow.render([2, 1], [2, 1], [3, 2, 1], "tikz")
    assert hiveflow.render_flow(r["flow"]).startswith("digraph hive {")


def test_errors():
    with pytest.raises(ValueError):
        hiveflow.decide([1], [1], [3])
    with pytest.raises(ValueError):
        hiveflow.render([1], [0], [1], "svg")
    with pytest.raises(hiveflow.CapExceeded):
        hiveflow.count([4, 2], [4, 2], [6, 4, 2], limit=2)
