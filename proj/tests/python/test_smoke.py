import math

import pytest

import wordmetrics as wm


def test_word_metric_on_z6():
    z6 = wm.Group.from_spec('{"kind":"cyclic","n":6}')
    assert z6.order == 6
    assert z6.word_metric([1, 5], 2, 5) == 3
    assert z6.ball([1, 5], [0], 2) == [0, 1, 2, 4, 5]
    assert z6.word_lengths([2]) == [0, math.inf, 1, math.inf, 2, math.inf]
    assert z6.is_metric([1, 5])
    assert not z6.is_metric([1])


def test_asymmetric_metric_on_z4():
    z4 = wm.Group.cyclic(4)
    table = z4.metric_table([1])
    assert table[1][0] == 3
    assert table[0][1] == 1


def test_nu_h_and_powers():
    s3 = wm.Group.from_spec("S3")
    assert s3.nu_H([0, 1, 2, 5], list(range(6))) == 2
    assert s3.nu_H([0, 3], [1]) == math.inf
    assert s3.power([3], math.inf) == [0, 3, 4]


def test_invariants():
    s3 = wm.Group.symmetric(3)
    assert wm.rank_n(s3) == 1
    assert wm.delta(s3) == 2
    assert wm.diam_nfg(s3) == 1
    assert "Q8" in wm.catalog_names()


def test_star_sets_and_actions():
    r5 = wm.StarSet.dihedral_quandle(5)
    assert r5.is_quandle()
    assert r5.powers([0, 1], 2)[2] == [0, 1, 2, 4]
    assert r5.distance([0, 1], 0, 0) == 0
    act = wm.GroupAction.from_spec('{"kind":"natural","n":3}')
    assert act.metric_table([1, 2, 5])[0][2] == 1


def test_errors():
    with pytest.raises(wm.SpecError):
        wm.Group.from_spec('{"kind":"cyclic"')
    with pytest.raises(IndexError):
        wm.Group.cyclic(3).word_lengths([7])
    code, out, err = wm.run_cli(["nuH-table", "--group", '{"kind":"cyclic","n":9}'])
    assert code == 2
    assert "--cap" in err


def test_cli_and_criterion():
    code, out, _ = wm.run_cli(["nuH-table", "--group", '{"kind":"cyclic","n":3}'])
    assert code == 0
    assert len(out.strip().splitlines()) == 9
    result = wm.run_criterion(5)
    assert result["passed"]
    assert result["report"]["ok"]
