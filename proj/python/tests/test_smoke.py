import pytest

import abctriples as abc


def test_verify_nine():
    ev = abc.verify(9)
    assert ev["is_abc"]
    assert ev["rad_c"] == 3 and ev["cosocle_c_minus_1"] == 4


def test_big_integers_round_trip():
    n = 2**64 + 1
    assert abc.factorize(n) == [(274177, 1), (67280421310721, 1)]
    assert abc.radical(2**70 * 3) == 6


def test_power_factorization_and_classify():
    prof = abc.power_factorization(21, 12)
    assert prof[2] == (1, 2, 2)
    assert sorted(prof) == [2, 5, 11, 13, 17, 61, 421, 463, 3181]
    r = abc.classify(21, 12)
    assert r["verdict"] == "NotAbc"
    assert "8 < rad(21) = 21" in r["evidence"]


def test_families():
    assert len(abc.families()) == 11
    assert len(abc.enumerate_family("cor3.9", 10**18)) == 81
    cert = abc.generate("cor3.7", n=3)
    assert cert["c"] == 9 and cert["witness_m"] == 8
    with pytest.raises(abc.HypothesisViolated):
        abc.generate("cor3.2", n=55)
    with pytest.raises(ValueError):
        abc.enumerate_family("cor9.9", 100)


def test_transfer_and_least_divisor():
    assert abc.transfer_cube(2304)[2] == 12214672128
    assert abc.least_divisor(676) == 675
    with pytest.raises(abc.NotAbc):
        abc.least_divisor(10)


def test_scan_and_analyze():
    rows = abc.scan(2305)
    assert [r[2] for r in rows][:3] == [9, 49, 64]
    assert len(rows) == 15
    rep = abc.analyze(10**6 + 1)
    assert rep["counts"]["T"] == 78
    assert rep["counts"]["D"] == 38


def test_power_form_survey_small():
    r = abc.power_form_survey(10**6 + 1)
    assert len(r["all"]) == 78
    assert 9 in r["both"]
