from fractions import Fraction

import pytest

import btau


def test_euler_identity_gives_partition_numbers():
    r = btau.verify_identity("euler", l=0, order=20)
    assert r["equal"]
    assert r["lhs"] == r["rhs"]
    assert r["lhs"][:9] == ["1", "1", "2", "3", "5", "7", "11", "15", "22"]
    assert r["lhs"][20] == "627"


def test_identity_requires_nonnegative_charge():
    with pytest.raises(btau.BtauError, match="identity requires l >= 0"):
        btau.verify_identity("identity-1", l=-1, order=5)


def test_space_sum_matches_closed_form():
    for space in ("M", "Fbar", "F"):
        assert btau.verify_space(space, l=-2, order=15)["equal"]


def test_census_at_charge_zero():
    assert btau.fock_census(0, 2) == ["1", "1", "3"]


def test_borchardt_accepts_fractions():
    rec = btau.borchardt([0, Fraction(1, 2)], ["2", 3])
    assert rec["equal"]
    assert rec["n"] == 2


def test_borchardt_rejects_poles():
    with pytest.raises(btau.BtauError, match="pole configuration"):
        btau.borchardt([1, 2], [2, 3])


def test_run_suite_reports_every_check():
    report = btau.run_suite("borchardt", n=3, trials=5, seed=4, threads=1)
    assert report["summary"] == {"pass": 6, "fail": 0}
    assert [c["status"] for c in report["checks"]] == ["pass"] * 6
    assert report == btau.run_suite("borchardt", n=3, trials=5, seed=4, threads=2)


def test_suite_names_list_the_suites():
    assert {"qdim", "borchardt", "hirota"} <= set(btau.suite_names())
