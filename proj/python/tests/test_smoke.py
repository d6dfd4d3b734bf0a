from fractions import Fraction

import pytest

import orbhc


def test_linear_algebra():
    assert orbhc.rank([[1, 1], [1, 1]]) == 1
    (v,) = orbhc.kernel_basis([[1, -1, 0], [0, 1, -1]])
    assert v == [1, 1, 1]
    assert orbhc.rank([["1/2", Fraction(1, 3)], [3, 2]]) == 1


def test_twisted_hh_matches_forms():
    hh = orbhc.hh_twisted_dims([[0, 1], [1, 0]], 2, 3)
    for D in range(4):
        assert hh[(0, D)] == orbhc.form_space_dim(1, D, 0)
        if D >= 1:
            assert hh[(1, D)] == 1


def test_koszul_evaluation():
    dims = orbhc.koszul_homology_dims(2, [[1, 0], [0, 1]], 3)
    assert dims[(0, 0)] == 1
    assert sum(dims.values()) == 1


def test_crossed_products():
    swap = [[0, 1], [1, 0]]
    r = orbhc.hh_report([swap], q_max=2, d_max=3, oracle=True)
    assert r["per_class"][0]["table"][(0, 2)] == 2
    assert r["per_class"][1]["table"] == r["per_class"][1]["oracle"]

    assert orbhc.hp_report_torus([([1, 0], [0, 0])])["hp"] == (2, 2)
    assert orbhc.hp_report_torus([([0], ["1/2"])])["hp"] == (1, 1)
    assert orbhc.hp_report_linear([swap])["hp"] == (2, 0)


def test_weyl():
    assert [orbhc.hp_weyl_formula(n)["hp"] for n in range(1, 6)] == [(1, 1), (2, 2), (4, 4), (7, 7), (12, 12)]
    assert orbhc.partitions(4)[2] == [2, 2]
    assert orbhc.weyl_cross_check(3)
    with pytest.raises(orbhc.SizeLimitExceeded):
        orbhc.weyl_cross_check(5)


def test_azumaya():
    r = orbhc.azumaya_hh(2)
    assert r["total"] == [1, 0, 0]


def test_acceptance():
    assert all(r["passed"] for r in orbhc.run_acceptance())


def test_bad_input():
    with pytest.raises(ValueError):
        orbhc.rank([[1, 2], [3]])
