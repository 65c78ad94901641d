from fractions import Fraction

import pytest

import schurk


def test_version():
    assert schurk.__version__ == "0.1.0"


def test_schur_avg():
    assert schurk.schur_avg("lue", [1], 2) == Fraction(4)
    assert schurk.schur_avg("gue", [2], 2, method="oracle") == schurk.schur_avg("gue", [2], 2)
    assert isinstance(schurk.schur_avg("sw", [1], 2), str)
    assert abs(float(schurk.schur_avg("lue", [1], 2, field="real")) - 4) < 1e-12


def test_khat():
    assert schurk.khat("lue", 2, [1], [1]) == 1
    x, y = [Fraction(2, 3)], [Fraction(-5, 4)]
    assert schurk.khat("lue", 3, x, y) == schurk.khat("lue", 3, x, y, method="cd")
    assert schurk.khat("ginibre", 2, [2], [Fraction(1, 2)]) == 2


def test_painleve_and_toeplitz():
    f = schurk.f2n(1, 1)
    assert f == schurk.f2n(1, 1, form="schur")
    assert f["rate"] == Fraction(-1, 2)
    assert schurk.b_coeffs(1, 2)[1] == Fraction(-1, 10)
    inv = schurk.toeplitz_inverse(1, 1, 2)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]
    assert inv == schurk.toeplitz_inverse(1, 1, 2, method="closed")
    assert schurk.duduchava_roch_check(1, 1, 3)


def test_heat_kernel():
    h = schurk.heat_kernel("1/2", "1", "-1")
    assert abs(float(h["closed"]) - 4 / 9) < 1e-15
    assert abs(float(h["sum"]) - 4 / 9) < 1e-15
    with pytest.raises(ValueError):
        schurk.heat_kernel("1", "0", "0")


def test_errors_map_to_value_error():
    with pytest.raises(schurk.MathError):
        schurk.schur_avg("nope", [1], 2)


def test_verify():
    rs = schurk.verify("criterion-04,heat", jobs=2)
    assert [r["suite"] for r in rs] == ["criterion-04", "heat"]
    assert all(r["passed"] for r in rs)
