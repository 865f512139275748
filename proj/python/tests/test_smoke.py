import math

import pytest

import poincare_series as ps


def test_printed_covariants():
    r = ps.covariants([1, 2])
    printed = "(1 + z1*z2*t)/((1 - z2*t^2)*(1 - z2^2)*(1 - z1*t)*(1 - z1^2*z2))"
    assert ps.series_equal(r["text"], printed, 2, 10)
    assert len(r["denominator"]) == 4
    assert all(len(f["base_exponents"]) == 3 for f in r["denominator"])


def test_printed_invariants():
    assert ps.invariants([1, 1])["text"] == "1/(1 - z1*z2)"
    r = ps.invariants([1, 3])
    printed = "(1 + z2^2*z1^2 - z2*z1)/((1 - z2^4)*(1 - z1^3*z2)*(1 - z2*z1))"
    assert ps.series_equal(r["text"], printed, 2, 10)
    assert ps.invariants([1])["text"] == "1"


def test_dimensions():
    assert ps.omega_count([4], [2], 0) == 3
    assert ps.omega_count([4], [2], 2) == 2
    assert ps.dimension([4], [2], 0) == 1
    assert ps.dimension_by_extraction([4], [2], 0) == 1
    assert ps.dimension([1, 1], [1, 1], 0) == 1


def test_total_count_is_binomial():
    d, m = [3], [4]
    total = sum(ps.omega_count(d, m, i) for i in range(-12, 13))
    assert total == math.comb(4 + 3, 3)


def test_expand_matches_oracle():
    coeffs = ps.expand(ps.covariants([2])["text"], 1, 6)
    for m in range(7):
        for i in range(0, 2 * m + 1):
            assert coeffs.get((m, i), 0) == ps.dimension([2], [m], i)


def test_verify_and_debug_factor():
    assert ps.verify([1, 2], 6)["passed"]
    assert ps.verify([2, 2], 6, covariants=False)["passed"]
    wrong = ps.covariants([1], omit_order_factor=True)
    assert not ps.series_equal(wrong["text"], "1/(1 - z1*t)", 1, 4)


def test_big_integers_survive():
    r = ps.normalize("(1 - z1^2)/((1 - z1)*(1 - z1*t))", 1)
    assert r["text"] == "(1 + z1)/(1 - z1*t)"
    big = ps.normalize("123456789012345678901234567890*z1/(1 - z1)", 1)
    assert big["numerator"][0]["coeff"] == "123456789012345678901234567890"
    assert ps.expand(big["text"], 1, 3)[(2, 0)] == 123456789012345678901234567890


def test_errors():
    with pytest.raises(ValueError):
        ps.covariants([0])
    with pytest.raises(ValueError):
        ps.dimension([1, 1], [1], 0)
    with pytest.raises(ValueError):
        ps.series_equal("1/(1 + z1)", "1", 1, 3)
