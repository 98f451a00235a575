"""Smoke tests for the python bindings; the heavy exactness checks live in
the C++ suites, this exercises the bridged surface end to end."""

from fractions import Fraction

import pytest

import ybeforge


def frac(s):
    return Fraction(s)


def test_bracket_values():
    # <0>_+ is the constant 1, <0>_- the constant -1
    assert ybeforge.bracket_eval(0, 1, "17/3") == "1"
    assert ybeforge.bracket_eval(0, -1, "17/3") == "-1"
    # direct substitution at q = 4 (t = 2): (1 + 3*16)/(3 + 16)
    assert ybeforge.bracket_eval(2, 1, "3", t="2") == "49/19"


def test_bracket_unitarity_identity():
    for a in (-3, 1, 4):
        for sign in (1, -1):
            f = frac(ybeforge.bracket_eval(a, sign, "5/3"))
            g = frac(ybeforge.bracket_eval(a, sign, "3/5"))
            assert f * g == 1


def test_casimir_values():
    assert ybeforge.casimir(2, 4, ["0"], ["1", "0"]) == "-3"
    assert ybeforge.casimir(2, 4, ["0"], ["0", "0"]) == "0"


def test_decompose_grid():
    grid = ybeforge.decompose(2, 4, 1, 1)
    assert [n["node"] for n in grid["nodes"]] == ["0,0", "1,0", "1,1"]
    assert grid["indecomposable"] is False
    grid44 = ybeforge.decompose(4, 4, 1, 1)
    assert grid44["indecomposable"] is True
    members = [n for n in grid44["nodes"] if n["indecomposable_member"]]
    assert len(members) == 2


def test_tpg_dot_marks_indecomposable():
    dot = ybeforge.tpg_dot(4, 4, 1, 1)
    assert "peripheries=2" in dot
    assert dot == ybeforge.tpg_dot(4, 4, 1, 1)  # deterministic


def test_coefficients_match_known_case():
    coeffs = ybeforge.coefficients(2, 4, 1, 1)
    assert coeffs["0,0"] == {"num": ["1"], "den": ["1"]}
    # rho_{1,1} = <-2>_- = (1 - z q^{-2})/(z - q^{-2}) with q = 36/25
    assert coeffs["1,1"]["num"] == ["1", "-625/1296"]
    assert coeffs["1,1"]["den"] == ["-625/1296", "1"]


def test_rmatrix_and_verify_smallest_case():
    r = ybeforge.rmatrix(2, 4, 1, 1, no_cache=True)
    assert r["meta"]["indecomposable"] is False
    assert len(r["terms"]) == 3
    out = ybeforge.verify(2, 4, 1, 1, suite="jimbo", no_cache=True)
    assert out["all_pass"] is True
    assert all(rep["residual"] == "0" for rep in out["reports"])


def test_verify_negative_control():
    out = ybeforge.verify(2, 4, 1, 1, suite="jimbo", perturb=True, no_cache=True)
    assert out["all_pass"] is False


def test_errors_are_typed():
    with pytest.raises(ybeforge.UsageError):
        ybeforge.decompose(5, 4, 1, 1)  # m > n
    with pytest.raises(ybeforge.DegenerateParameterError):
        ybeforge.bracket_json(1, 1, t="1")
