import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from oracles import rational_2f1
from sig4.classical_elliptic import agm
from sig4.errors import ConvergenceError, DomainError
from sig4.hypergeom import (
    F2_PARAMS,
    F4_PARAMS,
    FQ_PARAMS,
    HypParams,
    digamma,
    f2,
    f4,
    f_quarter_half,
    f_quarter_half_closed,
    gauss_2f1,
)

TRIPLES = [F2_PARAMS, F4_PARAMS, FQ_PARAMS]
GRID = [0.01 * k for k in range(1, 100)]


def test_zero_argument_is_one():
    r = gauss_2f1(F2_PARAMS, 0.0)
    assert r.value == 1.0
    assert r.terms_used >= 1
    assert r.truncation_bound == 0.0
    assert f2(0.0) == 1.0
    assert f4(0.0) == 1.0


def test_quarter_half_at_three_quarters_is_sqrt3():
    # psi = pi/3: cos(pi/6)/cos(pi/3) = sqrt(3)
    assert gauss_2f1(FQ_PARAMS, 0.75).value == pytest.approx(math.sqrt(3.0), abs=1e-12)
    assert f_quarter_half_closed(math.pi / 3) == pytest.approx(math.sqrt(3.0), abs=1e-15)


def test_f4_matches_exact_rational_series():
    exact = rational_2f1(Fraction(1, 4), Fraction(3, 4), Fraction(1), Fraction(9, 25))
    assert abs(f4(0.36) - float(exact)) < 1e-12


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
def test_f2_is_agm_quarter_period(x):
    K = 0.5 * math.pi / agm(1.0, math.sqrt(1.0 - x))
    assert abs(f2(x) - 2.0 / math.pi * K) < 1e-12


def test_closed_form_values():
    assert f_quarter_half_closed(0.0) == 1.0
    psi = math.pi / 4
    assert f_quarter_half_closed(psi) == pytest.approx(math.sqrt(2) * math.cos(math.pi / 8), rel=1e-15)
    assert abs(gauss_2f1(FQ_PARAMS, 0.5).value - f_quarter_half_closed(psi)) < 1e-12


@pytest.mark.parametrize("psi", [math.pi / 2, -math.pi / 2, 2.0])
def test_closed_form_domain(psi):
    with pytest.raises(DomainError):
        f_quarter_half_closed(psi)


@pytest.mark.parametrize("x", [-0.1, 1.0, 1.5])
def test_domain_errors(x):
    with pytest.raises(DomainError):
        gauss_2f1(F4_PARAMS, x)


def test_term_cap_raises():
    with pytest.raises(ConvergenceError):
        gauss_2f1(F2_PARAMS, 0.4, max_terms=3)


@pytest.mark.parametrize("p", TRIPLES)
def test_against_scipy(p):
    for x in GRID:
        ref = special.hyp2f1(*p, x)
        r = gauss_2f1(p, x)
        assert abs(r.value - ref) <= max(r.truncation_bound, 1e-14 * abs(ref)) + 1e-14 * abs(ref)


@pytest.mark.parametrize("p", TRIPLES)
def test_series_and_connection_agree_in_overlap(p):
    for x in [0.41 + 0.01 * j for j in range(19)]:
        a = gauss_2f1(p, x, method="series").value
        b = gauss_2f1(p, x, method="connection").value
        assert abs(a - b) < 1e-12, x


def test_closed_form_oracle_grid():
    for j in range(50):
        psi = 0.5 * math.pi * 0.98 * (j + 0.5) / 50
        series = gauss_2f1(FQ_PARAMS, math.sin(psi) ** 2).value
        assert abs(series - f_quarter_half_closed(psi)) <= 1e-12


def test_f_quarter_half_shorthand():
    assert f_quarter_half(0.3) == gauss_2f1(FQ_PARAMS, 0.3).value


@pytest.mark.parametrize("func", [f2, f4])
def test_monotone(func):
    values = [func(0.99 * j / 99) for j in range(100)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_agm_consistency_grid():
    for x in GRID:
        K = 0.5 * math.pi / agm(1.0, math.sqrt(1.0 - x))
        assert abs(f2(x) - 2.0 / math.pi * K) < 1e-12, x


def test_one_minus_x_is_used_near_one():
    # the float 1 - 1e-12 is off by ~1e-16, i.e. 1e-4 relative in 1 - x
    y = 1e-12
    with mpmath.workdps(30):
        ref = float(mpmath.hyp2f1(0.25, 0.75, 1, 1 - mpmath.mpf(y)))
    assert f4(1.0 - y, y) == pytest.approx(ref, rel=1e-13)
    assert f4(1.0 - y) != pytest.approx(ref, rel=1e-9)


def test_unsupported_triple_best_effort():
    p = HypParams(0.3, 0.9, 2.1)
    for x in (0.2, 0.7, 0.95):
        assert gauss_2f1(p, x).value == pytest.approx(special.hyp2f1(*p, x), rel=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.25, 0.5, 0.75, 1.0, 3.3, 12.0, 50.5, -0.3, -2.5])
def test_digamma(x):
    assert digamma(x) == pytest.approx(special.digamma(x), rel=1e-14, abs=1e-14)


def test_digamma_pole():
    with pytest.raises(DomainError):
        digamma(-2.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.999))
def test_bound_contract(x):
    for p in TRIPLES:
        r = gauss_2f1(p, x)
        assert r.truncation_bound >= 0.0
        assert r.terms_used >= 1
        ref = special.hyp2f1(*p, x)
        assert abs(r.value - ref) <= max(r.truncation_bound, 1e-14 * abs(ref)) + 2e-14 * abs(ref)
