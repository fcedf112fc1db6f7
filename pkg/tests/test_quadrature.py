import math

import pytest
from scipy import integrate as si

from sig4.errors import ConvergenceError
from sig4.quadrature import gk15, integrate


def test_single_panel_exact_for_polynomials():
    # K15 integrates degree-22 polynomials exactly
    value, _ = gk15(lambda t: t**10, 0.0, 1.0)
    assert value == pytest.approx(1.0 / 11.0, rel=1e-15)


@pytest.mark.parametrize(
    "f, a, b",
    [
        (math.cos, 0.0, 1.5),
        (math.exp, -1.0, 2.0),
        (lambda t: 1.0 / (1.0 + 25.0 * t * t), -1.0, 1.0),
        (lambda t: 1.0 / math.sqrt(1.0 - 0.99 * math.sin(t) ** 2), 0.0, 0.5 * math.pi),
    ],
)
def test_against_quadpack(f, a, b):
    ref, _ = si.quad(f, a, b, epsabs=1e-14, epsrel=1e-14, limit=200)
    value, err = integrate(f, a, b)
    assert value == pytest.approx(ref, rel=1e-13, abs=1e-14)
    assert err <= 1e-13 * abs(ref)


def test_reversed_and_empty_intervals():
    fwd, _ = integrate(math.sin, 0.2, 1.3)
    rev, _ = integrate(math.sin, 1.3, 0.2)
    assert rev == -fwd
    assert integrate(math.sin, 1.0, 1.0) == (0.0, 0.0)


def test_panel_cap():
    with pytest.raises(ConvergenceError):
        integrate(lambda t: math.sin(1.0 / t), 1e-6, 1.0, max_panels=5)
