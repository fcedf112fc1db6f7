"""Gauss hypergeometric function 2F1(a, b; c; x) on the interval [0, 1).

Three parameter triples matter here::

    F2  = 2F1(1/2, 1/2; 1; x)   classical, K(k) = (pi/2) F2(k^2)
    F4  = 2F1(1/4, 3/4; 1; x)   signature four
    Fq  = 2F1(1/4, 3/4; 1/2; x) integrand of the incomplete integral

For ``x <= 1/2`` the Gauss series is summed directly.  Above the crossover
the function is re-expanded in powers of ``1 - x``: the logarithmic
connection formula when ``c == a + b`` and the ordinary two-term connection
formula otherwise (after an Euler transformation when ``c - a - b < 0``).
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import ConvergenceError, DomainError

__all__ = [
    "HypParams",
    "SeriesResult",
    "F2_PARAMS",
    "F4_PARAMS",
    "FQ_PARAMS",
    "digamma",
    "gauss_2f1",
    "f2",
    "f4",
    "f_quarter_half",
    "f_quarter_half_closed",
]

DEFAULT_TOL = 1e-13
DEFAULT_MAX_TERMS = 10_000
CROSSOVER = 0.5


class HypParams(NamedTuple):
    a: float
    b: float
    c: float


class SeriesResult(NamedTuple):
    value: float
    terms_used: int
    truncation_bound: float


F2_PARAMS = HypParams(0.5, 0.5, 1.0)
F4_PARAMS = HypParams(0.25, 0.75, 1.0)
FQ_PARAMS = HypParams(0.25, 0.75, 0.5)

# B_2n / (2n) for n = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)
_DIGAMMA_SHIFT = 10.0


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def digamma(x: float) -> float:
    """Digamma function psi(x) for real x that is not a nonpositive integer.

    Uses the recurrence psi(x) = psi(x + 1) - 1/x to push the argument past
    ``_DIGAMMA_SHIFT`` and then eight terms of the asymptotic expansion.
    """
    if _is_nonpositive_integer(x):
        raise DomainError(f"digamma has a pole at {x}")
    if x < 0.5:
        # reflection keeps the recurrence away from the poles
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < _DIGAMMA_SHIFT:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_STIRLING):
        tail = (tail + c) * inv2
    return acc + math.log(x) - 0.5 / x - tail


def _rgamma(x: float) -> float:
    return 0.0 if _is_nonpositive_integer(x) else 1.0 / math.gamma(x)


def _tail_bound(term: float, ratio: float, limit: float) -> float:
    """Geometric bound on the tail after ``term``.

    ``ratio`` is the next term ratio and ``limit`` its limit as n -> inf;
    the ratios of a hypergeometric series are eventually monotone, so the
    larger of the two dominates every remaining ratio.
    """
    rho = max(abs(ratio), abs(limit))
    if rho >= 1.0:
        return math.inf
    return abs(term) * rho / (1.0 - rho)


def _direct_series(a, b, c, x, tol, max_terms) -> SeriesResult:
    term = 1.0
    total = 1.0
    n = 0
    bound = math.inf
    while n < max_terms:
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        n += 1
        total += term
        if term == 0.0:
            return SeriesResult(total, n + 1, 0.0)
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        bound = _tail_bound(term, ratio, x)
        if bound <= tol * abs(total):
            return SeriesResult(total, n + 1, bound)
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {x}) series: tail bound {bound:.3e} "
        f"after {max_terms} terms"
    )


def _log_connection(a, b, y, tol, max_terms) -> SeriesResult:
    """2F1(a, b; a + b; 1 - y) as a series in y with logarithmic terms."""
    log_y = math.log(y)
    pref = math.gamma(a + b) * _rgamma(a) * _rgamma(b)
    psi_1 = digamma(1.0)
    psi_a = digamma(a)
    psi_b = digamma(b)
    coef = 1.0
    total = coef * (2.0 * psi_1 - psi_a - psi_b - log_y)
    n = 0
    bound = math.inf
    while n < max_terms:
        coef *= (a + n) * (b + n) / ((n + 1) * (n + 1)) * y
        psi_1 += 1.0 / (n + 1)
        psi_a += 1.0 / (a + n)
        psi_b += 1.0 / (b + n)
        n += 1
        h = 2.0 * psi_1 - psi_a - psi_b - log_y
        total += coef * h
        if coef == 0.0:
            bound = 0.0
            break
        ratio = (a + n) * (b + n) / ((n + 1) * (n + 1)) * y
        h_next = h + 2.0 / (n + 1) - 1.0 / (a + n) - 1.0 / (b + n)
        bound = _tail_bound(coef, ratio, y) * max(abs(h_next), abs(log_y))
        if bound <= tol * abs(total):
            break
    else:
        raise ConvergenceError(
            f"2F1({a}, {b}; {a + b}; 1 - {y}) logarithmic expansion did not "
            f"converge in {max_terms} terms"
        )
    return SeriesResult(pref * total, n + 1, abs(pref) * bound)


def _connection(a, b, c, y, tol, max_terms) -> SeriesResult:
    """Two-term expansion in powers of y = 1 - x for non-integral c - a - b > 0."""
    s = c - a - b
    gc = math.gamma(c)
    coef1 = gc * math.gamma(s) * _rgamma(c - a) * _rgamma(c - b)
    coef2 = y**s * gc * math.gamma(-s) * _rgamma(a) * _rgamma(b)
    r1 = _direct_series(a, b, 1.0 - s, y, tol, max_terms)
    r2 = _direct_series(c - a, c - b, 1.0 + s, y, tol, max_terms)
    value = coef1 * r1.value + coef2 * r2.value
    bound = abs(coef1) * r1.truncation_bound + abs(coef2) * r2.truncation_bound
    return SeriesResult(value, r1.terms_used + r2.terms_used, bound)


def gauss_2f1(
    p: HypParams,
    x: float,
    *,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    method: str = "auto",
    one_minus_x: float | None = None,
) -> SeriesResult:
    """Evaluate 2F1(a, b; c; x) for 0 <= x < 1.

    ``method`` is ``"auto"`` (series below 1/2, connection formula above),
    ``"series"`` or ``"connection"``; the last two force a route so that the
    two can be compared where both converge.  ``one_minus_x`` may carry an
    accurately computed 1 - x (e.g. lambda^2 when x = kappa^2); near x = 1
    the logarithm in the connection formula amplifies its rounding error.
    """
    a, b, c = p
    if not (0.0 <= x < 1.0):
        raise DomainError(f"2F1 argument x={x!r} outside [0, 1)")
    y = 1.0 - x if one_minus_x is None else one_minus_x
    if not y > 0.0:
        raise DomainError(f"2F1 complement 1 - x = {y!r} must be positive")
    if _is_nonpositive_integer(c):
        raise DomainError(f"2F1 parameter c={c!r} is a nonpositive integer")
    if method not in ("auto", "series", "connection"):
        raise ValueError(f"unknown method {method!r}")
    if x == 0.0:
        return SeriesResult(1.0, 1, 0.0)

    if method == "series" or (method == "auto" and x <= CROSSOVER):
        return _direct_series(a, b, c, x, tol, max_terms)

    s = c - a - b
    if s == 0.0:
        return _log_connection(a, b, y, tol, max_terms)
    if s < 0.0:
        # Euler: 2F1(a, b; c; x) = (1 - x)^s 2F1(c - a, c - b; c; x)
        inner = gauss_2f1(
            HypParams(c - a, c - b, c),
            x,
            tol=tol,
            max_terms=max_terms,
            method=method,
            one_minus_x=y,
        )
        scale = y**s
        return SeriesResult(
            scale * inner.value, inner.terms_used, scale * inner.truncation_bound
        )
    if s == math.floor(s):
        # integral s > 0 needs another logarithmic formula; the Gauss series
        # still converges, just slowly
        return _direct_series(a, b, c, x, tol, max_terms)
    return _connection(a, b, c, y, tol, max_terms)


def f2(x: float, one_minus_x: float | None = None) -> float:
    """F(1/2, 1/2; 1; x)."""
    return gauss_2f1(F2_PARAMS, x, one_minus_x=one_minus_x).value


def f4(x: float, one_minus_x: float | None = None) -> float:
    """F(1/4, 3/4; 1; x)."""
    return gauss_2f1(F4_PARAMS, x, one_minus_x=one_minus_x).value


def f_quarter_half(x: float) -> float:
    """F(1/4, 3/4; 1/2; x) by series/connection formula."""
    return gauss_2f1(FQ_PARAMS, x).value


def f_quarter_half_closed(psi: float) -> float:
    """Closed form F(1/4, 3/4; 1/2; sin^2 psi) = cos(psi/2) / cos(psi).

    Valid for |psi| < pi/2.
    """
    if not abs(psi) < 0.5 * math.pi:
        raise DomainError(f"closed form needs |psi| < pi/2, got psi={psi!r}")
    return math.cos(0.5 * psi) / math.cos(psi)
