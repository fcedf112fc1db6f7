"""Residual checks evaluated at one grid value of lambda.

Every check returns a single nonnegative residual (the worst case over its
sample points); the sweep driver in :mod:`sig4.cli` compares it with a
tolerance.  Sample points are fixed so that reports are reproducible.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

from . import shen, transfer
from . import weierstrass as W

# fractions (a, b) of z = a*omega + b*omega'; all well away from the lattice
# points and from the poles of dd at the omega' translates
COMPLEX_SAMPLES = (
    (0.3, 0.2),
    (0.7, 0.45),
    (1.2, 0.3),
    (1.6, 0.7),
    (0.5, 1.3),
    (-0.4, 0.6),
)
REAL_SAMPLES = 10
ODE_SAMPLES = 8
FD_STEP = 1e-4


def _frame(lam: float) -> shen.ShenFrame:
    return shen.make_shen_frame(shen.Modulus.from_lambda(lam))


def complex_points(frame: shen.ShenFrame) -> list[complex]:
    hp = frame.half_periods
    return [a * hp.omega + b * hp.omega_prime for a, b in COMPLEX_SAMPLES]


def real_points(frame: shen.ShenFrame, n: int = REAL_SAMPLES) -> list[float]:
    """n points spread over one real period, offset off the lattice."""
    two_omega = 2.0 * frame.half_periods.omega
    return [two_omega * (j + 0.37) / n for j in range(n)]


def fd_derivative(func: Callable[[float], float], u: float, h: float = FD_STEP) -> float:
    """Five-point central difference."""
    return (-func(u + 2 * h) + 8 * func(u + h) - 8 * func(u - h) + func(u - 2 * h)) / (12 * h)


def ode_residual(m: shen.Modulus, u: float) -> float:
    """|d'^2 - 2 (1 - d)(d^2 - lambda^2)| with d' by finite differences."""
    d = shen.d_real(u, m)
    dp = fd_derivative(lambda v: shen.d_real(v, m), u)
    return abs(dp * dp - 2.0 * (1.0 - d) * (d - m.lam) * (d + m.lam))


def check_ode(lam: float) -> float:
    frame = _frame(lam)
    return max(ode_residual(frame.modulus, u) for u in real_points(frame, ODE_SAMPLES))


def dd_wp_residual(z: complex, frame: shen.ShenFrame) -> float:
    """|(1 - dd(z))(1/3 + p(z)) - kappa^2/2|."""
    p = W.wp(z, frame.midpoints, frame.jacobi)
    dd = shen.dd_via_wp(z, frame)
    kappa = frame.modulus.kappa
    return abs((1.0 - dd) * (1.0 / 3.0 + p) - 0.5 * kappa * kappa)


def check_dd_wp(lam: float) -> float:
    frame = _frame(lam)
    return max(dd_wp_residual(z, frame) for z in complex_points(frame))


def route_values(z: complex, frame: shen.ShenFrame, *, include_real: bool) -> list[complex]:
    values = [shen.dd_via_wp(z, frame)]
    values += [shen.dd_via_jacobi(z, frame, form) for form in ("sn", "cn", "dn")]
    if include_real:
        values.append(complex(shen.d_real(complex(z).real, frame.modulus)))
    return values


def max_pairwise(values: list[complex]) -> float:
    return max(abs(a - b) for a, b in itertools.combinations(values, 2))


def check_routes_real(lam: float) -> float:
    frame = _frame(lam)
    return max(
        max_pairwise(route_values(u, frame, include_real=True)) for u in real_points(frame)
    )


def check_routes_complex(lam: float) -> float:
    frame = _frame(lam)
    return max(
        max_pairwise(route_values(z, frame, include_real=False))
        for z in complex_points(frame)
    )


def period_deviations(m: shen.Modulus) -> tuple[float, float]:
    """(|omega_F4 - omega_F2|, |omega'_F4 - omega'_F2|)."""
    via_f4 = shen.periods_via_f4(m)
    via_f2 = shen.make_shen_frame(m).half_periods
    return (
        abs(via_f4.omega - via_f2.omega),
        abs(via_f4.omega_prime - via_f2.omega_prime),
    )


def check_period_omega(lam: float) -> float:
    return period_deviations(shen.Modulus.from_lambda(lam))[0]


def check_period_omega_prime(lam: float) -> float:
    return period_deviations(shen.Modulus.from_lambda(lam))[1]


# suite -> ((check name, function, default tolerance), ...)
SUITES: dict[str, tuple[tuple[str, Callable[[float], float], float], ...]] = {
    "ode": (("ode", check_ode, 1e-8),),
    "thm2": (("thm2", check_dd_wp, 1e-9),),
    "routes": (
        ("routes_real", check_routes_real, 1e-8),
        ("routes_complex", check_routes_complex, 1e-9),
    ),
    "periods": (
        ("period_omega", check_period_omega, 1e-10),
        ("period_omega_prime", check_period_omega_prime, 1e-10),
    ),
    "transfer": (
        ("identity1", transfer.identity1_residual, 1e-10),
        ("identity2", transfer.identity2_residual, 1e-10),
        ("base_relation", lambda lam: transfer.base_relation(lam).base_residual, 1e-10),
    ),
}
SUITE_ORDER = ("ode", "thm2", "routes", "periods", "transfer")


def suite_checks(suite: str):
    if suite == "all":
        return tuple(c for name in SUITE_ORDER for c in SUITES[name])
    return SUITES[suite]


def nan_safe(value: float) -> float:
    return math.inf if math.isnan(value) else value
