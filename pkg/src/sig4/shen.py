"""Shen's signature-four elliptic function dd.

On the real line, with modulus kappa and F = F(1/4, 3/4; 1/2; .)::

    f(T)   = int_0^T F(kappa^2 sin^2 t) dt        (strictly increasing)
    phi    = f^{-1}
    psi    = arcsin(kappa sin phi)
    d(u)   = cos psi(u)                            (range [lambda, 1])

and d extends to the elliptic function

    dd = 1 - (kappa^2 / 2) / (1/3 + p),   p = wp(.; lambda^2 + 1/3, lambda^2/3 - 1/27).

Equivalently, with w = z sqrt((1 + lambda)/2) and Jacobi modulus
k = tan(alpha/2)::

    dd(z) = 1 - (1 - lambda) sn^2(w) = lambda + (1 - lambda) cn^2(w)
          = -lambda + (1 + lambda) dn^2(w).

The Jacobi displays this is based on print ``sn^2[(1/2 (1 + lambda))^{1/2}]``
with the variable dropped; the argument is read as z sqrt((1 + lambda)/2),
which is what the preceding p-function display forces.

The real route (quadrature + inversion), the p route and the three Jacobi
routes share no code beyond the Jacobi layer used by the last two.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from . import weierstrass as W
from .classical_elliptic import POLE_RADIUS, JacobiFrame, jacobi_complex, sn_pole_distance
from .errors import ConvergenceError, DomainError, PoleError
from .hypergeom import f4
from .quadrature import integrate

__all__ = [
    "Modulus",
    "ShenFrame",
    "make_shen_frame",
    "quarter_integral",
    "f_incomplete",
    "phi",
    "d_real",
    "dd_via_wp",
    "dd_via_jacobi",
    "dd_pole_distance",
    "periods_via_f4",
    "q_relation_check",
    "halved_half_periods",
]

QUAD_TOL = 1e-14
NEWTON_MAX_ITER = 100


@dataclass(frozen=True)
class Modulus:
    """The triple (kappa, lambda, alpha) with lambda = sqrt(1 - kappa^2), sin alpha = kappa."""

    kappa: float
    lam: float
    alpha: float

    @classmethod
    def from_kappa(cls, kappa: float) -> "Modulus":
        if not (0.0 < kappa < 1.0):
            raise DomainError(f"modulus kappa must lie in (0, 1), got {kappa!r}")
        return cls(kappa, math.sqrt((1.0 - kappa) * (1.0 + kappa)), math.asin(kappa))

    @classmethod
    def from_lambda(cls, lam: float) -> "Modulus":
        if not (0.0 < lam < 1.0):
            raise DomainError(f"complementary modulus must lie in (0, 1), got {lam!r}")
        kappa = math.sqrt((1.0 - lam) * (1.0 + lam))
        return cls(kappa, lam, math.acos(lam))

    @property
    def complement(self) -> "Modulus":
        return Modulus(self.lam, self.kappa, 0.5 * math.pi - self.alpha)

    @property
    def one_minus_kappa(self) -> float:
        return self.lam * self.lam / (1.0 + self.kappa)

    @property
    def one_minus_lam(self) -> float:
        # kappa^2 / (1 + lambda) avoids cancellation for small kappa
        return self.kappa * self.kappa / (1.0 + self.lam)


def cos_psi(t: float, m: Modulus) -> float:
    """cos(arcsin(kappa sin t)) without the cancellation in 1 - kappa sin t.

    Uses 1 -+ kappa sin t = (1 - kappa) + 2 kappa sin^2(pi/4 -+ t/2).
    """
    base = m.one_minus_kappa
    lo = base + 2.0 * m.kappa * math.sin(0.25 * math.pi - 0.5 * t) ** 2
    hi = base + 2.0 * m.kappa * math.sin(0.25 * math.pi + 0.5 * t) ** 2
    return math.sqrt(lo * hi)


def _integrand(t: float, m: Modulus) -> float:
    # closed form F(1/4, 3/4; 1/2; sin^2 psi) = cos(psi/2) / cos(psi), with
    # cos(psi/2) from the half-angle formula (psi in [-pi/2, pi/2])
    c = cos_psi(t, m)
    return math.sqrt(0.5 * (1.0 + c)) / c


def _f_principal(t: float, m: Modulus) -> float:
    """f on [-pi/2, pi/2] by direct quadrature."""
    value, _ = integrate(
        functools.partial(_integrand, m=m), 0.0, t, abs_tol=QUAD_TOL, rel_tol=QUAD_TOL
    )
    return value


@functools.lru_cache(maxsize=256)
def quarter_integral(m: Modulus) -> float:
    """I = f(pi/2), the real half-period of dd obtained by quadrature."""
    return _f_principal(0.5 * math.pi, m)


def f_incomplete(T: float, m: Modulus) -> float:
    """f(T) = int_0^T F(1/4, 3/4; 1/2; kappa^2 sin^2 t) dt for any real T.

    The integrand is even and pi-periodic, so f(T + pi) = f(T) + 2I.
    """
    n = round(T / math.pi)
    r = T - n * math.pi
    value = _f_principal(r, m)
    if n:
        value += 2 * n * quarter_integral(m)
    return value


def phi(u: float, m: Modulus) -> float:
    """Inverse of :func:`f_incomplete`.

    ``u`` is reduced modulo 2I onto [-I, I], where the inverse takes values
    in [-pi/2, pi/2]; there Newton's method (f' >= 1) runs inside a shrinking
    bisection bracket.
    """
    two_i = 2.0 * quarter_integral(m)
    n = round(u / two_i)
    r = u - n * two_i
    g = functools.partial(_integrand, m=m)

    lo, hi = -0.5 * math.pi, 0.5 * math.pi
    # f(t) >= t on t >= 0, so the root lies between 0 and r
    t = max(lo, min(hi, r))
    ft = _f_principal(t, m)
    for _ in range(NEWTON_MAX_ITER):
        resid = ft - r
        if resid > 0.0:
            hi = t
        elif resid < 0.0:
            lo = t
        else:
            break
        t_new = t - resid / g(t)
        if not (lo < t_new < hi):
            t_new = 0.5 * (lo + hi)
        step = t_new - t
        if abs(step) <= 2e-16 * max(1.0, abs(t)):
            t = t_new
            break
        increment, _ = integrate(g, t, t_new, abs_tol=QUAD_TOL, rel_tol=QUAD_TOL)
        t, ft = t_new, ft + increment
    else:
        raise ConvergenceError(f"phi({u!r}) inversion did not converge for kappa={m.kappa!r}")
    return t + n * math.pi


def d_real(u: float, m: Modulus) -> float:
    """d(u) = cos psi(u) with psi = arcsin(kappa sin phi(u))."""
    return cos_psi(phi(u, m), m)


@dataclass(frozen=True)
class ShenFrame:
    """All derived constants for one modulus, precomputed once."""

    modulus: Modulus
    invariants: W.Invariants
    midpoints: W.MidpointValues
    jacobi: JacobiFrame
    half_periods: W.HalfPeriods
    I: float

    @property
    def scale(self) -> float:
        """sqrt(e1 - e3) = sqrt((1 + lambda)/2), the sn-argument scale."""
        return math.sqrt(0.5 * (1.0 + self.modulus.lam))


def make_shen_frame(m: Modulus | float) -> ShenFrame:
    """Frame for a :class:`Modulus` or for a bare ``kappa``."""
    if not isinstance(m, Modulus):
        m = Modulus.from_kappa(m)
    inv = W.signature4_invariants(m.lam)
    mid = W.midpoints(inv)
    jac = W.jacobi_frame(mid)
    return ShenFrame(m, inv, mid, jac, W.half_periods(mid, jac), quarter_integral(m))


def dd_pole_distance(z: complex, frame: ShenFrame) -> float:
    """Distance from z to the nearest pole omega' + 2m omega + 2n omega' of dd."""
    root = math.sqrt(frame.midpoints.e1 - frame.midpoints.e3)
    return sn_pole_distance(complex(z) * root, frame.jacobi) / root


def _guard(z: complex, frame: ShenFrame) -> None:
    dist = dd_pole_distance(z, frame)
    if dist < POLE_RADIUS:
        raise PoleError("dd pole guard", dist, POLE_RADIUS)


def dd_via_wp(z: complex, frame: ShenFrame) -> complex:
    """dd(z) = 1 - (kappa^2/2) / (1/3 + p(z)).

    At the lattice points p has a double pole and dd takes the value 1.
    """
    _guard(z, frame)
    try:
        p = W.wp(z, frame.midpoints, frame.jacobi)
    except PoleError as exc:
        if exc.guard == "lattice pole guard":
            return 1.0 + 0.0j
        raise
    kappa = frame.modulus.kappa
    return 1.0 - 0.5 * kappa * kappa / (1.0 / 3.0 + p)


def dd_via_jacobi(z: complex, frame: ShenFrame, form: str = "sn") -> complex:
    """dd(z) through the Jacobi function named by ``form`` ('sn', 'cn' or 'dn')."""
    _guard(z, frame)
    m = frame.modulus
    w = complex(z) * frame.scale
    sn, cn, dn = jacobi_complex(w, frame.jacobi)
    if form == "sn":
        return 1.0 - m.one_minus_lam * sn * sn
    if form == "cn":
        return m.lam + m.one_minus_lam * cn * cn
    if form == "dn":
        return -m.lam + (1.0 + m.lam) * dn * dn
    raise ValueError(f"unknown Jacobi form {form!r}")


def periods_via_f4(m: Modulus) -> W.HalfPeriods:
    """omega = (pi/2) F4(kappa^2), omega' = i sqrt(2) (pi/2) F4(lambda^2)."""
    return W.HalfPeriods(
        0.5 * math.pi * f4(m.kappa * m.kappa, m.lam * m.lam),
        complex(0.0, math.sqrt(2.0) * 0.5 * math.pi * f4(m.lam * m.lam, m.kappa * m.kappa)),
    )


def _halved_midpoints(m: Modulus) -> W.MidpointValues:
    inv = W.signature4_invariants(m.lam)
    mid = W.midpoints(inv)
    e_at_omega_prime = W.wp(W.half_periods(mid).omega_prime, mid).real
    return W.midpoints(W.halved_invariants(inv, e_at_omega_prime))


def halved_half_periods(m: Modulus) -> W.HalfPeriods:
    """Half-periods of q_kappa, the p-function whose imaginary period is halved."""
    return W.half_periods(_halved_midpoints(m))


def q_relation_check(z: complex, m: Modulus) -> float:
    """Residual |q_kappa(z) + 2 p_lambda(i sqrt(2) z)|.

    q_kappa has the halved invariants of p_kappa; p_lambda is the
    signature-four p-function of the complementary modulus.
    """
    q_val = W.wp(z, _halved_midpoints(m))
    comp_mid = W.midpoints(W.signature4_invariants(m.kappa))
    p_val = W.wp(1j * math.sqrt(2.0) * complex(z), comp_mid)
    return abs(q_val + 2.0 * p_val)
