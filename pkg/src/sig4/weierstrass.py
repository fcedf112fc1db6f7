"""Weierstrass p-function on real rectangular lattices.

Path: invariants (g2, g3) -> midpoint values e1 > e2 > e3 -> Jacobi modulus
k^2 = (e2 - e3)/(e1 - e3) -> half-periods -> evaluation through

    p(z) = e3 + (e1 - e3) / sn^2(z sqrt(e1 - e3), k).

Only the positive-discriminant case (three distinct real midpoints) is
supported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classical_elliptic import (
    POLE_RADIUS,
    JacobiFrame,
    jacobi_complex,
    make_frame,
    sn_pole_distance,
    sn_zero_distance,
)
from .errors import DomainError, PoleError

__all__ = [
    "Invariants",
    "MidpointValues",
    "HalfPeriods",
    "signature4_invariants",
    "midpoints",
    "jacobi_frame",
    "half_periods",
    "wp",
    "wp_prime",
    "wp_imaginary_axis",
    "halved_invariants",
]


@dataclass(frozen=True)
class Invariants:
    g2: float
    g3: float

    @property
    def discriminant(self) -> float:
        return self.g2**3 - 27.0 * self.g3**2


@dataclass(frozen=True)
class MidpointValues:
    e1: float
    e2: float
    e3: float


@dataclass(frozen=True)
class HalfPeriods:
    """Real half-period ``omega`` and imaginary half-period ``omega_prime``."""

    omega: float
    omega_prime: complex

    def __post_init__(self):
        if not self.omega > 0.0:
            raise DomainError(f"real half-period must be positive, got {self.omega!r}")
        op = complex(self.omega_prime)
        if op.real != 0.0 or not op.imag > 0.0:
            raise DomainError(f"omega_prime must be positive imaginary, got {op!r}")
        object.__setattr__(self, "omega_prime", op)


def signature4_invariants(lam: float) -> Invariants:
    """Invariants g2 = lam^2 + 1/3, g3 = lam^2/3 - 1/27 for 0 < lam < 1."""
    if not (0.0 < lam < 1.0):
        raise DomainError(f"complementary modulus must lie in (0, 1), got {lam!r}")
    lam2 = lam * lam
    return Invariants(lam2 + 1.0 / 3.0, lam2 / 3.0 - 1.0 / 27.0)


def midpoints(inv: Invariants) -> MidpointValues:
    """Real roots of 4e^3 - g2 e - g3, in decreasing order.

    Trigonometric solution of the depressed cubic followed by one Newton
    step on each root.
    """
    g2, g3 = inv.g2, inv.g3
    if not inv.discriminant > 0.0:
        raise DomainError(
            f"discriminant {inv.discriminant!r} <= 0: midpoint values are not "
            "real and distinct"
        )
    # e^3 + p e + q = 0 with p = -g2/4, q = -g3/4; g2 > 0 when disc > 0
    r = math.sqrt(g2 / 3.0)
    cos3t = max(-1.0, min(1.0, 3.0 * math.sqrt(3.0) * g3 / g2**1.5))
    t = math.acos(cos3t) / 3.0
    roots = [r * math.cos(t - 2.0 * math.pi * j / 3.0) for j in range(3)]
    polished = []
    for e in roots:
        d = 12.0 * e * e - g2
        if d != 0.0:
            e -= (4.0 * e**3 - g2 * e - g3) / d
        polished.append(e)
    e1, e2, e3 = sorted(polished, reverse=True)
    if not (e1 > e2 > e3):
        raise DomainError("midpoint values are not distinct")
    return MidpointValues(e1, e2, e3)


def jacobi_frame(mid: MidpointValues) -> JacobiFrame:
    """Jacobi frame with k^2 = (e2 - e3)/(e1 - e3), k'^2 = (e1 - e2)/(e1 - e3)."""
    span = mid.e1 - mid.e3
    return make_frame(
        math.sqrt((mid.e2 - mid.e3) / span), math.sqrt((mid.e1 - mid.e2) / span)
    )


def half_periods(mid: MidpointValues, frame: JacobiFrame | None = None) -> HalfPeriods:
    """omega = K / sqrt(e1 - e3), omega' = i K' / sqrt(e1 - e3)."""
    if frame is None:
        frame = jacobi_frame(mid)
    root = math.sqrt(mid.e1 - mid.e3)
    return HalfPeriods(frame.K / root, complex(0.0, frame.Kp / root))


def _inv_sn2(w: complex, frame: JacobiFrame) -> complex:
    """1/sn^2(w), evaluated through a shift by iK' near the poles of sn.

    Uses sn(w + iK') = 1/(k sn(w)), so 1/sn^2(w) = k^2 sn^2(w - iK').
    The zero and pole lattices of sn are K' apart, so one of the two
    expressions is always well conditioned.
    """
    if sn_pole_distance(w, frame) < sn_zero_distance(w, frame):
        s = jacobi_complex(w - 1j * frame.Kp, frame).sn
        return frame.k * frame.k * s * s
    s = jacobi_complex(w, frame).sn
    return 1.0 / (s * s)


def _scaled_argument(z: complex, mid: MidpointValues, frame: JacobiFrame) -> complex:
    root = math.sqrt(mid.e1 - mid.e3)
    w = complex(z) * root
    dist = sn_zero_distance(w, frame) / root
    if dist < POLE_RADIUS:
        raise PoleError("lattice pole guard", dist, POLE_RADIUS)
    return w


def wp(z: complex, mid: MidpointValues, frame: JacobiFrame | None = None) -> complex:
    """p(z) for the lattice with midpoint values ``mid``.

    Raises :class:`PoleError` within ``POLE_RADIUS`` of a lattice point.
    """
    if frame is None:
        frame = jacobi_frame(mid)
    w = _scaled_argument(z, mid, frame)
    return mid.e3 + (mid.e1 - mid.e3) * _inv_sn2(w, frame)


def wp_prime(z: complex, mid: MidpointValues, frame: JacobiFrame | None = None) -> complex:
    """p'(z) = -2 (e1 - e3)^{3/2} cn dn / sn^3 at the reduced argument."""
    if frame is None:
        frame = jacobi_frame(mid)
    w = _scaled_argument(z, mid, frame)
    span = mid.e1 - mid.e3
    if sn_pole_distance(w, frame) < sn_zero_distance(w, frame):
        # with (s, c, d) at w - iK': sn(w) = 1/(k s), cn(w) = -i d/(k s),
        # dn(w) = -i c/s, hence cn dn / sn^3 = -k^2 s c d
        s, c, d = jacobi_complex(w - 1j * frame.Kp, frame)
        ratio = -frame.k * frame.k * s * c * d
    else:
        s, c, d = jacobi_complex(w, frame)
        ratio = c * d / s**3
    return -2.0 * span**1.5 * ratio


def wp_imaginary_axis(y: float, inv: Invariants) -> float:
    """p(iy; g2, g3) by the reflection p(iy; g2, g3) = -p(y; g2, -g3).

    A cross-check path for purely imaginary arguments.
    """
    mirror = Invariants(inv.g2, -inv.g3)
    return -wp(y, midpoints(mirror)).real


def halved_invariants(inv: Invariants, wp_at_omega_prime: float) -> Invariants:
    """Invariants after halving the imaginary period.

    h2 = -4 g2 + 60 e^2,  h3 = 8 g3 + 56 e^3  with e = p(omega').
    """
    e = wp_at_omega_prime
    return Invariants(-4.0 * inv.g2 + 60.0 * e * e, 8.0 * inv.g3 + 56.0 * e**3)
