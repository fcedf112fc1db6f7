"""Classical Jacobi layer: AGM, quarter-periods, nome and sn/cn/dn.

The Jacobi functions are computed by the descending Landen (AGM) scheme with
backward phase recovery; complex arguments go through the addition theorem
combined with Jacobi's imaginary transformation.  No theta functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, PoleError

__all__ = [
    "JacobiFrame",
    "JacobiTriple",
    "agm",
    "make_frame",
    "nome",
    "jacobi_real",
    "jacobi_complex",
    "sn_pole_distance",
    "POLE_RADIUS",
]

AGM_MAX_ITER = 60
AGM_RTOL = 1e-16
POLE_RADIUS = 1e-8


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"agm needs positive arguments, got ({a!r}, {b!r})")
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= AGM_RTOL * a:
            break
        a_next, b_next = 0.5 * (a + b), math.sqrt(a * b)
        if a_next == a and b_next == b:
            # stuck one ulp apart
            break
        a, b = a_next, b_next
    return 0.5 * (a + b)


@dataclass(frozen=True)
class JacobiFrame:
    """Jacobi modulus with its quarter-periods and nome."""

    k: float
    kp: float
    K: float
    Kp: float
    q: float


class JacobiTriple(NamedTuple):
    sn: complex | float
    cn: complex | float
    dn: complex | float


def make_frame(k: float, kp: float | None = None) -> JacobiFrame:
    """Build the frame for modulus ``k``.

    ``kp`` may be supplied when the complementary modulus is known in a form
    more accurate than sqrt(1 - k^2).
    """
    if not (0.0 < k < 1.0):
        raise DomainError(f"Jacobi modulus must lie in (0, 1), got k={k!r}")
    if kp is None:
        kp = math.sqrt((1.0 - k) * (1.0 + k))
    elif not (0.0 < kp < 1.0) or abs(k * k + kp * kp - 1.0) > 1e-14:
        raise DomainError(f"inconsistent complementary modulus kp={kp!r} for k={k!r}")
    K = 0.5 * math.pi / agm(1.0, kp)
    Kp = 0.5 * math.pi / agm(1.0, k)
    return JacobiFrame(k, kp, K, Kp, math.exp(-math.pi * Kp / K))


def nome(frame: JacobiFrame) -> float:
    """Classical nome exp(-pi K'/K)."""
    return math.exp(-math.pi * frame.Kp / frame.K)


def _landen_phase(u: float, k: float, kp: float, extra_stages: int) -> float:
    """Amplitude am(u, k) by descending Landen with phase recovery."""
    a, b = 1.0, kp
    cs = [k]
    as_ = [1.0]
    extra = extra_stages
    for _ in range(AGM_MAX_ITER):
        if abs(cs[-1]) <= AGM_RTOL * a:
            if extra <= 0:
                break
            extra -= 1
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        cs.append(c)
        as_.append(a)
    n = len(as_) - 1
    phi = math.ldexp(as_[-1] * u, n)
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(cs[j] / as_[j] * math.sin(phi)))
    return phi


def jacobi_real(u: float, frame: JacobiFrame, *, extra_stages: int = 0) -> JacobiTriple:
    """sn, cn, dn at a real argument.

    ``u`` is first reduced modulo 4K, the real period of sn and cn.
    ``extra_stages`` runs that many additional AGM stages after convergence;
    it exists to check that the Landen descent is saturated.
    """
    K = frame.K
    r = math.remainder(u, 4.0 * K)  # in [-2K, 2K]
    phi = _landen_phase(r, frame.k, frame.kp, extra_stages)
    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn > 0 on the real line; this form has no cancellation for k < 1
    dn = math.sqrt((1.0 - frame.k * sn) * (1.0 + frame.k * sn))
    return JacobiTriple(sn, cn, dn)


def _dual(frame: JacobiFrame) -> JacobiFrame:
    return JacobiFrame(frame.kp, frame.k, frame.Kp, frame.K, math.exp(-math.pi * frame.K / frame.Kp))


def sn_pole_distance(z: complex, frame: JacobiFrame) -> float:
    """Distance from ``z`` to the nearest pole iK' + 2mK + 2niK' of sn."""
    x = math.remainder(z.real, 2.0 * frame.K)
    y = math.remainder(z.imag - frame.Kp, 2.0 * frame.Kp)
    return math.hypot(x, y)


def sn_zero_distance(z: complex, frame: JacobiFrame) -> float:
    """Distance from ``z`` to the nearest zero 2mK + 2niK' of sn."""
    x = math.remainder(z.real, 2.0 * frame.K)
    y = math.remainder(z.imag, 2.0 * frame.Kp)
    return math.hypot(x, y)


def jacobi_complex(z: complex, frame: JacobiFrame) -> JacobiTriple:
    """sn, cn, dn at a complex argument z = x + iy.

    With s, c, d = sn, cn, dn(x, k) and s1, c1, d1 = sn, cn, dn(y, k')::

        sn(z) = (s d1 + i c d s1 c1) / D
        cn(z) = (c c1 - i s d s1 d1) / D
        dn(z) = (d c1 d1 - i k^2 s c s1) / D,   D = c1^2 + k^2 s^2 s1^2

    Raises :class:`PoleError` within ``POLE_RADIUS`` of a pole of sn.
    """
    z = complex(z)
    dist = sn_pole_distance(z, frame)
    if dist < POLE_RADIUS:
        raise PoleError("sn pole guard", dist, POLE_RADIUS)
    s, c, d = jacobi_real(z.real, frame)
    if z.imag == 0.0:
        return JacobiTriple(complex(s), complex(c), complex(d))
    s1, c1, d1 = jacobi_real(z.imag, _dual(frame))
    k2 = frame.k * frame.k
    denom = c1 * c1 + k2 * s * s * s1 * s1
    return JacobiTriple(
        complex(s * d1, c * d * s1 * c1) / denom,
        complex(c * c1, -s * d * s1 * d1) / denom,
        complex(d * c1 * d1, -k2 * s * c * s1) / denom,
    )
