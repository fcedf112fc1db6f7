"""Signature-four transfer identities and the base relation.

For 0 < lam < 1::

    sqrt(1 + lam) F4(1 - lam^2) = sqrt(2) F2((1 - lam)/(1 + lam))
    sqrt(1 + lam) F4(lam^2)     = F2(2 lam/(1 + lam))

and with q4(lam^2) = exp(-pi sqrt(2) F4(1 - lam^2)/F4(lam^2)) and the
classical nome q at k^2 = 2 lam/(1 + lam)::

    q4(lam^2) = q(2 lam/(1 + lam))^2.

The classical nome is computed from AGM quarter-periods, the signature-four
base from the hypergeometric series, so the base residual compares two
independent routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classical_elliptic import make_frame, nome
from .errors import DomainError
from .hypergeom import f2, f4

__all__ = [
    "TransferReport",
    "identity1_sides",
    "identity2_sides",
    "identity1_residual",
    "identity2_residual",
    "q4",
    "q_classical",
    "base_relation",
    "ENDPOINT_GUARD",
]

ENDPOINT_GUARD = 1e-6


def _check(lam: float) -> None:
    if not (ENDPOINT_GUARD <= lam <= 1.0 - ENDPOINT_GUARD):
        raise DomainError(
            f"lambda={lam!r} outside [{ENDPOINT_GUARD}, {1.0 - ENDPOINT_GUARD}]"
        )


def identity1_sides(lam: float) -> tuple[float, float]:
    _check(lam)
    lhs = math.sqrt(1.0 + lam) * f4((1.0 - lam) * (1.0 + lam), lam * lam)
    rhs = math.sqrt(2.0) * f2((1.0 - lam) / (1.0 + lam), 2.0 * lam / (1.0 + lam))
    return lhs, rhs


def identity2_sides(lam: float) -> tuple[float, float]:
    _check(lam)
    lhs = math.sqrt(1.0 + lam) * f4(lam * lam)
    rhs = f2(2.0 * lam / (1.0 + lam), (1.0 - lam) / (1.0 + lam))
    return lhs, rhs


def identity1_residual(lam: float) -> float:
    """|sqrt(1+lam) F4(1-lam^2) - sqrt(2) F2((1-lam)/(1+lam))|."""
    lhs, rhs = identity1_sides(lam)
    return abs(lhs - rhs)


def identity2_residual(lam: float) -> float:
    """|sqrt(1+lam) F4(lam^2) - F2(2 lam/(1+lam))|."""
    lhs, rhs = identity2_sides(lam)
    return abs(lhs - rhs)


def q4(lam: float) -> float:
    """Signature-four base q4(lam^2)."""
    _check(lam)
    ratio = f4((1.0 - lam) * (1.0 + lam), lam * lam) / f4(lam * lam, (1.0 - lam) * (1.0 + lam))
    return math.exp(-math.pi * math.sqrt(2.0) * ratio)


def q_classical(lam: float) -> float:
    """Classical nome at modulus k with k^2 = 2 lam/(1 + lam), via the AGM."""
    _check(lam)
    k = math.sqrt(2.0 * lam / (1.0 + lam))
    kp = math.sqrt((1.0 - lam) / (1.0 + lam))
    return nome(make_frame(k, kp))


@dataclass(frozen=True)
class TransferReport:
    lam: float
    residual_id1: float
    residual_id2: float
    relative_id1: float
    relative_id2: float
    q4: float
    q_classical: float
    base_residual: float


def base_relation(lam: float) -> TransferReport:
    """Evaluate both identities and |q4(lam^2) - q(2 lam/(1 + lam))^2|."""
    l1, r1 = identity1_sides(lam)
    l2, r2 = identity2_sides(lam)
    b4 = q4(lam)
    q = q_classical(lam)
    return TransferReport(
        lam=lam,
        residual_id1=abs(l1 - r1),
        residual_id2=abs(l2 - r2),
        relative_id1=abs(l1 - r1) / abs(l1),
        relative_id2=abs(l2 - r2) / abs(l2),
        q4=b4,
        q_classical=q,
        base_residual=abs(b4 - q * q),
    )
