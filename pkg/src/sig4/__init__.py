"""Shen's signature-four elliptic function dd and the transfer identities.

Modules
-------
hypergeom           2F1 on [0, 1) and the shorthands f2, f4
classical_elliptic  AGM, K, K', nome, Jacobi sn/cn/dn
weierstrass         p-function of real rectangular lattices
shen                f, phi, d on the real line; dd by the p and Jacobi routes
transfer            the two hypergeometric identities and q4 = q^2
cli                 ``sig4`` command-line driver
"""

from .errors import ConvergenceError, DomainError, PoleError, Sig4Error
from .hypergeom import f2, f4, gauss_2f1
from .shen import Modulus, ShenFrame, d_real, dd_via_jacobi, dd_via_wp, make_shen_frame
from .transfer import base_relation

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "PoleError",
    "Sig4Error",
    "Modulus",
    "ShenFrame",
    "base_relation",
    "d_real",
    "dd_via_jacobi",
    "dd_via_wp",
    "f2",
    "f4",
    "gauss_2f1",
    "make_shen_frame",
]
