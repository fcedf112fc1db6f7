"""Jacobi elliptic functions from the AGM and descending Landen.

A frame bundles k, k', K, K' and the nome so repeated evaluations at one
modulus share the expensive constants.
"""

import math

from sig4.classical_elliptic import jacobi_complex, jacobi_real, make_frame, nome

frame = make_frame(0.8)
print(f"k=0.8  K={frame.K:.15f}  K'={frame.Kp:.15f}  q={nome(frame):.15f}")

for u in (0.0, 0.5, frame.K, 2 * frame.K, 3.7):
    sn, cn, dn = jacobi_real(u, frame)
    print(f"  u={u:8.5f}  sn={sn:+.12f} cn={cn:+.12f} dn={dn:+.12f}  sn^2+cn^2-1={sn * sn + cn * cn - 1:+.1e}")

# complex argument: sn has a pole at iK'
z = 0.4 + 0.9j * frame.Kp
sn, cn, dn = jacobi_complex(z, frame)
print(f"\nsn({z:.4f}) = {sn:.12f}")
print(f"dn^2 + k^2 sn^2 - 1 = {abs(dn * dn + frame.k**2 * sn * sn - 1):.1e}")

try:
    jacobi_complex(1j * frame.Kp, frame)
except Exception as exc:
    print(f"\nat iK': {exc}")

# Periodicity in both directions
w = 0.3 + 0.2j
a = jacobi_complex(w, frame).sn
b = jacobi_complex(w + 4 * frame.K, frame).sn
c = jacobi_complex(w + 2j * frame.Kp, frame).sn
print(f"sn(w+4K)-sn(w)={abs(b - a):.1e}  sn(w+2iK')-sn(w)={abs(c - a):.1e}")

sym = make_frame(1 / math.sqrt(2))
print(f"K'/K at k=1/sqrt2: {sym.Kp / sym.K:.15f}")
