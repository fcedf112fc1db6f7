"""The three Gauss functions behind everything else.

F2 gives the classical quarter-period, F4 the signature-four one, and
F(1/4, 3/4; 1/2; .) is the integrand of the incomplete integral whose
inverse is dd.  Below x = 1/2 we sum the series; above it the connection
formulas take over.  Here both routes are compared with independent values.
"""

import math

from sig4.classical_elliptic import agm
from sig4.hypergeom import F2_PARAMS, FQ_PARAMS, f2, f4, f_quarter_half_closed, gauss_2f1

print("F2(x) against 2K/pi from the AGM")
for x in (0.1, 0.5, 0.9, 0.999):
    K = 0.5 * math.pi / agm(1.0, math.sqrt(1.0 - x))
    print(f"  x={x:<6} F2={f2(x):.16f}  diff={abs(f2(x) - 2 * K / math.pi):.1e}")

# Near x = 1 the raw series crawls; the logarithmic connection formula
# in powers of 1 - x needs only a handful of terms.
x = 0.99
slow = gauss_2f1(F2_PARAMS, x, method="series")
fast = gauss_2f1(F2_PARAMS, x, method="connection")
print(f"\nF2({x}): series {slow.terms_used} terms, connection {fast.terms_used} terms, diff={abs(slow.value - fast.value):.1e}")

print("\nF(1/4,3/4;1/2; sin^2 psi) against cos(psi/2)/cos(psi)")
for psi in (0.2, 0.7, 1.2, 1.5):
    series = gauss_2f1(FQ_PARAMS, math.sin(psi) ** 2).value
    print(f"  psi={psi:<4} diff={abs(series - f_quarter_half_closed(psi)):.1e}")

# the signature-four quarter-period at the self-dual point
print(f"\nF4(1/2) = {f4(0.5):.16f}")
