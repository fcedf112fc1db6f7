"""The signature-four Weierstrass function.

For complementary modulus lambda the invariants are
g2 = lambda^2 + 1/3 and g3 = lambda^2/3 - 1/27.  The cubic 4t^3 - g2 t - g3
has the roots 1/6 + lambda/2, 1/6 - lambda/2 and -1/3, and p reduces to
Jacobi sn at the modulus built from them.
"""

from sig4 import weierstrass as W

lam = 0.6
inv = W.signature4_invariants(lam)
mid = W.midpoints(inv)
print(f"g2={inv.g2:.15f}  g3={inv.g3:.15f}  discriminant={inv.discriminant:.6e}")
print(f"e1={mid.e1:.15f}  e2={mid.e2:.15f}  e3={mid.e3:.15f}")
print(f"expected e1={1 / 6 + lam / 2:.15f}  e2={1 / 6 - lam / 2:.15f}  e3={-1 / 3:.15f}")

hp = W.half_periods(mid)
print(f"\nomega={hp.omega:.15f}  omega'={hp.omega_prime:.15f}")

# the differential equation p'^2 = 4p^3 - g2 p - g3 at a complex point
z = 0.37 + 0.41j
p = W.wp(z, mid)
dp = W.wp_prime(z, mid)
print(f"\np({z}) = {p:.12f}")
print(f"|p'^2 - (4p^3 - g2 p - g3)| = {abs(dp * dp - (4 * p**3 - inv.g2 * p - inv.g3)):.1e}")

# p at the half-periods recovers the roots
for name, w in (("omega", hp.omega), ("omega+omega'", hp.omega + hp.omega_prime), ("omega'", hp.omega_prime)):
    print(f"  p({name}) = {W.wp(w, mid).real:+.15f}")

# halving the imaginary period changes the invariants in closed form
halved = W.halved_invariants(inv, mid.e3)
kappa2 = 1 - lam * lam
print(f"\nhalved g2={halved.g2:.15f} (4/3+4k^2={4 / 3 + 4 * kappa2:.15f})")
print(f"halved g3={halved.g3:.15f} (8/27-8k^2/3={8 / 27 - 8 * kappa2 / 3:.15f})")
