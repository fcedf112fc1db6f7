"""dd, the signature-four analogue of dn.

On the real line dd is defined by inverting an integral: with
f(T) = int_0^T F(1/4,3/4;1/2; kappa^2 sin^2 t) dt, set phi = f^-1 and
d = cos(arcsin(kappa sin phi)).  The same function comes out of the
Weierstrass form and of three Jacobi forms.  We compute all five and compare.
"""

import math

from sig4 import shen

frame = shen.make_shen_frame(0.6)
m = frame.modulus
print(f"kappa={m.kappa}  lambda={m.lam:.15f}  I={frame.I:.15f}")
print(f"omega from F4 = {shen.periods_via_f4(m).omega:.15f}")

print("\n      u    quadrature          p-form  sn-form  cn-form  dn-form (differences)")
for u in (0.0, 0.3, 0.9, frame.I, 2.5):
    ref = shen.d_real(u, m)
    others = [shen.dd_via_wp(u, frame)] + [shen.dd_via_jacobi(u, frame, f) for f in ("sn", "cn", "dn")]
    diffs = "  ".join(f"{abs(v - ref):.0e}" for v in others)
    print(f"  {u:6.3f}  {ref:.15f}  {diffs}")

# d oscillates between lambda and 1
print(f"\nd(I) = {shen.d_real(frame.I, m):.15f}  (lambda = {m.lam:.15f})")

# the ODE d'^2 = 2(1-d)(d^2 - lambda^2)
u, h = 0.7, 1e-4
dp = (-shen.d_real(u + 2 * h, m) + 8 * shen.d_real(u + h, m) - 8 * shen.d_real(u - h, m) + shen.d_real(u - 2 * h, m)) / (12 * h)
d = shen.d_real(u, m)
print(f"ODE residual at u={u}: {abs(dp * dp - 2 * (1 - d) * (d * d - m.lam**2)):.1e}")

# off the real axis, and near the pole at omega'
z = 0.5 + 0.3 * frame.half_periods.omega_prime
print(f"\ndd({z:.4f}) = {shen.dd_via_wp(z, frame):.12f}")
try:
    shen.dd_via_wp(frame.half_periods.omega_prime, frame)
except Exception as exc:
    print(f"at omega': {exc}")

# the self-dual modulus has a square lattice scaled by sqrt2
sym = shen.periods_via_f4(shen.Modulus.from_kappa(1 / math.sqrt(2)))
print(f"kappa=1/sqrt2: -i omega'/omega = {sym.omega_prime.imag / sym.omega:.15f}")
