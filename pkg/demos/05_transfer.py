"""Moving between signature four and the classical theory.

Two identities connect F4 and F2, and the base q4 of signature four is the
square of a classical nome.  We sweep lambda and print the residuals.
"""

from sig4 import transfer

print("lambda   identity 1   identity 2   base relation   q4")
for lam in (0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99):
    r = transfer.base_relation(lam)
    print(f"{lam:6.2f}   {r.residual_id1:.1e}      {r.residual_id2:.1e}      {r.base_residual:.1e}         {r.q4:.12e}")

worst = max(transfer.base_relation(0.01 * j).base_residual for j in range(1, 100))
print(f"\nworst base residual over lambda = 0.01..0.99: {worst:.1e}")
