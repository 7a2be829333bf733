"""
Euler factors at random Satake classes
======================================

Compares truncated y-expansions of the character-sum side against
products of Euler factors, term by term, at seeded tempered classes.
"""
import numpy as np

from spincheck import SatakeClass
from spincheck.verifier import main_identity_sides, prop4_sides, verify_brion, verify_main_identity

rng = np.random.default_rng(42)
s = SatakeClass.random(rng)
lhs, rhs = main_identity_sides(8, s)
for d, (a, b) in enumerate(zip(lhs, rhs)):
    print(d, f"{a:.6f}", f"{b:.6f}", f"{abs(a - b) / max(abs(a), abs(b), 1e-300):.1e}")

lhs, rhs = prop4_sides(8, s)
print("degree-32 Euler product, max difference", np.max(np.abs(lhs - rhs)))

for report in (verify_main_identity(10, trials=5, seed=42), verify_brion(10, trials=5, seed=42)):
    print(report.summary())

# Away from the unit circle the identities still hold as formal series.
s = SatakeClass.random(rng, tempered=False)
lhs, rhs = main_identity_sides(6, s)
print(np.max(np.abs(lhs - rhs) / np.maximum(np.abs(rhs), 1.0)))
