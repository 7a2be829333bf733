"""
Spin_10 characters and tensor products
======================================

Weight diagrams, dimensions and character values for a few D5
irreducibles, then the decomposition of spin x spin by Brauer's rule.
"""
import numpy as np

from spincheck import D5, SatakeClass, dimension, eval_character, eval_character_alternant, tensor_decompose
from spincheck import okada_rhs, weight_multiplicities, weyl_denominator

# Labels are fundamental-weight coordinates. (0,0,0,0,1) is a half-spin representation.
spin = D5.from_label((0, 0, 0, 0, 1))
vector = D5.from_label((1, 0, 0, 0, 0))
for lam in (vector, spin, D5.from_label((0, 1, 0, 0, 0))):
    diagram = weight_multiplicities(lam)
    print(lam.label(), "dim", dimension(lam), "dominant weights", len(diagram.dominant))

# Character values at a random tempered class, by two independent routes.
rng = np.random.default_rng(0)
s = SatakeClass.random(rng)
print("Weyl denominator", abs(weyl_denominator(s)))
for lam in (vector, spin):
    print(lam.label(), eval_character(lam, s), eval_character_alternant(lam, s))

# 16 x 16 = 126 + 120 + 10.
prod = tensor_decompose(spin, spin)
for label, mult in sorted(prod.by_label().items()):
    print(mult, label, dimension(D5.from_label(label)))

# Products of symmetric powers of the spin representation.
for l, m in [(1, 1), (2, 1), (2, 2)]:
    lhs = tensor_decompose(D5.from_label((0, 0, 0, 0, l)), D5.from_label((0, 0, 0, 0, m)))
    print(l, m, lhs == okada_rhs(l, m), len(lhs.by_label()), "constituents")
