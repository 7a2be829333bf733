"""
The spin generating series and its annihilating polynomial
==========================================================

The series sum_d (0,0,0,0,d) y^d of spin-ladder representations, the
symmetric-power series of the spin representation, and the six-term
polynomial whose product with the latter leaves only the ladder.
"""
from math import comb

from spincheck import SatakeClass, brion_spin_series, evaluate_series, p_poly, spin_cartan_series
from spincheck.series import p_poly_terms
from spincheck.verifier import verify_p_annihilation

for label, sign, degree in p_poly_terms():
    print(f"y^{degree}: {'+' if sign > 0 else '-'}{label}")

N = 6
sym = brion_spin_series(N)
# At the identity class coefficient d is the dimension of Sym^d of a 16-dim space.
values = evaluate_series(sym, SatakeClass.identity()).coeffs
print([round(v.real) for v in values])
print([comb(15 + d, d) for d in range(N + 1)])

print(p_poly(order=N) * sym == spin_cartan_series(N))

# The literal reading of the resolution breaks at degree two.
for parse in ("resolution", "literal"):
    r = verify_p_annihilation(8, parse=parse)
    print(parse, r.status, r.details["failing_degrees"][:3])
