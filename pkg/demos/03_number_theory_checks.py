# Number-theoretic facts used along the way, checked on concrete values.

import math

from maxord.arith import cyclotomic_product, structured_gcd
from maxord.groupcheck import SplitMix64
from maxord.verify import babylonian_sides, random_distinct_valuation_tuple

# gcd(q**a - ea, q**b - eb) from closed forms, next to Euclid.
q = 4
for a, ea, b, eb in [(4, 1, 6, 1), (1, -1, 2, 1), (2, -1, 6, -1), (1, -1, 3, 1)]:
    print(a, ea, b, eb, structured_gcd(q, a, ea, b, eb), math.gcd(q**a - ea, q**b - eb))

# (q + 1)(q**2 + 1)...(q**(2**(ell-1)) + 1) telescopes to (q**(2**ell) - 1)/(q - 1).
for ell in range(1, 5):
    print(ell, cyclotomic_product(2, ell), 2 ** (2**ell) - 1)

# Parts with distinct 2-adic valuations never beat the binary digits of
# their sum: prod(q**d + 1) <= prod(q**(2**x) + 1).
rng = SplitMix64(1)
for _ in range(5):
    ds = random_distinct_valuation_tuple(rng, 40)
    lhs, rhs = babylonian_sides(ds, 2)
    print(ds, lhs <= rhs, rhs / lhs)
