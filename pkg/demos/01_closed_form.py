# Closed-form maximum element orders of Sp(2m, q), q even.
#
# The value depends on whether q = 2 and on the parity of m; `classify`
# reports which branch applies.

from maxord import aut_max_order, bounds, classify, max_order

# Small symplectic groups over GF(2) and GF(4).
for m in range(1, 9):
    print(m, max_order(m, 2), max_order(m, 4))

# The branch behind a value, with its parameters.
print(classify(11, 2))   # Q2_Boundary, ell=3, m0=4
print(classify(6, 4))    # EvenQBig, ell=2

# Values are exact Python ints, however large.
print(max_order(64, 32))

# Every value sits between q**m and (q**(m+1) - 1)/(q - 1); the upper end is
# reached exactly when m + 1 is a power of 2.
for m in (6, 7, 8):
    b = bounds(m, 2)
    print(m, b.lower, max_order(m, 2), b.upper)

# The automorphism group only differs in three small cases.
print([aut_max_order(m, q) for m, q in [(1, 4), (2, 2), (2, 4), (3, 2)]])
