# Recovering M_m(q) by brute force over signed partitions.
#
# A candidate is a number m' in [0, m] plus a signed partition of m - m'. Its
# value is 2**ceil(log2(2 m')) times the lcm of q**d - sign over the parts.
# The largest candidate value coincides with the closed form.

from maxord import SignedPartition, enumerate_signed_partitions, l_value, max_order, maximize
from maxord.partition import count_signed_partitions

# The five signed partitions of 2, in stream order.
for p in enumerate_signed_partitions(2):
    print(p)

# How fast the search space grows.
print([count_signed_partitions(n) for n in range(12)])

# One candidate by hand: lcm(4**3 - 1, 4 + 1) = 63 * 5.
print(l_value(4, 4, 0, SignedPartition([(3, 1), (1, -1)])))

# Full search with the winning witness.
rep = maximize(8, 2)
print(rep.best.value, rep.best.m_prime, rep.best.partition, rep.candidates_evaluated)
print(rep.best.value == max_order(8, 2))

# The pruned mode reaches the same maximum after far fewer candidates.
for mode in ("exhaustive", "pruned"):
    rep = maximize(16, 2, mode)
    print(mode, rep.best.value, rep.candidates_evaluated)
