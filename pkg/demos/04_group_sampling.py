# Looking at actual matrices: random elements of small symplectic groups.
#
# Random elements are products of symplectic transvections over GF(q). The
# largest order seen should match max_order(m, q) and never exceed it.

from maxord import max_order
from maxord.groupcheck import element_order, gf_ops, is_symplectic, random_symplectic, sample_max_order, transvection

# A single transvection on GF(2)**2.
T = transvection([1, 0], 1, 2)
print(T, element_order(T, 2, 4))

# A random element of Sp(6, 2), checked against the form.
A = random_symplectic(3, 2, rng_seed=7)
print(A, is_symplectic(gf_ops(2), A), element_order(A, 2, max_order(3, 2)))

# Order statistics from 10**4 samples per group.
for m, q in [(1, 2), (1, 4), (2, 2), (3, 2)]:
    rep = sample_max_order(m, q, samples=10_000, seed=42)
    print((m, q), rep.max_observed, max_order(m, q), rep.histogram)
