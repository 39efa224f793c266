"""Random elements of Sp(2m, q), q in {2, 4, 8}, and their orders.

Conventions
-----------
Field elements are ints 0..q-1 holding polynomial coefficients over GF(2),
reduced modulo x**2 + x + 1 (q = 4) or x**3 + x + 1 (q = 8).

The form matrix is J = [[0, I_m], [I_m, 0]], so <x, y> = sum_i x_i y_{m+i} +
x_{m+i} y_i. Matrices act on row vectors from the right (x -> x A), which
makes the transvection x -> x + lam <x, v> v the matrix I + lam (J v) v^T.

Randomness comes from SplitMix64::

    state <- state + 0x9E3779B97F4A7C15           (mod 2**64)
    z     <- state
    z     <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2**64)
    z     <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2**64)
    out   <- z ^ (z >> 31)

Sample k of a run with seed s draws from its own SplitMix64 seeded with the
(k+1)-th output of SplitMix64(s), so any worker can jump straight to it.
The first word of that stream fixes the length, base + (word & 1) factors;
alternating lengths matter for q = 2, where products of an even number of
transvections stay inside a proper subgroup (A_3 in Sp(2, 2) = S_3, A_6 in
Sp(4, 2) = S_6). One transvection then consumes one 64-bit word w:
coordinate i of v is bits [i f, (i+1) f) of w and lam is bits
[2 m f, 2 m f + f); the word is discarded and redrawn while v = 0 or
lam = 0. ``random_symplectic`` uses the same per-factor rule with a fixed
length and no length word.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .arith import FieldSize, QLike
from .formula import max_order

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

# Re-verify the symplectic form after every product when set.
DEBUG = bool(os.environ.get("MAXORD_DEBUG"))

IRREDUCIBLES = {1: 0b11, 2: 0b111, 3: 0b1011}

SUPPORTED_SAMPLING = {(1, 2), (1, 4), (2, 2), (3, 2)}


class FormViolation(AssertionError):
    pass


class OrderOverflow(ArithmeticError):
    """Element order exceeds the cap it was computed against."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"element order exceeds {cap}")


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return _mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection of the top partial block."""
        if n < 1:
            raise ValueError("n must be >= 1")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            z = self.next()
            if z < limit:
                return z % n


def stream_seed(seed: int, k: int) -> int:
    """Seed of sample k: the (k+1)-th output of SplitMix64(seed)."""
    return _mix64((seed + (k + 1) * GAMMA) & MASK64)


class GF:
    """GF(2**f) for f in {1, 2, 3} with full lookup tables."""

    def __init__(self, q: QLike):
        fq = FieldSize.of(q)
        if fq.f not in IRREDUCIBLES:
            raise ValueError(f"only q in {{2, 4, 8}} is supported, got {fq.q}")
        self.q, self.f = fq.q, fq.f
        self.modulus = IRREDUCIBLES[fq.f]
        mul = np.zeros((self.q, self.q), dtype=np.uint8)
        for a in range(self.q):
            for b in range(self.q):
                mul[a, b] = self._slow_mul(a, b)
        self.mul_table = mul
        self.inv_table = np.zeros(self.q, dtype=np.uint8)
        for a in range(1, self.q):
            self.inv_table[a] = next(b for b in range(1, self.q) if mul[a, b] == 1)

    def _slow_mul(self, a: int, b: int) -> int:
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a >> self.f:
                a ^= self.modulus
        return out

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])


@lru_cache(maxsize=None)
def gf_ops(q: int) -> GF:
    return GF(q)


def form_matrix(m: int) -> np.ndarray:
    n = 2 * m
    J = np.zeros((n, n), dtype=np.uint8)
    J[:m, m:] = np.eye(m, dtype=np.uint8)
    J[m:, :m] = np.eye(m, dtype=np.uint8)
    return J


def matmul(gf: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    prods = gf.mul_table[A[:, :, None], B[None, :, :]]
    return np.bitwise_xor.reduce(prods, axis=1)


def is_symplectic(gf: GF, A: np.ndarray) -> bool:
    """A^T J A == J over GF(q)."""
    J = form_matrix(A.shape[0] // 2)
    return np.array_equal(matmul(gf, matmul(gf, A.T, J), A), J)


def inverse(A: np.ndarray) -> np.ndarray:
    """Inverse of a symplectic matrix, J A^T J (signs vanish in char 2)."""
    m = A.shape[0] // 2
    # conjugating by J swaps the two halves of rows and columns
    swap = np.r_[m:2 * m, 0:m]
    return A.T[np.ix_(swap, swap)]


def _apply_J(v: np.ndarray) -> np.ndarray:
    m = v.shape[0] // 2
    return np.concatenate([v[m:], v[:m]])


def transvection(v: Sequence[int], lam: int, q: QLike) -> np.ndarray:
    """Matrix of x -> x + lam <x, v> v on row vectors."""
    gf = gf_ops(FieldSize.of(q).q)
    v = np.asarray(v, dtype=np.uint8)
    if v.ndim != 1 or v.shape[0] % 2 or v.shape[0] == 0:
        raise ValueError("v must be a vector of even positive length")
    if not v.any():
        raise ValueError("v must be nonzero")
    if not 0 < lam < gf.q or np.any(v >= gf.q):
        raise ValueError("lam must be a nonzero field element and v must have field entries")
    n = v.shape[0]
    lam_Jv = gf.mul_table[lam, _apply_J(v)]
    T = gf.mul_table[lam_Jv[:, None], v[None, :]]
    T ^= np.eye(n, dtype=np.uint8)
    return T


def _draw_transvection(rng: SplitMix64, m: int, gf: GF):
    f, n = gf.f, 2 * m
    mask = gf.q - 1
    while True:
        w = rng.next()
        v = [(w >> (i * f)) & mask for i in range(n)]
        lam = (w >> (n * f)) & mask
        if lam and any(v):
            return np.array(v, dtype=np.uint8), lam


def _times_transvection(gf: GF, A: np.ndarray, v: np.ndarray, lam: int) -> np.ndarray:
    # A (I + lam Jv v^T) = A + (A lam Jv) v^T
    lam_Jv = gf.mul_table[lam, _apply_J(v)]
    w = np.bitwise_xor.reduce(gf.mul_table[A, lam_Jv[None, :]], axis=1)
    return A ^ gf.mul_table[w[:, None], v[None, :]]


def default_factors(m: int) -> int:
    return 2 * (2 * m) ** 2


def _check_rng_width(m: int, gf: GF):
    if (2 * m + 1) * gf.f > 64:
        raise ValueError(f"(2m+1)*f must fit in 64 bits, got m={m}, q={gf.q}")


def random_symplectic(
    m: int,
    q: QLike,
    n_factors: Optional[int] = None,
    rng_seed: int = 0,
    debug: Optional[bool] = None,
) -> np.ndarray:
    """Product of ``n_factors`` random transvections, using SplitMix64(rng_seed)."""
    gf = gf_ops(FieldSize.of(q).q)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    _check_rng_width(m, gf)
    if n_factors is None:
        n_factors = default_factors(m)
    if n_factors < 1:
        raise ValueError(f"n_factors must be >= 1, got {n_factors}")
    check = DEBUG if debug is None else debug
    rng = SplitMix64(rng_seed)
    A = np.eye(2 * m, dtype=np.uint8)
    for _ in range(n_factors):
        v, lam = _draw_transvection(rng, m, gf)
        A = _times_transvection(gf, A, v, lam)
        if check and not is_symplectic(gf, A):
            raise FormViolation("product left the symplectic group")
    return A


def element_order(A: np.ndarray, q: QLike, cap: int) -> int:
    """Smallest k >= 1 with A**k = I, by repeated multiplication.

    Raises OrderOverflow when no such k <= cap exists.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    gf = gf_ops(FieldSize.of(q).q)
    eye = np.eye(A.shape[0], dtype=np.uint8)
    P = A
    for k in range(1, cap + 1):
        if np.array_equal(P, eye):
            return k
        P = matmul(gf, P, A)
    raise OrderOverflow(cap)


@dataclass
class SampleReport:
    m: int
    q: int
    samples: int
    seed: int
    max_observed: int
    histogram: dict = field(default_factory=dict)
    violated: bool = False


def _draw_words(rng: SplitMix64, m: int, gf: GF, count: int) -> list[int]:
    nf = 2 * m * gf.f
    vmask = (1 << nf) - 1
    mask = gf.q - 1
    out = []
    while len(out) < count:
        w = rng.next()
        if w & vmask and (w >> nf) & mask:
            out.append(w)
    return out


def _sample_range(m, q, seed, start, stop, base_factors, cap):
    """Orders of samples start..stop-1, batched over numpy arrays."""
    gf = gf_ops(q)
    n, f, size = 2 * m, gf.f, stop - start
    width = base_factors + 1
    # lam = 0 pads the shorter products with identity factors
    words = np.zeros((size, width), dtype=np.uint64)
    for row, k in enumerate(range(start, stop)):
        rng = SplitMix64(stream_seed(seed, k))
        length = base_factors + (rng.next() & 1)
        words[row, :length] = _draw_words(rng, m, gf, length)
    shifts = np.arange(n + 1, dtype=np.uint64) * np.uint64(f)
    fields = ((words[..., None] >> shifts) & np.uint64(gf.q - 1)).astype(np.uint8)
    vs, lams = fields[..., :n], fields[..., n]

    mul = gf.mul_table
    A = np.broadcast_to(np.eye(n, dtype=np.uint8), (size, n, n)).copy()
    for t in range(width):
        v, lam = vs[:, t, :], lams[:, t]
        lam_Jv = mul[lam[:, None], np.concatenate([v[:, m:], v[:, :m]], axis=1)]
        w = np.bitwise_xor.reduce(mul[A, lam_Jv[:, None, :]], axis=2)
        A ^= mul[w[:, :, None], v[:, None, :]]
        if DEBUG and not all(is_symplectic(gf, a) for a in A):
            raise FormViolation("product left the symplectic group")

    orders = np.zeros(size, dtype=np.int64)
    eye = np.eye(n, dtype=np.uint8)
    P = A
    for k in range(1, cap + 1):
        hit = (orders == 0) & (P == eye).all(axis=(1, 2))
        orders[hit] = k
        if (orders > 0).all():
            break
        P = np.bitwise_xor.reduce(mul[P[:, :, :, None], A[:, None, :, :]], axis=2)
    violated = bool((orders == 0).any())
    hist = Counter(int(o) for o in orders if o)
    return hist, violated


def sample_max_order(
    m: int,
    q: QLike,
    samples: int,
    seed: int,
    threads: int = 1,
    n_factors: Optional[int] = None,
) -> SampleReport:
    """Sample random elements of Sp(2m, q) and record their orders.

    Each sample is a product of n_factors or n_factors + 1 transvections
    (default n_factors = 2 (2m)**2). Orders are computed against cap = M_m(q); any element needing more is
    counted as a violation instead of entering the histogram.
    """
    q = FieldSize.of(q).q
    if (m, q) not in SUPPORTED_SAMPLING:
        raise ValueError(f"sampling supports (m, q) in {sorted(SUPPORTED_SAMPLING)}, got ({m}, {q})")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if n_factors is None:
        n_factors = default_factors(m)
    if n_factors < 1:
        raise ValueError(f"n_factors must be >= 1, got {n_factors}")
    cap = max_order(m, q)

    workers = max(1, min(threads, samples))
    bounds_ = [samples * i // workers for i in range(workers + 1)]
    jobs = [(m, q, seed, bounds_[i], bounds_[i + 1], n_factors, cap) for i in range(workers)]
    if workers == 1:
        parts = [_sample_range(*jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sample_range, *zip(*jobs)))

    hist = Counter()
    violated = False
    for h, v in parts:
        hist.update(h)
        violated = violated or v
    return SampleReport(
        m=m,
        q=q,
        samples=samples,
        seed=seed,
        max_observed=max(hist) if hist else 0,
        histogram=dict(sorted(hist.items())),
        violated=violated,
    )
