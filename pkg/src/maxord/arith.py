"""Exact integer primitives for even field sizes q = 2**f.

Everything here works on Python ints, so values never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union


@dataclass(frozen=True, order=True)
class FieldSize:
    """Size q = 2**f of a finite field of characteristic 2."""

    q: int
    f: int

    def __post_init__(self):
        if self.q < 2 or self.q & (self.q - 1):
            raise ValueError(f"q must be a power of 2 and at least 2, got {self.q}")
        if self.q != 1 << self.f:
            raise ValueError(f"q={self.q} does not match f={self.f}")

    @classmethod
    def of(cls, q: Union[int, "FieldSize"]) -> "FieldSize":
        if isinstance(q, FieldSize):
            return q
        if isinstance(q, bool) or not isinstance(q, int):
            raise TypeError(f"q must be an int, got {type(q).__name__}")
        if q < 2 or q & (q - 1):
            raise ValueError(f"q must be a power of 2 and at least 2, got {q}")
        return cls(q, q.bit_length() - 1)

    def __int__(self):
        return self.q


QLike = Union[int, FieldSize]


def _q(q: QLike) -> int:
    return FieldSize.of(q).q


@dataclass(frozen=True)
class TwoAdicValuation:
    n: int
    val: int
    odd_part: int


def two_adic_valuation(n: int) -> TwoAdicValuation:
    """Split n >= 1 as 2**val * odd_part."""
    if n < 1:
        raise ValueError(f"2-adic valuation needs n >= 1, got {n}")
    val = (n & -n).bit_length() - 1
    return TwoAdicValuation(n, val, n >> val)


def val2(n: int) -> int:
    return two_adic_valuation(n).val


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


def q_power_pm(q: QLike, d: int, sign: int) -> int:
    """Return q**d - sign, i.e. q**d - 1 for sign=+1 and q**d + 1 for sign=-1."""
    if d < 1:
        raise ValueError(f"exponent d must be >= 1, got {d}")
    _check_sign(sign)
    return _q(q) ** d - sign


def structured_gcd(q: QLike, a: int, ea: int, b: int, eb: int) -> int:
    """gcd(q**a - ea, q**b - eb) from the closed forms, without running Euclid.

    Both equal to +1 gives q**gcd(a, b) - 1. With exactly one minus sign the
    gcd is 1 unless the minus-signed exponent has strictly smaller 2-adic
    valuation, in which case it is q**gcd(a, b) + 1. With two minus signs it
    is q**gcd(a, b) + 1 when the valuations agree and 1 otherwise.
    """
    if a < 1 or b < 1:
        raise ValueError(f"exponents must be >= 1, got a={a}, b={b}")
    _check_sign(ea)
    _check_sign(eb)
    qq = _q(q)
    g = math.gcd(a, b)
    if ea == 1 and eb == 1:
        return qq**g - 1
    if ea == -1 and eb == -1:
        return qq**g + 1 if val2(a) == val2(b) else 1
    # one plus, one minus: orient so that `minus` carries the -1 sign
    minus, plus = (a, b) if ea == -1 else (b, a)
    return 1 if val2(minus) >= val2(plus) else qq**g + 1


def lcm_signed_list(q: QLike, parts: Iterable[tuple[int, int]]) -> int:
    """lcm of q**d - sign over the given (d, sign) pairs; 1 for no pairs."""
    qq = _q(q)
    return math.lcm(*(q_power_pm(qq, d, s) for d, s in parts))


def ceil_pow2_factor(m_prime: int) -> int:
    """2**ceil(log2(2*m_prime)), taken to be 1 at m_prime = 0."""
    if m_prime < 0:
        raise ValueError(f"m_prime must be >= 0, got {m_prime}")
    if m_prime == 0:
        return 1
    return 1 << (2 * m_prime - 1).bit_length()


def cyclotomic_product(q: QLike, ell: int) -> int:
    """(q + 1)(q**2 + 1)(q**4 + 1)...(q**(2**(ell-1)) + 1)."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    qq = _q(q)
    out = 1
    for i in range(ell):
        out *= qq ** (1 << i) + 1
    return out


def exact_div(num: int, den: int) -> int:
    """Integer division that insists on a zero remainder."""
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{den} does not divide {num}")
    return quo


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0
