"""Closed-form maximum element order M_m(q) of Sp(2m, q), q even."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .arith import FieldSize, QLike, exact_div
from .partition import two_adic_expansion


class CaseTag(str, enum.Enum):
    OddQBig = "OddQBig"
    M2QBig = "M2QBig"
    EvenQBig = "EvenQBig"
    Q2_M0LE3 = "Q2_M0LE3"
    Q2_OddSmall = "Q2_OddSmall"
    Q2_EvenSmall = "Q2_EvenSmall"
    Q2_Boundary = "Q2_Boundary"
    Q2_OddLarge = "Q2_OddLarge"
    Q2_EvenLarge = "Q2_EvenLarge"


@dataclass(frozen=True)
class FormulaCase:
    """Which branch of the closed form applies, with its parameters.

    For q = 2, ``ell`` is the largest integer with 2**ell - 1 <= m and
    ``m0 = m - (2**ell - 1)``. For EvenQBig, ``ell`` is the largest integer
    with 2**ell + 2**(ell-1) <= m. For OddQBig, ``ell`` counts the terms of
    the 2-adic expansion of m. M2QBig has ``ell = 0``.
    """

    tag: CaseTag
    ell: int = 0
    m0: int = 0


@dataclass(frozen=True)
class OrderBounds:
    lower: int
    upper: int
    strong_lower: Optional[int] = None


def _check_m(m: int):
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"m must be an int, got {type(m).__name__}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")


def classify(m: int, q: QLike) -> FormulaCase:
    _check_m(m)
    qq = FieldSize.of(q).q
    if qq > 2:
        if m % 2:
            return FormulaCase(CaseTag.OddQBig, ell=len(two_adic_expansion(m).exponents))
        if m == 2:
            return FormulaCase(CaseTag.M2QBig)
        ell = 1
        while (1 << (ell + 1)) + (1 << ell) <= m:
            ell += 1
        return FormulaCase(CaseTag.EvenQBig, ell=ell)

    ell = (m + 1).bit_length() - 1
    m0 = m - ((1 << ell) - 1)
    half = 1 << (ell - 1)
    if m0 <= 3:
        tag = CaseTag.Q2_M0LE3
    elif m0 < half:
        tag = CaseTag.Q2_OddSmall if m0 % 2 else CaseTag.Q2_EvenSmall
    elif m0 == half:
        tag = CaseTag.Q2_Boundary
    else:
        tag = CaseTag.Q2_OddLarge if m0 % 2 else CaseTag.Q2_EvenLarge
    return FormulaCase(tag, ell=ell, m0=m0)


def max_order(m: int, q: QLike) -> int:
    """Maximum element order of Sp(2m, q)."""
    case = classify(m, q)
    q = FieldSize.of(q).q
    tag, ell, m0 = case.tag, case.ell, case.m0

    if tag is CaseTag.OddQBig:
        out = 1
        for i in two_adic_expansion(m).exponents:
            out *= q ** (1 << i) + 1
        return out
    if tag is CaseTag.M2QBig:
        return q**2 + 1
    if tag is CaseTag.EvenQBig:
        num = (q ** (m - (1 << ell) + 1) - 1) * (q ** (1 << ell) - 1)
        return exact_div(num, q - 1)

    top = q ** (1 << ell) - 1
    half = 1 << (ell - 1)
    if tag is CaseTag.Q2_M0LE3:
        return q**m0 * top
    if tag is CaseTag.Q2_OddSmall:
        return (q ** (half + m0) - 1) * (q**half - 1)
    if tag is CaseTag.Q2_EvenSmall:
        return q * (q ** (half + m0 - 1) - 1) * (q**half - 1)
    if tag is CaseTag.Q2_Boundary:
        return (q ** (1 << ell) + 1) * (q**half - 1)
    if tag is CaseTag.Q2_OddLarge:
        return (q**m0 - 1) * top
    if tag is CaseTag.Q2_EvenLarge:
        return q * (q ** (m0 - 1) - 1) * top
    raise AssertionError(f"unhandled case {tag}")


# Maximum element orders of Aut(Sp(2m, q)) that differ from M_m(q).
AUT_EXCEPTIONS = {(1, 4): 6, (2, 2): 10, (2, 4): 20}


def aut_max_order(m: int, q: QLike) -> int:
    """Maximum element order of Aut(Sp(2m, q))."""
    value = max_order(m, q)
    return AUT_EXCEPTIONS.get((m, FieldSize.of(q).q), value)


def bounds(m: int, q: QLike) -> OrderBounds:
    """q**m < M_m(q) <= (q**(m+1) - 1)/(q - 1).

    ``strong_lower`` is floor(q**(m+2) / (q**2 - 1)); M_m(q) exceeds the
    unrounded quotient whenever m != 2 or q == 2, and it is None otherwise.
    """
    _check_m(m)
    q = FieldSize.of(q).q
    lower = q**m
    upper = exact_div(q ** (m + 1) - 1, q - 1)
    strong = q ** (m + 2) // (q * q - 1) if (m != 2 or q == 2) else None
    return OrderBounds(lower, upper, strong)


# Table of M_m(q) for m <= 20, transcribed row by row: (q > 2, q = 2).
# Deliberately shares no logic with max_order.
_TABLE = {
    1: (lambda q: (q**2 - 1) // (q - 1), lambda q: q**2 - 1),
    2: (lambda q: q**2 + 1, lambda q: q * (q**2 - 1)),
    3: (lambda q: (q**4 - 1) // (q - 1), lambda q: q**4 - 1),
    4: (lambda q: (q**3 - 1) * (q**2 - 1) // (q - 1), lambda q: q * (q**4 - 1)),
    5: (lambda q: (q + 1) * (q**4 + 1), lambda q: q**2 * (q**4 - 1)),
    6: (lambda q: (q**3 - 1) * (q**4 - 1) // (q - 1), lambda q: q**3 * (q**4 - 1)),
    7: (lambda q: (q**8 - 1) // (q - 1), lambda q: q**8 - 1),
    8: (lambda q: (q**5 - 1) * (q**4 - 1) // (q - 1), lambda q: q * (q**8 - 1)),
    9: (lambda q: (q + 1) * (q**8 + 1), lambda q: q**2 * (q**8 - 1)),
    10: (lambda q: (q**7 - 1) * (q**4 - 1) // (q - 1), lambda q: q**3 * (q**8 - 1)),
    11: (lambda q: (q + 1) * (q**2 + 1) * (q**8 + 1), lambda q: (q**8 + 1) * (q**4 - 1)),
    12: (lambda q: (q**5 - 1) * (q**8 - 1) // (q - 1), lambda q: (q**5 - 1) * (q**8 - 1)),
    13: (lambda q: (q + 1) * (q**4 + 1) * (q**8 + 1), lambda q: q * (q**5 - 1) * (q**8 - 1)),
    14: (lambda q: (q**7 - 1) * (q**8 - 1) // (q - 1), lambda q: (q**7 - 1) * (q**8 - 1)),
    15: (lambda q: (q**16 - 1) // (q - 1), lambda q: q**16 - 1),
    16: (lambda q: (q**9 - 1) * (q**8 - 1) // (q - 1), lambda q: q * (q**16 - 1)),
    17: (lambda q: (q + 1) * (q**16 + 1), lambda q: q**2 * (q**16 - 1)),
    18: (lambda q: (q**11 - 1) * (q**8 - 1) // (q - 1), lambda q: q**3 * (q**16 - 1)),
    19: (lambda q: (q + 1) * (q**2 + 1) * (q**16 + 1), lambda q: q * (q**11 - 1) * (q**8 - 1)),
    20: (lambda q: (q**13 - 1) * (q**8 - 1) // (q - 1), lambda q: (q**13 - 1) * (q**8 - 1)),
}


def table_reference(m: int, q: QLike) -> int:
    """Tabulated M_m(q) for 1 <= m <= 20."""
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= 20:
        raise ValueError(f"tabulated values cover 1 <= m <= 20, got {m}")
    q = FieldSize.of(q).q
    big, two = _TABLE[m]
    return two(q) if q == 2 else big(q)
