"""Signed partitions and 2-adic expansions.

A signed partition is a multiset of parts ``(d, sign)`` with ``d >= 1`` and
``sign`` in ``{+1, -1}``. Parts are kept in canonical order: descending ``d``,
and ``+1`` before ``-1`` for equal ``d``. Streams are produced in
lexicographic order of the canonical part sequences, so ``(n, +1)`` comes
first and ``(1, -1) * n`` comes last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

Part = tuple[int, int]


def part_key(part: Part) -> tuple[int, int]:
    """Sort key realising the canonical part order."""
    d, sign = part
    return (-d, -sign)


@dataclass(frozen=True)
class SignedPartition:
    parts: tuple[Part, ...] = ()

    def __post_init__(self):
        parts = tuple((int(d), int(s)) for d, s in self.parts)
        for d, s in parts:
            if d < 1 or s not in (1, -1):
                raise ValueError(f"invalid signed part ({d}, {s})")
        object.__setattr__(self, "parts", tuple(sorted(parts, key=part_key)))

    @classmethod
    def _trusted(cls, parts: tuple[Part, ...]) -> "SignedPartition":
        # parts already canonical and validated by the enumerator
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @property
    def total(self) -> int:
        return sum(d for d, _ in self.parts)

    def key(self) -> tuple[tuple[int, int], ...]:
        """Lexicographic key; smaller means earlier in enumeration order."""
        return tuple(part_key(p) for p in self.parts)

    def has_distinct_parts(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def labels(self) -> list[str]:
        """Parts written as '3+', '1-', in canonical order."""
        return [f"{d}{'+' if s == 1 else '-'}" for d, s in self.parts]

    def __str__(self):
        return "(" + ", ".join(self.labels()) + ")"


@dataclass(frozen=True)
class TwoAdicExpansion:
    n: int
    exponents: tuple[int, ...]


def two_adic_expansion(n: int) -> TwoAdicExpansion:
    """Set bit positions of n, increasing."""
    if n < 1:
        raise ValueError(f"2-adic expansion needs n >= 1, got {n}")
    return TwoAdicExpansion(n, tuple(i for i in range(n.bit_length()) if n >> i & 1))


# Candidate parts in enumeration order, largest d first, + before -.
def _parts_below(n: int) -> list[Part]:
    return [(d, s) for d in range(n, 0, -1) for s in (1, -1)]


def _raw_partitions(
    n: int, distinct: bool, first: Optional[Part] = None
) -> Iterator[tuple[Part, ...]]:
    # Each next part must not precede the previous one in canonical order;
    # in the distinct family it must strictly follow it. With ``first`` set,
    # only partitions whose leading part equals it are produced.
    order = _parts_below(n)
    prefix: list[Part] = []

    def rec(remaining: int, start: int) -> Iterator[tuple[Part, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for idx in range(start, len(order)):
            d, s = order[idx]
            if d > remaining:
                continue
            prefix.append((d, s))
            yield from rec(remaining - d, idx + 1 if distinct else idx)
            prefix.pop()

    if first is None:
        yield from rec(n, 0)
        return
    if n == 0 or first[0] > n:
        return
    idx = order.index(first)
    prefix.append(first)
    yield from rec(n - first[0], idx + 1 if distinct else idx)


def leading_parts(n: int) -> list[Part]:
    """Possible first parts of a signed partition of n, in stream order."""
    return _parts_below(n)


def enumerate_signed_partitions(
    n: int, first: Optional[Part] = None
) -> Iterator[SignedPartition]:
    """Lazily yield every signed partition of n exactly once.

    ``first`` restricts the stream to partitions with that leading part; the
    restricted streams over ``leading_parts(n)`` tile the full stream in order.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for parts in _raw_partitions(n, distinct=False, first=first):
        yield SignedPartition._trusted(parts)


def enumerate_distinct_signed_partitions(
    n: int, first: Optional[Part] = None
) -> Iterator[SignedPartition]:
    """Signed partitions of n whose (d, sign) parts are pairwise distinct.

    The same d may still occur twice, once with each sign.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for parts in _raw_partitions(n, distinct=True, first=first):
        yield SignedPartition._trusted(parts)


@lru_cache(maxsize=None)
def count_signed_partitions(n: int) -> int:
    """Number of signed partitions of n (two-coloured partition number)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    # coin change with every part size available in two colours
    ways = [1] + [0] * n
    for d in range(1, n + 1):
        for _ in range(2):
            for t in range(d, n + 1):
                ways[t] += ways[t - d]
    return ways[n]
