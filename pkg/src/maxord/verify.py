"""Named verification suites.

Every suite yields one plain dict per check with an ``ok`` flag. Big
integers are left as ints here; serialisation is the caller's business.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .arith import (
    FieldSize,
    cyclotomic_product,
    is_power_of_two,
    q_power_pm,
    structured_gcd,
    val2,
)
from .formula import bounds, max_order, table_reference
from .groupcheck import SplitMix64
from .partition import two_adic_expansion
from .search import SearchMode, maximize

SUITES = ("theorem2", "bounds", "gcd", "babylonians", "cyclotomic", "table")


def babylonian_sides(ds: Sequence[int], q: int) -> tuple[int, int]:
    """Both sides of prod(q**d + 1) <= prod over the 2-adic expansion of sum(ds).

    The inequality holds when the 2-adic valuations of ``ds`` are pairwise
    distinct.
    """
    lhs = math.prod(q**d + 1 for d in ds)
    rhs = math.prod(q ** (1 << x) + 1 for x in two_adic_expansion(sum(ds)).exponents)
    return lhs, rhs


def random_distinct_valuation_tuple(rng: SplitMix64, max_sum: int) -> tuple[int, ...]:
    """Random tuple of positive ints with distinct 2-adic valuations and sum <= max_sum.

    Picks a length, then that many distinct valuations, then odd multipliers
    one at a time while reserving room for the parts still to come.
    """
    top = max_sum.bit_length() - 1
    while True:
        length = 1 + rng.below(top + 1)
        pool = list(range(top + 1))
        vals = [pool.pop(rng.below(len(pool))) for _ in range(length)]
        reserve = sum(1 << v for v in vals)
        if reserve > max_sum:
            continue
        ds = []
        budget = max_sum
        for v in vals:
            reserve -= 1 << v
            room = budget - reserve
            n_odd = (room // (1 << v) + 1) // 2
            d = (1 << v) * (2 * rng.below(n_odd) + 1)
            ds.append(d)
            budget -= d
        return tuple(ds)


def suite_theorem2(m_max, q_list, mode=SearchMode.EXHAUSTIVE, threads=1) -> Iterator[dict]:
    for q in q_list:
        for m in range(1, m_max + 1):
            rep = maximize(m, q, mode, threads)
            yield {
                "check": "theorem2",
                "m": m,
                "q": rep.q.q,
                "mode": rep.mode.value,
                "search_value": rep.best.value,
                "formula_value": max_order(m, q),
                "m_prime": rep.best.m_prime,
                "partition": rep.best.partition.labels(),
                "candidates_evaluated": rep.candidates_evaluated,
                "ok": rep.agrees_with_formula,
            }


def suite_bounds(m_max, q_list) -> Iterator[dict]:
    for q in q_list:
        for m in range(1, m_max + 1):
            M = max_order(m, q)
            b = bounds(m, q)
            ok = b.lower < M <= b.upper
            ok &= (M == b.upper) == is_power_of_two(m + 1)
            if b.strong_lower is not None:
                # compare against the unrounded quotient q**(m+2) / (q**2 - 1)
                ok &= M * (q * q - 1) > q ** (m + 2)
            yield {
                "check": "bounds",
                "m": m,
                "q": q,
                "value": M,
                "lower": b.lower,
                "upper": b.upper,
                "strong_lower": b.strong_lower,
                "ok": ok,
            }


def suite_gcd(m_max, q_list) -> Iterator[dict]:
    for q in q_list:
        for a in range(1, m_max + 1):
            for b in range(1, m_max + 1):
                for ea in (1, -1):
                    for eb in (1, -1):
                        got = structured_gcd(q, a, ea, b, eb)
                        want = math.gcd(q_power_pm(q, a, ea), q_power_pm(q, b, eb))
                        yield {
                            "check": "gcd",
                            "q": q,
                            "a": a,
                            "ea": ea,
                            "b": b,
                            "eb": eb,
                            "closed_form": got,
                            "euclid": want,
                            "ok": got == want,
                        }


def suite_babylonians(max_sum, q_list, samples=1000, seed=0) -> Iterator[dict]:
    rng = SplitMix64(seed)
    for i in range(samples):
        ds = random_distinct_valuation_tuple(rng, max_sum)
        assert len({val2(d) for d in ds}) == len(ds)
        for q in q_list:
            lhs, rhs = babylonian_sides(ds, q)
            yield {"check": "babylonians", "sample": i, "q": q, "ds": list(ds),
                   "lhs": lhs, "rhs": rhs, "ok": lhs <= rhs}


def suite_cyclotomic(ell_max, q_list) -> Iterator[dict]:
    for q in q_list:
        for ell in range(1, ell_max + 1):
            prod = cyclotomic_product(q, ell)
            yield {"check": "cyclotomic", "q": q, "ell": ell, "product": prod,
                   "ok": prod * (q - 1) == q ** (1 << ell) - 1}


def suite_table(m_max, q_list) -> Iterator[dict]:
    if m_max > 20:
        raise ValueError(f"the tabulated values stop at m = 20, got m_max={m_max}")
    for q in q_list:
        for m in range(1, m_max + 1):
            got, want = max_order(m, q), table_reference(m, q)
            yield {"check": "table", "m": m, "q": q, "formula": got, "table": want,
                   "ok": got == want}


def run_suite(name: str, m_max: int, q_list, mode=SearchMode.EXHAUSTIVE,
              threads: int = 1, seed: int = 0) -> Iterator[dict]:
    """Dispatch by suite name.

    ``m_max`` bounds m for theorem2, bounds and table, the exponents a, b for
    gcd, ell for cyclotomic, and the tuple sum for babylonians.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    q_list = [FieldSize.of(q).q for q in q_list]
    if name == "theorem2":
        return suite_theorem2(m_max, q_list, mode, threads)
    if name == "bounds":
        return suite_bounds(m_max, q_list)
    if name == "gcd":
        return suite_gcd(m_max, q_list)
    if name == "babylonians":
        return suite_babylonians(m_max, q_list, seed=seed)
    if name == "cyclotomic":
        return suite_cyclotomic(m_max, q_list)
    if name == "table":
        if m_max > 20:
            raise ValueError(f"the tabulated values stop at m = 20, got m_max={m_max}")
        return suite_table(m_max, q_list)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
