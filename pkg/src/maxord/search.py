"""Maximisation of L over (m', signed partition of m - m').

L(m, q, m', p) = 2**ceil(log2(2 m')) * lcm(q**d - sign for (d, sign) in p).

Two modes:

* ``exhaustive`` walks every m' in [0, m] and every signed partition of
  m - m'. No pruning of any kind.
* ``pruned`` only visits partitions with pairwise distinct signed parts,
  restricts m' to 0 (q > 2) or to [0, 3] (q = 2), and skips any prefix whose
  optimistic completion cannot beat the incumbent.

The witness for the maximum is the one with the smallest m', then the
lexicographically smallest canonical partition.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .arith import FieldSize, QLike, ceil_pow2_factor, exact_div, lcm_signed_list
from .formula import max_order
from .partition import (
    SignedPartition,
    enumerate_signed_partitions,
    leading_parts,
)


class SearchMode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    PRUNED = "pruned"


@dataclass(frozen=True)
class SearchWitness:
    m_prime: int
    partition: SignedPartition
    value: int

    def sort_key(self):
        return (-self.value, self.m_prime, self.partition.key())


@dataclass(frozen=True)
class SearchReport:
    m: int
    q: FieldSize
    mode: SearchMode
    best: SearchWitness
    candidates_evaluated: int
    agrees_with_formula: bool


class TheoremDisagreement(AssertionError):
    """Search maximum and closed form disagree for some (m, q)."""

    def __init__(self, report: SearchReport, formula_value: int):
        self.report = report
        self.formula_value = formula_value
        b = report.best
        super().__init__(
            f"m={report.m} q={report.q.q} mode={report.mode.value}: search found "
            f"{b.value} at m'={b.m_prime} partition={b.partition}, "
            f"closed form gives {formula_value}"
        )


def l_value(m: int, q: QLike, m_prime: int, p: Union[SignedPartition, Iterable]) -> int:
    """Evaluate L for one candidate. Parts need not be canonical."""
    parts = list(p.parts if isinstance(p, SignedPartition) else p)
    if not 0 <= m_prime <= m:
        raise ValueError(f"need 0 <= m_prime <= m, got m_prime={m_prime}, m={m}")
    total = sum(d for d, _ in parts)
    if total != m - m_prime:
        raise ValueError(f"partition sums to {total}, expected m - m_prime = {m - m_prime}")
    return ceil_pow2_factor(m_prime) * lcm_signed_list(q, parts)


def _pruned_m_primes(m: int, q: int) -> range:
    # at the maximum, m' = 0 for q > 2 and m' <= 3 for q = 2
    return range(0, 1) if q > 2 else range(0, min(3, m) + 1)


# A work unit is one m' value plus the leading part of the partition (None
# for the empty partition); it returns (best witness or None, count).
def _units(m: int, q: int, mode: SearchMode):
    if mode is SearchMode.EXHAUSTIVE:
        m_primes = range(0, m + 1)
    else:
        m_primes = _pruned_m_primes(m, q)
    for mp in m_primes:
        n = m - mp
        if n == 0:
            yield mp, None
        else:
            for first in leading_parts(n):
                yield mp, first


def _scan_exhaustive(m: int, q: int, m_prime: int, first):
    best: Optional[SearchWitness] = None
    count = 0
    for p in enumerate_signed_partitions(m - m_prime, first):
        count += 1
        v = l_value(m, q, m_prime, p)
        if best is None or v > best.value:
            best = SearchWitness(m_prime, p, v)
    return best, count


def _scan_pruned(m: int, q: int, m_prime: int, first, incumbent: int):
    """Branch and bound over distinct-part partitions of m - m_prime.

    A prefix is cut when pow2 * lcm(prefix) * (q**(b+1) - 1)/(q - 1) cannot
    exceed ``incumbent``, b being the budget still to be filled. Ties never
    replace the incumbent, so cut ties are harmless for the witness rule.
    """
    n = m - m_prime
    pow2 = ceil_pow2_factor(m_prime)
    order = leading_parts(n)
    factor = [q**d - s for d, s in order]
    optimistic = [1] + [exact_div(q ** (b + 1) - 1, q - 1) for b in range(1, n + 1)]

    best_value = incumbent
    best_parts: Optional[tuple] = None
    count = 0
    prefix: list = []

    def rec(remaining: int, start: int, acc: int):
        nonlocal best_value, best_parts, count
        if remaining == 0:
            count += 1
            v = pow2 * acc
            if v > best_value:
                best_value, best_parts = v, tuple(prefix)
            return
        if pow2 * acc * optimistic[remaining] <= best_value:
            return
        for idx in range(start, len(order)):
            d = order[idx][0]
            if d > remaining:
                continue
            prefix.append(order[idx])
            rec(remaining - d, idx + 1, math.lcm(acc, factor[idx]))
            prefix.pop()

    if first is None:
        rec(n, 0, 1)
    else:
        idx = order.index(first)
        prefix.append(first)
        rec(n - first[0], idx + 1, factor[idx])
    if best_parts is None:
        return None, count
    return SearchWitness(m_prime, SignedPartition(best_parts), best_value), count


def _run_unit(args):
    mode, m, q, m_prime, first, incumbent = args
    if mode is SearchMode.EXHAUSTIVE:
        return _scan_exhaustive(m, q, m_prime, first)
    return _scan_pruned(m, q, m_prime, first, incumbent)


def _merge(results) -> tuple[SearchWitness, int]:
    found = [w for w, _ in results if w is not None]
    best = min(found, key=SearchWitness.sort_key)
    return best, sum(c for _, c in results)


def maximize(
    m: int,
    q: QLike,
    mode: Union[SearchMode, str] = SearchMode.EXHAUSTIVE,
    threads: int = 1,
) -> SearchReport:
    """Maximise L over all admissible (m', partition) pairs.

    With ``threads > 1`` the work units are farmed out to worker processes
    and merged with the same tie-break, so the witness does not depend on the
    worker count. In pruned mode each worker prunes against its own
    incumbent, so ``candidates_evaluated`` may vary with ``threads``.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be an int >= 1, got {m!r}")
    fq = FieldSize.of(q)
    mode = SearchMode(mode)
    units = list(_units(m, fq.q, mode))

    if threads > 1 and len(units) > 1:
        jobs = [(mode, m, fq.q, mp, first, 0) for mp, first in units]
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            results = list(pool.map(_run_unit, jobs, chunksize=4))
    else:
        results = []
        incumbent = 0
        for mp, first in units:
            w, c = _run_unit((mode, m, fq.q, mp, first, incumbent))
            results.append((w, c))
            if w is not None:
                incumbent = max(incumbent, w.value)

    best, count = _merge(results)
    return SearchReport(m, fq, mode, best, count, best.value == max_order(m, fq))


def verify_theorem2(
    m_max: int,
    q_set: Sequence[QLike],
    mode: Union[SearchMode, str] = SearchMode.EXHAUSTIVE,
    threads: int = 1,
    strict: bool = True,
) -> list[SearchReport]:
    """Run ``maximize`` for every m <= m_max and q in q_set.

    With ``strict`` the first disagreement raises TheoremDisagreement.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    reports = []
    for q in q_set:
        for m in range(1, m_max + 1):
            rep = maximize(m, q, mode, threads)
            if strict and not rep.agrees_with_formula:
                raise TheoremDisagreement(rep, max_order(m, q))
            reports.append(rep)
    return reports


def default_threads() -> int:
    env = os.environ.get("MAXORD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
