"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line. Run standalone with
``python tests/test_acceptance.py`` or through pytest.
"""

import math
import sys
import time

import pytest

from maxord.arith import cyclotomic_product, is_power_of_two, q_power_pm, structured_gcd, val2
from maxord.formula import AUT_EXCEPTIONS, aut_max_order, bounds, max_order, table_reference
from maxord.groupcheck import SplitMix64, sample_max_order
from maxord.partition import count_signed_partitions, enumerate_signed_partitions
from maxord.search import maximize
from maxord.verify import babylonian_sides, random_distinct_valuation_tuple

_out = None


@pytest.fixture(autouse=True)
def _reporter(capsys):
    global _out
    _out = capsys
    yield
    _out = None


def report(num, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] AC{num:<2} {title}" + (f" -- {detail}" if detail else "")
    if _out is None:
        print(line)
    else:
        with _out.disabled():
            print("\n" + line)
    assert ok, line


def euclid(a, b):
    while b:
        a, b = b, a % b
    return a


def test_ac01_table_reproduction():
    t0 = time.perf_counter()
    bad = [(m, q) for m in range(1, 21) for q in (2, 4, 8, 16, 32)
           if max_order(m, q) != table_reference(m, q)]
    dt = time.perf_counter() - t0
    report(1, "closed form matches tabulated values (100 cells)", not bad and dt < 1.0,
           f"{100 - len(bad)}/100 equal, {dt:.3f}s")


def test_ac02_theorem2_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    for q in (2, 4, 8):
        for m in range(1, 21):
            if maximize(m, q, "exhaustive").best.value != max_order(m, q):
                bad.append((m, q, "exhaustive"))
    for m in range(21, 25):
        pruned = maximize(m, 2, "pruned").best.value
        if pruned != max_order(m, 2):
            bad.append((m, 2, "pruned"))
        if m <= 22 and maximize(m, 2, "exhaustive").best.value != pruned:
            bad.append((m, 2, "cross-check"))
    dt = time.perf_counter() - t0
    report(2, "search maximum equals closed form", not bad and dt < 600,
           f"{len(bad)} disagreements {bad[:3]}, {dt:.1f}s")


def test_ac03_bounds():
    bad = []
    for q in (2, 4, 8, 16, 32):
        for m in range(1, 65):
            M, b = max_order(m, q), bounds(m, q)
            ok = b.lower < M <= b.upper
            ok &= (M == b.upper) == is_power_of_two(m + 1)
            if b.strong_lower is not None:
                ok &= M * (q * q - 1) > q ** (m + 2)
            if (m != 2 or q == 2) != (b.strong_lower is not None):
                ok = False
            if not ok:
                bad.append((m, q))
    report(3, "bounds on M_m(q), m <= 64", not bad, f"{320 - len(bad)}/320 hold")


def test_ac04_gcd_closed_forms():
    cases = bad = 0
    for q in (2, 4, 8):
        for a in range(1, 13):
            for b in range(1, 13):
                for ea in (1, -1):
                    for eb in (1, -1):
                        cases += 1
                        if structured_gcd(q, a, ea, b, eb) != euclid(q_power_pm(q, a, ea), q_power_pm(q, b, eb)):
                            bad += 1
    report(4, "structured gcd vs Euclid", cases == 1728 and bad == 0, f"{cases - bad}/{cases} agree")


def test_ac05_distinct_valuation_product_inequality():
    rng = SplitMix64(20240531)
    violations = 0
    for _ in range(1000):
        ds = random_distinct_valuation_tuple(rng, 40)
        assert sum(ds) <= 40 and len({val2(d) for d in ds}) == len(ds)
        for q in (2, 4):
            lhs, rhs = babylonian_sides(ds, q)
            violations += lhs > rhs
    report(5, "product inequality over 1000 tuples, q in {2,4}", violations == 0,
           f"{violations} violations")


def test_ac06_cyclotomic_identity():
    bad = [(q, ell) for q in (2, 4, 8) for ell in range(1, 9)
           if cyclotomic_product(q, ell) * (q - 1) != q ** (2**ell) - 1]
    report(6, "cyclotomic product identity", not bad, f"{24 - len(bad)}/24 exact")


def test_ac07_pruning_soundness():
    bad = [(m, q) for q in (2, 4) for m in range(1, 17)
           if maximize(m, q, "pruned").best.value != maximize(m, q, "exhaustive").best.value]
    report(7, "pruned and exhaustive maxima agree, m <= 16", not bad, f"{32 - len(bad)}/32 agree")


def test_ac08_group_sampling_attainment():
    expected = {(1, 2): 3, (1, 4): 5, (2, 2): 6, (3, 2): 15}
    t0 = time.perf_counter()
    reps = {mq: sample_max_order(*mq, 10_000, seed=2024) for mq in expected}
    dt = time.perf_counter() - t0
    ok = all(reps[mq].max_observed == want == max_order(*mq) and not reps[mq].violated
             for mq, want in expected.items())
    ok &= all(sample_max_order(*mq, 10_000, seed=2024) == reps[mq] for mq in expected)
    got = {mq: r.max_observed for mq, r in reps.items()}
    report(8, "sampled maximum orders attain M_m(q)", ok and dt < 30, f"{got}, {dt:.1f}s")


def test_ac09_aut_values():
    ok = (aut_max_order(1, 4), aut_max_order(2, 2), aut_max_order(2, 4)) == (6, 10, 20)
    rng = SplitMix64(9)
    pairs = set()
    while len(pairs) < 200:
        m, q = 1 + rng.below(64), 2 ** (1 + rng.below(5))
        if (m, q) not in AUT_EXCEPTIONS:
            pairs.add((m, q))
    bad = [p for p in pairs if aut_max_order(*p) != max_order(*p)]
    report(9, "Aut maximum orders", ok and not bad, f"exceptions ok={ok}, {200 - len(bad)}/200 generic")


def _gf_counts(n_max):
    sigma = lambda k: sum(d for d in range(1, k + 1) if k % d == 0)
    c = [1]
    for n in range(1, n_max + 1):
        c.append(sum(2 * sigma(k) * c[n - k] for k in range(1, n + 1)) // n)
    return c


def test_ac10_partition_counts():
    oracle = _gf_counts(18)
    bad = [n for n in range(19)
           if not (count_signed_partitions(n) == oracle[n] == sum(1 for _ in enumerate_signed_partitions(n)))]
    report(10, "signed partition counts vs generating function", not bad, f"{19 - len(bad)}/19 match")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
