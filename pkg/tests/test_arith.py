import math

import pytest
from hypothesis import given, strategies as st

from maxord.arith import (
    FieldSize,
    ceil_pow2_factor,
    cyclotomic_product,
    exact_div,
    lcm_signed_list,
    q_power_pm,
    structured_gcd,
    two_adic_valuation,
)

QS = [2, 4, 8]
signs = st.sampled_from([1, -1])


def euclid(a, b):
    while b:
        a, b = b, a % b
    return a


def test_field_size():
    assert FieldSize.of(8) == FieldSize(8, 3)
    assert FieldSize.of(2).f == 1
    for bad in (0, 1, 3, 6, 12, -4):
        with pytest.raises(ValueError):
            FieldSize.of(bad)
    with pytest.raises(ValueError):
        FieldSize(8, 2)
    with pytest.raises(TypeError):
        FieldSize.of(2.0)


@pytest.mark.parametrize("q, d, sign, expected", [(2, 4, 1, 15), (4, 2, -1, 17), (2, 8, -1, 257)])
def test_q_power_pm(q, d, sign, expected):
    assert q_power_pm(q, d, sign) == expected


def test_q_power_pm_rejects():
    with pytest.raises(ValueError):
        q_power_pm(2, 0, 1)
    with pytest.raises(ValueError):
        q_power_pm(2, 3, 0)


@pytest.mark.parametrize(
    "args, expected",
    [((2, 4, 1, 6, 1), 3), ((2, 1, -1, 2, -1), 1), ((4, 1, -1, 3, 1), 1)],
)
def test_structured_gcd_examples(args, expected):
    assert structured_gcd(*args) == expected
    q, a, ea, b, eb = args
    assert euclid(q**a - ea, q**b - eb) == expected


def test_structured_gcd_rejects_zero():
    with pytest.raises(ValueError):
        structured_gcd(2, 0, 1, 3, 1)
    with pytest.raises(ValueError):
        structured_gcd(2, 3, 1, 0, -1)


@pytest.mark.parametrize("q", QS)
def test_structured_gcd_matches_euclid(q):
    for a in range(1, 13):
        for b in range(1, 13):
            for ea in (1, -1):
                for eb in (1, -1):
                    want = euclid(q**a - ea, q**b - eb)
                    assert structured_gcd(q, a, ea, b, eb) == want, (q, a, ea, b, eb)


@given(st.sampled_from([2, 4, 8, 16]), st.integers(1, 40), signs, st.integers(1, 40), signs)
def test_structured_gcd_symmetric(q, a, ea, b, eb):
    assert structured_gcd(q, a, ea, b, eb) == structured_gcd(q, b, eb, a, ea)


@given(st.integers(1, 10**30))
def test_two_adic_valuation(n):
    tv = two_adic_valuation(n)
    assert tv.odd_part % 2 == 1
    assert n == 2**tv.val * tv.odd_part


def test_two_adic_valuation_rejects_zero():
    with pytest.raises(ValueError):
        two_adic_valuation(0)


@pytest.mark.parametrize(
    "q, parts, expected",
    [(2, [], 1), (2, [(1, -1), (2, -1)], 15), (4, [(1, -1), (3, 1)], 315)],
)
def test_lcm_signed_list(q, parts, expected):
    assert lcm_signed_list(q, parts) == expected


@given(
    st.sampled_from(QS),
    st.lists(st.tuples(st.integers(1, 20), signs), min_size=1, max_size=6),
)
def test_lcm_divisibility(q, parts):
    L = lcm_signed_list(q, parts)
    vals = [q**d - s for d, s in parts]
    assert all(L % v == 0 for v in vals)
    assert math.prod(vals) % L == 0


@pytest.mark.parametrize("m_prime, expected", [(0, 1), (1, 2), (2, 4), (3, 8), (4, 8), (5, 16), (9, 32)])
def test_ceil_pow2_factor(m_prime, expected):
    assert ceil_pow2_factor(m_prime) == expected


def test_ceil_pow2_factor_against_log():
    for mp in range(1, 300):
        assert ceil_pow2_factor(mp) == 2 ** math.ceil(math.log2(2 * mp))
    for mp in range(4):
        assert ceil_pow2_factor(mp) == 2**mp


@pytest.mark.parametrize("q, ell, expected", [(2, 2, 15), (4, 1, 5), (2, 3, 255)])
def test_cyclotomic_product(q, ell, expected):
    assert cyclotomic_product(q, ell) == expected


@pytest.mark.parametrize("q", QS)
def test_cyclotomic_identity(q):
    for ell in range(1, 9):
        assert cyclotomic_product(q, ell) * (q - 1) == q ** (2**ell) - 1


def _ceil_log2_pow(b):
    return 1 << (b - 1).bit_length()


@pytest.mark.parametrize("q", [2, 4])
def test_divisibility_growth(q):
    for a in range(1, 9):
        for b in range(1, 9):
            bound = _ceil_log2_pow(b)
            ratio = exact_div(q ** (a * b) - 1, q**a - 1)
            assert ratio >= bound
            if b % 2:
                ratio = exact_div(q ** (a * b) + 1, q**a + 1)
            else:
                ratio = exact_div(q ** (a * b) - 1, q**a + 1)
            if (q, a, b) in {(2, 1, 3), (2, 1, 2)}:
                assert ratio < bound
            else:
                assert ratio >= bound


def test_exact_div():
    assert exact_div(63, 7) == 9
    with pytest.raises(ArithmeticError):
        exact_div(64, 7)
