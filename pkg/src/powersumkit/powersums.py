"""Every power-sum formula in scope, each implemented independently so the
concordance sweep is a real cross-check rather than a tautology.

S_k(n) denotes 1^k + 2^k + ... + n^k, with 0^0 = 1 so that S_0(n) = n.
Rational-returning forms assert integrality at the boundary; a non-integer
result raises ConsistencyError rather than being rounded.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List

from .combinatorics import (
    Parity,
    bernoulli_polynomial,
    central_factorial_first,
    central_factorial_second,
    legendre_stirling_first,
    legendre_stirling_second,
    r_stirling_first,
    r_stirling_second,
    stirling_first_unsigned,
    stirling_second,
)

__all__ = [
    "ConsistencyError",
    "Method",
    "compute",
    "s_brute",
    "s_lang_original",
    "s_lang_refined",
    "s_newton_recurrence",
    "s_binomial_recurrence",
    "s_range",
    "s_even_powers",
    "s_odd_even_powers",
    "s_odd_even_powers_poly",
    "triangular_sum_ls",
    "triangular_sum_binomial",
    "ones_identity_residual",
]


class ConsistencyError(ArithmeticError):
    """An internal identity that must hold exactly failed to."""


class Method(str, Enum):
    BRUTE = "brute"
    LANG_ORIGINAL = "lang-original"
    LANG_REFINED = "lang-refined"
    NEWTON_RECURRENCE = "newton-recurrence"
    BINOMIAL_RECURRENCE = "binomial-recurrence"
    RANGE_R_STIRLING = "range-r-stirling"
    EVEN_CENTRAL = "even-central"
    ODD_CENTRAL = "odd-central"
    ODD_BERNOULLI_POLY = "odd-bernoulli-poly"
    TRIANGULAR_LS = "triangular-ls"
    TRIANGULAR_BINOMIAL = "triangular-binomial"


def _check_query(k: int, n: int, r: int = 1) -> None:
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 1 or r > n:
        raise ValueError("need 1 <= r <= n")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} produced non-integer value {x}")
    return x.numerator


def s_brute(k: int, n: int, r: int = 1) -> int:
    """sum_{i=r}^{n} i^k by direct summation (the oracle)."""
    _check_query(k, n, r)
    return sum(i ** k for i in range(r, n + 1))


def s_lang_original(k: int, n: int) -> int:
    """S_k(n) = sum_m (-1)^m (n-m) [n+1, n+1-m] {n+k-m, n},
    m running to min(k, n-1)."""
    _check_query(k, n)
    total = 0
    for m in range(0, min(k, n - 1) + 1):
        term = (n - m) * stirling_first_unsigned(n + 1, n + 1 - m) \
            * stirling_second(n + k - m, n)
        total += -term if m % 2 else term
    return total


def s_lang_refined(k: int, n: int) -> int:
    """S_k(n) = n*delta_{k,0} + sum_{m=1}^{k} (-1)^(m-1) m
    [n+1, n+1-m] {n+k-m, n}; terms with m > n vanish by convention."""
    _check_query(k, n)
    total = n if k == 0 else 0
    for m in range(1, k + 1):
        term = m * stirling_first_unsigned(n + 1, n + 1 - m) \
            * stirling_second(n + k - m, n)
        total += term if (m - 1) % 2 == 0 else -term
    return total


@lru_cache(maxsize=None)
def _sigma_naturals(n: int, m: int) -> int:
    # sigma_m(1..n) through the first-kind Stirling triangle
    return stirling_first_unsigned(n + 1, n + 1 - m)


@lru_cache(maxsize=None)
def s_newton_recurrence(k: int, n: int) -> int:
    """S_m(n) = (-1)^(m-1) m sigma_m(n) - sum_{j=1}^{m-1} (-1)^j
    sigma_j(n) S_{m-j}(n), recursing on m."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    sign = 1 if (k - 1) % 2 == 0 else -1
    total = sign * k * _sigma_naturals(n, k)
    for j in range(1, k):
        term = _sigma_naturals(n, j) * s_newton_recurrence(k - j, n)
        total += term if j % 2 else -term
    return total


@lru_cache(maxsize=None)
def s_binomial_recurrence(k: int, n: int) -> int:
    """S_m(n) = m! C(n+m, m+1) - sum_{j=1}^{m-1} sigma_j(m-1) S_{m-j}(n).

    Note the inner sigma is over 1..m-1, not 1..n.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    total = factorial(k) * comb(n + k, k + 1)
    for j in range(1, k):
        total -= _sigma_naturals(k - 1, j) * s_binomial_recurrence(k - j, n)
    return total


def s_range(k: int, n: int, r: int) -> int:
    """r^k + (r+1)^k + ... + n^k via the r-Stirling numbers."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n, r)
    total = 0
    for m in range(1, k + 1):
        term = m * r_stirling_first(n + 1, n + 1 - m, r) \
            * r_stirling_second(n + k - m, n, r)
        total += term if (m - 1) % 2 == 0 else -term
    return total


def s_even_powers(k: int, n: int) -> int:
    """1^(2k) + 2^(2k) + ... + n^(2k) via even-index central factorial
    numbers: -sum_m m u(n+1, n+1-m) U(n+k-m, n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    total = 0
    for m in range(1, k + 1):
        total += m * central_factorial_first(n + 1, n + 1 - m, Parity.EVEN) \
            * central_factorial_second(n + k - m, n, Parity.EVEN)
    return -total


def s_odd_even_powers(k: int, n: int) -> int:
    """1^(2k) + 3^(2k) + ... + (2n-1)^(2k) via odd-index central factorial
    numbers: -sum_m m v(n, n-m) V(n-1+k-m, n-1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    total = 0
    for m in range(1, k + 1):
        total += m * central_factorial_first(n, n - m, Parity.ODD) \
            * central_factorial_second(n - 1 + k - m, n - 1, Parity.ODD)
    return -total


def s_odd_even_powers_poly(k: int, n: int) -> int:
    """Same odd-base power sum as a polynomial in n:
    (2^(2k)/(2k+1)) sum_j C(2k+1, 2j+1) B_{2k-2j}(1/2) n^(2j+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    half = Fraction(1, 2)
    total = Fraction(0)
    for j in range(0, k + 1):
        total += comb(2 * k + 1, 2 * j + 1) \
            * bernoulli_polynomial(2 * k - 2 * j)(half) * n ** (2 * j + 1)
    total *= Fraction(2 ** (2 * k), 2 * k + 1)
    return _as_int(total, "odd-power Bernoulli polynomial form")


def triangular_sum_ls(k: int, n: int) -> int:
    """T_1^k + ... + T_n^k via Legendre-Stirling numbers:
    -(1/2^k) sum_m m Ps_{n+1}^(n+1-m) PS_{n+k-m}^(n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    total = 0
    for m in range(1, k + 1):
        total += m * legendre_stirling_first(n + 1, n + 1 - m) \
            * legendre_stirling_second(n + k - m, n)
    q, rem = divmod(-total, 2 ** k)
    if rem:
        raise ConsistencyError("Legendre-Stirling triangular sum not divisible by 2^k")
    return q


def triangular_sum_binomial(k: int, n: int) -> int:
    """T_1^k + ... + T_n^k as (1/2^k) sum_j C(k, j) S_{k+j}(n), with the
    Bernoulli-polynomial form of S_{k+j}(n) computed alongside and the two
    asserted equal."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    via_sums = Fraction(0)
    via_bernoulli = Fraction(0)
    for j in range(0, k + 1):
        c = comb(k, j)
        via_sums += c * s_brute(k + j, n)
        bp = bernoulli_polynomial(k + j + 1)
        via_bernoulli += c * (bp(n + 1) - bp(1)) / (k + j + 1)
    if via_sums != via_bernoulli:
        raise ConsistencyError(
            "binomial and Bernoulli forms of the triangular sum disagree")
    return _as_int(via_sums / 2 ** k, "triangular binomial sum")


def ones_identity_residual(k: int, n: int) -> int:
    """sum_{m=1}^{k} (-1)^(m-1) m C(n,m) C(n+k-m-1, k-m) minus n; zero."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_query(k, n)
    total = 0
    for m in range(1, k + 1):
        term = m * comb(n, m) * comb(n + k - m - 1, k - m)
        total += term if (m - 1) % 2 == 0 else -term
    return total - n


# -- dispatch ---------------------------------------------------------------

def compute(method: Method, k: int, n: int, r: int = 1):
    """Evaluate one method.  Methods other than brute and range-r-stirling
    require r == 1."""
    if method not in (Method.BRUTE, Method.RANGE_R_STIRLING) and r != 1:
        raise ValueError(f"method {method.value} does not support r > 1")
    if method is Method.BRUTE:
        return s_brute(k, n, r)
    if method is Method.LANG_ORIGINAL:
        return s_lang_original(k, n)
    if method is Method.LANG_REFINED:
        return s_lang_refined(k, n)
    if method is Method.NEWTON_RECURRENCE:
        return s_newton_recurrence(k, n)
    if method is Method.BINOMIAL_RECURRENCE:
        return s_binomial_recurrence(k, n)
    if method is Method.RANGE_R_STIRLING:
        return s_range(k, n, r)
    if method is Method.EVEN_CENTRAL:
        return s_even_powers(k, n)
    if method is Method.ODD_CENTRAL:
        return s_odd_even_powers(k, n)
    if method is Method.ODD_BERNOULLI_POLY:
        return s_odd_even_powers_poly(k, n)
    if method is Method.TRIANGULAR_LS:
        return triangular_sum_ls(k, n)
    if method is Method.TRIANGULAR_BINOMIAL:
        return triangular_sum_binomial(k, n)
    raise ValueError(f"unknown method {method!r}")


def plain_sum_methods(k: int, r: int) -> List[Method]:
    """Methods that compute r^k + ... + n^k and can be cross-checked."""
    if r > 1:
        methods = [Method.BRUTE]
        if k >= 1:
            methods.append(Method.RANGE_R_STIRLING)
        return methods
    methods = [Method.BRUTE, Method.LANG_ORIGINAL, Method.LANG_REFINED]
    if k >= 1:
        methods += [Method.NEWTON_RECURRENCE, Method.BINOMIAL_RECURRENCE,
                    Method.RANGE_R_STIRLING]
    return methods


def concordance(k: int, n: int, r: int = 1) -> Dict[Method, int]:
    """Every applicable plain power-sum method at (k, n, r)."""
    return {m: compute(m, k, n, r) for m in plain_sum_methods(k, r)}
