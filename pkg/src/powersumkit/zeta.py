"""Exact zeta values at even arguments as rational multiples of pi^(2k),
plus the Bernoulli-number identities that fall out of the same machinery.

zeta(2k) values always come from the recursion in zeta_even_exact;
h_inverse_squares_check is a verification op only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinatorics import bernoulli_number, bernoulli_polynomial, legendre_stirling_first, legendre_stirling_second
from .exact import PiPower

__all__ = [
    "sigma_inverse_squares",
    "zeta_even_exact",
    "zeta_even_classical",
    "h_inverse_squares_check",
    "bernoulli_binomial_identity",
    "merca_ls_bernoulli_identity",
    "bernoulli_even_recursion",
]


def sigma_inverse_squares(k: int) -> PiPower:
    """sigma_k(1/1^2, 1/2^2, ...) = pi^(2k) / (2k+1)!."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return PiPower(Fraction(1, factorial(2 * k + 1)), k)


@lru_cache(maxsize=None)
def _zeta_coeff(k: int) -> Fraction:
    # zeta(2k) = (-1)^(k-1) k pi^(2k)/(2k+1)!
    #            + sum_{m=1}^{k-1} (-1)^(m-1) (2m pi^(2m)/(2m+1)!)
    #              (1 - 2^(2(m-k)+1)) zeta(2k-2m)
    # tracked as the rational coefficient of pi^(2k); the sum is empty at k=1
    head = Fraction(k, factorial(2 * k + 1))
    if (k - 1) % 2:
        head = -head
    total = head
    for m in range(1, k):
        factor = Fraction(2 * m, factorial(2 * m + 1)) \
            * (1 - Fraction(2, 4 ** (k - m)))
        term = factor * _zeta_coeff(k - m)
        total += term if (m - 1) % 2 == 0 else -term
    return total


def zeta_even_exact(k: int) -> PiPower:
    """zeta(2k) as an exact rational multiple of pi^(2k), by the memoized
    recursion built from the inverse-squares symmetric functions."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return PiPower(_zeta_coeff(k), k)


def zeta_even_classical(k: int) -> PiPower:
    """Independent oracle: zeta(2k) = (-1)^(k+1) B_{2k} 2^(2k-1)
    pi^(2k) / (2k)! from the Bernoulli closed form."""
    if k < 1:
        raise ValueError("k must be >= 1")
    coeff = bernoulli_number(2 * k) * Fraction(2 ** (2 * k - 1), factorial(2 * k))
    if (k + 1) % 2:
        coeff = -coeff
    return PiPower(coeff, k)


def h_inverse_squares_check(k: int) -> Fraction:
    """Residual (as a coefficient of pi^(2k)) of substituting
    sigma_m = pi^(2m)/(2m+1)! and h_m = ((2^(2m)-2)/2^(2m-1)) zeta(2m)
    into p_k = sum_m (-1)^(m-1) m sigma_m h_{k-m}, against
    p_k = zeta(2k).  Zero when the algebra is consistent."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def h_coeff(m: int) -> Fraction:
        # coefficient of pi^(2m) in h_m of the inverse squares
        if m == 0:
            return Fraction(1)
        return Fraction(2 ** (2 * m) - 2, 2 ** (2 * m - 1)) * _zeta_coeff(m)

    rhs = Fraction(0)
    for m in range(1, k + 1):
        term = m * Fraction(1, factorial(2 * m + 1)) * h_coeff(k - m)
        rhs += term if (m - 1) % 2 == 0 else -term
    return _zeta_coeff(k) - rhs


def bernoulli_binomial_identity(k: int) -> Fraction:
    """sum_j (-1)^j C(k,j) B_{k+j+1}/(k+j+1) minus
    1/((k+1) C(2k+2, k+1)); zero for all k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = Fraction(0)
    for j in range(0, k + 1):
        term = comb(k, j) * bernoulli_number(k + j + 1) / (k + j + 1)
        lhs += -term if j % 2 else term
    return lhs - Fraction(1, (k + 1) * comb(2 * k + 2, k + 1))


def merca_ls_bernoulli_identity(k: int, n: int) -> Fraction:
    """Residual of -sum_m m Ps_{n+1}^(n+1-m) PS_{n+k-m}^(n) =
    (-1)^k/((k+1) C(2k+2,k+1)) + sum_j C(k,j) B_{k+j+1}(n+1)/(k+j+1)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    lhs = 0
    for m in range(1, k + 1):
        lhs -= m * legendre_stirling_first(n + 1, n + 1 - m) \
            * legendre_stirling_second(n + k - m, n)
    rhs = Fraction((-1) ** k, (k + 1) * comb(2 * k + 2, k + 1))
    for j in range(0, k + 1):
        rhs += comb(k, j) * bernoulli_polynomial(k + j + 1)(n + 1) / (k + j + 1)
    return lhs - rhs


@lru_cache(maxsize=None)
def bernoulli_even_recursion(k: int) -> Fraction:
    """B_{2k} computed solely from
    B_{2k} = (2/(2k+1)) sum_{j=1}^{k} j C(2k+1, 2j+1)
             (1/2^(2k-1) - 1/2^(2j)) B_{2k-2j},
    with base value B_0 = 1."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def b_even(i: int) -> Fraction:
        return Fraction(1) if i == 0 else bernoulli_even_recursion(i)

    total = Fraction(0)
    for j in range(1, k + 1):
        total += j * comb(2 * k + 1, 2 * j + 1) \
            * (Fraction(1, 2 ** (2 * k - 1)) - Fraction(1, 2 ** (2 * j))) \
            * b_even(k - j)
    return Fraction(2, 2 * k + 1) * total
