"""Exact combinatorial coefficients for the kernel formulas.

Everything here is big-integer arithmetic; no floats.  The binomial follows
a guarded convention: equal upper and lower index gives 1 even when both
are negative.  That convention is what makes the boundary reduction of the
even/odd coefficient families to the polyanalytic kernel literally true,
and every consequence is cross-validated against the differentiation
oracle in the kernel suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParams


def factorial(k: int) -> int:
    if k < 0:
        raise InvalidParams(f"factorial of negative {k}")
    return math.factorial(k)


def binomial_guarded(p: int, q: int) -> int:
    """Binomial with degenerate conventions: C(p,p)=1 always, 0 out of range."""
    if p == q:
        return 1
    if q < 0 or p < 0:
        return 0
    if q > p:
        return 0
    return math.comb(p, q)


def pochhammer_neg(alpha: int, beta: int) -> int:
    """Rising factorial (-alpha)_beta = (-alpha)(-alpha+1)...(-alpha+beta-1).

    Zero when beta > alpha (the product crosses zero), else
    (-1)^beta * alpha!/(alpha-beta)!.
    """
    if alpha < 0 or beta < 0:
        raise InvalidParams("pochhammer_neg needs nonnegative arguments")
    if beta > alpha:
        return 0
    value = factorial(alpha) // factorial(alpha - beta)
    return -value if beta & 1 else value


def h_of(n: int) -> int:
    """(n-1)/2 for odd dimension n."""
    if n < 1 or n % 2 == 0:
        raise InvalidParams(f"dimension {n} must be odd and >= 1")
    return (n - 1) // 2


def gamma_n(n: int) -> int:
    """4^h h! (-h)_h for h=(n-1)/2; the constant in the Fueter-Sce kernel."""
    if n < 3:
        raise InvalidParams("gamma_n needs odd n >= 3")
    h = h_of(n)
    return 4**h * factorial(h) * pochhammer_neg(h, h)


def gamma_m(h_n: int, m: int) -> int:
    """4^m m! (-h_n)_m, the Laplacian-power kernel constant."""
    if h_n < 0 or m < 0:
        raise InvalidParams("gamma_m needs nonnegative h_n, m")
    return 4**m * factorial(m) * pochhammer_neg(h_n, m)


def sigma_nm(h_n: int, m: int) -> int:
    """2^(2m-1) (m-1)! (-h_n)_m, the harmonic kernel constant; 1 <= m <= h_n."""
    if not 1 <= m <= h_n:
        raise InvalidParams(f"sigma_nm needs 1 <= m <= h_n, got m={m}, h_n={h_n}")
    return 2 ** (2 * m - 1) * factorial(m - 1) * pochhammer_neg(h_n, m)


# -- coefficient families ------------------------------------------------
#
# a1/b1 pair with odd Dirac powers beta = 2k+1, a2/b2 with even beta = 2k;
# the bold families A1/B1/A2/B2 play the same roles for the conjugate
# Dirac operator.


def coeff_a1(j: int, k1: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j + 1)
        * factorial(m + k1 + 1 + j)
        * factorial(k1 - j - 1)
        * binomial_guarded(k1 + j, 2 * j + 1)
        * binomial_guarded(h_n - m - k1 - j - 2, h_n - m - 2 * k1 - 1)
    )


def coeff_b1(j: int, k1: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j)
        * factorial(k1 - j)
        * factorial(m + k1 + j)
        * binomial_guarded(h_n - m - k1 - j - 1, h_n - m - 2 * k1 - 1)
        * binomial_guarded(k1 + j, 2 * j)
    )


def coeff_a2(j: int, k2: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j)
        * factorial(m + k2 + j)
        * factorial(k2 - j - 1)
        * binomial_guarded(k2 + j - 1, 2 * j)
        * binomial_guarded(h_n - m - k2 - 1 - j, h_n - m - 2 * k2)
    )


def coeff_b2(j: int, k2: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j + 1)
        * factorial(k2 - j - 1)
        * factorial(m + k2 + j)
        * binomial_guarded(h_n - m - k2 - 1 - j, h_n - m - 2 * k2)
        * binomial_guarded(k2 + j, 2 * j + 1)
    )


def coeff_A1(j: int, k1: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j + 1)
        * factorial(m + k1 + 1 + j)
        * factorial(k1 - j)
        * binomial_guarded(k1 + j + 1, 2 * j + 1)
        * binomial_guarded(h_n - m - k1 - j - 2, h_n - m - 2 * k1 - 2)
    )


def coeff_B1(j: int, k1: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j)
        * factorial(k1 - j + 1)
        * factorial(m + k1 + j)
        * binomial_guarded(h_n - m - k1 - j - 1, h_n - m - 2 * k1 - 2)
        * binomial_guarded(k1 + j, 2 * j)
    )


def coeff_A2(j: int, k2: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j)
        * factorial(m + k2 + j)
        * factorial(k2 - j)
        * binomial_guarded(k2 + j, 2 * j)
        * binomial_guarded(h_n - m - k2 - 1 - j, h_n - m - 2 * k2 - 1)
    )


def coeff_B2(j: int, k2: int, m: int, h_n: int) -> int:
    return (
        2 ** (2 * j + 1)
        * factorial(k2 - j)
        * factorial(m + k2 + j)
        * binomial_guarded(h_n - m - k2 - 1 - j, h_n - m - 2 * k2 - 1)
        * binomial_guarded(k2 + j, 2 * j + 1)
    )


def sigma_gamma_link(h_n: int, m: int) -> bool:
    """-2 (h_n - m) gamma_m equals sigma at m+1, for 0 <= m < h_n."""
    if not 0 <= m < h_n:
        raise InvalidParams("link needs 0 <= m < h_n")
    return -2 * (h_n - m) * gamma_m(h_n, m) == sigma_nm(h_n, m + 1)


# -- identity checkers ----------------------------------------------------


@dataclass(frozen=True)
class IdentityCase:
    identity: str
    h_n: int
    m: int
    k: int
    j: int


def check_appendix_identity(identity: str, h_n: int, m: int, k: int, j: int = 0) -> bool:
    """Exact LHS-RHS evaluation of one coefficient identity; True iff zero.

    `k` is k2 for the lowercase identities and k1 for the uppercase ones.
    Parameters must be admissible (see `appendix_cases` for ranges).
    """
    if identity == "c1":
        lhs = 2 * (m + 2 * k) * coeff_b2(k - 1, k, m, h_n)
        rhs = 2 * coeff_a1(k - 1, k, m, h_n)
    elif identity == "c2":
        if not 0 <= j <= k - 2:
            raise InvalidParams("c2 needs 0 <= j <= k2-2")
        lhs = (-2 * j - 2) * coeff_a2(j + 1, k, m, h_n) + 2 * (m + k + j + 1) * coeff_b2(
            j, k, m, h_n
        )
        rhs = 2 * coeff_a1(j, k, m, h_n)
    elif identity == "c3":
        lhs = 2 * coeff_a2(0, k, m, h_n) * (h_n - m - k) - coeff_b2(0, k, m, h_n)
        rhs = 2 * coeff_b1(0, k, m, h_n)
    elif identity == "c4":
        if not 1 <= j <= k - 1:
            raise InvalidParams("c4 needs 1 <= j <= k2-1")
        lhs = (
            2 * coeff_a2(j, k, m, h_n) * (h_n - m - j - k)
            + 4 * (m + k + j) * coeff_b2(j - 1, k, m, h_n)
            - (2 * j + 1) * coeff_b2(j, k, m, h_n)
        )
        rhs = 2 * coeff_b1(j, k, m, h_n)
    elif identity == "c5":
        lhs = 4 * (m + 2 * k) * coeff_b2(k - 1, k, m, h_n)
        rhs = 2 * coeff_b1(k, k, m, h_n)
    elif identity == "C1":
        if not 0 <= j <= k:
            raise InvalidParams("C1 needs 0 <= j <= k1")
        lhs = -(2 * j + 1) * coeff_a1(j, k + 1, m, h_n) + 2 * (m + k + j + 2) * coeff_b1(
            j, k + 1, m, h_n
        )
        rhs = 2 * coeff_a2(j, k + 2, m, h_n)
    elif identity == "C2":
        lhs = 2 * (m + 2 * k + 3) * coeff_b1(k + 1, k + 1, m, h_n)
        rhs = 2 * coeff_a2(k + 1, k + 2, m, h_n)
    elif identity == "C3":
        if not 0 <= j <= k:
            raise InvalidParams("C3 needs 0 <= j <= k1")
        lhs = (
            2 * (h_n - m - k - 2 - j) * coeff_a1(j, k + 1, m, h_n)
            + 4 * (m + k + j + 2) * coeff_b1(j, k + 1, m, h_n)
            - 2 * (j + 1) * coeff_b1(j + 1, k + 1, m, h_n)
        )
        rhs = 2 * coeff_b2(j, k + 2, m, h_n)
    elif identity == "C4":
        lhs = 4 * (m + 2 * k + 3) * coeff_b1(k + 1, k + 1, m, h_n)
        rhs = 2 * coeff_b2(k + 1, k + 2, m, h_n)
    else:
        raise InvalidParams(f"unknown identity {identity!r}")
    return lhs == rhs


LOWER_IDENTITIES = ("c1", "c2", "c3", "c4", "c5")
UPPER_IDENTITIES = ("C1", "C2", "C3", "C4")


def appendix_cases(hn_max: int):
    """All admissible parameter combinations for the nine identities.

    The lowercase identities arise when one more Dirac operator is applied
    at even power 2*k2, so they need h_n >= m + 2*k2; the uppercase ones
    step from odd power 2*k1+3 to 2*k1+4 and need h_n >= m + 2*k1 + 3.
    """
    for h_n in range(1, hn_max + 1):
        for ident in LOWER_IDENTITIES:
            for k2 in range(1, h_n // 2 + 1):
                for m in range(0, h_n - 2 * k2 + 1):
                    if ident == "c2":
                        for j in range(0, k2 - 1):
                            yield IdentityCase(ident, h_n, m, k2, j)
                    elif ident == "c4":
                        for j in range(1, k2):
                            yield IdentityCase(ident, h_n, m, k2, j)
                    else:
                        yield IdentityCase(ident, h_n, m, k2, 0)
        for ident in UPPER_IDENTITIES:
            for k1 in range(0, (h_n - 3) // 2 + 1):
                for m in range(0, h_n - 2 * k1 - 3 + 1):
                    if ident in ("C1", "C3"):
                        for j in range(0, k1 + 1):
                            yield IdentityCase(ident, h_n, m, k1, j)
                    else:
                        yield IdentityCase(ident, h_n, m, k1, 0)


def check_stifel(p: int, q: int) -> bool:
    """Pascal rule C(p,q) = C(p-1,q) + C(p-1,q-1) for standard-range arguments."""
    if p < 1 or not 0 <= q <= p:
        raise InvalidParams("stifel check needs p >= 1, 0 <= q <= p")
    return binomial_guarded(p, q) == binomial_guarded(p - 1, q) + binomial_guarded(
        p - 1, q - 1
    )


def boundary_survivor(h_n: int, m: int) -> int:
    """Value 2^(h_n-m) h_n! of the surviving bold coefficient at beta = h_n - m."""
    beta = h_n - m
    if beta < 1:
        raise InvalidParams("boundary needs m < h_n")
    if beta % 2 == 1:
        k1 = (beta - 1) // 2
        return coeff_A1(k1, k1, m, h_n)
    k2 = beta // 2
    return coeff_A2(k2, k2, m, h_n)


def boundary_vanishing_holds(h_n: int, m: int) -> bool:
    """At beta = h_n - m all non-surviving bold coefficients vanish and the
    survivor equals 2^(h_n-m) h_n!."""
    beta = h_n - m
    if beta < 1:
        raise InvalidParams("boundary needs m < h_n")
    expected = 2 ** (h_n - m) * factorial(h_n)
    if beta % 2 == 1:
        k1 = (beta - 1) // 2
        if coeff_A1(k1, k1, m, h_n) != expected:
            return False
        for j in range(0, k1):
            if coeff_A1(j, k1, m, h_n) != 0:
                return False
        for j in range(0, k1 + 1):
            if coeff_B1(j, k1, m, h_n) != 0:
                return False
        return True
    k2 = beta // 2
    if coeff_A2(k2, k2, m, h_n) != expected:
        return False
    for j in range(0, k2):
        if coeff_A2(j, k2, m, h_n) != 0:
            return False
    for j in range(0, k2):
        if coeff_B2(j, k2, m, h_n) != 0:
            return False
    return True
