"""Divisor machinery, the gcd colouring rule, and triangulation counts.

Everything here is exact integer arithmetic.  The triangulation counters
deliberately come in three independent flavours (product formula, recurrence,
brute-force search) so they can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "DivisorProfile",
    "divisors",
    "coloring_count",
    "catalan_euler",
    "catalan_segner",
    "count_triangulations_bruteforce",
]

BRUTE_FORCE_MAX_M = 12


@dataclass(frozen=True)
class DivisorProfile:
    """All divisors of m with the pairwise low/high grouping.

    ``pairs`` multiplies out to m in every entry; when the divisor count is
    odd the central divisor is used twice, so (1, 3, 9) pairs as
    (1, 9), (3, 3).
    """

    m: int
    divisors: tuple[int, ...]
    nontrivial_count: int
    pairs: tuple[tuple[int, int], ...]


def divisors(m: int) -> DivisorProfile:
    """Divisor profile of m (m >= 2)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    divs = sorted(
        d
        for i in range(1, isqrt(m) + 1)
        if m % i == 0
        for d in {i, m // i}
    )
    half = (len(divs) + 1) // 2
    pairs = tuple((divs[i], divs[-1 - i]) for i in range(half))
    return DivisorProfile(
        m=m,
        divisors=tuple(divs),
        nontrivial_count=len(divs) - 2,
        pairs=pairs,
    )


def coloring_count(m: int, n: int) -> int:
    """Number of distinct lateral sides of a closed twisted m-prism.

    With twist class kappa = n mod m this is gcd(m, kappa), except that an
    untwisted body (kappa = 0) keeps all m sides.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    kappa = n % m
    return m if kappa == 0 else gcd(m, kappa)


def catalan_euler(m: int) -> int:
    """Triangulation count of a convex m-gon via the product formula.

    Evaluates 2*6*10*...*(4m-10) / (m-1)! in exact integer arithmetic; the
    division must be exact, anything else is a hard error.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    num = 1
    for k in range(2, 4 * m - 9, 4):
        num *= k
    den = 1
    for k in range(2, m):
        den *= k
    if num % den:
        raise ArithmeticError(f"product formula did not divide exactly for m={m}")
    return num // den


@lru_cache(maxsize=None)
def catalan_segner(m: int) -> int:
    """Triangulation count via the recurrence E_m = sum E_r * E_{m+1-r}.

    Base case E_2 = 1 (a segment admits exactly one empty triangulation).
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m == 2:
        return 1
    return sum(catalan_segner(r) * catalan_segner(m + 1 - r) for r in range(2, m))


def _diagonals(m: int) -> list[tuple[int, int]]:
    """Diagonals of the m-gon as vertex index pairs (0-based, i < j)."""
    out = []
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            out.append((i, j))
    return out


def _crossing_mask(diags: list[tuple[int, int]]) -> list[int]:
    """Bitmask per diagonal of the diagonals it strictly crosses.

    Two diagonals (a, b) and (c, d) cross inside a convex polygon exactly
    when their index pairs strictly interleave; no coordinates involved.
    """
    n = len(diags)
    mask = [0] * n
    for p in range(n):
        a, b = diags[p]
        for q in range(p + 1, n):
            c, d = diags[q]
            if (a < c < b < d) or (c < a < d < b):
                mask[p] |= 1 << q
                mask[q] |= 1 << p
    return mask


def count_triangulations_bruteforce(m: int) -> int:
    """Exhaustive count of non-crossing diagonal sets of size m-3.

    Any m-3 pairwise non-crossing diagonals triangulate the polygon, so the
    search just counts them.  Guarded to m <= 12 to keep the search at desk
    scale.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    if m > BRUTE_FORCE_MAX_M:
        raise ValueError(f"brute-force bound is m <= {BRUTE_FORCE_MAX_M}, got {m}")
    if m == 3:
        return 1

    diags = _diagonals(m)
    cross = _crossing_mask(diags)
    n = len(diags)
    need = m - 3
    all_mask = (1 << n) - 1

    def count(first: int, allowed: int, left: int) -> int:
        if left == 0:
            return 1
        total = 0
        for p in range(first, n - left + 1):
            bit = 1 << p
            if allowed & bit:
                total += count(p + 1, allowed & ~cross[p], left - 1)
        return total

    return count(0, all_mask, need)
