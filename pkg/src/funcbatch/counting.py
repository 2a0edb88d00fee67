"""Exact counts of bounded-multiplicity labellings and their closed-form ceilings.

The central quantity is the number of ways to label n positions with labels
{0, 1, ..., t} so that every nonzero label appears at least once and at most
r times.  Everything here is exact: integers throughout, rationals for the
closed-form ceilings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence


def falling_factorial(n: int, m: int) -> int:
    """n(n-1)...(n-m+1); equals 1 for m = 0 and n! for m = n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= m <= n:
        raise ValueError(f"m must be in 0..{n}, got {m}")
    out = 1
    for i in range(m):
        out *= n - i
    return out


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! * parts[1]! * ...) for nonnegative parts summing to n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts must sum to {n}, got {sum(parts)}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def _validate_count_args(n: int, t: int, r: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if r < 1:
        raise ValueError("r must be positive")


def labelling_count_direct(n: int, t: int, r: int) -> int:
    """Labelling count by direct summation over label-multiplicity vectors.

    Sums multinomial(n; n-s, i_1, ..., i_t) over all (i_1, ..., i_t) in
    [1, r]^t with s = sum(i) <= n.  Cost grows like r^t; intended as the
    slow reference next to the recursion and the series product.
    """
    _validate_count_args(n, t, r)
    if t == 0:
        return 1
    n_fact = factorial(n)
    total = 0

    def walk(pos: int, used: int, denom: int) -> None:
        nonlocal total
        if pos == t:
            total += n_fact // (denom * factorial(n - used))
            return
        # each remaining label still needs at least one position
        cap = min(r, n - used - (t - pos - 1))
        for i in range(1, cap + 1):
            walk(pos + 1, used + i, denom * factorial(i))

    walk(0, 0, 1)
    return total


class LabellingTable:
    """Memoized (t, n) table of labelling counts for a fixed per-label cap r.

    Row t is filled from row t-1 through
        count(n, t) = sum_{i=1..min(r,n)} C(n, i) * count(n-i, t-1),
    with count(n, 0) = 1.  Rows extend lazily; memory is O(t * n) integers.
    Not safe for concurrent writers; give each worker its own table.
    """

    def __init__(self, r: int) -> None:
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self._rows: dict[int, list[int]] = {0: [1]}

    def count(self, n: int, t: int) -> int:
        _validate_count_args(n, t, self.r)
        row0 = self._rows[0]
        while len(row0) <= n:
            row0.append(1)
        for tt in range(1, t + 1):
            row = self._rows.setdefault(tt, [])
            prev = self._rows[tt - 1]
            for m in range(len(row), n + 1):
                val = 0
                for i in range(1, min(self.r, m) + 1):
                    p = prev[m - i]
                    if p:
                        val += comb(m, i) * p
                row.append(val)
        return self._rows[t][n]


def labelling_count(n: int, t: int, r: int) -> int:
    """Labelling count via the memoized recursion (fresh table per call)."""
    return LabellingTable(r).count(n, t)


@dataclass(frozen=True)
class EgfPoly:
    """Integer numerators (c_0, ..., c_d) of the series sum_j c_j x^j / j!."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def mul(self, other: "EgfPoly", max_deg: int) -> "EgfPoly":
        """Product in the exponential basis: c_m = sum_j C(m, j) a_j b_{m-j}."""
        a, b = self.coeffs, other.coeffs
        deg = min(max_deg, len(a) + len(b) - 2)
        out = [0] * (deg + 1)
        for i, ai in enumerate(a):
            if ai == 0 or i > deg:
                continue
            for j in range(min(len(b), deg - i + 1)):
                bj = b[j]
                if bj:
                    out[i + j] += comb(i + j, i) * ai * bj
        return EgfPoly(tuple(out))


def single_label_series(r: int) -> EgfPoly:
    """Numerators of x/1! + ... + x^r/r!: one label used between 1 and r times."""
    if r < 1:
        raise ValueError("r must be positive")
    return EgfPoly((0,) + (1,) * r)


def labelling_count_egf(n: int, t: int, r: int) -> int:
    """Labelling count extracted from the series product e^x * (x/1! + ... + x^r/r!)^t.

    The t-fold product is truncated at degree min(n, r*t); multiplying by
    e^x turns into the binomial sum over its numerators.
    """
    _validate_count_args(n, t, r)
    max_deg = min(n, r * t)
    acc = EgfPoly((1,))
    base = single_label_series(r)
    for _ in range(t):
        acc = acc.mul(base, max_deg)
    return sum(comb(n, m) * c for m, c in enumerate(acc.coeffs))


def labelling_upper_r2(n: int, t: int) -> Fraction:
    """Closed-form ceiling (n)_t * (n-t+2)^t / 2^t on the count at per-label cap 2."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if n < t:
        raise ValueError("requires n >= t")
    return Fraction(falling_factorial(n, t) * (n - t + 2) ** t, 1 << t)


def labelling_upper_general(n: int, t: int, r: int) -> Fraction:
    """Closed-form ceiling ((n-(t-1)/2) * (n-t)^(r-1) / (r-1)!)^t, valid for n >= t+r."""
    _validate_count_args(n, t, r)
    if n < t + r:
        raise ValueError(f"requires n >= t + r = {t + r}")
    num = ((2 * n - t + 1) * (n - t) ** (r - 1)) ** t
    return Fraction(num, (1 << t) * factorial(r - 1) ** t)


def labelling_upper_iterated(n: int, t: int, r: int) -> Fraction:
    """Ceiling (n-(t+r)/2+1)^(rt) / ((r-1)!)^t from iterating the one-label recursion.

    Valid for n >= max(t+1, 2r-1); t = 0 is a degenerate boundary where the
    empty product gives 1.
    """
    _validate_count_args(n, t, r)
    if n < max(t + 1, 2 * r - 1):
        raise ValueError(f"requires n >= max(t+1, 2r-1) = {max(t + 1, 2 * r - 1)}")
    return Fraction((2 * n - t - r + 2) ** (r * t), (1 << (r * t)) * factorial(r - 1) ** t)
