"""Truncated integer power series and the orbit-counting generating functions.

All arithmetic is exact; infinite products over k >= 1 are cut at the
truncation degree, which leaves every retained coefficient exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, gcd
from typing import Sequence

ORBIT_FAMILIES = ("A", "C", "D")
DIST_FAMILIES = ("dist-A", "dist-C", "dist-D")
COUNT_FAMILIES = ORBIT_FAMILIES + DIST_FAMILIES + ("dist-AI",)


@dataclass(frozen=True)
class TruncSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.truncation:
            raise ValueError(f"degree {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return series_mul(self, other)


def series_one(n_max: int) -> TruncSeries:
    return TruncSeries((1,) + (0,) * n_max)


def series_from(coeffs: Sequence[int]) -> TruncSeries:
    return TruncSeries(tuple(coeffs))


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Product truncated to the smaller truncation degree."""
    n = min(f.truncation, g.truncation)
    out = [0] * (n + 1)
    for i, a in enumerate(f.coeffs[: n + 1]):
        if a:
            for j in range(n - i + 1):
                b = g.coeffs[j]
                if b:
                    out[i + j] += a * b
    return TruncSeries(tuple(out))


def series_geom_pow(j: int, e: int, n_max: int) -> TruncSeries:
    """Expansion of (1 - x^j)^(-e); a negative e gives the polynomial
    (1 - x^j)^(-e) with alternating binomial coefficients."""
    if j < 1:
        raise ValueError("exponent step must be >= 1")
    if n_max < 0:
        raise ValueError("truncation degree must be nonnegative")
    out = [0] * (n_max + 1)
    for t in range(n_max // j + 1):
        if e >= 1:
            c = comb(t + e - 1, e - 1)
        elif e == 0:
            c = 1 if t == 0 else 0
        else:
            p = -e
            c = (-1) ** t * comb(p, t) if t <= p else 0
        out[j * t] = c
    return TruncSeries(tuple(out))


def _one_plus(j: int, n_max: int, inverse: bool = False) -> TruncSeries:
    """(1 + x^j) or its inverse, truncated."""
    out = [0] * (n_max + 1)
    if inverse:
        for t in range(n_max // j + 1):
            out[j * t] = (-1) ** t
    else:
        out[0] = 1
        if j <= n_max:
            out[j] = 1
    return TruncSeries(tuple(out))


def gf_orbit_count(case: str, l: int, n_max: int) -> TruncSeries:
    """Series whose n-th coefficient counts the admissible diagrams with 2n
    boxes for the family: A over modulus 2l+1, C and D over modulus 2l."""
    if case not in ORBIT_FAMILIES:
        raise ValueError(f"family must be one of {ORBIT_FAMILIES}, got {case!r}")
    if l < 1:
        raise ValueError("parameter l must be >= 1")
    s = series_one(n_max)
    for k in range(1, n_max + 1):
        if case == "A":
            s = series_mul(s, series_geom_pow(k, l + 1, n_max))
        elif case == "C":
            s = series_mul(s, _one_plus(k, n_max))
            s = series_mul(s, series_geom_pow(k, l, n_max))
        else:
            s = series_mul(s, series_geom_pow(k, l + 1, n_max))
            s = series_mul(s, _one_plus(k, n_max, inverse=True))
    return s


def gf_distinguished_ai(m: int, a: int, n_max: int) -> TruncSeries:
    """Series whose j-th coefficient counts the AI diagrams of size a*j that
    are distinguished at order a (modulus m).  Undefined when gcd(a, m) = m."""
    if m < 1 or a < 1:
        raise ValueError("modulus and order must be >= 1")
    d = gcd(a, m)
    if d == m:
        raise ValueError("family is empty when gcd(a, m) equals the modulus")
    s = series_one(n_max)
    for k in range(1, n_max + 1):
        s = series_mul(s, series_geom_pow(k, m, n_max))
        s = series_mul(s, series_geom_pow((m // d) * k, -d, n_max))
    return s


def gf_distinguished_ii(case: str, l: int, n_max: int) -> TruncSeries:
    """Series whose n-th coefficient counts the admissible distinguished
    diagrams with 2n boxes for the family."""
    if case not in ORBIT_FAMILIES:
        raise ValueError(f"family must be one of {ORBIT_FAMILIES}, got {case!r}")
    if l < 1:
        raise ValueError("parameter l must be >= 1")
    s = series_one(n_max)
    for k in range(1, n_max + 1):
        if case == "A":
            s = series_mul(s, series_geom_pow(k, l + 1, n_max))
            s = series_mul(s, series_geom_pow((2 * l + 1) * k, -1, n_max))
        elif case == "C":
            s = series_mul(s, _one_plus(k, n_max))
            s = series_mul(s, series_geom_pow(k, l, n_max))
            s = series_mul(s, series_geom_pow(2 * l * k, -1, n_max))
        else:
            s = series_mul(s, series_geom_pow(k, l + 1, n_max))
            s = series_mul(s, _one_plus(k, n_max, inverse=True))
            s = series_mul(s, series_geom_pow(2 * l * k, -1, n_max))
    return s


def _stars_and_bars_with_gap(k: int, nvars: int, gap: int) -> int:
    """Coefficient of t^k in (1 - t^gap) / (1 - t)^nvars: the number of ways
    to write k as an ordered sum of nvars nonnegative integers, minus those
    where a forced block of size gap fits."""
    c = comb(k + nvars - 1, nvars - 1)
    if k >= gap:
        c -= comb(k - gap + nvars - 1, nvars - 1)
    return c


def weight_count(
    mu: Sequence[int],
    family: str,
    *,
    l: int | None = None,
    m: int | None = None,
    a: int | None = None,
) -> int:
    """Multiplicative weight of a partition for one of the counting families.

    Summed over all partitions of n, the weights reproduce the corresponding
    generating-function coefficient at degree n.  Families A/C/D take the
    parameter l; dist-A/C/D likewise; dist-AI takes the modulus m and order a.
    """
    if family not in COUNT_FAMILIES:
        raise ValueError(f"family must be one of {COUNT_FAMILIES}, got {family!r}")
    parts = tuple(mu)
    if any(p < 1 for p in parts):
        raise ValueError("partition parts must be positive")
    if family == "dist-AI":
        if m is None or a is None:
            raise ValueError("family dist-AI needs the modulus m and order a")
        d = gcd(a, m)
        if d == m:
            raise ValueError("family is empty when gcd(a, m) equals the modulus")
    elif l is None or l < 1:
        raise ValueError(f"family {family} needs a parameter l >= 1")
    total = 1
    for part, mult in sorted(Counter(parts).items()):
        total *= _part_weight(family, part, mult, l, m, a)
    return total


def _part_weight(family, part, mult, l, m, a):
    if family == "A":
        return comb(mult + l, l)
    if family == "C":
        return comb(mult + l, l) if part % 2 else comb(mult + l - 1, l - 1)
    if family == "D":
        return comb(mult + l - 1, l - 1) if part % 2 else comb(mult + l, l)
    if family == "dist-A":
        return _stars_and_bars_with_gap(mult, l + 1, 2 * l + 1)
    if family == "dist-C":
        if part % 2:
            return _stars_and_bars_with_gap(mult, l + 1, 2 * l)
        return _stars_and_bars_with_gap(mult, l, 2 * l)
    if family == "dist-D":
        if part % 2:
            return _stars_and_bars_with_gap(mult, l, 2 * l)
        return _stars_and_bars_with_gap(mult, l + 1, 2 * l)
    # dist-AI: coefficient of t^mult in (1 - t^(m/d))^d / (1 - t)^m
    d = gcd(a, m)
    step = m // d
    total = 0
    for i in range(d + 1):
        rest = mult - i * step
        if rest < 0:
            break
        total += (-1) ** i * comb(d, i) * comb(rest + m - 1, m - 1)
    return total
