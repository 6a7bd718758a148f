"""Pair censuses: exact counts per d, the normalized table, and its CSV feed.

`count_pairs` enumerates representations rather than prime pairs, so a
full count at X = 10^7 touches O(X / sqrt(d)) candidates instead of all
prime pairs; `scan_census` is the brute-force cross-check kept for small X.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Iterable

import numpy as np

from ._util import chunks, run_chunks
from .arith import primes_up_to, sieve_flags, squarefree_part
from .pairs import pair_numerator
from .quadform import class_number

CSV_HEADER = "d,h,sqrt_d_over_h2,Y,c_hat"


def _require_census_d(d: int) -> None:
    if d % 8 != 3 or squarefree_part(d).f != 1:
        raise ValueError(f"d must be squarefree and 3 mod 8, got {d}")


def _count_d3(X: int, flags: np.ndarray, b_values: Iterable[int]) -> int:
    """Pairs over 3 with p <= q < X, via the grid p = a^2 + 3b^2, a = -1 (mod 3)."""
    total = 0
    for b in b_values:
        room = X - 1 - 3 * b * b
        if room < 1:
            continue
        amax = math.isqrt(room)
        threeb = 3 * b
        for a in (
            np.arange(2, amax + 1, 3, dtype=np.int64),
            -np.arange(1, amax + 1, 3, dtype=np.int64),
        ):
            if len(a) == 0:
                continue
            p = a * a + 3 * b * b
            sel = (p > 3) & flags[p]
            if not sel.any():
                continue
            p = p[sel]
            av = a[sel]
            base = p + 1
            for q in (
                base + 2 * av,
                base - 2 * av,
                base - av + threeb,
                base - av - threeb,
                base + av + threeb,
                base + av - threeb,
            ):
                m = (q >= p) & (q > 3) & (q < X)
                if m.any():
                    total += int(flags[q[m]].sum())
    return total


def _count_d_gt3(d: int, X: int, flags: np.ndarray, b_values: Iterable[int]) -> int:
    """Pairs over d > 3 with p <= q < X, via 4p = a^2 + d b^2 and q = p + 1 + a."""
    total = 0
    top = 4 * (X - 1)  # a^2 + d b^2 <= top iff p <= X - 1
    for b in b_values:
        db2 = d * b * b
        room = top - db2
        if room < 1:
            continue
        amax = math.isqrt(room)
        a0 = 1 if b % 2 == 1 else 2  # parity: a = b (mod 2) makes p integral
        if a0 <= amax:
            a = np.arange(a0, amax + 1, 2, dtype=np.int64)
            p = (a * a + db2) >> 2
            sel = (p > 3) & flags[p]
            if sel.any():
                q = p[sel] + 1 + a[sel]
                q = q[q < X]
                total += int(flags[q].sum())
        # the anomalous pair (p, p): 4p = 1 + d b^2, b odd
        if b % 2 == 1 and db2 + 1 <= top + 4:
            v = db2 + 1
            if v % 4 == 0:
                p_anom = v // 4
                if 3 < p_anom < X and flags[p_anom]:
                    total += 1
    return total


def count_pairs(d: int, X: int, threads: int = 1) -> int:
    """Number of elliptic pairs (p, q) over d with 3 < p <= q < X, each once."""
    _require_census_d(d)
    if X < 5:
        raise ValueError(f"X must be at least 5, got {X}")
    flags = sieve_flags(X)
    if d == 3:
        b_all = list(range(1, math.isqrt((X - 1) // 3) + 1))
        parts = run_chunks(
            lambda bs: _count_d3(X, flags, bs), chunks(b_all, max(1, threads)), threads
        )
    else:
        b_all = list(range(1, math.isqrt(4 * (X - 1) // d) + 1))
        parts = run_chunks(
            lambda bs: _count_d_gt3(d, X, flags, bs),
            chunks(b_all, max(1, threads)),
            threads,
        )
    return sum(parts)


@lru_cache(maxsize=2)
def _spf_table(n: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..n (spf[p] = p for primes)."""
    spf = np.zeros(n + 1, dtype=np.int64)
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == 0:
            s = spf[i * i :: i]
            s[s == 0] = i
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest
    return spf


def _squarefree_of(n: int, spf: np.ndarray) -> int:
    d = 1
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e & 1:
            d *= p
    return d


def scan_census(X: int) -> dict[int, int]:
    """Histogram d -> pair count from scanning every close prime pair below X.

    The oracle-scale method: for each prime p, every prime q in [p, X)
    inside p's Hasse interval contributes to the d read off the pair
    numerator.  Quadratic-ish work; meant for X up to about 10^6.
    """
    if X < 5:
        raise ValueError(f"X must be at least 5, got {X}")
    primes = [int(p) for p in primes_up_to(X)]
    spf = _spf_table(4 * X)
    hist: dict[int, int] = {}
    for i, p in enumerate(primes):
        if p <= 3:
            continue
        hi = p + 1 + math.isqrt(4 * p)  # q beyond this is outside the interval
        for j in range(i, bisect.bisect_right(primes, min(hi, X - 1))):
            q = primes[j]
            num = pair_numerator(p, q)
            if num <= 0:
                continue
            d = _squarefree_of(num, spf)
            hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


def cd_estimate(d: int, X: int, Y: int) -> float:
    """The normalized pair count Y / (X / ln^2 X)."""
    if X <= 2:
        raise ValueError(f"X must exceed e, got {X}")
    return Y * math.log(X) ** 2 / X


@dataclass(frozen=True)
class CensusRecord:
    """One census row: d, h(-d), xi = sqrt(d)/h^2, the count Y, and Y/(X/ln^2 X)."""

    d: int
    h: int
    xi: float
    Y: int
    c_hat: float
    X: int


@dataclass(frozen=True)
class CensusTable:
    """Census rows sorted by (h, d), with the least-squares slope of c_hat
    against xi over the rows with d > 3, and the d = 3 excess ratio."""

    records: tuple[CensusRecord, ...]
    slope: float
    d3_ratio: float | None


def census_discriminants(h_max: int = 4, d_max: int = 1555) -> list[int]:
    """Squarefree d = 3 (mod 8) with class number at most h_max, up to d_max."""
    out = []
    for d in range(3, d_max + 1, 8):
        if squarefree_part(d).f != 1:
            continue
        if class_number(d) <= h_max:
            out.append(d)
    return out


def table2(X: int, h_max: int = 4, d_max: int = 1555, threads: int = 1) -> CensusTable:
    """Census rows for every qualifying d, plus the normalization fit.

    The slope is an ordinary least-squares fit of c_hat against
    sqrt(d)/h^2 excluding the d = 3 outlier; d3_ratio reports how far
    above that fit the d = 3 row sits.
    """
    records = []
    for d in census_discriminants(h_max, d_max):
        h = class_number(d)
        Y = count_pairs(d, X, threads)
        records.append(
            CensusRecord(
                d=d,
                h=h,
                xi=math.sqrt(d) / h**2,
                Y=Y,
                c_hat=cd_estimate(d, X, Y),
                X=X,
            )
        )
    records.sort(key=lambda r: (r.h, r.d))
    fit = [(r.xi, r.c_hat) for r in records if r.d != 3]
    if len(fit) >= 2:
        xs, ys = np.array([f[0] for f in fit]), np.array([f[1] for f in fit])
        slope = float(np.polyfit(xs, ys, 1)[0])
    else:
        slope = float("nan")
    d3 = next((r for r in records if r.d == 3), None)
    ratio = None
    if d3 is not None and not math.isnan(slope) and slope != 0:
        ratio = d3.c_hat / (slope * d3.xi)
    return CensusTable(tuple(records), slope, ratio)


def write_census_csv(records: Iterable[CensusRecord], out: IO[str]) -> None:
    """The Figure-1 data feed: fixed header, 6-decimal reals, rows by (h, d)."""
    out.write(CSV_HEADER + "\n")
    for r in sorted(records, key=lambda r: (r.h, r.d)):
        out.write(f"{r.d},{r.h},{r.xi:.6f},{r.Y},{r.c_hat:.6f}\n")
