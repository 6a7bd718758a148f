"""Exact integer arithmetic: primality, sieving, symbols, square roots, CRT.

Everything here is pure and reentrant.  All functions work on Python ints
(arbitrary precision), so intermediate products never overflow; numpy is
used only inside the sieve, where values stay far below 2**63.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

# Witness set making Miller-Rabin deterministic for every n < 2**64
# (classic seven-witness set of Jim Sinclair).
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

SEGMENT_SIZE = 1 << 20


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _base_primes(limit: int) -> np.ndarray:
    """Plain sieve for the base primes below `limit` (small: limit <= sqrt(X))."""
    if limit < 3:
        return np.array([2], dtype=np.int64)[: 1 if limit > 2 else 0]
    flags = np.ones(limit, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return np.nonzero(flags)[0].astype(np.int64)


def iter_prime_segments(
    limit: int, segment_size: int = SEGMENT_SIZE
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (lo, flags) blocks covering [0, limit); flags[i] is True iff lo+i is prime.

    Working memory stays O(segment_size) beyond the base primes, so callers
    may stream arbitrarily large ranges.
    """
    if limit <= 0:
        return
    base = _base_primes(math.isqrt(max(limit - 1, 0)) + 1)
    for lo in range(0, limit, segment_size):
        hi = min(lo + segment_size, limit)
        flags = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            flags[: min(2, hi)] = False
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                flags[start - lo :: p] = False
        yield lo, flags


def primes_up_to(limit: int) -> np.ndarray:
    """All primes p < limit, ascending, as an int64 array."""
    if limit < 3:
        return np.empty(0, dtype=np.int64)
    chunks = []
    for lo, flags in iter_prime_segments(limit):
        chunks.append(np.nonzero(flags)[0].astype(np.int64) + lo)
    return np.concatenate(chunks)


@lru_cache(maxsize=2)
def sieve_flags(limit: int) -> np.ndarray:
    """Boolean array f of length `limit` with f[n] True iff n is prime."""
    out = np.empty(limit, dtype=bool)
    for lo, flags in iter_prime_segments(limit):
        out[lo : lo + len(flags)] = flags
    return out


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n), defined for all integer pairs."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # factor out twos of n; (a | 2) is 0 for even a, +1 for a = +-1 (8), -1 for +-3 (8)
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd positive n via reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class SquarefreeSplit:
    """n = d * f**2 with d squarefree."""

    d: int
    f: int


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    # enough for n up to 2**32; larger inputs extend by odd steps
    return tuple(int(p) for p in primes_up_to(65538))


def squarefree_part(n: int) -> SquarefreeSplit:
    """Split n >= 1 as d * f**2 with d squarefree."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    d, f = 1, 1
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                d *= p
    else:
        # n exceeded the trial table; continue with odd candidates
        p = _trial_primes()[-1] + 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                f *= p ** (e // 2)
                if e % 2:
                    d *= p
            p += 2
    return SquarefreeSplit(d * n, f)


def is_square(n: int) -> int | None:
    """The nonnegative root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def mod_sqrt(a: int, p: int) -> int | None:
    """Smaller square root of a modulo an odd prime p, or None for a non-residue.

    Returns 0 when p divides a.  Uses the p = 3 (mod 4) shortcut and
    Tonelli-Shanks otherwise.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks: write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


def crt(congruences: Iterable[tuple[int, int]]) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; x in [0, prod m_i).

    Raises ValueError when the moduli are not pairwise coprime.
    """
    x, m = 0, 1
    for r, mod in congruences:
        if mod < 2:
            raise ValueError(f"modulus must be >= 2, got {mod}")
        if math.gcd(m, mod) != 1:
            raise ValueError(f"moduli are not pairwise coprime (offender: {mod})")
        t = (r - x) * pow(m, -1, mod) % mod
        x += m * t
        m *= mod
    return x % m
