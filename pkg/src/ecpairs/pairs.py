"""The elliptic-pair predicate, its integer certificate A, and anomalous primes.

A pair of primes (p, q), both larger than 3, is an elliptic pair over
squarefree d when some curve with CM by Q(sqrt(-d)) has order q over F_p.
Arithmetically that holds exactly when d is the squarefree part of

    N(p, q) = 2pq + 2p + 2q - p^2 - q^2 - 1 = 4p - (p + 1 - q)^2 > 0,

and N(p, q) = A^2 d defines the certificate A.  Primes p, q <= 3 are
rejected everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, squarefree_part


@dataclass(frozen=True)
class EllipticPair:
    """(p, q) over d with its certificate A (signed for d = 3, positive otherwise)."""

    p: int
    q: int
    d: int
    A: int


def _require_prime(p: int) -> None:
    if p <= 3 or not is_prime(p):
        raise ValueError(f"need a prime larger than 3, got {p}")


def pair_numerator(p: int, q: int) -> int:
    """2pq + 2p + 2q - p^2 - q^2 - 1, i.e. 4p - (p + 1 - q)^2."""
    return 2 * p * q + 2 * p + 2 * q - p * p - q * q - 1


def find_d(p: int, q: int) -> tuple[int, int] | None:
    """The unique squarefree d with (p, q) an elliptic pair over d, plus |A|.

    None when the pair numerator is nonpositive (q outside p's Hasse
    interval), in which case (p, q) is a pair over no d.
    """
    _require_prime(p)
    _require_prime(q)
    num = pair_numerator(p, q)
    if num <= 0:
        return None
    split = squarefree_part(num)
    return split.d, split.f


def is_pair(p: int, q: int, d: int) -> bool:
    """True iff (p, q) is an elliptic pair over d."""
    got = find_d(p, q)
    return got is not None and got[0] == d


def a_pq(p: int, q: int, d: int) -> int | None:
    """The certificate A with A^2 d = pair numerator; None if not a pair over d.

    For d = 3 the sign is fixed by A = p + q + 1 (mod 4); for d > 3 the
    certificate is b_p > 0.
    """
    got = find_d(p, q)
    if got is None or got[0] != d:
        return None
    A = got[1]
    if d == 3 and (p + q + 1 - A) % 4 != 0:
        A = -A
    return A


def certificate(p: int, q: int) -> EllipticPair | None:
    """The EllipticPair for (p, q) over its unique d, or None when out of range."""
    got = find_d(p, q)
    if got is None:
        return None
    d = got[0]
    return EllipticPair(p, q, d, a_pq(p, q, d))


def orders_from_A(p: int, q: int) -> dict[int, int]:
    """The six orders over F_q of y^2 = x^3 + g^m, keyed by m mod 6.

    Requires (p, q) to be an elliptic pair over 3; g is the primitive root
    mod q that realizes order p at m = 1.
    """
    A = a_pq(p, q, 3)
    if A is None:
        raise ValueError(f"({p}, {q}) is not an elliptic pair over 3")
    return {
        0: (p + q + 1 + 3 * A) // 2,
        1: p,
        2: (p + q + 1 - 3 * A) // 2,
        3: (-p + 3 * q + 3 - 3 * A) // 2,
        4: 2 * q + 2 - p,
        5: (-p + 3 * q + 3 + 3 * A) // 2,
    }


def anomalous_primes(d: int, below: int) -> list[int]:
    """All primes 3 < p < below with (p, p) an elliptic pair over d, ascending.

    Generated by the quadratic 12b^2 - 6b + 1 over both signs of b when
    d = 3, and by d c^2 + d c + (1 + d)/4 over c >= 0 otherwise.
    """
    if d % 8 != 3:
        raise ValueError(f"d must be 3 mod 8, got {d}")
    if below < 5:
        raise ValueError(f"bound must be at least 5, got {below}")
    found: set[int] = set()
    if d == 3:
        b = 1
        while True:
            lo = 12 * b * b - 6 * b + 1  # the b branch
            if lo >= below:
                break
            for v in (lo, 12 * b * b + 6 * b + 1):  # and the -b branch
                if 3 < v < below and is_prime(v):
                    found.add(v)
            b += 1
    else:
        c = 0
        while True:
            v = d * c * c + d * c + (1 + d) // 4
            if v >= below:
                break
            if v > 3 and is_prime(v):
                found.add(v)
            c += 1
    return sorted(found)
