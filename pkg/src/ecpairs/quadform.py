"""Representations 4p = a**2 + d*b**2, class numbers, and the list-length ceiling."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import is_prime, is_square, kronecker, mod_sqrt, squarefree_part


@dataclass(frozen=True)
class CmDecomposition:
    """A prime together with its representation by the principal form of -d.

    For d > 3 this is the unique positive pair (a, b) with 4p = a^2 + d b^2.
    For d = 3 it is p = a^2 + 3 b^2 with b > 0 and a = -1 (mod 3); the sign
    of a is forced by that congruence, so a may be negative.
    """

    p: int
    d: int
    a: int
    b: int


def _require_d(d: int) -> None:
    if d % 8 != 3:
        raise ValueError(f"d must be 3 mod 8, got {d}")
    if squarefree_part(d).f != 1:
        raise ValueError(f"d must be squarefree, got {d}")


def decompose(p: int, d: int) -> CmDecomposition | None:
    """Unique (a, b) with a, b > 0 and 4p = a^2 + d b^2, or None when p has none.

    Cornacchia descent on 2p.  None means p is inert in Q(sqrt(-d)) or is
    represented only by non-principal forms of discriminant -d.
    """
    _require_d(d)
    if d <= 3:
        raise ValueError(f"decompose requires d > 3, got {d} (use decompose3)")
    if p <= 3 or not is_prime(p):
        raise ValueError(f"p must be a prime larger than 3, got {p}")
    if d % p == 0:
        return None
    x = mod_sqrt(-d % p, p)
    if x is None:
        return None
    # need the root with x^2 = -d (mod 4p); d odd forces x odd
    if x % 2 == 0:
        x = p - x
    a, b = 2 * p, x
    limit = isqrt(4 * p)
    while b > limit:
        a, b = b, a % b
    if b == 0:
        return None
    rem = 4 * p - b * b
    if rem % d != 0:
        return None
    c = is_square(rem // d)
    if c is None or c == 0:
        return None
    return CmDecomposition(p, d, b, c)


def decompose3(p: int) -> CmDecomposition:
    """p = a^2 + 3 b^2 with b > 0 and a = -1 (mod 3); requires p = 1 (mod 3)."""
    if p <= 3 or not is_prime(p):
        raise ValueError(f"p must be a prime larger than 3, got {p}")
    if p % 3 != 1:
        raise ValueError(f"p = 2 (mod 3) has no a^2 + 3b^2 representation: {p}")
    x = mod_sqrt(-3 % p, p)
    # take the root above p/2 so the descent starts correctly
    if 2 * x < p:
        x = p - x
    a, b = p, x
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    c = p - b * b
    root = is_square(c // 3)
    if c % 3 != 0 or root is None:  # cannot happen for prime p = 1 (mod 3)
        raise ArithmeticError(f"Cornacchia descent failed for p = {p}")
    a_val = b if b % 3 == 2 else -b
    return CmDecomposition(p, 3, a_val, root)


def class_number(d: int) -> int:
    """h(-d) for squarefree d = 3 (mod 4), by counting reduced primitive forms.

    Forms (A, B, C) of discriminant B^2 - 4AC = -d with |B| <= A <= C, B odd,
    and B >= 0 whenever |B| = A or A = C.
    """
    if d % 4 != 3:
        raise ValueError(f"d must be 3 mod 4, got {d}")
    if squarefree_part(d).f != 1:
        raise ValueError(f"d must be squarefree, got {d}")
    h = 0
    b = 1
    while 3 * b * b <= d:
        m = (b * b + d) // 4
        a = b
        while a * a <= m:
            if m % a == 0:
                c = m // a
                if gcd(gcd(a, b), c) == 1:
                    h += 1 if (a == b or a == c) else 2
            a += 1
        b += 2
    return h


def max_allowable(d: int) -> int:
    """Smallest prime z with kronecker(-d, z) != -1 when d = 3 (mod 8), else 1.

    This is the ceiling on proper list lengths over d.  Note the formula
    gives 3 at d = 3 because kronecker(-3, 3) = 0; d = 3 is the one value
    where the ceiling is not sharp for the j = 0 curve family.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if d % 8 != 3:
        return 1
    z = 2
    while kronecker(-d, z) == -1:
        z += 1
        while not is_prime(z):
            z += 1
    return z
