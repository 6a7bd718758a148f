"""Elliptic lists over d > 3, six-cycles over d = 3, and their search machinery.

A proper list over d > 3 is an ascending run of primes p, p+1+a, ... whose
representations 4p_i = a_i^2 + d b^2 march in steps of 2 on a; it is the
prime run of x^2 + a_1 x + p_1.  Over d = 3 the interesting objects are
six-cycles: a single pair (a, b) with a = -1 (mod 3) and a + b odd
determines all six members in closed form (`cycle_values`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from ._util import chunks, run_chunks
from .arith import is_prime, primes_up_to
from .curves import curve_order
from .pairs import is_pair
from .quadform import decompose, max_allowable


class AliquotNotFoundError(Exception):
    """No single curve coefficient realizes the requested cycle."""

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


@dataclass(frozen=True)
class EllipticList:
    """Ascending chain of primes over d, with the generating (a1, b)."""

    d: int
    primes: tuple[int, ...]
    a1: int
    b: int

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class SixCycle:
    """Six values generated from (a, b), with properness/anomalous flags.

    proper: six distinct primes, every adjacency (wraparound included) a
    pair over 3.  anomalous_pattern: the doubled shape p1=p2, p4=p5, p3=p6
    with three distinct primes, adjacencies verified the same way.
    """

    a: int
    b: int
    values: tuple[int, int, int, int, int, int]
    proper: bool
    anomalous_pattern: bool


def cycle_values(a: int, b: int) -> tuple[int, int, int, int, int, int]:
    """The six member values determined by (a, b); a = -1 (mod 3), a + b odd."""
    if a % 3 != 2:
        raise ValueError(f"a must be -1 mod 3, got {a}")
    if (a + b) % 2 == 0:
        raise ValueError(f"a + b must be odd, got a = {a}, b = {b}")
    p1 = a * a + 3 * b * b
    p2 = ((a + 3 * b - 1) // 2) ** 2 + 3 * ((a - b + 1) // 2) ** 2
    p3 = ((-a + 3 * b - 3) // 2) ** 2 + 3 * ((a + b + 1) // 2) ** 2
    p4 = (a + 2) ** 2 + 3 * b * b
    p5 = ((-a - 3 * b - 3) // 2) ** 2 + 3 * ((a - b + 1) // 2) ** 2
    p6 = ((a - 3 * b - 1) // 2) ** 2 + 3 * ((a + b + 1) // 2) ** 2
    return (p1, p2, p3, p4, p5, p6)


def _adjacent_pairs_ok(vals: tuple[int, ...]) -> bool:
    return all(is_pair(vals[i], vals[(i + 1) % 6], 3) for i in range(6))


def cycle_from_ab(a: int, b: int) -> SixCycle:
    """Build the SixCycle for (a, b) and evaluate its flags."""
    vals = cycle_values(a, b)
    all_prime = all(v > 3 and is_prime(v) for v in vals)
    proper = all_prime and len(set(vals)) == 6 and _adjacent_pairs_ok(vals)
    anomalous = (
        all_prime
        and vals[0] == vals[1]
        and vals[3] == vals[4]
        and vals[2] == vals[5]
        and len({vals[0], vals[2], vals[3]}) == 3
        and _adjacent_pairs_ok(vals)
    )
    return SixCycle(a, b, vals, proper, anomalous)


def build_list(p1: int, d: int) -> EllipticList:
    """Maximal ascending list from p1 over d > 3: extend while p + 1 + a is prime."""
    if d == 3:
        raise ValueError("lists over d = 3 are ambiguous; use cycle_from_ab instead")
    dec = decompose(p1, d)
    if dec is None:
        raise ValueError(f"4*{p1} is not representable as a^2 + {d} b^2")
    seq = [p1]
    p, a = p1, dec.a
    while True:
        q = p + 1 + a
        if not is_prime(q):
            break
        seq.append(q)
        p, a = q, a + 2
    return EllipticList(d, tuple(seq), dec.a, dec.b)


def longest_list(d: int, bound: int, threads: int = 1) -> tuple[int, int]:
    """(max list length, least starting prime) over starts p1 < bound.

    A lower bound for the best achievable length over d; ties go to the
    smallest start.
    """
    starts = [int(p) for p in primes_up_to(bound) if p > 3]

    def scan(chunk: list[int]) -> tuple[int, int]:
        best = (0, 0)
        for p1 in chunk:
            dec = decompose(p1, d)
            if dec is None:
                continue
            n = len(build_list(p1, d).primes)
            if n > best[0]:
                best = (n, p1)
        return best

    results = run_chunks(scan, chunks(starts, max(1, threads)), threads)
    best = (0, 0)
    for n, p1 in results:
        if n > best[0] or (n == best[0] and n > 0 and p1 < best[1]):
            best = (n, p1)
    return best


def discrepancy(d: int, bound: int) -> int:
    """max_allowable(d) minus the best observed list length below bound."""
    return max_allowable(d) - longest_list(d, bound)[0]


def mod7_row(a: int, b: int) -> tuple[tuple[int, ...], int]:
    """The six cycle members mod 7 for residues (a, b), and their product.

    The half-integer member formulas become exact mod 7 because dividing
    by 2 is multiplying by 4^{-1} = 2.
    """

    def sq(x: int) -> int:
        return x * x % 7

    row = (
        (sq(a) + 3 * sq(b)) % 7,
        (2 * sq(a + 3 * b - 1) + 6 * sq(a - b + 1)) % 7,
        (2 * sq(a - 3 * b + 3) + 6 * sq(a + b + 1)) % 7,
        (sq(a + 2) + 3 * sq(b)) % 7,
        (2 * sq(a + 3 * b + 3) + 6 * sq(a - b + 1)) % 7,
        (2 * sq(a - 3 * b - 1) + 6 * sq(a + b + 1)) % 7,
    )
    prod = 1
    for v in row:
        prod = prod * v % 7
    return row, prod


def mod7_product(a: int, b: int) -> int:
    """Product of the six members mod 7; nonzero only at (a, b) = (6, 0)."""
    return mod7_row(a % 7, b % 7)[1]


def _reflect(a: int, b: int) -> tuple[int, int]:
    return (a, -b)


def _shift(a: int, b: int) -> tuple[int, int]:
    # generator anchored at the second member (an involution: it reverses direction)
    return ((a + 3 * b - 1) // 2, (a - b + 1) // 2)


def _generator_orbit(a: int, b: int) -> set[tuple[int, int]]:
    """All (a, b) pairs generating the same undirected cycle (at most 12)."""
    seen = {(a, b)}
    frontier = [(a, b)]
    while frontier:
        cur = frontier.pop()
        for nxt in (_reflect(*cur), _shift(*cur)):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _canonical_generator(a: int, b: int) -> tuple[int, int]:
    """The orbit member with a > 0, b > 0 and smallest a (present for any
    cycle whose members are all prime)."""
    positive = [g for g in _generator_orbit(a, b) if g[0] > 0 and g[1] > 0]
    if not positive:
        return min(_generator_orbit(a, b))
    return min(positive)


def find_6cycles(bound: int, anomalous: bool = False, threads: int = 1) -> list[SixCycle]:
    """Six-cycles with least member below `bound`, sorted by least member.

    anomalous=False searches proper cycles; anomalous=True the doubled
    pattern.  Both searches restrict to a = -1 (mod 7) and 7 | b: a cycle
    member congruent to 0 mod 7 would have to BE 7, and no cycle of either
    kind with all members above 7 escapes that residue test.  Each
    candidate is verified by primality, distinctness, and pair checks.
    """
    if bound < 7:
        raise ValueError(f"bound must be at least 7, got {bound}")
    # members spread over at most three Hasse steps from the least one
    scan_limit = bound + 8 * isqrt(bound) + 100

    found: dict[tuple[int, ...], SixCycle] = {}

    if anomalous:
        # (p, p) adjacency forces a = 3b - 1; 7 | b then gives a = -1 (mod 7)
        bs = list(range(7, isqrt(scan_limit // 12) + 2, 7))

        def scan_anoms(chunk: list[int]) -> list[SixCycle]:
            out = []
            for b in chunk:
                a = 3 * b - 1
                if a * a + 3 * b * b >= scan_limit:
                    continue
                cyc = cycle_from_ab(a, b)
                if cyc.anomalous_pattern:
                    out.append(cyc)
            return out

        for chunk_result in run_chunks(scan_anoms, chunks(bs, max(1, threads)), threads):
            for cyc in chunk_result:
                found.setdefault(_canonical_key(cyc.values), cyc)
    else:
        a_values = list(range(20, isqrt(scan_limit) + 1, 21))

        def scan_propers(chunk: list[int]) -> list[SixCycle]:
            out = []
            for a in chunk:
                bmax = isqrt((scan_limit - a * a) // 3)
                start = 7 if (a + 7) % 2 == 1 else 14
                for babs in range(start, bmax + 1, 14):
                    for b in (babs, -babs):
                        cyc = cycle_from_ab(a, b)
                        if cyc.proper:
                            out.append(cyc)
            return out

        for chunk_result in run_chunks(
            scan_propers, chunks(a_values, max(1, threads)), threads
        ):
            for cyc in chunk_result:
                key = _canonical_key(cyc.values)
                if key not in found:
                    ca, cb = _canonical_generator(cyc.a, cyc.b)
                    found[key] = cycle_from_ab(ca, cb)

    cycles = [c for c in found.values() if min(c.values) < bound]
    cycles.sort(key=lambda c: min(c.values))
    return cycles


def _canonical_key(vals: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least rotation/reflection of the value tuple."""
    best = None
    for seq in (vals, vals[::-1]):
        for i in range(6):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def aliquot_k(
    cycle: SixCycle,
    rotation: int = 0,
    limit: int = 1_000_000,
    rng: random.Random | None = None,
) -> int:
    """Smallest k >= 1 whose curve steps through the cycle from the chosen start.

    The rotated sequence may be traversed in either cyclic direction (a
    cycle is undirected; the curve's orders pick the direction).  Raises
    AliquotNotFoundError when no k at or below `limit` works, or when the
    constraint system is contradictory (repeated members with different
    successors, as in anomalous cycles).
    """
    vals = cycle.values
    seq = vals[rotation:] + vals[:rotation]
    directions = []
    for cand in (seq, (seq[0],) + tuple(reversed(seq[1:]))):
        constraints: dict[int, int] = {}
        ok = True
        for i, p in enumerate(cand):
            succ = cand[(i + 1) % 6]
            if constraints.setdefault(p, succ) != succ:
                ok = False
                break
        if ok and constraints not in directions:
            directions.append(constraints)
    if not directions:
        raise AliquotNotFoundError(
            f"cycle {seq} repeats a prime with two different successors; "
            f"no single curve can realize it (limit {limit})",
            limit,
        )
    for k in range(1, limit + 1):
        for constraints in directions:
            if all(
                curve_order(p, k % p, rng) == succ for p, succ in constraints.items()
            ):
                return k
    raise AliquotNotFoundError(
        f"no curve coefficient below {limit} realizes the cycle {seq}", limit
    )
