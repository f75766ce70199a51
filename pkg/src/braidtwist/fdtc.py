"""Dehornoy floors and exact fractional Dehn twist coefficients.

The Dehornoy floor of a braid b is the largest integer t with
Delta^(2t) <= b, so full twist powers get their own exponent as floor.
The fractional Dehn twist coefficient BT(b) = lim [b^N]_D / N is pinned
exactly from a single power: it is rational with denominator at most the
strand count n, floors sandwich it within 1/N of [b^N]_D / N, and any
two rationals with denominator <= n are at least 1/n^2 apart, so N =
n^2 + 1 leaves room for exactly one candidate in the interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, detect_destabilizable, free_reduce, garside_delta
from .ordering import OrderSign, compare

FLOOR_CONVENTION = "max-t-with-Δ^{2t}⪯β"


@dataclass(frozen=True)
class FloorResult:
    floor: int
    convention: str = FLOOR_CONVENTION


@dataclass(frozen=True)
class FdtcResult:
    """Exact twist coefficient plus the certificate that pinned it."""

    value: Fraction
    power_used: int
    floor_of_power: int
    interval: tuple[Fraction, Fraction]


def dehornoy_floor(w: BraidWord, *, cap: int | None = None) -> FloorResult:
    """Largest t with Delta^(2t) <= the braid of w.

    Exponential bracketing then bisection on the monotone predicate
    compare(w, Delta^(2t)) != LESS.  The bracket is capped at
    2*len(w) + 2: a single letter has floor 0 or -1, so quasimorphism
    additivity keeps |floor| <= 2*len(w) + 1 for any word.
    """
    delta2 = garside_delta(w.strands, squared=True)

    def at_least(t: int) -> bool:
        return compare(w, delta2**t, cap=cap) != OrderSign.LESS

    limit = 2 * len(w) + 2
    if at_least(0):
        lo, hi = 0, 1
        while at_least(hi):
            lo = hi
            hi *= 2
            if hi > limit:
                raise RuntimeError(
                    f"floor bracket grew past {limit} for a {len(w)}-letter word (engine bug)"
                )
    else:
        lo, hi = -1, 0
        while not at_least(lo):
            hi = lo
            lo *= 2
            if -lo > limit:
                raise RuntimeError(
                    f"floor bracket grew past {limit} for a {len(w)}-letter word (engine bug)"
                )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if at_least(mid):
            lo = mid
        else:
            hi = mid
    return FloorResult(floor=lo)


def fdtc_interval(
    w: BraidWord, N: int, *, cap: int | None = None
) -> tuple[Fraction, Fraction]:
    """Closed interval of width 1/N containing the twist coefficient of w.

    Floors sandwich BT (floor <= BT <= floor + 1) and BT is homogeneous,
    so applying the sandwich to w^N and dividing pins BT(w) between
    [w^N]_D / N and ([w^N]_D + 1) / N.
    """
    if N < 1:
        raise ValueError(f"power must be positive, got {N}")
    f = dehornoy_floor(free_reduce(w**N), cap=cap).floor
    return Fraction(f, N), Fraction(f + 1, N)


def fdtc_exact(w: BraidWord, *, cap: int | None = None) -> FdtcResult:
    """Exact fractional Dehn twist coefficient of the braid of w.

    BT has denominator at most n, so the width-1/(n^2+1) interval from
    fdtc_interval admits exactly one rational p/q with q <= n.  Finding
    none (or several) means the floor computation is broken, not the
    input.
    """
    n = w.strands
    N = n * n + 1
    f = dehornoy_floor(free_reduce(w**N), cap=cap).floor
    lo = Fraction(f, N)
    hi = Fraction(f + 1, N)
    candidates = {
        Fraction(p, q)
        for q in range(1, n + 1)
        for p in range(math.ceil(lo * q), math.floor(hi * q) + 1)
    }
    if len(candidates) != 1:
        raise RuntimeError(
            f"expected exactly one rational with denominator <= {n} in "
            f"[{lo}, {hi}], found {sorted(candidates)} (engine bug)"
        )
    return FdtcResult(
        value=candidates.pop(), power_used=N, floor_of_power=f, interval=(lo, hi)
    )


def word_sign_bounds(w: BraidWord) -> tuple[bool, bool]:
    """(BT >= 0 certified, BT <= 0 certified) from letter signs alone.

    A generator index that occurs only positively forces BT >= 0; only
    negatively, BT <= 0.  Indices that never occur certify nothing.
    """
    seen_pos: set[int] = set()
    seen_neg: set[int] = set()
    for g in w.letters:
        (seen_pos if g > 0 else seen_neg).add(abs(g))
    lower_zero = bool(seen_pos - seen_neg)
    upper_zero = bool(seen_neg - seen_pos)
    return lower_zero, upper_zero


def destab_bounds(w: BraidWord) -> tuple[Fraction, Fraction] | None:
    """(0,1) or (-1,0) when the word visibly destabilizes, else None.

    A single positive (negative) occurrence of the top generator after
    free and cyclic reduction traps BT in the unit interval of that sign.
    """
    sign = detect_destabilizable(w)
    if sign is None:
        return None
    if sign > 0:
        return Fraction(0), Fraction(1)
    return Fraction(-1), Fraction(0)
