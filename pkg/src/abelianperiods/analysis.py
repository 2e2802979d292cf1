"""Post-processing of period sets: classification, minima, redundancy.

A period (h, p) of a word of length n is *trivial* when h + 2p > n: the
block of length p occurs only once, so the factorisation repeats nothing.
Non-trivial periods (h + 2p <= n) are the interesting minority.

A period is *deducible* from another one when its cutting positions (the
block boundaries h, h + p, h + 2p, ... inside 1..n) form a strict subset of
the other's: every boundary it asserts is already asserted by the finer
period. Non-deducible periods are the maximal elements under that strict
containment, so at least one always survives the filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import Period, period_order_key

__all__ = [
    "filter_nontrivial",
    "cutting_positions",
    "filter_nondeducible",
    "smallest_period",
    "PeriodStats",
    "period_stats",
]


def filter_nontrivial(periods: Iterable[Period], n: int) -> list[Period]:
    """Keep the periods with at least two full blocks: h + 2p <= n."""
    return [hp for hp in periods if hp[0] + 2 * hp[1] <= n]


def cutting_positions(h: int, p: int, n: int) -> set[int]:
    """Block boundaries of (h, p) inside 1..n: the positions h + j*p.

    h = 0 itself is not a position, so a zero head starts cutting at p.
    """
    return set(range(h if h else p, n + 1, p))


def filter_nondeducible(periods: Iterable[Period], n: int) -> list[Period]:
    """Drop every period whose cutting set another period strictly refines.

    ``periods`` should be the complete period set of the word; deducibility
    is relative to it. Pairwise subset checks, O(s^2) set comparisons.
    """
    periods = list(periods)
    cuts = [cutting_positions(h, p, n) for h, p in periods]
    kept = []
    for i, hp in enumerate(periods):
        ci = cuts[i]
        if not any(ci < cj for j, cj in enumerate(cuts) if j != i):
            kept.append(hp)
    return kept


def smallest_period(periods: Iterable[Period]) -> Period | None:
    """Minimum under the canonical order (p, then h); None when empty."""
    return min(periods, key=period_order_key, default=None)


@dataclass(frozen=True)
class PeriodStats:
    """Summary of a period set; ``nondeducible`` is None unless requested."""

    total: int
    nontrivial: int
    smallest: Period | None
    nondeducible: int | None = None


def period_stats(
    periods: Iterable[Period], n: int, *, with_nondeducible: bool = False
) -> PeriodStats:
    """Counts and minimum of a (possibly streamed) period set.

    Consumes the iterable once. The non-deducible count requires holding
    the whole set, so it is only computed on request.
    """
    if with_nondeducible:
        periods = list(periods)
    total = nontrivial = 0
    smallest = None
    for hp in periods:
        total += 1
        if hp[0] + 2 * hp[1] <= n:
            nontrivial += 1
        if smallest is None or period_order_key(hp) < period_order_key(smallest):
            smallest = hp
    nondeducible = len(filter_nondeducible(periods, n)) if with_nondeducible else None
    return PeriodStats(total, nontrivial, smallest, nondeducible)
