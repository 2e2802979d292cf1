"""On-line algorithms: the period sets of every prefix, one letter at a time.

All three algorithms share the same dynamic-programming core. A period of
a prefix can only survive an extension, never reappear: if (h, p) fails for
w[1..i] it fails for every longer prefix. Reading position i therefore
boils down to two tests per ongoing period:

* the tail grew inside a block (d = (i - h) mod p != 0): the new tail must
  stay weakly contained in the previous full block;
* the tail just completed a block (d = 0): the completed block must be an
  anagram of the one before it;

plus seeding the brand-new candidates (h, i - h) for 2h < i whose head is
strictly contained in the rest of the prefix.

The three variants differ only in how the ongoing set is stored: a table
remembering the longest prefix each pair survived, a plain list rebuilt
per position, or a family of min-heaps bucketed by current tail length.
The heap variant tests only each heap's minimum: if the minimum survives,
every period sharing that tail length survives with it (their last full
blocks end at the same position and nest by length), so whole buckets pass
in one comparison.

Every algorithm accepts an optional ``sink(i, periods)`` callback invoked
after each position with the period set of w[1..i] (a fresh set, unordered;
sinks must not call back into the running algorithm). Without a sink no
per-prefix sets are materialised.
"""

from __future__ import annotations

import heapq
from typing import Callable

from .words import Period, PrefixParikhTable, period_order_key

__all__ = [
    "online_array",
    "online_list",
    "online_heap",
    "extract_until_ok",
    "table_final_periods",
]

Sink = Callable[[int, "set[Period]"], None]


def _survives(table: PrefixParikhTable, i: int, h: int, p: int) -> tuple[bool, bool]:
    """Extension test at position i for a period of w[1..i-1].

    Returns (ok, completed); completed means position i closed a full block.
    """
    d = (i - h) % p
    if d:
        return table.factor_leq(i - d + 1, d, i - d - p + 1, p), False
    return table.factor_equal(i - p + 1, i - 2 * p + 1, p), True


def online_array(
    table: PrefixParikhTable, sink: Sink | None = None
) -> dict[Period, int]:
    """Longest-surviving-prefix table over all (h, p) pairs.

    The returned mapping sends (h, p) to the length of the longest prefix
    having that Abelian period, or to -1 when the candidate already failed
    head containment when it was first seeded. Pairs never seeded are
    absent. The final period set of the word is ``{hp : t[hp] == n}``.
    """
    n = table.n
    t: dict[Period, int] = {}
    if n == 0:
        return t
    t[0, 1] = 1
    active: list[Period] = [(0, 1)]
    cols = table.prefix_counts
    if sink is not None:
        sink(1, set(active))
    for i in range(2, n + 1):
        cur: list[Period] = []
        for hp in active:
            h, p = hp
            d = (i - h) % p
            mid = i - d if d else i - p  # where the leaned-on block ends
            lo = mid - p
            ok = True
            if d:
                for col in cols:
                    if col[i] - col[mid] > col[mid] - col[lo]:
                        ok = False
                        break
            else:
                for col in cols:
                    if col[i] - col[mid] != col[mid] - col[lo]:
                        ok = False
                        break
            if ok:
                t[hp] = i
                cur.append(hp)
        for h in range((i - 1) // 2 + 1):
            ok = True
            for col in cols:
                if 2 * col[h] > col[i]:
                    ok = False
                    break
            if ok:
                t[h, i - h] = i
                cur.append((h, i - h))
            else:
                t[h, i - h] = -1
        active = cur
        if sink is not None:
            sink(i, set(active))
    return t


def table_final_periods(t: dict[Period, int], n: int) -> list[Period]:
    """Period set of the whole word out of an :func:`online_array` table."""
    return sorted((hp for hp, j in t.items() if j == n), key=period_order_key)


def online_list(table: PrefixParikhTable, sink: Sink | None = None) -> list[Period]:
    """Plain-list variant: keeps exactly the ongoing periods, retests all.

    Returns the period list of the whole word (unordered).
    """
    n = table.n
    if n == 0:
        return []
    cur: list[Period] = [(0, 1)]
    cols = table.prefix_counts
    if sink is not None:
        sink(1, set(cur))
    for i in range(2, n + 1):
        nxt: list[Period] = []
        for hp in cur:
            h, p = hp
            d = (i - h) % p
            mid = i - d if d else i - p
            lo = mid - p
            ok = True
            if d:
                for col in cols:
                    if col[i] - col[mid] > col[mid] - col[lo]:
                        ok = False
                        break
            else:
                for col in cols:
                    if col[i] - col[mid] != col[mid] - col[lo]:
                        ok = False
                        break
            if ok:
                nxt.append(hp)
        for h in range((i - 1) // 2 + 1):
            ok = True
            for col in cols:
                if 2 * col[h] > col[i]:
                    ok = False
                    break
            if ok:
                nxt.append((h, i - h))
        cur = nxt
        if sink is not None:
            sink(i, set(cur))
    return cur


def extract_until_ok(
    heap: list[tuple[int, int]],
    i: int,
    table: PrefixParikhTable,
    new_heap: list[tuple[int, int]],
) -> None:
    """Pop failing minima off ``heap`` until its root survives position i.

    Heap entries are (p, h) pairs so the heap order is the canonical period
    order. Popped periods are gone for good (a failed extension can never
    recover). If the surviving root just completed a block it migrates to
    ``new_heap``, the bucket for empty tails. A heap whose root already
    survives is left untouched.
    """
    while heap:
        p, h = heap[0]
        ok, completed = _survives(table, i, h, p)
        if ok:
            if completed:
                heapq.heappush(new_heap, heapq.heappop(heap))
            return
        heapq.heappop(heap)


def online_heap(table: PrefixParikhTable, sink: Sink | None = None) -> set[Period]:
    """Heap-bucket variant: one test per bucket on the happy path.

    Ongoing periods are grouped into min-heaps by current tail length; all
    members of a bucket keep sharing a tail (the same suffix of the prefix
    read so far), so when the bucket minimum survives the whole bucket
    does. Only on a failing minimum does the bucket get trimmed entry by
    entry. Completed-block roots and fresh candidates collect in a new
    empty-tail bucket each round; emptied buckets are dropped.

    Returns the period set of the whole word.
    """
    n = table.n
    if n == 0:
        return set()
    heaps: list[list[tuple[int, int]]] = [[(1, 0)]]
    cols = table.prefix_counts
    if sink is not None:
        sink(1, {(0, 1)})
    for i in range(2, n + 1):
        new_heap: list[tuple[int, int]] = []
        kept: list[list[tuple[int, int]]] = []
        for heap in heaps:
            p, h = heap[0]
            ok, completed = _survives(table, i, h, p)
            if not ok:
                extract_until_ok(heap, i, table, new_heap)
            elif completed:
                heapq.heappush(new_heap, heapq.heappop(heap))
            if heap:
                kept.append(heap)
        h = 0
        while 2 * h < i:
            contained = True
            for col in cols:
                if 2 * col[h] > col[i]:
                    contained = False
                    break
            if not contained:
                break
            heapq.heappush(new_heap, (i - h, h))
            h += 1
        if new_heap:
            kept.append(new_heap)
        heaps = kept
        if sink is not None:
            sink(i, {(h, p) for heap in heaps for p, h in heap})
    return {(h, p) for heap in heaps for p, h in heap}
