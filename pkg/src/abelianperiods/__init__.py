"""Abelian periods of words: enumeration, pruning indexes, analysis.

Quick start::

    >>> from abelianperiods import abelian_periods
    >>> abelian_periods("abaababa")[:3]
    [(1, 2), (0, 3), (2, 3)]

Five interchangeable enumerators are available (two off-line, three
on-line); see :func:`abelian_periods` and the module docs.
"""

from .analysis import (
    PeriodStats,
    cutting_positions,
    filter_nondeducible,
    filter_nontrivial,
    period_stats,
    smallest_period,
)
from .generators import cyclic_word, fibonacci_word, random_word, spike_word
from .offline import brute_force_periods, select_periods, shift_check
from .online import (
    extract_until_ok,
    online_array,
    online_heap,
    online_list,
    table_final_periods,
)
from .rank_select import (
    SelectIndex,
    compute_g,
    compute_m,
    compute_select,
    head_is_blocked,
    select,
)
from .words import (
    Alphabet,
    ParikhVector,
    Period,
    PrefixParikhTable,
    Word,
    contains_strict,
    contains_weak,
    is_abelian_period,
    parikh,
    period_order_key,
    periods_by_definition,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ParikhVector",
    "Period",
    "PeriodStats",
    "PrefixParikhTable",
    "SelectIndex",
    "Word",
    "abelian_periods",
    "brute_force_periods",
    "compute_g",
    "compute_m",
    "compute_select",
    "contains_strict",
    "contains_weak",
    "cutting_positions",
    "cyclic_word",
    "extract_until_ok",
    "fibonacci_word",
    "filter_nondeducible",
    "filter_nontrivial",
    "head_is_blocked",
    "is_abelian_period",
    "online_array",
    "online_heap",
    "online_list",
    "parikh",
    "period_order_key",
    "period_stats",
    "periods_by_definition",
    "random_word",
    "select",
    "select_periods",
    "shift_check",
    "smallest_period",
    "spike_word",
    "table_final_periods",
]


def abelian_periods(word, algo: str = "select") -> "list[Period]":
    """All Abelian periods of ``word`` (a str or :class:`Word`), sorted.

    ``algo`` is one of brute, select, online-array, online-list,
    online-heap; all five return the same list.
    """
    from .cli import run_algorithm

    if isinstance(word, str):
        word = Word(word)
    return run_algorithm(word, algo)
