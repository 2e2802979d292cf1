"""Command-line interface: enumerate, generate, cross-verify, benchmark.

Four subcommands:

* ``periods``  - print the Abelian periods of one word, one ``h p`` line per
  period in canonical order (or JSON, a count, the smallest period, or a
  per-prefix listing for the on-line algorithms).
* ``generate`` - print a deterministic test word (fibonacci, cyclic, spike,
  random).
* ``verify``   - run all five algorithms plus the definition-level
  enumeration on a corpus of words and report the first disagreement.
* ``bench``    - CSV timing comparison over seeded random words.

Exit codes: 0 success, 1 data or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from itertools import product
from typing import Iterator

from .analysis import filter_nondeducible, filter_nontrivial, smallest_period
from .generators import cyclic_word, fibonacci_word, random_word, spike_word
from .offline import brute_force_periods, select_periods
from .online import online_array, online_heap, online_list, table_final_periods
from .words import (
    Alphabet,
    Period,
    PrefixParikhTable,
    Word,
    period_order_key,
    periods_by_definition,
)

ONLINE_ALGOS = ("online-array", "online-list", "online-heap")
ALGOS = ("brute", "select") + ONLINE_ALGOS
FILTERS = ("all", "nontrivial", "nondeducible")


def run_algorithm(
    word: Word, algo: str, *, nontrivial_only: bool = False
) -> list[Period]:
    """Period list of the whole word in canonical order, by any algorithm.

    With ``nontrivial_only`` the off-line algorithms cap their candidate
    range at h + 2p <= n (the cheap path); the on-line ones cannot shrink
    their bookkeeping, so they run in full and filter afterwards. Both
    routes return the same list.
    """
    table = PrefixParikhTable(word)
    if algo == "brute":
        return list(brute_force_periods(table, nontrivial_only=nontrivial_only))
    if algo == "select":
        return list(select_periods(table, nontrivial_only=nontrivial_only))
    if algo == "online-array":
        result = table_final_periods(online_array(table), table.n)
    elif algo == "online-list":
        result = sorted(online_list(table), key=period_order_key)
    elif algo == "online-heap":
        result = sorted(online_heap(table), key=period_order_key)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    if nontrivial_only:
        result = filter_nontrivial(result, table.n)
    return result


def prefix_period_sets(word: Word, algo: str) -> list[set[Period]]:
    """Per-prefix period sets of an on-line algorithm, index i-1 for w[1..i]."""
    if algo not in ONLINE_ALGOS:
        raise ValueError(f"{algo!r} is not an on-line algorithm")
    table = PrefixParikhTable(word)
    collected: list[set[Period]] = []

    def sink(i: int, periods: set[Period]) -> None:
        collected.append(periods)

    if algo == "online-array":
        online_array(table, sink)
    elif algo == "online-list":
        online_list(table, sink)
    else:
        online_heap(table, sink)
    return collected


def cross_check_word(word: Word, *, check_prefixes: bool = True) -> str | None:
    """Compare all five algorithms against the definition-level enumeration.

    Returns None when everything agrees, otherwise a one-line description
    of the first disagreement (word, algorithm pair, differing period).
    With ``check_prefixes`` the three on-line algorithms' per-prefix sets
    are also compared against the definition on every prefix.
    """
    table = PrefixParikhTable(word)
    reference = list(periods_by_definition(table))
    final = {
        "brute": list(brute_force_periods(table)),
        "select": list(select_periods(table)),
        "online-array": table_final_periods(online_array(table), table.n),
        "online-list": sorted(online_list(table), key=period_order_key),
        "online-heap": sorted(online_heap(table), key=period_order_key),
    }
    for name, got in final.items():
        if got != reference:
            bad = min(set(got) ^ set(reference), key=period_order_key)
            return (
                f"word {word.text!r}: {name} vs definition disagree on period "
                f"({bad[0]}, {bad[1]})"
            )
    if check_prefixes and len(word):
        per_prefix = {name: prefix_period_sets(word, name) for name in ONLINE_ALGOS}
        for i in range(1, len(word) + 1):
            ref_i = set(periods_by_definition(PrefixParikhTable(word.prefix(i))))
            for name in ONLINE_ALGOS:
                got_i = per_prefix[name][i - 1]
                if got_i != ref_i:
                    bad = min(got_i ^ ref_i, key=period_order_key)
                    return (
                        f"word {word.text!r}: {name} vs definition disagree on "
                        f"period ({bad[0]}, {bad[1]}) at prefix length {i}"
                    )
    return None


def _apply_filter(periods: list[Period], filter_name: str, n: int) -> list[Period]:
    if filter_name == "nontrivial":
        return filter_nontrivial(periods, n)
    if filter_name == "nondeducible":
        return filter_nondeducible(periods, n)
    return periods


def _input_word(args) -> Word:
    if args.word is not None:
        return Word(args.word)
    with open(args.file, "rb") as fh:
        raw = fh.read()
    return Word(raw.rstrip(b"\r\n").decode("latin-1"))


def cmd_periods(args) -> int:
    try:
        word = _input_word(args)
    except OSError as exc:
        print(f"error: cannot read word: {exc}", file=sys.stderr)
        return 1
    if args.prefixes:
        if args.algo not in ONLINE_ALGOS:
            args.parser.error("--prefixes requires an on-line --algo")
        if args.smallest or args.count or args.as_json:
            args.parser.error("--prefixes cannot be combined with --smallest, --count or --json")
        for i, periods in enumerate(prefix_period_sets(word, args.algo), start=1):
            shown = _apply_filter(sorted(periods, key=period_order_key), args.filter_name, i)
            print(f"# prefix {i}")
            for h, p in shown:
                print(f"{h} {p}")
        return 0
    periods = _apply_filter(run_algorithm(word, args.algo), args.filter_name, len(word))
    if args.as_json:
        doc = {
            "word_length": len(word),
            "algo": args.algo,
            "filter": args.filter_name,
            "periods": [list(hp) for hp in periods],
        }
        print(json.dumps(doc))
    elif args.count:
        print(len(periods))
    elif args.smallest:
        hp = smallest_period(periods)
        if hp is not None:
            print(f"{hp[0]} {hp[1]}")
    else:
        for h, p in periods:
            print(f"{h} {p}")
    return 0


def cmd_generate(args) -> int:
    try:
        if args.kind == "fibonacci":
            word = fibonacci_word(args.length)
        elif args.kind == "cyclic":
            if args.sigma is None:
                args.parser.error("--sigma is required for cyclic words")
            word = cyclic_word(args.sigma, args.length)
        elif args.kind == "spike":
            if args.length % 2 == 0:
                args.parser.error("spike words have odd length 2k + 1")
            word = spike_word((args.length - 1) // 2)
        else:
            if args.sigma is None:
                args.parser.error("--sigma is required for random words")
            word = random_word(args.sigma, args.length, args.seed)
    except ValueError as exc:
        args.parser.error(str(exc))
    print(word.text)
    return 0


def _verify_corpus(args) -> Iterator[Word]:
    if args.max_len is not None:
        alphabet = Alphabet("abcdefghijklmnopqrstuvwxyz"[: args.sigma])
        for length in range(1, args.max_len + 1):
            for letters in product(alphabet.letters, repeat=length):
                yield Word("".join(letters), alphabet)
    else:
        for j in range(args.random_count):
            yield random_word(args.sigma, args.length, seed=args.seed + j)


def cmd_verify(args) -> int:
    if (args.max_len is None) == (args.random_count is None):
        args.parser.error("choose one mode: --max-len (exhaustive) or --random (sampled)")
    if args.random_count is not None and args.length is None:
        args.parser.error("--len is required with --random")
    if not 1 <= args.sigma <= 26:
        args.parser.error("--sigma must be between 1 and 26")
    checked = 0
    for word in _verify_corpus(args):
        message = cross_check_word(word)
        if message is not None:
            print(message)
            return 1
        checked += 1
    noun = "word" if checked == 1 else "words"
    print(f"verified {checked} {noun}: all algorithms and the definition agree")
    return 0


def _bench_count(word: Word, algo: str, nontrivial: bool) -> int:
    """One timed run: build the prefix table, enumerate, count post-filter."""
    table = PrefixParikhTable(word)
    if algo == "brute":
        return sum(1 for _ in brute_force_periods(table, nontrivial_only=nontrivial))
    if algo == "select":
        return sum(1 for _ in select_periods(table, nontrivial_only=nontrivial))
    if algo == "online-array":
        final = table_final_periods(online_array(table), table.n)
    elif algo == "online-list":
        final = online_list(table)
    else:
        final = online_heap(table)
    if nontrivial:
        return len(filter_nontrivial(final, table.n))
    return len(final)


def _word_seed(seed: int, sigma: int, length: int, j: int) -> int:
    # same words for every algorithm of a (sigma, length) cell
    return ((seed * 1000003 + sigma) * 1000003 + length) * 1000003 + j


def cmd_bench(args) -> int:
    out = open(args.csv_path, "w", newline="") if args.csv_path else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(
            ["algo", "sigma", "length", "reps", "mean_ms", "stddev_ms", "total_periods"]
        )
        if args.reps <= 0:
            return 0
        nontrivial = args.filter_name == "nontrivial"
        for algo in args.algos:
            for sigma in args.sigmas:
                for length in args.lengths:
                    times_ms = []
                    total = 0
                    for j in range(args.reps):
                        word = random_word(
                            sigma, length, seed=_word_seed(args.seed, sigma, length, j)
                        )
                        t0 = time.perf_counter()
                        count = _bench_count(word, algo, nontrivial)
                        times_ms.append((time.perf_counter() - t0) * 1000.0)
                        total += count
                    writer.writerow(
                        [
                            algo,
                            sigma,
                            length,
                            args.reps,
                            f"{statistics.fmean(times_ms):.3f}",
                            f"{statistics.pstdev(times_ms):.3f}",
                            total,
                        ]
                    )
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _algo_list(text: str) -> list[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    for name in names:
        if name not in ALGOS:
            raise argparse.ArgumentTypeError(f"unknown algorithm {name!r}")
    if not names:
        raise argparse.ArgumentTypeError("empty algorithm list")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelianperiods",
        description="Compute, verify and benchmark the Abelian periods of words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("periods", help="enumerate the Abelian periods of a word")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--word", help="the word itself")
    source.add_argument("--file", help="file to read the word from (raw bytes, trailing newlines stripped)")
    p.add_argument("--algo", choices=ALGOS, default="select")
    p.add_argument("--filter", choices=FILTERS, default="all", dest="filter_name")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--smallest", action="store_true", help="print only the smallest period")
    mode.add_argument("--count", action="store_true", help="print only the number of periods")
    mode.add_argument("--json", action="store_true", dest="as_json", help="print one JSON document")
    p.add_argument(
        "--prefixes",
        action="store_true",
        help="print the period set of every prefix (on-line algorithms only)",
    )
    p.set_defaults(func=cmd_periods, parser=p)

    p = sub.add_parser("generate", help="print a deterministic test word")
    p.add_argument("--kind", choices=("fibonacci", "cyclic", "spike", "random"), required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--sigma", type=int, help="alphabet size (cyclic and random words)")
    p.add_argument("--seed", type=int, default=0, help="random words only")
    p.set_defaults(func=cmd_generate, parser=p)

    p = sub.add_parser("verify", help="cross-check all algorithms against the definition")
    p.add_argument("--max-len", type=int, dest="max_len", help="exhaustive mode: all words up to this length")
    p.add_argument("--sigma", type=int, default=2, help="alphabet size (both modes)")
    p.add_argument("--random", type=int, dest="random_count", help="sampled mode: number of random words")
    p.add_argument("--len", type=int, dest="length", help="sampled mode: word length")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify, parser=p)

    p = sub.add_parser("bench", help="CSV timing comparison on seeded random words")
    p.add_argument("--algos", type=_algo_list, default=list(ALGOS[:2]))
    p.add_argument("--lengths", type=_int_list, default=[100, 1000])
    p.add_argument("--sigma", type=_int_list, default=[2], dest="sigmas")
    p.add_argument("--reps", type=int, default=10, help="words per (algo, sigma, length) cell")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", choices=("all", "nontrivial"), default="all", dest="filter_name")
    p.add_argument("--csv", dest="csv_path", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_bench, parser=p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
