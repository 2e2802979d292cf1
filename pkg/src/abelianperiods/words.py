"""Words over ordered alphabets, letter-count vectors, and the period oracle.

An Abelian period of a word w of length n is a pair (h, p): w factors as
u0 u1 ... u(k-1) uk where the middle blocks u1..u(k-1) all share one
letter-count (Parikh) vector of norm p, the head u0 has length h and its
vector is strictly contained in the block vector, and the tail uk (length
t = (n - h) mod p) is weakly contained in it.

Conventions used across the whole package:

* positions inside words are 1-based, like in the combinatorics literature;
* periods are plain ``(h, p)`` integer tuples;
* the canonical order on periods is by ``p`` first, then ``h``
  (see :func:`period_order_key`);
* Parikh vectors are plain tuples of per-letter counts, indexed by the
  alphabet order.

``is_abelian_period`` is written directly against the definition and acts
as the correctness oracle for every enumeration algorithm in this package.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterator


Period = tuple[int, int]
ParikhVector = tuple[int, ...]


def period_order_key(period: Period) -> tuple[int, int]:
    """Sort key realising the canonical period order: by p, ties by h."""
    h, p = period
    return (p, h)


class Alphabet:
    """An ordered alphabet a_1 < a_2 < ... < a_sigma of single characters.

    ``ind(a)`` returns the 1-based rank of a letter, so ``ind(a_i) == i``.
    """

    __slots__ = ("letters", "_pos")

    def __init__(self, letters):
        letters = "".join(letters)
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct")
        if sorted(letters) != list(letters):
            raise ValueError("alphabet letters must be strictly increasing")
        self.letters = letters
        self._pos = {a: i for i, a in enumerate(letters)}

    @classmethod
    def from_text(cls, text: str) -> "Alphabet":
        """Alphabet of the distinct symbols of ``text``, sorted by code point."""
        return cls(sorted(set(text)))

    @property
    def size(self) -> int:
        return len(self.letters)

    def ind(self, letter: str) -> int:
        """1-based index of ``letter``; raises ValueError for foreign symbols."""
        try:
            return self._pos[letter] + 1
        except KeyError:
            raise ValueError(f"letter {letter!r} is not in the alphabet") from None

    def __contains__(self, letter) -> bool:
        return letter in self._pos

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({self.letters!r})"


class Word:
    """A word over an :class:`Alphabet`.

    The alphabet may be wider than the set of symbols that actually occur
    (e.g. the word ``bbb`` over the alphabet ``ab``). When no alphabet is
    given it is inferred from the text.
    """

    __slots__ = ("text", "alphabet")

    def __init__(self, text: str, alphabet: Alphabet | None = None):
        if alphabet is None:
            alphabet = Alphabet.from_text(text)
        else:
            for ch in text:
                if ch not in alphabet:
                    raise ValueError(f"symbol {ch!r} is not in the alphabet")
        self.text = text
        self.alphabet = alphabet

    def __len__(self) -> int:
        return len(self.text)

    def symbol(self, i: int) -> str:
        """The i-th symbol, 1-based."""
        if not 1 <= i <= len(self.text):
            raise ValueError(f"position {i} out of range 1..{len(self.text)}")
        return self.text[i - 1]

    def factor(self, i: int, j: int) -> str:
        """The factor from position i to position j inclusive, 1-based."""
        if not (1 <= i and i - 1 <= j <= len(self.text)):
            raise ValueError(f"factor bounds {i}..{j} out of range")
        return self.text[i - 1 : j]

    def prefix(self, i: int) -> "Word":
        """The prefix of length i, over the same alphabet."""
        return Word(self.factor(1, i), self.alphabet)

    def __str__(self) -> str:
        return self.text

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.text == other.text
            and self.alphabet == other.alphabet
        )

    def __hash__(self) -> int:
        return hash((self.text, self.alphabet))

    def __repr__(self) -> str:
        return f"Word({self.text!r}, {self.alphabet!r})"


def parikh(word: Word) -> ParikhVector:
    """Parikh vector of a whole word: per-letter occurrence counts."""
    counts = [0] * word.alphabet.size
    pos = word.alphabet._pos
    for ch in word.text:
        counts[pos[ch]] += 1
    return tuple(counts)


def contains_weak(p: ParikhVector, q: ParikhVector) -> bool:
    """Componentwise p[i] <= q[i]; no condition on the norms."""
    if len(p) != len(q):
        raise ValueError("Parikh vectors over different alphabet sizes")
    return all(x <= y for x, y in zip(p, q))


def contains_strict(p: ParikhVector, q: ParikhVector) -> bool:
    """Weak containment plus strictly smaller norm."""
    if len(p) != len(q):
        raise ValueError("Parikh vectors over different alphabet sizes")
    return sum(p) < sum(q) and all(x <= y for x, y in zip(p, q))


class PrefixParikhTable:
    """Parikh vectors of all prefixes of a word.

    Stores one count row per letter (``prefix_counts[a][j]`` is the number
    of occurrences of letter a in ``w[1..j]``), so the vector of any factor
    comes out of two row lookups per letter. Immutable by convention: do
    not mutate ``prefix_counts``.
    """

    __slots__ = ("word", "n", "prefix_counts")

    def __init__(self, word: Word):
        text = word.text
        cols = [
            list(accumulate(map(letter.__eq__, text), initial=0))
            for letter in word.alphabet.letters
        ]
        self.word = word
        self.n = len(text)
        self.prefix_counts = cols

    @property
    def sigma(self) -> int:
        return len(self.prefix_counts)

    def row(self, j: int) -> ParikhVector:
        """Parikh vector of the prefix w[1..j]; row 0 is the zero vector."""
        if not 0 <= j <= self.n:
            raise ValueError(f"prefix length {j} out of range 0..{self.n}")
        return tuple(c[j] for c in self.prefix_counts)

    def factor(self, i: int, m: int) -> ParikhVector:
        """Parikh vector of the factor of length m starting at position i."""
        if i < 1 or m < 0 or i + m - 1 > self.n:
            raise ValueError(f"factor (i={i}, m={m}) out of range for n={self.n}")
        lo, hi = i - 1, i + m - 1
        return tuple(c[hi] - c[lo] for c in self.prefix_counts)

    def factor_leq(self, i1: int, m1: int, i2: int, m2: int) -> bool:
        """Weak containment of factor (i1, m1) in factor (i2, m2).

        Equivalent to ``contains_weak(self.factor(i1, m1), self.factor(i2, m2))``
        without building the tuples; this is the hot test of the on-line
        algorithms.
        """
        if i1 < 1 or m1 < 0 or i1 + m1 - 1 > self.n:
            raise ValueError(f"factor (i={i1}, m={m1}) out of range for n={self.n}")
        if i2 < 1 or m2 < 0 or i2 + m2 - 1 > self.n:
            raise ValueError(f"factor (i={i2}, m={m2}) out of range for n={self.n}")
        a, b = i1 - 1, i1 + m1 - 1
        c, d = i2 - 1, i2 + m2 - 1
        for col in self.prefix_counts:
            if col[b] - col[a] > col[d] - col[c]:
                return False
        return True

    def factor_equal(self, i1: int, i2: int, m: int) -> bool:
        """Whether the length-m factors at positions i1 and i2 are anagrams."""
        if i1 < 1 or i2 < 1 or m < 0 or i1 + m - 1 > self.n or i2 + m - 1 > self.n:
            raise ValueError(f"factors (i1={i1}, i2={i2}, m={m}) out of range")
        a, b = i1 - 1, i1 + m - 1
        c, d = i2 - 1, i2 + m - 1
        for col in self.prefix_counts:
            if col[b] - col[a] != col[d] - col[c]:
                return False
        return True


def is_abelian_period(table: PrefixParikhTable, h: int, p: int) -> bool:
    """Definition-level check that (h, p) is an Abelian period of the word.

    Requires 0 <= h < p and h + p <= n. Head containment is strict, the
    tail check is weak containment (the tail is shorter than p, so the norm
    condition holds automatically). A single full block with empty head and
    tail is allowed, hence (0, n) is a period of every non-empty word.
    """
    n = table.n
    if not 0 <= h < p:
        raise ValueError(f"head/period ({h}, {p}) violates 0 <= h < p")
    if h + p > n:
        raise ValueError(f"period ({h}, {p}) does not fit in a word of length {n}")
    k, t = divmod(n - h, p)
    block = table.factor(h + 1, p)
    if not contains_strict(table.factor(1, h), block):
        return False
    for j in range(1, k):
        if table.factor(h + j * p + 1, p) != block:
            return False
    return t == 0 or contains_weak(table.factor(n - t + 1, t), block)


def periods_by_definition(
    table: PrefixParikhTable, *, nontrivial_only: bool = False
) -> Iterator[Period]:
    """All Abelian periods, straight from the definition, in canonical order.

    Tries every admissible (h, p) through :func:`is_abelian_period`; the
    enumeration algorithms are validated against this. With
    ``nontrivial_only`` the candidate range is capped at h + 2p <= n.
    """
    n = table.n
    for p in range(1, n + 1):
        hmax = min(p - 1, (n - 2 * p) if nontrivial_only else (n - p))
        for h in range(hmax + 1):
            if is_abelian_period(table, h, p):
                yield h, p
