"""Deterministic word generators for tests and benchmarks.

All generators return :class:`~abelianperiods.words.Word` values over their
natural alphabet (``ab`` for the Fibonacci and spike words, the first sigma
lowercase letters otherwise). Random words come from a fixed, documented
generator so that identical arguments produce identical words on every
platform and Python version.
"""

from __future__ import annotations

from string import ascii_lowercase

from .words import Alphabet, Word

__all__ = ["fibonacci_word", "cyclic_word", "spike_word", "random_word"]

_AB = Alphabet("ab")


def _letters(sigma: int) -> str:
    if not 1 <= sigma <= 26:
        raise ValueError("alphabet size must be between 1 and 26")
    return ascii_lowercase[:sigma]


def fibonacci_word(n: int) -> Word:
    """Length-n prefix of the infinite Fibonacci word abaababaabaab...

    Fixed point of a -> ab, b -> a iterated from a; built by the equivalent
    concatenation recurrence w_k = w_{k-1} + w_{k-2}.
    """
    if n < 1:
        raise ValueError("length must be positive")
    prev, cur = "a", "ab"
    while len(cur) < n:
        prev, cur = cur, cur + prev
    return Word(cur[:n], _AB)


def cyclic_word(sigma: int, n: int) -> Word:
    """n / sigma repetitions of the block a_1 a_2 ... a_sigma.

    This family carries quadratically many Abelian periods: every (h, p)
    with p a multiple of sigma and h up to min(p - 1, n - p) is one.
    """
    letters = _letters(sigma)
    if n < 0 or n % sigma:
        raise ValueError(f"alphabet size {sigma} must divide the length {n}")
    return Word(letters * (n // sigma), Alphabet(letters))


def spike_word(k: int) -> Word:
    """The word a^k b a^k of length 2k + 1: one isolated letter mid-word."""
    if k < 0:
        raise ValueError("wing length must be non-negative")
    wing = "a" * k
    return Word(wing + "b" + wing, _AB)


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    # splitmix64 (public domain): stable 64-bit stream for portable seeding.
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_word(sigma: int, n: int, seed: int = 0) -> Word:
    """Uniform i.i.d. word of length n over the first sigma letters.

    Driven by the splitmix64 stream seeded with ``seed``; the same
    (sigma, n, seed) triple always yields the same word.
    """
    letters = _letters(sigma)
    if n < 0:
        raise ValueError("length must be non-negative")
    state = seed & _MASK64
    out = []
    for _ in range(n):
        state, z = _splitmix64(state)
        out.append(letters[z % sigma])
    return Word("".join(out), Alphabet(letters))
