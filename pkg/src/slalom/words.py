"""Reduced words in the free group on two generators a1, a2.

A word is a sequence of terms a_j^n with nonzero integer exponents in
which consecutive terms use different generators.  All values are
immutable; the operations are pure functions.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1

_TOKEN_RE = re.compile(r"(a[12])(?:\^([+-]?\d+))?$")


class WordSyntaxError(ValueError):
    """Malformed word text; ``column`` is the 1-based position of the offender."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


class Generator(enum.Enum):
    A1 = "a1"
    A2 = "a2"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Term:
    gen: Generator
    exponent: int

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("term exponent must be nonzero")
        if not (_INT64_MIN <= self.exponent <= _INT64_MAX):
            raise OverflowError("term exponent exceeds 64-bit range")


@dataclass(frozen=True)
class FreeWord:
    """Reduced word; the empty tuple is the identity."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        for prev, cur in zip(self.terms, self.terms[1:]):
            if prev.gen is cur.gen:
                raise ValueError("word is not reduced: consecutive terms share a generator")

    @property
    def is_identity(self) -> bool:
        return not self.terms

    def letter_length(self) -> int:
        """Total number of generator letters, sum of |exponent|."""
        return sum(abs(t.exponent) for t in self.terms)

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = FreeWord()


def reduce(raw: Iterable[tuple[Generator, int] | Term]) -> FreeWord:
    """Merge adjacent equal-generator terms and drop zero exponents, to a fixed point."""
    stack: list[list] = []
    for item in raw:
        gen, exp = (item.gen, item.exponent) if isinstance(item, Term) else item
        if exp == 0:
            continue
        if stack and stack[-1][0] is gen:
            stack[-1][1] += exp
            if not (_INT64_MIN <= stack[-1][1] <= _INT64_MAX):
                raise OverflowError("exponent overflow while reducing")
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return FreeWord(tuple(Term(g, e) for g, e in stack))


def parse_word(text: str) -> FreeWord:
    """Parse whitespace-separated tokens ``a1``/``a2`` with optional ``^<int>``."""
    raw: list[tuple[Generator, int]] = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        col = m.start() + 1
        tm = _TOKEN_RE.match(tok)
        if tm is None:
            raise WordSyntaxError(f"bad token {tok!r}", col)
        gen = Generator(tm.group(1))
        exp = 1 if tm.group(2) is None else int(tm.group(2))
        if not (_INT64_MIN <= exp <= _INT64_MAX):
            raise WordSyntaxError(f"exponent out of range in {tok!r}", col)
        raw.append((gen, exp))
    return reduce(raw)


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    return reduce(u.terms + v.terms)


def invert(u: FreeWord) -> FreeWord:
    return FreeWord(tuple(Term(t.gen, -t.exponent) for t in reversed(u.terms)))


def format_word(u: FreeWord) -> str:
    """Canonical string; ``parse_word`` round-trips it. Identity formats as ''."""
    parts = []
    for t in u.terms:
        parts.append(t.gen.value if t.exponent == 1 else f"{t.gen.value}^{t.exponent}")
    return " ".join(parts)
