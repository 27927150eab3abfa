"""Pure 3-braids, geometric strand synthesis, and the cross-ratio correspondence.

A braid word in sigma1, sigma2 is traced as three strand motions starting
at the base configuration (-1, 0, 1); each letter performs a half-turn of
the two strands at the affected slots.  The cross-ratio curve
2 (g2 - g1)/(g3 - g1) - 1 lands in the twice-punctured plane, and reading
its word through the covering yields the induced homomorphism onto the
free group, whose kernel is generated by the full twist (s1 s2 s1)^2.
"""

from __future__ import annotations

import cmath
import enum
import math
import re
from dataclasses import dataclass
from slalom.covering import Plane, PolyPath, curve_to_word, make_path
from slalom.syllables import BoundaryCondition, BoundConstants, LambdaBounds, lambda_bounds
from slalom.words import FreeWord

_SLOTS = (-1.0, 0.0, 1.0)
_HALF_GAP = 0.5          # half the distance between adjacent slots
_TURN_RADIUS_MIN = 0.35  # pair radius at mid-turn, keeps strands apart
_MIN_SEPARATION = 0.2

_BRAID_TOKEN_RE = re.compile(r"(s[12])(?:\^([+-]?\d+))?$")


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


class PurityError(ValueError):
    """The braid does not return every strand to its starting slot."""


class BraidGenerator(enum.Enum):
    SIGMA1 = "s1"
    SIGMA2 = "s2"


@dataclass(frozen=True)
class BraidLetter:
    gen: BraidGenerator
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("letter sign must be +-1")


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[BraidLetter, ...] = ()

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(BraidLetter(l.gen, -l.sign) for l in reversed(self.letters)))

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class StrandPaths:
    """Three strand trajectories over a common parameter grid."""

    strands: tuple[tuple[complex, ...], tuple[complex, ...], tuple[complex, ...]]

    def __post_init__(self):
        n = len(self.strands[0])
        if any(len(s) != n for s in self.strands):
            raise ValueError("strands must share a parameter grid")
        for i in range(3):
            for j in range(i + 1, 3):
                for a, b in zip(self.strands[i], self.strands[j]):
                    if abs(a - b) < _MIN_SEPARATION:
                        raise ValueError("strands violate the separation tolerance")


def parse_braid(text: str) -> BraidWord:
    """Tokens ``s1``/``s2`` with optional ``^<int>``, expanded to unit letters."""
    letters: list[BraidLetter] = []
    for m in re.finditer(r"\S+", text):
        tok, col = m.group(0), m.start() + 1
        tm = _BRAID_TOKEN_RE.match(tok)
        if tm is None:
            raise BraidSyntaxError(f"bad token {tok!r}", col)
        gen = BraidGenerator(tm.group(1))
        exp = 1 if tm.group(2) is None else int(tm.group(2))
        sign = 1 if exp > 0 else -1
        letters.extend(BraidLetter(gen, sign) for _ in range(abs(exp)))
    return BraidWord(tuple(letters))


def format_braid(b: BraidWord) -> str:
    return " ".join(l.gen.value if l.sign == 1 else f"{l.gen.value}^-1" for l in b.letters)


def full_twist() -> BraidWord:
    """The center generator (s1 s2 s1)^2."""
    return parse_braid("s1 s2 s1 s1 s2 s1")


def permutation(b: BraidWord) -> tuple[int, int, int]:
    """Image in S3 as the tuple (slot of strand 1, 2, 3); sigma_i maps to (i, i+1)."""
    slot = [0, 1, 2]
    for letter in b.letters:
        i = 0 if letter.gen is BraidGenerator.SIGMA1 else 1
        for s in range(3):
            if slot[s] == i:
                slot[s] = i + 1
            elif slot[s] == i + 1:
                slot[s] = i
    return tuple(slot)


def is_pure(b: BraidWord) -> bool:
    return permutation(b) == (0, 1, 2)


def braid_to_strands(b: BraidWord, samples_per_crossing: int = 32) -> StrandPaths:
    """Trace the strand motions of a pure braid from base point (-1, 0, 1).

    Each letter rotates the pair at the affected slots by a half-turn about
    their midpoint (counterclockwise for positive sign); the pair radius dips
    to _TURN_RADIUS_MIN mid-turn so the moving strands clear the static one.
    """
    if samples_per_crossing < 16:
        raise ValueError("samples_per_crossing must be >= 16")
    if not is_pure(b):
        raise PurityError(f"braid {format_braid(b)!r} is not pure: permutation {permutation(b)}")
    slot = [0, 1, 2]  # strand -> slot
    paths: list[list[complex]] = [[complex(_SLOTS[s])] for s in slot]
    for letter in b.letters:
        i = 0 if letter.gen is BraidGenerator.SIGMA1 else 1
        moving = [s for s in range(3) if slot[s] in (i, i + 1)]
        static = next(s for s in range(3) if s not in moving)
        center = complex((_SLOTS[i] + _SLOTS[i + 1]) / 2)
        start = {s: complex(_SLOTS[slot[s]]) for s in moving}
        for j in range(1, samples_per_crossing + 1):
            t = j / samples_per_crossing
            radius = _HALF_GAP - (_HALF_GAP - _TURN_RADIUS_MIN) * math.sin(math.pi * t)
            rot = cmath.exp(1j * letter.sign * math.pi * t)
            for s in moving:
                paths[s].append(center + (start[s] - center) * rot * (radius / _HALF_GAP))
            paths[static].append(paths[static][-1])
        slot[moving[0]], slot[moving[1]] = slot[moving[1]], slot[moving[0]]
    return StrandPaths(tuple(tuple(p) for p in paths))


def cross_ratio_curve(s: StrandPaths) -> PolyPath:
    """Pointwise 2 (g2 - g1)/(g3 - g1) - 1; a loop at 0 for pure braids."""
    g1, g2, g3 = s.strands
    pts = []
    for a, b, c in zip(g1, g2, g3):
        den = c - a
        if abs(den) < 1e-9:
            raise ValueError("degenerate configuration: strands 1 and 3 collide")
        pts.append(2 * (b - a) / den - 1)
    return make_path(pts, Plane.PUNCTURED)


def cstar(b: BraidWord, samples_per_crossing: int = 32) -> FreeWord:
    """The induced word of a pure braid; kernel is generated by the full twist."""
    return curve_to_word(cross_ratio_curve(braid_to_strands(b, samples_per_crossing)))


def braid_invariant(
    b: BraidWord,
    bc: BoundaryCondition,
    k: BoundConstants = BoundConstants(),
    samples_per_crossing: int = 32,
) -> LambdaBounds:
    """Lambda bounds of the induced word; a conformal invariant of the braid."""
    return lambda_bounds(cstar(b, samples_per_crossing), bc, k)
