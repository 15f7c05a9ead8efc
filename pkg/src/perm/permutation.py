"""Permutations of {0, ..., n-1}: construction, cycle notation, composition.

Points are 0-based internally and 1-based in every piece of text I/O.
Composition is "left acts first": ``p * q`` applies p, then q, so that
``(p * q)[i] == q[p[i]]`` and ``i^(pq) = (i^p)^q``.
"""

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from .. import config
from ..errors import DegreeMismatchError, PermutationParseError


@dataclass(frozen=True)
class Permutation:
    """An immutable bijection of {0, ..., degree-1}; images[i] is the image of i."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation degree must be positive")
        if n > config.MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds MAX_DEGREE={config.MAX_DEGREE}")
        if sorted(images) != list(range(n)):
            raise ValueError("images are not a bijection of 0..n-1")
        object.__setattr__(self, "images", images)

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_trusted(cls, images: Sequence[int]) -> "Permutation":
        """Wrap images already known to be a bijection (skips validation)."""
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", tuple(images))
        return perm

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from disjoint 0-based cycles; points not mentioned are fixed."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(tuple(images))

    # -------------------------------------------------------------------------
    # Group operations
    # -------------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return product(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation.from_trusted(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return by^-1 * self * by."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self) -> List[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def order(self) -> int:
        return lcm(*(len(c) for c in cycle_decomposition(self))) if not self.is_identity() else 1

    def cycles(self) -> List[Tuple[int, ...]]:
        return cycle_decomposition(self)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


# =============================================================================
# Composition and cycles
# =============================================================================

def product(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation.from_trusted(tuple(map(q.images.__getitem__, p.images)))


def cycle_decomposition(p: Permutation) -> List[Tuple[int, ...]]:
    """
    Disjoint cycles of length >= 2.

    Each cycle starts at its minimal point and the cycles are sorted by that point.
    """
    seen = [False] * p.degree
    cycles = []
    for start in range(p.degree):
        if seen[start] or p.images[start] == start:
            continue
        cycle = [start]
        seen[start] = True
        j = p.images[start]
        while j != start:
            seen[j] = True
            cycle.append(j)
            j = p.images[j]
        cycles.append(tuple(cycle))
    return cycles


def format_cycles(p: Permutation) -> str:
    """Render in 1-based cycle notation; the identity renders as '()'."""
    cycles = cycle_decomposition(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


# =============================================================================
# Parsing
# =============================================================================

_TOKEN_RE = re.compile(r"\s+|\(|\)|,|\d+|\S")


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Parse 1-based disjoint-cycle notation such as "(1 2 3)(4 5)".

    Commas are accepted as separators inside a cycle. Singleton cycles and "()"
    denote fixed points.

    Raises:
        PermutationParseError: repeated point, point out of range or malformed
            parentheses; the message names the offending token.
    """
    if degree <= 0:
        raise PermutationParseError(f"degree must be positive, got {degree}")
    cycles: List[List[int]] = []
    current = None
    seen = set()
    for match in _TOKEN_RE.finditer(text):
        token = match.group()
        if token.isspace() or token == ",":
            if token == "," and current is None:
                raise PermutationParseError(f"unexpected token ',' at offset {match.start()}", token)
            continue
        if token == "(":
            if current is not None:
                raise PermutationParseError(f"unexpected token '(' at offset {match.start()}", token)
            current = []
        elif token == ")":
            if current is None:
                raise PermutationParseError(f"unexpected token ')' at offset {match.start()}", token)
            if current:
                cycles.append(current)
            current = None
        elif token.isdigit():
            if current is None:
                raise PermutationParseError(f"point {token} outside parentheses", token)
            point = int(token)
            if point < 1 or point > degree:
                raise PermutationParseError(f"point {point} out of range 1..{degree}", token)
            if point in seen:
                raise PermutationParseError(f"repeated point {point}", token)
            seen.add(point)
            current.append(point - 1)
        else:
            raise PermutationParseError(f"unexpected token {token!r} at offset {match.start()}", token)
    if current is not None:
        raise PermutationParseError("unclosed parenthesis", "(")
    if not text.strip():
        raise PermutationParseError("empty permutation text; use '()' for the identity", "")
    return Permutation.from_cycles(cycles, degree)


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()
