"""
Stabilizer chains built by the deterministic Schreier-Sims algorithm.

Permutations inside a chain are numpy integer arrays ``a`` with ``a[i]`` the
image of point i. The product "a then b" is ``b[a]``. Base points are taken
from an optional prefix and then, whenever a new strong generator fixes every
base point, its smallest moved point is appended.
"""

import logging
import random
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from .. import config
from ..errors import InternalCheckError

logger = logging.getLogger(__name__)


def perm_dtype(degree: int):
    """Smallest integer dtype able to index `degree` points."""
    return np.int16 if degree < 2 ** 15 else np.int32


def invert_array(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(len(a), dtype=a.dtype)
    return inv


class ChainLevel:
    """One level of the chain: base point, strong generators, explicit transversal."""

    __slots__ = ("base_point", "generators", "transversal", "inverses", "verified")

    def __init__(self, base_point: int, identity: np.ndarray):
        self.base_point = base_point
        self.generators: List[np.ndarray] = []
        # transversal[p] maps base_point to p
        self.transversal: Dict[int, np.ndarray] = {base_point: identity}
        self.inverses: Dict[int, np.ndarray] = {base_point: identity}
        # (orbit point, generator index) pairs whose Schreier generator is known to sift
        self.verified: Set[Tuple[int, int]] = set()

    @property
    def orbit_size(self) -> int:
        return len(self.transversal)

    def inverse(self, point: int) -> np.ndarray:
        inv = self.inverses.get(point)
        if inv is None:
            inv = invert_array(self.transversal[point])
            self.inverses[point] = inv
        return inv

    def copy(self) -> "ChainLevel":
        level = ChainLevel.__new__(ChainLevel)
        level.base_point = self.base_point
        level.generators = list(self.generators)
        level.transversal = dict(self.transversal)
        level.inverses = dict(self.inverses)
        level.verified = set(self.verified)
        return level


class StabilizerChain:
    """
    Base and strong generating set for a permutation group.

    Args:
        degree: Number of points
        generators: Group generators as integer arrays (identities are ignored)
        base_prefix: Points forced to the front of the base
    """

    def __init__(self, degree: int, generators: Sequence[Sequence[int]] = (),
                 base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.dtype = perm_dtype(degree)
        self.identity = np.arange(degree, dtype=self.dtype)
        self.levels: List[ChainLevel] = []

        for point in base_prefix:
            if not 0 <= point < degree:
                raise ValueError(f"base point {point} out of range 0..{degree - 1}")
            if point not in self.base:
                self._append_level(point)

        deepest = -1
        for g in generators:
            g = np.asarray(g, dtype=self.dtype)
            if not self.is_identity(g):
                deepest = max(deepest, self._insert_strong_generator(g, 0))
        if deepest >= 0:
            self._schreier_sims(deepest)
        logger.debug("[Chain] degree=%d base=%s orbits=%s order=%d",
                     degree, self.base, self.orbit_sizes, self.order())

    # -------------------------------------------------------------------------
    # Basic queries
    # -------------------------------------------------------------------------

    @property
    def base(self) -> List[int]:
        return [level.base_point for level in self.levels]

    @property
    def orbit_sizes(self) -> List[int]:
        return [level.orbit_size for level in self.levels]

    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= level.orbit_size
        return result

    def is_identity(self, a: np.ndarray) -> bool:
        return bool(np.array_equal(a, self.identity))

    def strong_generators(self) -> List[np.ndarray]:
        seen = set()
        result = []
        for level in self.levels:
            for g in level.generators:
                if id(g) not in seen:
                    seen.add(id(g))
                    result.append(g)
        return result

    def basic_orbit(self, level: int) -> List[int]:
        return sorted(self.levels[level].transversal)

    def transversal_element(self, level: int, point: int) -> Optional[np.ndarray]:
        """Element mapping the base point of `level` to `point`, or None."""
        return self.levels[level].transversal.get(point)

    # -------------------------------------------------------------------------
    # Sifting and membership
    # -------------------------------------------------------------------------

    def strip(self, g: np.ndarray, start: int = 0) -> Tuple[np.ndarray, int]:
        """
        Sift g through levels start, start+1, ...

        Returns:
            (residue, level) where level is the first level whose basic orbit
            misses the image of its base point, or len(levels) if every level passed.
        """
        for index in range(start, len(self.levels)):
            level = self.levels[index]
            gamma = int(g[level.base_point])
            if gamma not in level.transversal:
                return g, index
            g = level.inverse(gamma)[g]
        return g, len(self.levels)

    def contains(self, g: np.ndarray) -> bool:
        g = np.asarray(g, dtype=self.dtype)
        residue, depth = self.strip(g)
        return depth == len(self.levels) and self.is_identity(residue)

    def base_image(self, g: np.ndarray) -> Tuple[int, ...]:
        """The images of the base points; determines g uniquely inside the group."""
        return tuple(int(g[b]) for b in self.base)

    def element_from_base_image(self, image: Sequence[int]) -> Optional[np.ndarray]:
        """Rebuild the unique element with the given base image, or None if there is none."""
        if len(image) != len(self.levels):
            raise ValueError(f"expected {len(self.levels)} base images, got {len(image)}")
        targets = np.asarray(image, dtype=self.dtype)
        result = self.identity
        for index, level in enumerate(self.levels):
            gamma = int(targets[index])
            u = level.transversal.get(gamma)
            if u is None:
                return None
            targets = level.inverse(gamma)[targets]
            result = result[u] if index else u
        if any(int(t) != b for t, b in zip(targets, self.base)):
            return None
        return result

    def iter_elements(self) -> Iterator[np.ndarray]:
        """Every element exactly once, as products of transversal elements."""
        levels = self.levels

        def walk(index: int, suffix: np.ndarray) -> Iterator[np.ndarray]:
            if index == len(levels):
                yield suffix
                return
            transversal = levels[index].transversal
            for point in sorted(transversal):
                yield from walk(index + 1, suffix[transversal[point]])

        yield from walk(0, self.identity)

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    def _append_level(self, point: int):
        self.levels.append(ChainLevel(point, self.identity))

    def _extend_orbit(self, level: ChainLevel):
        # Existing transversal entries are never replaced, so verified pairs stay valid.
        queue = list(level.transversal)
        transversal = level.transversal
        for p in queue:
            u = transversal[p]
            for g in level.generators:
                q = int(g[p])
                if q not in transversal:
                    transversal[q] = g[u]
                    queue.append(q)

    def _insert_strong_generator(self, h: np.ndarray, start: int) -> int:
        """Add h to every level from `start` while it fixes the base point; return the last level."""
        index = start
        while True:
            if index == len(self.levels):
                moved = np.flatnonzero(h != self.identity)
                self._append_level(int(moved[0]))
            level = self.levels[index]
            level.generators.append(h)
            self._extend_orbit(level)
            if int(h[level.base_point]) != level.base_point:
                return index
            index += 1

    def _schreier_sims(self, start: int):
        index = start
        while index >= 0:
            level = self.levels[index]
            jumped_to = None
            for k, s in enumerate(level.generators):
                for beta in list(level.transversal):
                    if (beta, k) in level.verified:
                        continue
                    us = s[level.transversal[beta]]
                    gamma = int(s[beta])
                    if np.array_equal(us, level.transversal[gamma]):
                        level.verified.add((beta, k))
                        continue
                    schreier = level.inverse(gamma)[us]
                    residue, depth = self.strip(schreier, index + 1)
                    if depth < len(self.levels) or not self.is_identity(residue):
                        jumped_to = self._insert_strong_generator(residue, index + 1)
                        break
                    level.verified.add((beta, k))
                if jumped_to is not None:
                    break
            index = jumped_to if jumped_to is not None else index - 1

    def add_generator(self, g: Sequence[int]) -> bool:
        """Extend the group by g; returns False when g was already a member."""
        g = np.asarray(g, dtype=self.dtype)
        if self.contains(g):
            return False
        self._schreier_sims(self._insert_strong_generator(g, 0))
        return True

    # -------------------------------------------------------------------------
    # Derived chains and checks
    # -------------------------------------------------------------------------

    def tail(self, start: int) -> "StabilizerChain":
        """Chain of the pointwise stabilizer of the first `start` base points."""
        chain = StabilizerChain.__new__(StabilizerChain)
        chain.degree = self.degree
        chain.dtype = self.dtype
        chain.identity = self.identity
        chain.levels = [level.copy() for level in self.levels[start:]]
        return chain

    def verify(self, generators: Sequence[np.ndarray], seed: Optional[int] = None,
               products: Optional[int] = None):
        """
        Strip test: every generator and a run of seeded random products must sift.

        Raises:
            InternalCheckError: if any element fails to sift.
        """
        seed = config.CHAIN_CHECK_SEED if seed is None else seed
        products = config.CHAIN_CHECK_PRODUCTS if products is None else products
        gens = [np.asarray(g, dtype=self.dtype) for g in generators]
        for g in gens:
            if not self.contains(g):
                raise InternalCheckError("stabilizer chain rejects one of its own generators")
        if not gens:
            return
        rng = random.Random(seed)
        for _ in range(products):
            word = self.identity
            for _ in range(rng.randint(2, 8)):
                word = gens[rng.randrange(len(gens))][word]
            if not self.contains(word):
                raise InternalCheckError("stabilizer chain rejects a product of generators")
