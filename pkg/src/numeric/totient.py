"""
Euler's totient and a certified enclosure of sum_{d>=1} 1/(d phi(d)).

Partial sums use float64 terms (d * phi(d) is formed exactly in int64 before
conversion) summed with math.fsum; every term then carries relative error at
most 2^-52 and the whole sum at most 2^-50 relative, which is the rounding
radius. The tail after D uses phi(d) >= sqrt(d/2): each term is at most
sqrt(2) d^(-3/2), so the tail is at most the integral from D of that, 2 sqrt(2)/sqrt(D).
Endpoints are combined in mpmath interval arithmetic.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from mpmath import iv

from .. import config
from ..errors import CapExceededError, PreconditionError

logger = logging.getLogger(__name__)

ROUNDING_EXPONENT = -50


def euler_phi(d: int) -> int:
    """
    Euler's totient by trial division.

    Raises:
        PreconditionError: d < 1
    """
    if d < 1:
        raise PreconditionError(f"euler_phi needs d >= 1, got {d}")
    result = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


def totient_sieve(limit: int) -> np.ndarray:
    """phi(0..limit) as an int32 array (phi[0] = 0)."""
    phi = np.arange(limit + 1, dtype=np.int32)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    for p in np.flatnonzero(is_prime):
        phi[p::p] -= phi[p::p] // p
    return phi


@dataclass
class ConstantEstimate:
    cutoff: int
    partial_sum: float
    rounding_radius: float
    tail_bound: float
    interval: Tuple[float, float]           # encloses sum_{d>=1} 1/(d phi(d))
    constant_interval: Tuple[float, float]  # encloses c = 1 + that sum

    @property
    def width(self) -> float:
        return self.interval[1] - self.interval[0]

    def to_dict(self) -> dict:
        return {"cutoff": self.cutoff, "partial_sum": self.partial_sum,
                "rounding_radius": self.rounding_radius, "tail_bound": self.tail_bound,
                "interval": list(self.interval), "constant_interval": list(self.constant_interval)}


def _outward(x) -> Tuple[float, float]:
    return (float(np.nextafter(float(x.a), -np.inf)), float(np.nextafter(float(x.b), np.inf)))


def _terms(phi: np.ndarray, cutoff: int, chunk: int):
    """1/(d phi(d)) for d = 1..cutoff, one float64 block of at most chunk terms at a time."""
    for start in range(1, cutoff + 1, chunk):
        stop = min(start + chunk, cutoff + 1)
        d = np.arange(start, stop, dtype=np.int64)
        yield (1.0 / (d * phi[start:stop].astype(np.int64)).astype(np.float64)).tolist()


def density_constant(cutoff: int) -> ConstantEstimate:
    """
    Raises:
        PreconditionError: cutoff < 1
        CapExceededError: cutoff above DENSITY_MAX_CUTOFF
    """
    if cutoff < 1:
        raise PreconditionError(f"cutoff must be at least 1, got {cutoff}")
    if cutoff > config.DENSITY_MAX_CUTOFF:
        raise CapExceededError(f"cutoff {cutoff} exceeds DENSITY_MAX_CUTOFF="
                               f"{config.DENSITY_MAX_CUTOFF}", cutoff, config.DENSITY_MAX_CUTOFF)
    phi = totient_sieve(cutoff)
    partial = math.fsum(itertools.chain.from_iterable(_terms(phi, cutoff, config.DENSITY_CHUNK)))

    saved = iv.prec
    try:
        iv.dps = config.INTERVAL_DPS
        s = iv.mpf(partial)
        radius = s * iv.mpf(2) ** ROUNDING_EXPONENT
        tail = 2 * iv.sqrt(2) / iv.sqrt(cutoff)
        lower, upper = s - radius, s + radius + tail
        estimate = ConstantEstimate(cutoff=cutoff, partial_sum=partial,
                                    rounding_radius=_outward(radius)[1],
                                    tail_bound=_outward(tail)[1],
                                    interval=(_outward(lower)[0], _outward(upper)[1]),
                                    constant_interval=(_outward(1 + lower)[0],
                                                       _outward(1 + upper)[1]))
    finally:
        iv.prec = saved
    logger.info("[Density] D=%d: sum in [%.12f, %.12f]", cutoff, *estimate.interval)
    return estimate
