"""
數值模組 測試
Euler totient 與 sum 1/(d φ(d)) 的區間估計
"""

import math
import sys
from pathlib import Path

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src import config
from src.errors import CapExceededError, PreconditionError
from src.numeric import density_constant, euler_phi, totient_sieve


@pytest.mark.parametrize("d, expected", [(1, 1), (2, 1), (12, 4), (36, 12), (97, 96),
                                         (1024, 512), (999_999_937, 999_999_936)])
def test_euler_phi(d, expected):
    assert euler_phi(d) == expected


def test_euler_phi_brute_force():
    for d in range(1, 200):
        units = sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)
        assert euler_phi(d) == units, f"phi({d})"


def test_euler_phi_rejects_zero():
    with pytest.raises(PreconditionError):
        euler_phi(0)


def test_sieve_matches_trial_division():
    phi = totient_sieve(1000)
    assert phi[0] == 0
    assert all(int(phi[d]) == euler_phi(d) for d in range(1, 1001))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5000), st.integers(1, 5000))
def test_phi_multiplicative(m, n):
    assume(math.gcd(m, n) == 1)
    assert euler_phi(m * n) == euler_phi(m) * euler_phi(n)


def test_single_term():
    estimate = density_constant(1)
    assert estimate.partial_sum == 1.0
    assert estimate.interval[0] <= 1.0
    assert estimate.interval[1] >= 1 + 2 * math.sqrt(2)
    assert estimate.interval[1] == pytest.approx(1 + 2 * math.sqrt(2), rel=1e-12)


def test_two_terms():
    estimate = density_constant(2)
    assert estimate.partial_sum == 1.5
    assert estimate.tail_bound == pytest.approx(2.0, rel=1e-12)


def test_interval_encloses_partial_sum():
    estimate = density_constant(10_000)
    low, high = estimate.interval
    assert low < estimate.partial_sum < high
    assert estimate.rounding_radius > 0
    assert estimate.tail_bound == pytest.approx(2 * math.sqrt(2) / 100, rel=1e-12)
    assert estimate.width == pytest.approx(high - low)
    c_low, c_high = estimate.constant_interval
    assert c_low <= low + 1 and c_high >= high + 1
    assert c_low == pytest.approx(low + 1) and c_high == pytest.approx(high + 1)


def test_upper_endpoint_shrinks():
    small = density_constant(1000)
    large = density_constant(4000)
    assert large.partial_sum >= small.partial_sum
    assert large.interval[1] <= small.interval[1]
    assert large.width < small.width


def test_bracket_at_ten_million():
    """D = 10^7 的區間落在 (2.2, 2.23) 之內"""
    estimate = density_constant(10 ** 7)
    low, high = estimate.interval
    assert 2.2 < low < high < 2.23, f"interval {estimate.interval}"


def test_cutoff_errors(monkeypatch):
    with pytest.raises(PreconditionError):
        density_constant(0)
    monkeypatch.setattr(config, "DENSITY_MAX_CUTOFF", 100)
    with pytest.raises(CapExceededError) as info:
        density_constant(101)
    assert info.value.limit == 100


def test_blockwise_sum_is_exact(monkeypatch):
    """分塊累加與逐項 fsum 結果完全相同"""
    direct = math.fsum(1 / (d * euler_phi(d)) for d in range(1, 1001))
    monkeypatch.setattr(config, "DENSITY_CHUNK", 7)
    assert density_constant(1000).partial_sum == direct
    monkeypatch.setattr(config, "DENSITY_CHUNK", 5000)
    assert density_constant(1000).partial_sum == direct


def test_default_cutoff_ceiling():
    # int32 sieve plus the prime mask stays in the low hundreds of MB
    assert config.DENSITY_MAX_CUTOFF * 5 <= 300 * 10 ** 6
    assert config.DENSITY_MAX_CUTOFF >= 10 ** 7


def test_estimate_serializes():
    data = density_constant(2).to_dict()
    assert data["cutoff"] == 2
    assert data["partial_sum"] == 1.5
    assert len(data["interval"]) == 2
    assert len(data["constant_interval"]) == 2
