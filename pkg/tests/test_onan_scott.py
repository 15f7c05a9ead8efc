"""
O'Nan-Scott 類型判定 測試
每種擬本原形態各取一個以 A5 建構的例子
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import NotTransitiveError
from src.perm import PermutationGroup
from src.structure import OnanScottTag, constructions, onan_scott_type
from tests.group_utils import group_of


def test_affine(corpus):
    result = onan_scott_type(corpus["agl_1_5"])
    assert result.tag is OnanScottTag.HA
    assert result.evidence.factor_order == 5
    assert result.evidence.factor_count == 1
    assert result.evidence.stabilizer_order == 1


def test_affine_klein_four(s4):
    result = onan_scott_type(s4)
    assert result.tag is OnanScottTag.HA
    assert result.evidence.factor_order == 2
    assert result.evidence.factor_count == 2


@pytest.mark.parametrize("name", ["s5", "a5", "a5_12"])
def test_almost_simple(corpus, name):
    result = onan_scott_type(corpus[name])
    assert result.tag is OnanScottTag.AS, f"{name}: {result.tag}"
    assert result.evidence.factor_count == 1
    assert result.evidence.factor_order == 60
    assert result.is_quasiprimitive


def test_holomorph_simple(corpus):
    result = onan_scott_type(corpus["hs_60"])
    assert result.tag is OnanScottTag.HS
    assert result.evidence.minimal_normal_orders == [60, 60]
    assert result.evidence.factor_count == 1
    assert result.evidence.stabilizer_order == 1


def test_simple_diagonal(corpus):
    result = onan_scott_type(corpus["sd_60"])
    assert result.tag is OnanScottTag.SD
    assert result.evidence.socle_order == 3600
    assert result.evidence.factor_count == 2
    assert result.evidence.stabilizer_order == 60
    assert result.evidence.projections == ["full", "full"]


def test_product_action(corpus):
    result = onan_scott_type(corpus["pa_25"])
    assert result.tag is OnanScottTag.PA
    assert result.evidence.stabilizer_order == 144
    assert result.evidence.projections == ["proper", "proper"]


def test_twisted_wreath():
    G = constructions.twisted_wreath_3600()
    assert G.degree == 3600
    result = onan_scott_type(G)
    assert result.tag is OnanScottTag.TW
    assert result.evidence.socle_order == 3600
    assert result.evidence.stabilizer_order == 1
    assert result.evidence.factor_count == 2


@pytest.mark.parametrize("name", ["a5_15", "a5_wr_c2_10", "d8", "c6"])
def test_not_quasiprimitive(corpus, name):
    result = onan_scott_type(corpus[name])
    assert result.tag is OnanScottTag.NOT_QUASIPRIMITIVE, f"{name}: {result.tag}"
    assert not result.is_quasiprimitive
    assert not all(result.evidence.minimal_normal_transitive)


def test_degenerate_degree_one():
    result = onan_scott_type(PermutationGroup.trivial(1))
    assert result.evidence.degenerate
    assert result.tag is OnanScottTag.HA


def test_evidence_serializes(corpus):
    data = onan_scott_type(corpus["sd_60"]).evidence.to_dict()
    assert data["projections"] == ["full", "full"]
    assert data["degenerate"] is False


def test_intransitive_rejected():
    with pytest.raises(NotTransitiveError):
        onan_scott_type(group_of(4, "(1 2)"))
