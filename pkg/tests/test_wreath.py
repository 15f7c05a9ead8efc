"""
Wreath product 嵌入 測試
沿 L1 極大鏈將 G 重新標號並驗證每個生成元落在迭代 wreath product 內
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import ChainError
from src.lattice import (basic_components, iterated_wreath, lattice_L1, lattice_L2,
                         maximal_chains, wreath_embedding)
from src.lattice.lattice import LatticeKind


def test_cyclic_four(c4):
    """C4 ≤ C2 wr C2 = D8"""
    L = lattice_L1(c4, 0)
    cert = wreath_embedding(c4, maximal_chains(L)[0], lattice=L)
    assert cert.radices == [2, 2]
    assert cert.component_orders == [2, 2]
    assert cert.wreath_order == 8
    assert cert.bijective and cert.verified
    assert sorted(cert.relabeling) == [0, 1, 2, 3]


def test_square(d8):
    cert = wreath_embedding(d8, [0, 1, 2])
    assert cert.wreath_order == 8
    assert cert.addresses[0] == (0, 0)
    assert len(set(cert.addresses)) == 4
    assert all(w.member for w in cert.witnesses)


def test_all_chains_small_corpus(corpus):
    """度數 ≤ 16 的語料：每條極大鏈都可驗證"""
    for name, G in corpus.items():
        if G.degree > 16:
            continue
        L = lattice_L1(G, 0)
        for chain in maximal_chains(L):
            cert = wreath_embedding(G, chain, lattice=L)
            assert cert.verified, f"{name}: chain {chain}"
            assert len(cert.witnesses) == len(G.generators)
            expected = 1
            for m, order in zip(cert.radices, cert.component_orders):
                expected = expected ** m * order
            assert cert.wreath_order == expected
            product = 1
            for m in cert.radices:
                product *= m
            assert product == G.degree, f"{name}: radices {cert.radices}"


def test_imprimitive_a5_wreath(corpus):
    G = corpus["a5_wr_c2_10"]
    cert = wreath_embedding(G, [0, 1, 2])
    assert cert.radices == [5, 2]
    assert cert.component_orders == [60, 2]
    assert cert.wreath_order == 7200


def test_iterated_wreath_orders(c6):
    components = basic_components(c6, 0, LatticeKind.L1)
    # chain 0 < 1 < 3: C2 then C3
    W = iterated_wreath([components[0], components[2]])
    assert W.degree == 6
    assert W.order() == 2 ** 3 * 3
    assert iterated_wreath([]).order() == 1


def test_chain_errors(c6):
    L = lattice_L1(c6, 0)
    with pytest.raises(ChainError):
        wreath_embedding(c6, [0, 3], lattice=L)
    with pytest.raises(ChainError):
        wreath_embedding(c6, [1, 3], lattice=L)
    with pytest.raises(ChainError):
        wreath_embedding(c6, [0, 1], lattice=L)
    with pytest.raises(ChainError):
        wreath_embedding(c6, [], lattice=L)


def test_chain_must_come_from_l1(a5_12):
    with pytest.raises(ChainError):
        wreath_embedding(a5_12, [0, 1], lattice=lattice_L2(a5_12, 0))
