"""
置換 單元測試
驗證 cycle notation 解析、合成方向、反元素與階
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import DegreeMismatchError, PermutationParseError
from src.perm import (Permutation, cycle_decomposition, format_cycles, identity, inverse,
                      parse_cycles, product)


def perms(degree: int):
    return st.permutations(list(range(degree))).map(lambda xs: Permutation(tuple(xs)))


def test_parse_cycles():
    """解析 1-based cycle notation"""
    p = parse_cycles("(1 2 3)(4 5)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert parse_cycles("(1,2,3)", 3) == parse_cycles("(1 2 3)", 3)
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(2)(3)", 3).is_identity()


@pytest.mark.parametrize("text, fragment", [
    ("(1 1)", "repeated point 1"),
    ("(1 6)", "point 6 out of range 1..5"),
    ("(1 2", "unclosed parenthesis"),
    ("", "empty"),
    ("(1 2))", "unexpected token ')'"),
    ("(1 x)", "unexpected token 'x'"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PermutationParseError) as info:
        parse_cycles(text, 5)
    assert fragment in str(info.value)


def test_product_applies_left_first():
    """(1 2) 再 (2 3)：1→2→3, 2→1, 3→2"""
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    assert product(p, q).images == (2, 0, 1)
    assert (p * q) == product(p, q)
    assert (q * p).images == (1, 2, 0)


def test_product_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        product(identity(3), identity(4))


def test_format_cycles():
    assert format_cycles(identity(4)) == "()"
    assert format_cycles(parse_cycles("(4 5)(3 1 2)", 5)) == "(1 2 3)(4 5)"
    assert str(parse_cycles("(2 3)", 3)) == "(2 3)"


def test_cycle_decomposition_and_order():
    p = parse_cycles("(1 2 3)(4 5)", 6)
    assert cycle_decomposition(p) == [(0, 1, 2), (3, 4)]
    assert p.order() == 6
    assert identity(3).order() == 1
    assert p.moved_points() == [0, 1, 2, 3, 4]


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_conjugate():
    p = parse_cycles("(1 2)", 3)
    g = parse_cycles("(1 2 3)", 3)
    # g^-1 (1 2) g moves the images of 1 and 2 under g
    assert p.conjugate(g) == parse_cycles("(2 3)", 3)


@settings(max_examples=60, deadline=None)
@given(perms(6), perms(6), perms(6))
def test_product_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@settings(max_examples=60, deadline=None)
@given(perms(7))
def test_inverse_and_power(p):
    assert (p * inverse(p)).is_identity()
    assert (inverse(p) * p).is_identity()
    assert (p ** p.order()).is_identity()
    assert p ** -1 == p.inverse()


@settings(max_examples=60, deadline=None)
@given(perms(8))
def test_cycle_text_roundtrip(p):
    assert parse_cycles(format_cycles(p), 8) == p
