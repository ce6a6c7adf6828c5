from __future__ import annotations

import pytest
from hypothesis import given

from conftest import P, codes, perms
from schubsat.errors import CapExceeded, NotAPermutation
from schubsat.perm import (Permutation, all_permutations, apply_transposition,
                           code, code_inverse, covers_up, descents,
                           format_permutation, from_word, identity, is_cover,
                           length, max_descent, parse_code, parse_permutation,
                           rothe, simple_transposition)


def test_trailing_fixed_points_are_trimmed():
    assert from_word([2, 1, 3, 4]) == from_word([2, 1])
    assert from_word([2, 1, 3, 4]).word == (2, 1)
    assert identity().size == 0
    assert P("2143")(7) == 7


@pytest.mark.parametrize("word", [[1, 1], [0, 1], [2, 3], [1, 3]])
def test_rejects_non_permutations(word):
    with pytest.raises(NotAPermutation):
        Permutation(word)


def test_worked_code_and_length():
    w = P("72415836")
    assert code(w) == (6, 1, 2, 0, 1, 2)
    assert length(w) == 12
    assert descents(w) == {1, 3, 6}
    assert max_descent(w) == 6


def test_rothe_diagram_frozen():
    # oracle: counted by hand from the definition
    assert rothe(P("72415836")) == {
        (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
        (2, 1),
        (3, 1), (3, 3),
        (5, 3),
        (6, 3), (6, 6),
    }
    assert rothe(P("2143")) == {(1, 1), (3, 3)}


def test_code_inverse_examples():
    assert code_inverse((1, 0, 1)) == P("2143")
    assert code_inverse((2,)) == P("312")
    assert code_inverse(()) == identity()
    assert code_inverse((0, 0)) == identity()


def test_code_roundtrip_on_s5():
    seen = set()
    for w in all_permutations(5):
        c = code(w)
        assert code_inverse(c) == w
        assert len(rothe(w)) == length(w) == sum(c)
        seen.add(c)
    assert len(seen) == 120


@given(codes(6, 4))
def test_code_inverse_roundtrip(c):
    w = code_inverse(c)
    trimmed = tuple(c)
    while trimmed and trimmed[-1] == 0:
        trimmed = trimmed[:-1]
    assert code(w) == trimmed


@given(perms(), perms())
def test_product_and_inverse(u, v):
    assert (u * u.inverse()) == identity()
    assert (u * v)(1) == u(v(1))


def test_all_permutations_is_lex_and_capped():
    s3 = [format_permutation(w) for w in all_permutations(3)]
    assert s3 == ["1", "132", "21", "231", "312", "321"]
    with pytest.raises(CapExceeded):
        list(all_permutations(9, cap=8))


def test_covers_up_frozen():
    got = {(i, j, format_permutation(w)) for i, j, w in covers_up(P("2143"), 4)}
    assert got == {(1, 3, "4123"), (1, 4, "3142"), (2, 3, "2413"), (2, 4, "2341")}


@given(perms(4, 3))
def test_covers_agree_with_brute_force(u):
    n = u.size + 1
    brute = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = apply_transposition(u, i, j)
            if length(w) == length(u) + 1:
                brute.add((i, j, w))
                assert is_cover(u, w) == (i, j)
    assert set(covers_up(u, n)) == brute


def test_simple_transposition():
    assert simple_transposition(1) == P("21")
    assert simple_transposition(3) == P("1243")
    assert descents(simple_transposition(3)) == {3}


def test_text_io():
    assert parse_permutation("2,1,4,3") == P("2143")
    assert parse_permutation("c:6,1,2,0,1,2") == P("72415836")
    assert parse_code("6,1,2") == (6, 1, 2)
    w = from_word([13, 3, 6, 1, 5, 9, 2, 4, 7, 8, 10, 11, 12])
    assert format_permutation(w) == "13,3,6,1,5,9,2,4,7,8,10,11,12"
    assert parse_permutation(format_permutation(w)) == w
    assert format_permutation(identity()) == "1"
    with pytest.raises(ValueError):
        parse_permutation("21x")
