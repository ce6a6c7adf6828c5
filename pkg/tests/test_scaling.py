from __future__ import annotations

import pytest
from hypothesis import given

from conftest import P, perms
from schubsat.errors import (DescentNotCovered, InconsistentBlocks,
                             KBelowMaxDescent)
from schubsat.perm import (all_permutations, code, descents, from_word,
                           identity, length, max_descent, rothe)
from schubsat.scaling import (BlockSequence, bit_scale, bit_scale_via_seq,
                              code_scale, scaled_diagram, seq_decode,
                              seq_encode, shaded_columns)

W = P("72415836")


def test_code_scaling_worked_values():
    assert code_scale(W, 2) == from_word([13, 3, 6, 1, 5, 9, 2, 4, 7, 8, 10, 11, 12])
    assert code(code_scale(W, 2)) == (12, 2, 4, 0, 2, 4)
    assert code_scale(P("2143"), 2) == P("31524")
    assert code_scale(P("2134"), 2) == P("31245")
    assert code_scale(P("4123"), 2) == P("7123456")
    assert code_scale(W, 1) == W
    with pytest.raises(ValueError):
        code_scale(W, 0)


def test_shaded_columns_worked_values():
    data = shaded_columns(W, 6)
    assert data.J == {3, 6}
    assert data.S == {(7, 3), (8, 6)}
    with pytest.raises(KBelowMaxDescent):
        shaded_columns(W, 5)


def test_bit_scaling_worked_values():
    assert bit_scale(W, 2, 6) == from_word([9, 2, 5, 1, 6, 10, 3, 4, 7, 8])
    assert bit_scale(W, 2) == bit_scale(W, 2, 6)
    assert bit_scale(P("2143"), 2) == P("21534")
    assert bit_scale(P("2134"), 2, 3) == P("21")
    assert bit_scale(P("3142"), 2, 3) == P("41523")


def test_scaled_diagram_is_the_rothe_diagram():
    for N in (1, 2, 3):
        assert rothe(bit_scale(W, N, 6)) == scaled_diagram(W, N, 6)


def test_seq_worked_values():
    s = seq_encode(W)
    assert str(s) == "21312302"
    assert s.boundaries == (1, 3, 6)
    assert str(seq_encode(bit_scale(W, 2, 6), [1, 3, 6])) == "2133123302"
    assert bit_scale_via_seq(W, 2) == bit_scale(W, 2, 6)


def test_seq_validation():
    with pytest.raises(DescentNotCovered):
        seq_encode(W, [1, 3])
    with pytest.raises(InconsistentBlocks):
        BlockSequence((0, 0, 1), (1,))
    with pytest.raises(InconsistentBlocks):
        BlockSequence((0, 1), (2, 1))


def test_seq_boundary_beyond_size():
    s = seq_encode(P("21"), [1, 3])
    assert len(s.labels) == 3
    assert seq_decode(s) == P("21")


def test_scalings_on_all_s5():
    for w in all_permutations(5):
        for N in (2, 3):
            cw = code_scale(w, N)
            assert length(cw) == N * length(w)
            assert descents(cw) == descents(w)
            bw = bit_scale(w, N)
            assert descents(bw) == descents(w)
            if length(w) > 0:
                assert bw == bit_scale_via_seq(w, N)


def test_bit_scaling_for_every_admissible_k():
    for w in all_permutations(5):
        for k in range(max_descent(w), 7):
            for N in (2, 3):
                bw = bit_scale(w, N, k)
                assert rothe(bw) == scaled_diagram(w, N, k)
                assert bw == bit_scale_via_seq(w, N, sorted(descents(w) | {k}) if k else None)


@given(perms(5, 3))
def test_seq_roundtrip(w):
    assert seq_decode(seq_encode(w)) == w


def test_identity_is_fixed():
    assert code_scale(identity(), 5) == identity()
    assert bit_scale(identity(), 5) == identity()
