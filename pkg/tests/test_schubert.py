from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import P, perms
from schubsat.errors import CapExceeded, MethodInapplicable
from schubsat.limits import override
from schubsat.perm import (all_permutations, code, descents, length,
                           simple_transposition)
from schubsat.polyring import ONE, Polynomial, divided_difference, variable
from schubsat.schubert import (SchubertExpansion, coeff,
                               expand_in_schubert_basis, monk,
                               product_expansion, schubert_poly)

x1, x2, x3 = variable(1), variable(2), variable(3)


def test_small_polynomials():
    assert schubert_poly(P("1")) == ONE
    assert schubert_poly(P("213")) == x1
    assert schubert_poly(P("132")) == x1 + x2
    assert schubert_poly(P("312")) == x1 * x1
    assert schubert_poly(P("321")) == x1 * x1 * x2
    assert schubert_poly(P("2143")) == x1 * x1 + x1 * x2 + x1 * x3
    assert schubert_poly(P("1423")) == x1 * x1 + x1 * x2 + x2 * x2


def test_divided_difference_recursion_on_s4():
    # d_i S_w = S_{w s_i} at descents, zero at ascents
    for w in all_permutations(4):
        for i in range(1, 4):
            d = divided_difference(schubert_poly(w), i)
            if i in descents(w):
                word = list(w.padded(4))
                word[i - 1], word[i] = word[i], word[i - 1]
                assert d == schubert_poly(P(",".join(map(str, word))))
            else:
                assert d == Polynomial()


def test_polynomials_have_positive_coefficients_and_code_leading_term():
    for w in all_permutations(5):
        f = schubert_poly(w)
        assert all(c > 0 for _, c in f.items())
        assert f.degree() == length(w) or length(w) == 0
        assert f.min_term() == (code(w), 1)


def test_stable_under_embedding():
    assert schubert_poly(P("2143")) == schubert_poly(P("21435"))


def test_basis_roundtrip_on_s4():
    for w in all_permutations(4):
        assert expand_in_schubert_basis(schubert_poly(w)) == {w: 1}


def test_known_product():
    ex = product_expansion(P("2143"), P("2134"))
    assert ex == {P("3142"): 1, P("4123"): 1}
    assert str(ex) == "S[3142] + S[4123]"
    assert SchubertExpansion.from_json(ex.to_json()) == ex


def test_squares_of_degree_one():
    assert product_expansion(P("213"), P("213")) == {P("312"): 1}
    assert product_expansion(P("132"), P("132")) == {P("231"): 1, P("1423"): 1}


def test_monk_matches_expansion_on_s4():
    for u in all_permutations(4):
        for k in (1, 2, 3):
            assert monk(u, k) == product_expansion(u, simple_transposition(k))


def test_monk_matches_expansion_on_random_s5():
    rng = random.Random(7)
    s5 = list(all_permutations(5))
    for _ in range(100):
        u, k = rng.choice(s5), rng.randint(1, 4)
        assert monk(u, k) == product_expansion(u, simple_transposition(k))


@settings(max_examples=60, deadline=None)
@given(perms(4, 2), perms(4, 2))
def test_product_positive_and_homogeneous(u, v):
    prod = schubert_poly(u) * schubert_poly(v)
    ex = product_expansion(u, v)
    assert all(c > 0 for c in ex.values())
    assert all(length(w) == length(u) + length(v) for w in ex)
    rebuilt = Polynomial()
    for w, c in ex.items():
        rebuilt = rebuilt + c * schubert_poly(w)
    assert rebuilt == prod
    assert product_expansion(v, u) == ex


def test_coeff_methods():
    u, v, w = P("2143"), P("2134"), P("4123")
    assert coeff(u, v, w) == coeff(u, v, w, method="monk") == coeff(u, v, w, method="expand") == 1
    assert coeff(v, u, w, method="monk") == 1
    assert coeff(u, v, P("2341")) == 0
    with pytest.raises(MethodInapplicable):
        coeff(P("321"), P("321"), P("54123"), method="monk")
    with pytest.raises(ValueError):
        coeff(u, v, w, method="guess")


def test_caps_raise_instead_of_truncating():
    with override(schubert_max_n=4):
        with pytest.raises(CapExceeded):
            schubert_poly(P("21543"))
    with override(product_max_degree=3):
        with pytest.raises(CapExceeded):
            product_expansion(P("321"), P("231"))


def test_memo_is_safe_under_threads():
    from concurrent.futures import ThreadPoolExecutor

    from schubsat.schubert import clear_cache

    s5 = list(all_permutations(5))
    expected = {w: schubert_poly(w) for w in s5}
    clear_cache()
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(schubert_poly, s5 * 4))
    assert got == [expected[w] for w in s5 * 4]


@settings(max_examples=50, deadline=None)
@given(perms(4, 2), perms(4, 2), perms(4, 2))
def test_expansion_recovers_combinations(a, b, c):
    ws = [w for w in (a, b, c) if length(w) == length(a)]
    f = Polynomial()
    want: dict = {}
    for n, w in enumerate(ws, 1):
        f = f + n * schubert_poly(w)
        want[w] = want.get(w, 0) + n
    assert expand_in_schubert_basis(f) == want
