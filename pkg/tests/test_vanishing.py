from __future__ import annotations

import pytest

from conftest import P
from schubsat.errors import SearchBudgetExceeded
from schubsat.perm import all_permutations, length
from schubsat.schubert import coeff
from schubsat.vanishing import (IndicatorTableau, certify_zero, dimension_ok,
                                embedded_diagram, tableau_violations,
                                tableaux_exists)


def test_dimension():
    assert dimension_ok(P("2143"), P("2134"), P("4123"))
    assert not dimension_ok(P("21534"), P("21"), P("41523"))
    assert certify_zero(P("21534"), P("21"), P("41523")).kind == "dimension"


def test_embedded_diagram():
    assert embedded_diagram(P("2143"), P("21"), 4) == {(1, 1), (3, 3), (1, 5)}


def test_scaled_code_example_has_no_tableau():
    u, v, w = P("31524"), P("31245"), P("7123456")
    assert dimension_ok(u, v, w)
    assert tableaux_exists(u, v, w) is None
    assert tableaux_exists(u, v, w, order="row") is None
    cert = certify_zero(u, v, w)
    assert cert.kind == "empty_tableaux" and cert.is_zero


def test_witness_for_nonzero_coefficient():
    u, v, w = P("2143"), P("2134"), P("4123")
    T = tableaux_exists(u, v, w)
    assert isinstance(T, IndicatorTableau)
    assert tableau_violations(T, u, v, w) == []
    assert T.to_json()[0] == {"row": 1, "col": 1, "entry": 1}
    assert certify_zero(u, v, w).kind == "unknown"
    cert = certify_zero(u, v, w, allow_exact=True)
    assert (cert.kind, cert.coefficient) == ("nonzero", 1)


def test_validator_catches_bad_fillings():
    u, v, w = P("2143"), P("2134"), P("4123")
    T = tableaux_exists(u, v, w)
    bad = dict(T.filling)
    bad[(1, 1)] = 3
    assert tableau_violations(IndicatorTableau(T.n, bad), u, v, w)
    assert tableau_violations(IndicatorTableau(T.n, {}), u, v, w)


def test_node_budget():
    with pytest.raises(SearchBudgetExceeded):
        tableaux_exists(P("2143"), P("2134"), P("4123"), node_budget=1)


def test_unknown_order():
    with pytest.raises(ValueError):
        tableaux_exists(P("21"), P("21"), P("312"), order="diagonal")


def test_empty_tableaux_imply_zero_on_small_groups():
    by_length = {}
    for w in all_permutations(5):
        by_length.setdefault(length(w), []).append(w)
    empty = exists = 0
    for u in all_permutations(3):
        for v in all_permutations(3):
            for w in by_length.get(length(u) + length(v), []):
                T = tableaux_exists(u, v, w)
                c = coeff(u, v, w, method="expand")
                if T is None:
                    empty += 1
                    assert c == 0, (u, v, w)
                else:
                    exists += 1
                    assert tableau_violations(T, u, v, w) == []
                assert (T is None) == (tableaux_exists(u, v, w, order="row") is None)
    assert empty > 0 and exists > 0


def test_exact_certificate():
    cert = certify_zero(P("31524"), P("312"), P("7123456"), allow_exact=True)
    assert cert.is_zero
    cert = certify_zero(P("164235"), P("312"), P("561234"), allow_exact=True)
    assert (cert.kind, cert.coefficient) == ("nonzero", 1)
    assert cert.to_json()["coefficient"] == "1"
