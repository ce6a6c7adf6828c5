from __future__ import annotations

from hypothesis import strategies as st

from schubsat.perm import Permutation, code_inverse, parse_permutation


def P(text: str) -> Permutation:
    return parse_permutation(text)


def codes(max_len: int = 5, max_entry: int = 3):
    """Finitely supported codes; every one is the code of some permutation."""
    return st.lists(st.integers(0, max_entry), max_size=max_len).map(tuple)


def perms(max_len: int = 5, max_entry: int = 3):
    return codes(max_len, max_entry).map(code_inverse)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in RESULTS:
            terminalreporter.write_line(r.line())
