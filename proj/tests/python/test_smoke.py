"""Smoke tests for the python bindings: each exported function is called
once against a small golden value; the heavy property testing lives in the
C++ suites."""

import pytest

import rinv

HOPF = "X 1 2 3 4\nX 4 3 2 1"
TREFOIL = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3"


def test_validate_accepts_well_formed_text():
    assert rinv.validate("O 1") == []
    assert rinv.validate("X 1 2 2 1") == []


def test_validate_raises_on_bad_text():
    with pytest.raises(ValueError):
        rinv.validate("Q 1 2 3 4")  # unknown line kind
    with pytest.raises(ValueError):
        rinv.validate("X 1 2 3 4")  # each label must appear twice


def test_canonical_relabels():
    assert rinv.canonical("X 5 9 9 5") == "X 1 2 2 1\n"


def test_bracket_of_single_curl():
    assert rinv.bracket("X 1 2 2 1") == "A^-1+A^-5"


def test_invariant_of_unknot():
    assert rinv.invariant("O 1") == "L+2"


def test_invariant_rational_value():
    three_lobed = "V 1 2 3 4\nV 1 4 5 6\nV 2 6 5 3"
    assert rinv.invariant(three_lobed) == "L+2 / ((L+1))"


def test_evaluate_hopf_report():
    rep = rinv.evaluate(HOPF)
    assert rep == {"r": "L^3+2*L^2", "at2": "16", "at1": "3", "at_minus1": "1"}


def test_three_colorings_of_trefoil():
    assert rinv.three_colorings(TREFOIL) == 9


def test_component_count():
    assert rinv.component_count(HOPF) == 2
    assert rinv.component_count(TREFOIL) == 1


def test_random_diagram_is_deterministic_and_valid():
    a = rinv.random_diagram(7)
    b = rinv.random_diagram(7)
    assert a == b
    assert rinv.validate(a) == []
