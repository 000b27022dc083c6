"""Tests for the candidate syzygy-matrix search."""

import pytest

from certificates import Verdict
from errors import IndependenceFailed
from groebner import buchberger, normal_form
from matrices import generic_rank
from saito import check_sequence, find_candidate_nu
from sequences import SequenceSpec


def test_search_finds_free_frame(eg3_d4_sigma):
    """Test that the first candidate for the degree-four pair certifies freeness."""
    candidates = find_candidate_nu(eg3_d4_sigma, 2)

    assert candidates
    cert = check_sequence(eg3_d4_sigma, candidates[0])
    assert cert.verdict is Verdict.FREE
    assert cert.splitting_degrees == (1, 1, 1)


def test_search_on_quartic(eg3_quartic):
    """Test that the quartic has exactly one candidate of three linear columns."""
    candidates = find_candidate_nu(SequenceSpec((eg3_quartic,)), 1)

    assert len(candidates) == 1
    assert candidates[0].shape == (4, 3)


def test_search_on_fermat_cubic(qq3):
    """Test that the Fermat cubic yields no candidate: its syzygies are too high."""
    sigma = SequenceSpec((qq3.parse("x0^3 + x1^3 + x2^3"),))

    assert find_candidate_nu(sigma, 4) == []


def test_search_refuses_dependent_sequence(qq3):
    """Test that a dependent sequence is refused before any syzygy work."""
    sigma = SequenceSpec((qq3.parse("x0"), qq3.parse("x0^2")))

    with pytest.raises(IndependenceFailed):
        find_candidate_nu(sigma, 3)


def test_search_candidate_spans_known_frame(eg3_quartic, eg3_nu):
    """Test that the found candidate and the known Saito matrix generate the same module."""
    candidate = find_candidate_nu(SequenceSpec((eg3_quartic,)), 1)[0]
    known = buchberger([tuple(column) for column in eg3_nu.columns()])
    found = buchberger([tuple(column) for column in candidate.columns()])

    for column in candidate.columns():
        assert all(entry.is_zero() for entry in normal_form(tuple(column), known))
    for column in eg3_nu.columns():
        assert all(entry.is_zero() for entry in normal_form(tuple(column), found))


def test_search_on_a_hyperplane(qq3):
    """Test that sigma = (x0) has a single candidate made of constants."""
    candidates = find_candidate_nu(SequenceSpec((qq3.parse("x0"),)), 2)

    assert len(candidates) == 1
    assert candidates[0].shape == (3, 2)
    assert all(entry.is_constant() for row in candidates[0].entries for entry in row)
    assert generic_rank(candidates[0]) == 2
