"""Blow-up lattices, the exceptional self-intersection, and the constants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilb import (
    ConsistencyError,
    DivisorClass,
    IntersectionLattice,
    NakajimaSequence,
    blow_up,
    exceptional_total_square,
    hilbert_scheme_dim,
    nakajima_closed_form,
    nakajima_recurrence,
    one_point_locus_dim,
    p2_lattice,
    pair,
    punctual_locus_dim,
    rank_zero_lattice,
)

GENUS_GRAM = ((2, 3), (3, -4))  # an abstract surface-like symmetric form
GENUS_LATTICE = IntersectionLattice(GENUS_GRAM, ("A", "B"))


def test_p2_lattice():
    lat = p2_lattice()
    assert lat.rank == 1
    assert lat.labels == ("H",)
    h = lat.cls("H")
    assert pair(lat, h, h) == 1


def test_blow_up_gram_frozen():
    once = blow_up(p2_lattice(), 1)
    assert once.gram == ((1, 0), (0, -1))
    assert once.labels == ("H", "E1")
    twice = blow_up(p2_lattice(), 2)
    h, e1, e2 = (twice.cls(x) for x in ("H", "E1", "E2"))
    conic = 2 * h - e1 - e2
    assert pair(twice, conic, conic) == 2
    assert pair(twice, e1, e2) == 0
    assert pair(twice, e1, e1) == -1
    line = h - e1
    assert pair(twice, line, line) == 0
    assert pair(twice, h, e1) == 0


def test_blow_up_identity_and_stacking():
    lat = p2_lattice()
    assert blow_up(lat, 0) == lat
    stacked = blow_up(blow_up(lat, 2), 1)
    assert stacked.labels == ("H", "E1", "E2", "E3")
    assert stacked == blow_up(lat, 3)
    with pytest.raises(ValueError):
        blow_up(lat, -1)


def test_lattice_validation():
    with pytest.raises(ValueError):
        IntersectionLattice(((1, 2), (3, 4)), ("A", "B"))  # not symmetric
    with pytest.raises(ValueError):
        IntersectionLattice(((1,),), ("A", "B"))  # label count mismatch
    lat = p2_lattice()
    with pytest.raises(ValueError, match="mismatch"):
        pair(lat, DivisorClass((1, 2)), lat.cls("H"))


def test_divisor_arithmetic():
    lat = blow_up(p2_lattice(), 2)
    h, e1 = lat.cls("H"), lat.cls("E1")
    assert (h + e1).coords == (1, 1, 0)
    assert (h - e1).coords == (1, -1, 0)
    assert (3 * h).coords == (3, 0, 0)
    assert (-h).coords == (-1, 0, 0)


def test_exceptional_total_square_frozen():
    assert exceptional_total_square(1) == -1
    assert exceptional_total_square(3) == -3
    assert exceptional_total_square(5, GENUS_LATTICE) == -5
    with pytest.raises(ValueError):
        exceptional_total_square(0)


def test_exceptional_square_base_independent():
    for base in (p2_lattice(), rank_zero_lattice(), GENUS_LATTICE):
        for n in range(1, 51):
            assert exceptional_total_square(n, base) == -n


def test_dimension_formulas():
    for n in range(1, 30):
        assert hilbert_scheme_dim(n) == 2 * n
        assert one_point_locus_dim(n) == n + 1
        assert punctual_locus_dim(n) == n - 1
        assert one_point_locus_dim(n) + punctual_locus_dim(n) == hilbert_scheme_dim(n)


def test_closed_form_frozen():
    assert nakajima_closed_form(1) == 1
    assert nakajima_closed_form(2) == -2
    assert nakajima_closed_form(3) == 3
    assert nakajima_closed_form(10) == -10
    assert nakajima_closed_form(41) == 41
    with pytest.raises(ValueError):
        nakajima_closed_form(0)


def test_recurrence_frozen():
    assert nakajima_recurrence(1).values == (1,)
    assert nakajima_recurrence(3).values == (1, -2, 3)
    assert nakajima_recurrence(10).value(10) == -10


def test_recurrence_matches_closed_form_to_200():
    seq = nakajima_recurrence(200)
    assert len(seq.values) == 200
    for n in range(1, 201):
        assert seq.value(n) == nakajima_closed_form(n)


def test_recurrence_over_other_bases():
    for base in (rank_zero_lattice(), GENUS_LATTICE):
        assert nakajima_recurrence(12, base).values == nakajima_recurrence(12).values


def test_sequence_validation():
    NakajimaSequence((1, -2, 3))
    with pytest.raises(ConsistencyError):
        NakajimaSequence((2, -2))  # wrong start
    with pytest.raises(ConsistencyError):
        NakajimaSequence((1, 2))  # wrong sign
    with pytest.raises(ConsistencyError):
        NakajimaSequence((1, -3))  # wrong magnitude


coords3 = st.tuples(
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=-50, max_value=50),
)


@settings(derandomize=True, max_examples=200)
@given(coords3, coords3, coords3, st.integers(min_value=-9, max_value=9))
def test_pair_symmetric_bilinear(u, v, w, c):
    lat = blow_up(GENUS_LATTICE, 1)
    du, dv, dw = DivisorClass(u), DivisorClass(v), DivisorClass(w)
    assert pair(lat, du, dv) == pair(lat, dv, du)
    assert pair(lat, du + dv, dw) == pair(lat, du, dw) + pair(lat, dv, dw)
    assert pair(lat, c * du, dv) == c * pair(lat, du, dv)
