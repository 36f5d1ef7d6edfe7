"""Torus weights, attracting-cell dimensions, and Betti polynomials."""

import pytest

from hilb import (
    AFFINE_CHART,
    P2_CHART_WEIGHTS,
    CharVector,
    NonGenericError,
    Partition,
    PoincarePoly,
    cell_dimension,
    default_rho,
    enumerate_partitions,
    fixed_points_p2,
    format_poly,
    pentagonal_partition_count,
    poincare_affine,
    poincare_p2,
    poincare_punctual,
    punctual_cell_dims,
    punctual_locus_dim,
    tangent_weights,
)

STD = AFFINE_CHART


def chamber_triple(n):
    # three generic positive one-parameter subgroups
    return (
        CharVector(1, n + 1),
        CharVector(n + 1, 1),
        CharVector(2, 2 * n + 3),
    )


def affine_betti_oracle(n):
    # closed form: one cell of dimension n - (number of parts) per partition
    coeffs = {}
    for lam in enumerate_partitions(n):
        d = 2 * (n - len(lam))
        coeffs[d] = coeffs.get(d, 0) + 1
    return coeffs


def test_tangent_weights_two_boxes_frozen():
    assert sorted(tangent_weights(Partition((2,)), *STD)) == sorted(
        [(2, 0), (-1, 1), (1, 0), (0, 1)]
    )
    assert sorted(tangent_weights(Partition((1, 1)), *STD)) == sorted(
        [(0, 2), (1, -1), (0, 1), (1, 0)]
    )


def test_tangent_weights_single_box():
    assert sorted(tangent_weights(Partition((1,)), *STD)) == [(0, 1), (1, 0)]


def test_tangent_weights_count_and_symmetry():
    swap = lambda w: (w[1], w[0])
    for n in range(1, 11):
        for lam in enumerate_partitions(n):
            ws = tangent_weights(lam, *STD)
            assert len(ws) == 2 * n
            conj = tangent_weights(lam.conjugate(), *STD)
            assert sorted(map(swap, ws)) == sorted(conj)


def test_degenerate_chart_rejected():
    with pytest.raises(ValueError, match="degenerate chart"):
        tangent_weights(Partition((1,)), CharVector(1, 0), CharVector(2, 0))


def test_cell_dimension_frozen():
    rho = CharVector(3, 1)
    assert cell_dimension(tangent_weights(Partition((2,)), *STD), rho) == 1
    assert cell_dimension(tangent_weights(Partition((1, 1)), *STD), rho) == 0
    assert cell_dimension(tangent_weights(Partition((1,)), CharVector(1, 0), CharVector(0, 1)), CharVector(5, 7)) == 0


def test_cell_dimension_rejects_zero_pairing():
    weights = tangent_weights(Partition((1, 1)), *STD)  # contains (1, -1)
    with pytest.raises(NonGenericError, match="non-generic"):
        cell_dimension(weights, CharVector(1, 1))


def test_poincare_poly_type():
    poly = PoincarePoly({0: 1, 2: 2, 4: 1})
    assert poly.coefficient(2) == 2
    assert poly.coefficient(6) == 0
    assert poly.degree == 4
    assert poly.evaluate(1) == 4
    assert str(poly) == "1 + 2q^2 + q^4"
    with pytest.raises(ValueError):
        PoincarePoly({1: 1})
    with pytest.raises(ValueError):
        PoincarePoly({2: -1})
    assert format_poly({0: 1, 2: 1}, "u") == "1 + u^2"


def test_poincare_affine_frozen():
    assert poincare_affine(0).coeffs == {0: 1}
    assert poincare_affine(1).coeffs == {0: 1}
    assert poincare_affine(2).coeffs == {0: 1, 2: 1}
    assert str(poincare_affine(3)) == "1 + q^2 + q^4"


def test_poincare_affine_closed_form():
    for n in range(13):
        assert poincare_affine(n).coeffs == affine_betti_oracle(n)


def test_default_rho_is_generic():
    for n in range(11):
        rho = default_rho(n)
        assert rho.a == 1 and rho.b > 2 * n * n
        assert poincare_affine(n, rho).coeffs == affine_betti_oracle(n)


def test_fixed_points_p2_counts():
    for n, want in enumerate([1, 3, 9, 22]):
        pts = fixed_points_p2(n)
        assert len(pts) == want
        for pt in pts:
            assert sum(p.size for p in pt.partitions) == n


def test_poincare_p2_frozen():
    assert str(poincare_p2(0)) == "1"
    assert str(poincare_p2(1)) == "1 + q^2 + q^4"
    assert str(poincare_p2(2)) == "1 + 2q^2 + 3q^4 + 2q^6 + q^8"


def test_poincare_p2_shape():
    for n in range(5):
        poly = poincare_p2(n)
        assert poly.evaluate(1) == len(fixed_points_p2(n))
        assert poly.degree <= 4 * n
        # Poincare duality of a smooth projective variety of dimension 2n
        assert all(
            poly.coefficient(d) == poly.coefficient(4 * n - d)
            for d in range(0, 4 * n + 1, 2)
        )


def test_chamber_independence_affine():
    for n in range(13):
        first, *rest = [poincare_affine(n, rho) for rho in chamber_triple(n)]
        assert all(p == first for p in rest)
        assert first == poincare_affine(n)


def test_chamber_independence_p2():
    for n in range(9):
        first, *rest = [poincare_p2(n, rho) for rho in chamber_triple(n)]
        assert all(p == first for p in rest)
        assert first == poincare_p2(n)


def test_p2_chart_weights_constant():
    assert P2_CHART_WEIGHTS == (
        (CharVector(1, 0), CharVector(0, 1)),
        (CharVector(-1, 0), CharVector(-1, 1)),
        (CharVector(0, -1), CharVector(1, -1)),
    )


def test_punctual_cells_frozen():
    assert punctual_cell_dims(1) == [0]
    assert punctual_cell_dims(2) == [0, 1]
    assert str(poincare_punctual(3)) == "1 + q^2 + q^4"
    assert str(poincare_punctual(4)) == "1 + q^2 + 2q^4 + q^6"
    assert str(poincare_punctual(6)) == "1 + q^2 + 2q^4 + 3q^6 + 3q^8 + q^10"
    with pytest.raises(ValueError, match="undefined"):
        punctual_cell_dims(0)


def test_punctual_invariants():
    for n in range(1, 26):
        dims = punctual_cell_dims(n)
        assert len(dims) == pentagonal_partition_count(n)
        assert dims == sorted(dims)
        assert dims[0] == 0
        assert dims[-1] == punctual_locus_dim(n) == n - 1
        # the statistic n - (largest part) maps to n - (number of parts)
        # under conjugation, so the multiset is self-paired
        assert sorted(n - len(lam) for lam in enumerate_partitions(n)) == dims
