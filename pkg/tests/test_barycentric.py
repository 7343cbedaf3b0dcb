"""Tests for refinement, the operator A_d, Perron-Frobenius limits and Kruskal-Katona."""

import os
from fractions import Fraction
from math import factorial
from unittest.mock import patch

import mpmath
import pytest
from sympy.functions.combinatorial.numbers import stirling

from simpdim import barycentric
from simpdim.barycentric import (
    FaceCapExceeded,
    cascade,
    conjecture_a_delta,
    eigenvector_profile,
    kruskal_katona_valid,
    limit_constant,
    limit_constant_decimal,
    operator_matrix,
    pf_eigenvector,
    realizable_fvectors,
    refine,
    refine_fvector,
    stirling2,
)
from simpdim.complexes import Complex, dim_inductive, dim_max, enumerate_complexes, euler_characteristic, family
from simpdim.genfun import FVector, dim_avg_plus, f_vector


def test_stirling2_small_values():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 3) == 6
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(2, 5) == 0
    for j in range(8):
        assert stirling2(j, j) == 1


def test_stirling2_matches_sympy():
    for j in range(13):
        for i in range(j + 1):
            assert stirling2(j, i) == stirling(j, i)


def test_stirling2_rejects_negative():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_stirling_table_is_shared_across_dimensions():
    operator_matrix.cache_clear()
    before = len(barycentric._STIRLING_ROWS)
    operator_matrix(50)
    assert len(barycentric._STIRLING_ROWS) == max(before, 52)
    operator_matrix(20)
    stirling2(40, 7)
    assert len(barycentric._STIRLING_ROWS) == max(before, 52)
    assert operator_matrix.cache_info().currsize == 2


def test_decimal_limit_does_not_fill_operator_cache():
    operator_matrix.cache_clear()
    limit_constant_decimal(60)
    eigenvector_profile(30)
    assert operator_matrix.cache_info().currsize == 0
    assert operator_matrix.cache_info().maxsize <= 16


def test_large_operator_rows_match_stirling():
    A = operator_matrix(60)
    assert A.entry(1, 61) == 1
    assert A.entry(61, 61) == factorial(61)
    assert A.entry(30, 45) == stirling(45, 30) * factorial(30)
    assert A.entry(45, 30) == 0


def test_operator_matrix_small():
    assert operator_matrix(1).rows == ((1, 1), (0, 2))
    assert operator_matrix(2).rows == ((1, 1, 1), (0, 2, 6), (0, 0, 6))
    assert operator_matrix(0).rows == ((1,),)


def test_operator_matrix_ten():
    A = operator_matrix(10)
    assert A.size == 11
    assert A.entry(5, 8) == 126000
    assert A.entry(2, 3) == 6
    assert A.entry(3, 4) == 36
    for i in range(1, 12):
        assert A.entry(i, i) == factorial(i)
        assert A.entry(1, i) == 1
        for j in range(1, i):
            assert A.entry(i, j) == 0


def test_operator_eigenvalue():
    assert operator_matrix(1).eigenvalue == 2
    assert operator_matrix(4).eigenvalue == 120


def test_operator_apply_rejects_wrong_length():
    with pytest.raises(ValueError):
        operator_matrix(2).apply([1, 2])


def test_refine_edge_is_a_path():
    G1 = refine(family("K", 2))
    assert f_vector(G1).counts == (3, 2)
    assert G1.is_closed()


def test_refine_empty_complex():
    assert refine(Complex()).faces == ()
    assert refine_fvector(FVector()) == FVector()


@pytest.mark.parametrize(
    "kind,params", [("house", ()), ("rabbit", ()), ("octahedron", ()), ("icosahedron", ()), ("K", (4,)), ("C", (5,))]
)
def test_refine_agrees_with_operator(kind, params):
    G = family(kind, *params)
    G1 = refine(G)
    assert f_vector(G1) == refine_fvector(f_vector(G))
    assert dim_max(G1) == dim_max(G)
    assert euler_characteristic(G1) == euler_characteristic(G)


def test_refine_agrees_with_operator_on_small_complexes():
    for G in enumerate_complexes(4):
        assert f_vector(refine(G)) == refine_fvector(f_vector(G))


@pytest.mark.slow
def test_refine_agrees_with_operator_on_five_vertices():
    for G in enumerate_complexes(5):
        assert f_vector(refine(G)) == refine_fvector(f_vector(G))


def test_refine_does_not_lower_inductive_dimension():
    for kind, params in (("K", (2,)), ("K", (3,)), ("C", (4,)), ("P", (3,))):
        G = family(kind, *params)
        assert dim_inductive(refine(G)) >= dim_inductive(G)


def test_refinement_values():
    octahedron = family("octahedron")
    assert dim_avg_plus(f_vector(refine(octahedron))) == Fraction(314, 147)
    icosahedron = family("icosahedron")
    assert dim_avg_plus(f_vector(refine(icosahedron))) == Fraction(782, 363)
    twice = refine_fvector(refine_fvector(f_vector(icosahedron)))
    assert dim_avg_plus(twice) == Fraction(4682, 2163)


def test_refine_fvector_values():
    assert refine_fvector(FVector((3, 3, 1))).counts == (7, 12, 6)
    assert refine_fvector(FVector((12, 30, 20))).counts == (62, 180, 120)
    assert refine_fvector(FVector((15, 36, 16, 1))).counts == (68, 182, 132, 24)
    assert dim_avg_plus(FVector((15, 36, 16, 1))) == Fraction(139, 69)
    assert dim_avg_plus(refine_fvector(FVector((15, 36, 16, 1)))) == Fraction(84, 37)


def test_refine_face_cap_argument():
    with pytest.raises(FaceCapExceeded):
        refine(family("icosahedron"), face_cap=100)


def test_refine_face_cap_from_environment():
    with patch.dict(os.environ, {"SIMPDIM_FACE_CAP": "10"}):
        with pytest.raises(FaceCapExceeded):
            refine(family("K", 3))
    with patch.dict(os.environ, {"SIMPDIM_FACE_CAP": "25"}):
        assert f_vector(refine(family("K", 3))).total == 25


def test_pf_eigenvector_directions():
    assert pf_eigenvector(0).entries == (Fraction(1),)
    assert pf_eigenvector(1).entries == (Fraction(1, 2), Fraction(1, 2))
    assert pf_eigenvector(1).direction == (1, 1)
    assert pf_eigenvector(2).direction == (1, 3, 2)


@pytest.mark.parametrize("d", range(1, 9))
def test_pf_eigenvector_is_an_eigenvector(d):
    v = pf_eigenvector(d)
    A = operator_matrix(d)
    assert all(x > 0 for x in v.entries)
    assert sum(v.entries) == 1
    assert A.apply(list(v.entries)) == [factorial(d + 1) * x for x in v.entries]


def test_limit_constants_small():
    assert limit_constant(0) == 1
    assert limit_constant(1) == Fraction(3, 2)
    assert limit_constant(2) == Fraction(13, 6)
    assert pf_eigenvector(2).mean() == Fraction(13, 6)


def test_limit_constant_interval():
    for d in range(1, 31):
        c = limit_constant(d)
        assert Fraction(d + 1, 2) < c < d + 1


@pytest.mark.slow
def test_limit_constant_interval_up_to_200():
    for d in range(1, 201):
        c = limit_constant(d)
        assert Fraction(d + 1, 2) < c < d + 1


@pytest.mark.slow
def test_limit_constant_hundred():
    c = limit_constant(100)
    assert abs(float(c) - 72.828) <= 0.001
    assert len(str(c.numerator)) == 4423
    assert len(str(c.denominator)) == 4423


def test_limit_constant_decimal_matches_exact():
    for d in (1, 2, 10, 25):
        exact = limit_constant(d)
        approx = limit_constant_decimal(d, 50)
        with mpmath.workdps(50):
            assert mpmath.almosteq(approx, mpmath.mpf(exact.numerator) / exact.denominator, rel_eps=mpmath.mpf(10) ** -40)


def test_limit_constant_decimal_hundred():
    assert abs(limit_constant_decimal(100) - mpmath.mpf("72.828")) <= mpmath.mpf("0.001")


@pytest.mark.slow
def test_limit_constant_ratio_five_hundred():
    assert abs(limit_constant_decimal(500) / 500 - mpmath.mpf("0.722733")) <= mpmath.mpf("1e-6")


def test_trajectory_converges_to_limit():
    fv = f_vector(family("house"))
    c = limit_constant(2)
    gaps = []
    for _ in range(12):
        fv = refine_fvector(fv)
        gaps.append(abs(c - dim_avg_plus(fv)))
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < Fraction(1, 10**5)


def test_eigenvector_profile():
    rows = eigenvector_profile(2)
    assert [k for k, _, _ in rows] == [1, 2, 3]
    expected = [(Fraction(1, 6), Fraction(1, 3)), (Fraction(1, 2), Fraction(-1, 6)), (Fraction(1, 3), Fraction(-1, 3))]
    for (_, p, diff), (ep, ediff) in zip(rows, expected):
        assert mpmath.almosteq(p, mpmath.mpf(ep.numerator) / ep.denominator)
        assert mpmath.almosteq(diff, mpmath.mpf(ediff.numerator) / ediff.denominator)


def test_eigenvector_profile_rejects_negative_dimension():
    with pytest.raises(ValueError):
        eigenvector_profile(-1)


def test_cascade():
    assert cascade(5, 2) == [(3, 2), (2, 1)]
    assert cascade(6, 2) == [(4, 2)]
    assert cascade(0, 3) == []


@pytest.mark.parametrize(
    "counts,valid",
    [((3, 3, 1), True), ((1, 1), False), ((4, 6, 4, 1), True), ((4, 6, 5), False), ((0, 1), False), ((), True)],
)
def test_kruskal_katona_examples(counts, valid):
    assert kruskal_katona_valid(FVector(counts)) is valid


def test_kruskal_katona_agrees_with_enumeration():
    realizable = realizable_fvectors(5)
    assert FVector((5, 10, 10, 5, 1)) in realizable
    for counts in [(v0, v1, v2) for v0 in range(6) for v1 in range(11) for v2 in range(11)]:
        fv = FVector(counts)
        if fv.total <= 31:
            assert kruskal_katona_valid(fv) == (fv in realizable), counts


def test_conjecture_a_delta_on_simplices():
    expected = [Fraction(0), Fraction(1, 6), Fraction(5, 13), Fraction(91, 150), Fraction(448, 541)]
    for n, value in enumerate(expected, start=1):
        assert conjecture_a_delta(f_vector(family("K", n))) == value


def test_conjecture_a_delta_fixed_points():
    assert conjecture_a_delta(FVector((6, 9))) == 0
    for v0 in range(1, 25):
        assert conjecture_a_delta(FVector((v0, v0 + 3))) == 0


def test_conjecture_a_delta_can_be_negative_for_invalid_vectors():
    fv = FVector((1, 5))
    assert not kruskal_katona_valid(fv)
    assert conjecture_a_delta(fv) < 0
