"""Tests for complexes, graphs, joins and the inductive dimension."""

from fractions import Fraction

import pytest

from simpdim.complexes import (
    Complex,
    EmptySimplexError,
    Graph,
    NotAFaceError,
    PreComplex,
    dim_inductive,
    dim_inductive_graph,
    dim_max,
    enumerate_complexes,
    euler_characteristic,
    family,
    generate,
    graph_join,
    is_variety_graph,
    join,
    make_simplex,
    max_plus,
    skeleton_graph,
    sphere_genus_sum,
    unit_ball,
    unit_ball_join,
    unit_sphere,
    whitney_complex,
)
from simpdim.genfun import dim_avg_plus, f_vector


@pytest.fixture
def house():
    return family("house")


@pytest.fixture
def rabbit():
    return family("rabbit")


def complete_graph(n):
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def test_make_simplex_sorts_and_deduplicates():
    assert make_simplex([3, 1, 3, 2]) == (1, 2, 3)


def test_make_simplex_rejects_empty():
    with pytest.raises(EmptySimplexError, match="empty simplex"):
        make_simplex([])


def test_make_simplex_rejects_negative_labels():
    with pytest.raises(ValueError):
        make_simplex([0, -1])


def test_generate_closes_and_orders(house):
    assert f_vector(house).counts == (5, 6, 1)
    sizes = [len(x) for x in house.faces]
    assert sizes == sorted(sizes)
    assert house.faces[:5] == ((1,), (2,), (3,), (4,), (5,))
    assert house.is_closed()


def test_generate_rejects_empty_generator():
    with pytest.raises(EmptySimplexError):
        generate([[1, 2], []])


def test_from_faces_requires_closure():
    with pytest.raises(ValueError):
        Complex.from_faces([[0, 1]])
    assert PreComplex.from_faces([[0, 1]]).faces == ((0, 1),)


def test_contains(house):
    assert (3, 2, 5) in house
    assert [1, 4] in house
    assert (1, 3) not in house
    assert () not in house


def test_whitney_complex_of_complete_graph():
    assert whitney_complex(complete_graph(4)).faces == family("K", 4).faces


def test_skeleton_graph(house):
    g = skeleton_graph(house)
    assert g.n == 5
    assert len(g.edges) == 6


def test_graph_normalizes_edges():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.edges == frozenset({(0, 2), (1, 2)})
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(1, 1)}))


@pytest.mark.parametrize(
    "kind,params,fvector",
    [
        ("E", (3,), (3,)),
        ("K", (3,), (3, 3, 1)),
        ("C", (5,), (5, 5)),
        ("P", (4,), (4, 3)),
        ("P", (1,), (1,)),
        ("Kmn", (3, 3), (6, 9)),
        ("cross", (0,), (2,)),
        ("octahedron", (), (6, 12, 8)),
        ("icosahedron", (), (12, 30, 20)),
        ("rabbit", (), (5, 5, 1)),
    ],
)
def test_family_fvectors(kind, params, fvector):
    assert f_vector(family(kind, *params)).counts == fvector


@pytest.mark.parametrize(
    "kind,params",
    [
        ("C", (2,)),
        ("K", (0,)),
        ("K", (1, 2)),
        ("Kmn", (3,)),
        ("Kmn", ("3", 2)),
        ("Kmn", (2.5, 2)),
        ("Kmn", (True, 2)),
        ("house", (1,)),
        ("torus", ()),
    ],
)
def test_family_rejects_bad_parameters(kind, params):
    with pytest.raises(ValueError):
        family(kind, *params)


def test_icosahedron_every_vertex_in_five_triangles():
    ico = family("icosahedron")
    for v in range(12):
        assert sum(1 for x in ico.faces if len(x) == 3 and v in x) == 5


def test_unit_sphere_and_ball():
    K3 = family("K", 3)
    assert unit_sphere(K3, [0]).faces == ((0, 1), (0, 2), (0, 1, 2))
    assert unit_ball(K3, [0]).faces == ((0,), (0, 1), (0, 2), (0, 1, 2))
    assert unit_sphere(K3, [0, 1, 2]).faces == ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2))


def test_unit_sphere_requires_a_face():
    with pytest.raises(NotAFaceError):
        unit_sphere(family("K", 3), [5])
    with pytest.raises(NotAFaceError):
        unit_ball(family("C", 4), [0, 2])


def test_join_of_two_point_complexes_is_a_square():
    square = join(family("E", 2), family("E", 2))
    assert f_vector(square).counts == (4, 4)
    assert square.is_closed()


def test_join_with_empty_is_identity(house):
    assert join(house, Complex()).faces == house.faces
    assert join(Complex(), house).faces == house.faces


def test_join_keeps_pre_complexes_unclosed():
    sphere = unit_sphere(family("K", 3), [0])
    cone = join(sphere, family("E", 1))
    assert type(cone) is PreComplex
    assert not cone.is_closed()
    assert type(join(family("K", 2), family("E", 1))) is Complex
    assert type(join(sphere, Complex())) is PreComplex


def test_join_fvector_and_dim_plus():
    joined = join(family("C", 4), family("K", 3))
    assert f_vector(joined).counts == (7, 19, 25, 16, 4)
    assert dim_avg_plus(f_vector(joined)) == Fraction(17, 6)
    assert dim_avg_plus(f_vector(family("Kmn", 12, 2))) == Fraction(62, 39)


def test_graph_join_matches_complex_join():
    g = graph_join(Graph(2), complete_graph(2))
    assert g.n == 4
    assert len(g.edges) == 5
    assert f_vector(whitney_complex(g)) == f_vector(join(family("E", 2), family("K", 2)))


def test_unit_ball_join_is_a_cone():
    octahedron = family("octahedron")
    cone = unit_ball_join(octahedron, [0, 2, 4])
    assert f_vector(cone).counts == (4, 6, 3)


def test_dim_max_and_max_plus(house):
    assert dim_max(house) == 2
    assert max_plus(house) == 3
    assert dim_max(Complex()) == -1
    assert max_plus(Complex()) == 0


def test_inductive_dimension_house_and_rabbit(house, rabbit):
    assert dim_inductive(house) + 1 == Fraction(61, 24)
    assert dim_inductive(rabbit) + 1 == Fraction(13, 5)
    assert dim_inductive_graph(skeleton_graph(house)) + 1 == Fraction(37, 15)
    assert dim_inductive_graph(skeleton_graph(rabbit)) + 1 == Fraction(5, 2)


def test_inductive_dimension_of_families():
    assert dim_inductive(Complex()) == -1
    assert dim_inductive_graph(Graph(0)) == -1
    for n in range(1, 6):
        assert dim_inductive(family("E", n)) == 0
        assert dim_inductive(family("K", n)) == n - 1
        assert dim_inductive_graph(complete_graph(n)) == n - 1
    assert dim_inductive(family("C", 6)) == 1
    assert dim_inductive(family("Kmn", 3, 3)) == 1


def test_named_families_up_to_twenty():
    for n in range(1, 21):
        assert dim_avg_plus(f_vector(family("E", n))) == Fraction(n, n + 1)
        assert dim_avg_plus(f_vector(family("P", n))) == Fraction(3 * n - 2, 2 * n)
        assert dim_avg_plus(f_vector(family("Kmn", n, n))) == Fraction(2 * n, n + 1)
        assert dim_inductive(family("E", n)) == 0
        assert dim_inductive(family("Kmn", n, n)) == 1
        if n >= 2:
            assert dim_inductive(family("P", n)) == 1
        if n >= 3:
            assert dim_avg_plus(f_vector(family("C", n))) == Fraction(3 * n, 2 * n + 1)
            assert dim_inductive(family("C", n)) == 1
    for n in range(1, 13):
        assert dim_avg_plus(f_vector(family("K", n))) == Fraction(n, 2)
        assert dim_inductive_graph(complete_graph(n)) == n - 1


@pytest.mark.slow
def test_complete_complexes_up_to_twenty():
    for n in range(13, 21):
        assert dim_avg_plus(f_vector(family("K", n))) == Fraction(n, 2)


def test_inductive_dimension_of_pre_complex_sphere():
    sphere = unit_sphere(family("K", 3), [0])
    assert dim_inductive(sphere) == 1


def test_euler_characteristic():
    assert euler_characteristic(family("house")) == 0
    assert euler_characteristic(family("icosahedron")) == 2
    assert euler_characteristic(family("C", 5)) == 0
    assert euler_characteristic(Complex()) == 0


@pytest.mark.parametrize(
    "name,params", [("K", (2,)), ("K", (4,)), ("house", ()), ("rabbit", ()), ("octahedron", ()), ("C", (5,))]
)
def test_sphere_genus_sum(name, params):
    lhs, chi = sphere_genus_sum(family(name, *params))
    assert lhs == chi


def test_is_variety_graph():
    c4 = skeleton_graph(family("C", 4))
    assert is_variety_graph(c4, 1)
    assert not is_variety_graph(c4, 2)
    assert not is_variety_graph(complete_graph(3), 1)
    assert is_variety_graph(skeleton_graph(family("octahedron")), 2)
    assert is_variety_graph(Graph(0), -1)
    assert not is_variety_graph(Graph(1), -1)


@pytest.mark.parametrize("n,count", [(0, 1), (1, 2), (2, 5), (3, 19), (5, 7580)])
def test_enumerate_complexes_counts(n, count):
    complexes = list(enumerate_complexes(n))
    assert len(complexes) == count
    assert all(G.is_closed() for G in complexes)
    assert len({G.faces for G in complexes}) == count


def test_enumerate_complexes_bounds():
    with pytest.raises(ValueError):
        list(enumerate_complexes(6))
