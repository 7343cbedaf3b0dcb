"""Property-based checks of the algebraic identities on random small complexes."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from simpdim.barycentric import conjecture_a_delta, kruskal_katona_valid, refine, refine_fvector
from simpdim.complexes import (
    Graph,
    dim_inductive,
    dim_inductive_graph,
    dim_max,
    euler_characteristic,
    generate,
    is_variety_graph,
    join,
    sphere_genus_sum,
    unit_ball_join,
    unit_sphere,
)
from simpdim.experiments import delta
from simpdim.genfun import dim_avg_plus, f_vector, gen_poly, genus, log_derivative


def generator_lists(vertices: int, max_generators: int):
    return st.lists(
        st.sets(st.integers(0, vertices - 1), min_size=1, max_size=vertices), max_size=max_generators
    )


def complexes(vertices: int, max_generators: int):
    return generator_lists(vertices, max_generators).map(generate)


small = complexes(6, 5)
tiny = complexes(3, 3)
positive = st.fractions(min_value=Fraction(1, 100), max_value=10, max_denominator=100)


@settings(max_examples=500, deadline=None)
@given(small)
def test_augmented_cardinality_and_genus(G):
    fv = f_vector(G)
    assert gen_poly(fv)(1) == len(G) + 1
    assert genus(fv) == 1 - euler_characteristic(G)
    assert kruskal_katona_valid(fv)


@settings(max_examples=200, deadline=None)
@given(small)
def test_margin_is_non_negative(G):
    margin = delta(G)
    assert margin >= 0
    complete = not G.faces or G.faces == generate([G.vertices]).faces
    assert (margin == 0) == complete


@settings(max_examples=300, deadline=None)
@given(small)
def test_sphere_genus_sum(G):
    lhs, chi = sphere_genus_sum(G)
    assert lhs == chi == euler_characteristic(G)


@settings(max_examples=500, deadline=None)
@given(tiny, tiny, positive)
def test_join_identities(H, K, t):
    HK = join(H, K)
    fh, fk, fhk = f_vector(H), f_vector(K), f_vector(HK)
    assert dim_avg_plus(fhk) == dim_avg_plus(fh) + dim_avg_plus(fk)
    assert genus(fhk) == genus(fh) * genus(fk)
    assert log_derivative(fhk, t) == log_derivative(fh, t) + log_derivative(fk, t)
    assert dim_inductive(HK) + 1 == (dim_inductive(H) + 1) + (dim_inductive(K) + 1)


@settings(max_examples=300, deadline=None)
@given(complexes(4, 4))
def test_refinement_matches_operator(G):
    G1 = refine(G)
    assert f_vector(G1) == refine_fvector(f_vector(G))
    assert euler_characteristic(G1) == euler_characteristic(G)
    assert conjecture_a_delta(f_vector(G)) >= 0


@settings(max_examples=300, deadline=None)
@given(small, st.data())
def test_unit_ball_adds_one_half(G, data):
    assume(G.faces)
    x = data.draw(st.sampled_from(G.faces))
    sphere = generate(unit_sphere(G, x).faces)
    ball = unit_ball_join(G, x)
    assert dim_avg_plus(f_vector(ball)) == dim_avg_plus(f_vector(sphere)) + Fraction(1, 2)


@settings(max_examples=300, deadline=None)
@given(generator_lists(6, 5), st.data())
def test_generate_is_idempotent_and_order_free(generators, data):
    G = generate(generators)
    assert generate(G.faces).faces == G.faces
    shuffled = data.draw(st.permutations(generators))
    assert generate([sorted(x, reverse=True) for x in shuffled]).faces == G.faces


@settings(max_examples=300, deadline=None)
@given(tiny, tiny, tiny)
def test_join_sizes_and_f_vector_algebra(H, K, L):
    HK = join(H, K)
    assert len(HK) == len(H) + len(K) + len(H) * len(K)
    assert dim_max(HK) + 1 == (dim_max(H) + 1) + (dim_max(K) + 1)
    assert f_vector(HK) == f_vector(join(K, H))
    assert f_vector(join(HK, L)) == f_vector(join(H, join(K, L)))
    assert HK.is_closed()


def disjoint_cycles(lengths):
    edges, offset = set(), 0
    for n in lengths:
        edges.update((offset + k, offset + (k + 1) % n) for k in range(n))
        offset += n
    return Graph(offset, frozenset(edges))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(4, 9), min_size=1, max_size=4))
def test_graph_dimension_of_one_varieties(lengths):
    g = disjoint_cycles(lengths)
    assert is_variety_graph(g, 1)
    assert dim_inductive_graph(g) == 1


@settings(max_examples=300, deadline=None)
@given(small, st.fractions(min_value=0, max_value=20, max_denominator=50))
def test_generating_polynomial_positive_on_non_negative_axis(G, t):
    f = gen_poly(f_vector(G))
    assert f(0) == 1
    assert f(t) > 0
