import random

import pytest

from conftest import make
from oracles import faces_brute, noncovers_brute
from noncover.complex import (ComplexError, SimplicialComplex, alexander_dual, enumerate_faces,
                              f_vector, format_facets, independence_complex, induced_subcomplex,
                              is_face, noncover_complex, parse_facets, reduce_facets)
from noncover.generate import all_labeled_graphs, random_complex
from noncover.graph import Graph, is_cover, mask_of


def S(*labels):
    return mask_of(x - 1 for x in labels)


def facet_sets(K):
    return sorted(K.render(F) for F in K.facets)


def test_noncover_examples(K2, P3, K13):
    nc = noncover_complex(K2)
    assert nc.facets == (0,) and not nc.is_void
    assert facet_sets(noncover_complex(P3)) == [[1], [3]]
    assert facet_sets(noncover_complex(K13)) == [[2, 3], [2, 4], [3, 4]]


def test_noncover_of_edgeless_is_void():
    K = noncover_complex(Graph.from_edges(3, []))
    assert K.is_void and list(enumerate_faces(K)) == []


def test_independence_examples(P4):
    assert facet_sets(independence_complex(make("12 13 23"))) == [[1], [2], [3]]
    assert facet_sets(independence_complex(P4)) == [[1, 3], [1, 4], [2, 4]]
    assert independence_complex(Graph.from_edges(3, [])) == SimplicialComplex.simplex(3)


def test_dual_examples():
    assert alexander_dual(SimplicialComplex.simplex(4)).is_void
    assert alexander_dual(SimplicialComplex.void(3)) == SimplicialComplex.simplex(3)
    # {∅} dualises to the boundary of the simplex
    assert facet_sets(alexander_dual(SimplicialComplex(3, [0]))) == [[1, 2], [1, 3], [2, 3]]


def test_face_queries(P3, K13, K2):
    assert sorted(enumerate_faces(noncover_complex(P3))) == [0, S(1), S(3)]
    sub = induced_subcomplex(noncover_complex(K13), S(2, 3))
    assert sub.facets == (S(2, 3),)
    assert not is_face(noncover_complex(K2), S(1))


@pytest.mark.parametrize("n", range(1, 7))
def test_noncover_faces_are_noncovers(n):
    for G in all_labeled_graphs(n):
        K = noncover_complex(G)
        for W in range(1 << n):
            assert is_face(K, W) == (not is_cover(G, W))
        if n <= 5:
            assert faces_brute(K) == {frozenset(s) for s in noncovers_brute(G)}
        if G.m:
            assert len(K.facets) == G.m
            assert all(F.bit_count() == n - 2 for F in K.facets)


@pytest.mark.parametrize("n", range(1, 7))
def test_duality_of_graph_complexes(n):
    for G in all_labeled_graphs(n):
        I = independence_complex(G)
        assert alexander_dual(I) == noncover_complex(G)
        assert alexander_dual(alexander_dual(I)) == I


def test_double_dual_random_complexes():
    rng = random.Random(4)
    for _ in range(500):
        K = random_complex(rng, max_n=7, max_facets=10)
        assert alexander_dual(alexander_dual(K)) == K


def test_enumerate_faces_no_duplicates():
    rng = random.Random(9)
    for _ in range(300):
        K = random_complex(rng, max_n=6, max_facets=8)
        faces = list(enumerate_faces(K))
        assert len(faces) == len(set(faces))
        assert {frozenset(v for v in range(K.n) if s >> v & 1) for s in faces} == faces_brute(K)
        assert sum(f_vector(K)) == len(faces)


def test_induced_subcomplex_keeps_faces_inside():
    rng = random.Random(5)
    for _ in range(200):
        K = random_complex(rng, max_n=6, max_facets=6)
        T = rng.getrandbits(K.n)
        L = induced_subcomplex(K, T)
        want = {f for f in faces_brute(K) if all(T >> v & 1 for v in f)}
        assert faces_brute(L) == want


def test_facets_must_be_incomparable():
    with pytest.raises(ComplexError):
        SimplicialComplex(3, [0b011, 0b001])
    assert reduce_facets([0b001, 0b011, 0b011, 0b100]) == (0b011, 0b100)


def test_facet_text_round_trip(K2, K13):
    for K in (noncover_complex(K13), noncover_complex(K2), SimplicialComplex.void(3)):
        back = parse_facets(format_facets(K))
        assert back == K and back.is_void == K.is_void
    assert parse_facets("1 2\n2 3\n") == SimplicialComplex(3, [S(1, 2), S(2, 3)])
    with pytest.raises(ComplexError):
        parse_facets("!void\n1 2\n")
