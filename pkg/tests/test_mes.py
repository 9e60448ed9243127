import random
import warnings

import pytest

from conftest import make
from oracles import mes_naive
from noncover.chordal import VertexOrder, is_chordal, layered_vertex_order
from noncover.complex import SimplicialComplex, enumerate_faces, noncover_complex
from noncover.domination import independence_domination_number
from noncover.generate import all_labeled_graphs, random_chordal, random_complex
from noncover.graph import Graph, GraphError, bits, is_connected, mask_of
from noncover.mes import (FacetOrder, NotAFaceError, bound_witness, collapsibility_bound,
                          edge_lex_order, facet_order_nc, is_star_normal, mes, mes_table,
                          noncover_bound, ordered_noncover_complex, star_normalize)


def S(*labels):
    return mask_of(x - 1 for x in labels)


def lab(G, edges):
    return [(G.labels[u], G.labels[v]) for u, v in edges]


def test_edge_lex_order(P3, P4, K2):
    nat = VertexOrder.natural
    assert lab(P3, edge_lex_order(P3, nat(3))) == [(2, 3), (1, 2)]
    assert lab(P4, edge_lex_order(P4, nat(4))) == [(3, 4), (2, 3), (1, 2)]
    assert lab(K2, edge_lex_order(K2, nat(2))) == [(1, 2)]


def test_edge_lex_order_respects_vertex_order(K13):
    o = layered_vertex_order(K13)        # 2 ≺ 1 ≺ 3 ≺ 4
    assert lab(K13, edge_lex_order(K13, o)) == [(1, 4), (1, 3), (2, 1)]


def test_facet_order_nc(P3, P4, K2):
    assert facet_order_nc(P3, VertexOrder.natural(3)).facets == (S(1), S(3))
    assert facet_order_nc(P4, VertexOrder.natural(4)).facets == (S(1, 2), S(1, 4), S(3, 4))
    assert facet_order_nc(K2, VertexOrder.natural(2)).facets == (0,)
    with pytest.raises(GraphError):
        facet_order_nc(Graph.from_edges(3, []), VertexOrder.natural(3))


def test_mes_hand_traces(P3, P4):
    K3, f3 = ordered_noncover_complex(P3, VertexOrder.natural(3))
    r = mes(S(3), K3, f3)
    assert (r.i, r.seq, r.support) == (2, (2,), S(3))
    K4, f4 = ordered_noncover_complex(P4, VertexOrder.natural(4))
    r = mes(S(3, 4), K4, f4)
    assert (r.i, r.seq, r.support) == (3, (2, 2), S(3))
    r = mes(S(1), K4, f4)
    assert (r.i, r.seq, r.support) == (1, (), 0)
    with pytest.raises(NotAFaceError):
        mes(S(2, 3), K4, f4)


def test_bound_examples(P3, P4, K13):
    assert noncover_bound(P3, VertexOrder.natural(3)) == 1
    assert noncover_bound(P4, layered_vertex_order(P4)) == 1
    assert noncover_bound(K13, layered_vertex_order(K13)) == 2


def test_bound_of_void_complex_warns():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        assert collapsibility_bound(SimplicialComplex.void(3)) == 0
    assert w and issubclass(w[0].category, RuntimeWarning)


def _random_order(n, rng):
    perm = list(range(n))
    rng.shuffle(perm)
    return VertexOrder(tuple(perm))


def test_mes_matches_definition_oracle_and_invariants():
    rng = random.Random(1)
    for _ in range(400):
        K = random_complex(rng, max_n=9, max_facets=12)
        order = _random_order(K.n, rng)
        facets = list(K.facets)
        rng.shuffle(facets)
        forder = FacetOrder(tuple(facets))
        as_sets = [set(bits(F)) for F in facets]
        best = 0
        for s in enumerate_faces(K):
            r = mes(s, K, forder, order)
            i, seq = mes_naive(set(bits(s)), as_sets, order.perm)
            assert (r.i, list(r.seq)) == (i, seq)
            assert len(r.seq) == r.i - 1
            for j, w in enumerate(r.seq):
                assert s >> w & 1 and not facets[j] >> w & 1
            assert r.support & ~s == 0
            best = max(best, r.size)
        d, witness = bound_witness(K, forder, order)
        assert d == best == collapsibility_bound(K, forder, order)
        assert mes(witness, K, forder, order).size == d


def test_mes_table_covers_each_face_once(P4):
    o = layered_vertex_order(P4)
    K, f = ordered_noncover_complex(P4, o)
    faces = [r.face for r in mes_table(K, f, o)]
    assert sorted(faces) == sorted(enumerate_faces(K))


@pytest.mark.parametrize("n", range(2, 6))
def test_bound_small_exhaustive(n):
    for G in all_labeled_graphs(n):
        if G.m and is_connected(G) and is_chordal(G):
            assert noncover_bound(G, layered_vertex_order(G)) <= n - independence_domination_number(G) - 1


def test_star_normalize_chord_example():
    G = make("12 23 34")   # two disjoint edges 12, 34 joined by the chord 23
    o = VertexOrder.natural(4)
    K, f = ordered_noncover_complex(G, o)
    assert not is_star_normal(G, 0, o)
    out = star_normalize(G, 0, o)
    assert out & S(1)
    assert out == S(1, 2)
    assert mes(out, K, f, o).seq == mes(0, K, f, o).seq
    assert star_normalize(G, out, o) == out


def test_star_normalize_rejects_covers(P3):
    with pytest.raises(NotAFaceError):
        star_normalize(P3, S(2), VertexOrder.natural(3))


def test_star_normalize_property_random_chordal():
    rng = random.Random(8)
    for k in range(25):
        G = random_chordal(rng.randint(2, 8), rng.random(), k)
        o = layered_vertex_order(G)
        K, f = ordered_noncover_complex(G, o)
        for s in enumerate_faces(K):
            t = star_normalize(G, s, o, f)
            assert t & s == s
            assert is_star_normal(G, t, o)
            assert mes(t, K, f, o).seq == mes(s, K, f, o).seq


def test_facet_order_must_match_complex(P4):
    K = noncover_complex(P4)
    with pytest.raises(ValueError):
        mes(0, K, FacetOrder((S(1),)))
