"""Noncover and independence complexes of graphs, minimal exclusion sequences,
collapsibility certificates and the homology checks around them."""

from .chordal import VertexOrder, is_chordal, layered_vertex_order, verify_order_properties
from .collapse import CollapseCertificate, find_collapse_sequence, verify_certificate
from .complex import SimplicialComplex, alexander_dual, independence_complex, noncover_complex
from .domination import Semantics, domination_number, independence_domination_number
from .graph import Graph, parse_edge_list, parse_graph6
from .homology import Field, leray_number, reduced_betti
from .mes import collapsibility_bound, facet_order_nc, mes, star_normalize

__all__ = [
    "Graph", "parse_edge_list", "parse_graph6",
    "VertexOrder", "is_chordal", "layered_vertex_order", "verify_order_properties",
    "Semantics", "domination_number", "independence_domination_number",
    "SimplicialComplex", "noncover_complex", "independence_complex", "alexander_dual",
    "mes", "facet_order_nc", "collapsibility_bound", "star_normalize",
    "CollapseCertificate", "find_collapse_sequence", "verify_certificate",
    "Field", "reduced_betti", "leray_number",
]
