"""The three 8-vertex reference graphs G1, G2, G3 and the bound values printed for them."""

from __future__ import annotations

from .graph import Graph

G1_EDGES = [
    (1, 2), (1, 5), (1, 7), (1, 8),
    (2, 5), (2, 6), (2, 7), (2, 8),
    (3, 7), (3, 8),
    (4, 5), (4, 6), (4, 7), (4, 8),
    (5, 6), (5, 7), (5, 8),
    (6, 8),
    (7, 8),
]

G2_EDGES = [
    (1, 3), (1, 7), (1, 8),
    (2, 3), (2, 5), (2, 6), (2, 7),
    (3, 4), (3, 5), (3, 6), (3, 8),
    (4, 5), (4, 7),
    (5, 6), (5, 7),
]

G3_EDGES = [
    (1, 7), (1, 8),
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
    (3, 4), (3, 5), (3, 7), (3, 8),
    (4, 8),
    (5, 6),
    (6, 7), (6, 8),
    (7, 8),
]

REFERENCE_EDGES = {"G1": G1_EDGES, "G2": G2_EDGES, "G3": G3_EDGES}

# Printed rows: Delta, d_2, d_{n-1}, delta, M1, then the columns headed by the
# (max, min), (2nd smallest, min) and (max, 2nd largest) bounds, 4 decimals.
PRINTED_TABLE = {
    "G1": {"Delta": 7, "d2": 6, "d_nminus1": 4, "delta": 2, "M1": 198,
           "cor_zte2": 193.1667, "cor_z2te1": 189.1667, "cor_z2te2": 190.6667},
    "G2": {"Delta": 6, "d2": 5, "d_nminus1": 3, "delta": 2, "M1": 124,
           "cor_zte2": 120.6667, "cor_z2te1": 121.1667, "cor_z2te2": 117.1667},
    "G3": {"Delta": 5, "d2": 4, "d_nminus1": 3, "delta": 2, "M1": 138,
           "cor_zte2": 133.1667, "cor_z2te1": 129.1667, "cor_z2te2": 134.5000},
}
PRINT_TOLERANCE = 5e-5


def reference_graph(name: str) -> Graph:
    return Graph.from_edges(8, REFERENCE_EDGES[name], one_based=True)


def reference_graphs() -> dict[str, Graph]:
    return {name: reference_graph(name) for name in REFERENCE_EDGES}
