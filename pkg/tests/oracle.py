"""Reference computations that share no code with the package.

Degrees come from networkx and sums are taken straight from the textbook
definitions, so these can check the package's own edge sums.
"""

import math
from fractions import Fraction

import networkx as nx


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges())
    return G


def zagreb(G, a, b):
    deg = dict(G.degree())
    if isinstance(a, int) and isinstance(b, int):
        return sum(
            (Fraction(deg[u]) ** a * Fraction(deg[v]) ** b + Fraction(deg[u]) ** b * Fraction(deg[v]) ** a
             for u, v in G.edges()),
            Fraction(0),
        )
    return math.fsum(deg[u] ** a * deg[v] ** b + deg[u] ** b * deg[v] ** a for u, v in G.edges())


def partition(G):
    deg = dict(G.degree())
    out = {}
    for u, v in G.edges():
        key = tuple(sorted((deg[u], deg[v])))
        out[key] = out.get(key, 0) + 1
    return out
