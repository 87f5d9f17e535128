import random

from hypothesis import strategies as st

from lattice_zagreb.graph import Graph


def random_connected_graph(rng: random.Random, max_vertices: int = 50) -> Graph:
    """Random spanning tree plus a random number of extra edges."""
    n = rng.randint(2, max_vertices)
    g = Graph(n)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], order[rng.randrange(i)])
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            g.add_edge(u, v)
    return g


@st.composite
def graphs(draw, max_vertices: int = 12) -> Graph:
    """Arbitrary simple graphs, possibly disconnected or with isolated vertices."""
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    g = Graph(n)
    if n < 2:
        return g
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for u, v in draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))):
        g.add_edge(u, v)
    return g


small_ints = st.integers(min_value=-4, max_value=4)
reals = st.floats(min_value=-3, max_value=3, allow_nan=False).filter(lambda x: not float(x).is_integer())
