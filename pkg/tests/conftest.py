import random

from holograph import Graph, GraphFunction


def random_multigraph(rng: random.Random, max_n: int = 8) -> Graph:
    """Random small multigraph: pair multiplicities in {0,1,2}, at least one
    edge when possible."""
    n = rng.randint(2, max_n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.extend([(u, v)] * rng.choice((0, 0, 1, 1, 2)))
    if not edges:
        edges = [(0, 1)]
    return Graph(n, edges)


def random_function(rng: random.Random, ring, n: int) -> GraphFunction:
    elems = list(ring.elements())
    return GraphFunction(ring, tuple(rng.choice(elems) for _ in range(n)))
