"""Finite multigraphs, the generator families, truncated regular trees and
the edge-list text format.

Graphs are undirected multigraphs without self-loops.  Adjacency is stored
per vertex as a sorted tuple of neighbor ids with parallel edges repeated,
so symmetry-with-multiplicity is a structural invariant.  Graphs are
immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Graph:
    """Undirected multigraph on vertices 0..n-1."""

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, vertex_count: int, edges: Iterable[tuple]):
        if vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [[] for _ in range(vertex_count)]
        count = 0
        for u, v in edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"edge endpoints must be ints, got ({u!r}, {v!r})")
            if u < 0 or v < 0 or u >= vertex_count or v >= vertex_count:
                raise ValueError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._edge_count = count

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def adjacency(self) -> tuple:
        return self._adj

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, v: int) -> tuple:
        """Multiset of neighbors of v (sorted, parallel edges repeated)."""
        if not 0 <= v < len(self._adj):
            raise IndexError(f"vertex {v} out of range")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self):
        """Yield each edge once as (u, v) with u < v, multiplicity repeated."""
        for u, nbrs in enumerate(self._adj):
            for w in nbrs:
                if w > u:
                    yield (u, w)

    def serialize(self) -> str:
        """Edge-list text: one "u v" line per edge, u < v, sorted."""
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    @staticmethod
    def from_edge_list(text: str) -> "Graph":
        """Parse edge-list text.  Lines are "u v" with 0-based ids; lines
        starting with '#' are comments; repeated lines make parallel edges."""
        edges = []
        top = -1
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
            if u < 0 or v < 0:
                raise ValueError(f"line {lineno}: negative vertex id in {raw!r}")
            if u == v:
                raise ValueError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u, v))
            top = max(top, u, v)
        return Graph(top + 1, edges)

    def validate(self) -> None:
        """Re-check structural invariants; raises ValueError on breach."""
        total = 0
        for u, nbrs in enumerate(self._adj):
            total += len(nbrs)
            for w in set(nbrs):
                if w == u:
                    raise ValueError(f"self-loop at {u}")
                if self._adj[w].count(u) != nbrs.count(w):
                    raise ValueError(f"asymmetric multiplicity on ({u}, {w})")
        if total != 2 * self._edge_count:
            raise ValueError("degree sum does not equal twice the edge count")

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


class TruncatedTree:
    """Radius-r truncation of a regular tree, rooted at vertex 0.

    ``boundary`` holds the vertices whose neighborhood was clipped by the
    truncation; local (harmonicity) conditions are never checked there.
    For plain radius truncations that is exactly the maximum-depth level;
    the edge-rooted variant additionally exempts the anchor vertex.
    """

    __slots__ = ("graph", "root", "parent", "depth", "boundary")

    def __init__(self, graph: Graph, root: int, parent: Sequence, depth: Sequence,
                 boundary: Iterable[int]):
        self.graph = graph
        self.root = root
        self.parent = tuple(parent)
        self.depth = tuple(depth)
        self.boundary = frozenset(boundary)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def adjacency(self) -> tuple:
        return self.graph.adjacency

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def neighbors(self, v: int) -> tuple:
        return self.graph.neighbors(v)

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def children(self, v: int) -> tuple:
        return tuple(w for w in self.graph.neighbors(v) if self.parent[w] == v)

    def __repr__(self):
        return (f"TruncatedTree(n={self.vertex_count}, root={self.root}, "
                f"boundary={len(self.boundary)})")


def as_graph(g) -> Graph:
    """The underlying Graph of either a Graph or a TruncatedTree."""
    return g.graph if isinstance(g, TruncatedTree) else g


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(d: int) -> Graph:
    """Center vertex 0 with d leaves."""
    if d < 1:
        raise ValueError(f"star needs d >= 1, got {d}")
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError(f"complete needs k >= 1, got {k}")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def multi(base, multiplier: int) -> Graph:
    """Replicate every edge of the base graph `multiplier` times."""
    if multiplier < 1:
        raise ValueError(f"multiplier must be >= 1, got {multiplier}")
    g = as_graph(base)
    edges = [e for e in g.edges() for _ in range(multiplier)]
    return Graph(g.vertex_count, edges)


def tree(degree: int, radius: int) -> TruncatedTree:
    """Radius-r truncation of the d-regular tree: the root has d children,
    interior vertices d-1 children, and the depth-r level is the boundary."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    edges = []
    parent = [None]
    depth = [0]
    frontier = [0]
    next_id = 1
    for level in range(1, radius + 1):
        new = []
        for v in frontier:
            kids = degree if v == 0 else degree - 1
            for _ in range(kids):
                edges.append((v, next_id))
                parent.append(v)
                depth.append(level)
                new.append(next_id)
                next_id += 1
        if not new:
            break
        frontier = new
    graph = Graph(next_id, edges)
    return TruncatedTree(graph, 0, parent, depth, frozenset(frontier))


def edge_rooted_tree(degree: int, radius: int) -> TruncatedTree:
    """One half of a d-regular tree split at an edge, truncated at radius r.

    Vertex 0 is the inner endpoint (full degree d: the anchor plus d-1
    subtree children); vertex 1 is the anchor across the split edge and is
    part of the boundary, since the rest of its neighborhood lies on the
    other side of the split.
    """
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    edges = [(0, 1)]
    parent = [None, 0]
    depth = [0, 1]
    frontier = [0]
    next_id = 2
    for level in range(1, radius + 1):
        new = []
        for v in frontier:
            for _ in range(degree - 1):
                edges.append((v, next_id))
                parent.append(v)
                depth.append(level)
                new.append(next_id)
                next_id += 1
        if not new:
            break
        frontier = new
    graph = Graph(next_id, edges)
    boundary = frozenset(frontier) | {1}
    return TruncatedTree(graph, 0, parent, depth, boundary)


def gen(spec: str):
    """Build a graph from a colon spec: cycle:6, path:3, star:5,
    complete:4, tree:3:4, multi:<base...>:<multiplier>."""
    parts = spec.strip().split(":")
    family = parts[0]
    try:
        if family == "cycle" and len(parts) == 2:
            return cycle(int(parts[1]))
        if family == "path" and len(parts) == 2:
            return path(int(parts[1]))
        if family == "star" and len(parts) == 2:
            return star(int(parts[1]))
        if family == "complete" and len(parts) == 2:
            return complete(int(parts[1]))
        if family == "tree" and len(parts) == 3:
            return tree(int(parts[1]), int(parts[2]))
        if family == "multi" and len(parts) >= 3:
            return multi(gen(":".join(parts[1:-1])), int(parts[-1]))
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"unrecognized generator spec {spec!r}")
