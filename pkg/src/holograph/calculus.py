"""The discrete Laplacian, harmonicity/holomorphy predicates, and the
vertex-local increment condition.

The Laplacian of f at x is the sum of f(y) - f(x) over edges incident to
x, parallel edges counted with multiplicity.  A function is harmonic when
its Laplacian vanishes at every checked vertex, and holomorphic when both
it and its pointwise square are harmonic.  On a TruncatedTree the checked
vertices are the non-boundary ones; on a plain Graph, all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import TruncatedTree
from .rings import Ring


@dataclass(frozen=True)
class GraphFunction:
    """Total assignment vertex -> ring element, values indexed by id."""

    ring: Ring
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def value(self, v: int):
        return self.values[v]

    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1

    def plus(self, other: "GraphFunction") -> "GraphFunction":
        if other.ring != self.ring:
            raise ValueError("ring mismatch between functions")
        r = self.ring
        return GraphFunction(r, tuple(r.add(a, b) for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> "GraphFunction":
        r = self.ring
        return GraphFunction(r, tuple(r.mul(c, a) for a in self.values))

    def squared(self) -> "GraphFunction":
        r = self.ring
        return GraphFunction(r, tuple(r.square(a) for a in self.values))

    def to_text(self) -> str:
        r = self.ring
        return "".join(f"{v} {r.format(a)}\n" for v, a in enumerate(self.values))

    @classmethod
    def constant(cls, ring: Ring, vertex_count: int, value) -> "GraphFunction":
        return cls(ring, (value,) * vertex_count)

    @classmethod
    def from_text(cls, ring: Ring, vertex_count: int, text: str) -> "GraphFunction":
        """Parse "v value" lines; every vertex must appear exactly once."""
        seen = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'v value', got {raw!r}")
            v = int(parts[0])
            if v < 0 or v >= vertex_count:
                raise ValueError(f"line {lineno}: vertex {v} out of range")
            if v in seen:
                raise ValueError(f"line {lineno}: duplicate value for vertex {v}")
            seen[v] = ring.parse(parts[1])
        missing = [v for v in range(vertex_count) if v not in seen]
        if missing:
            raise ValueError(f"missing values for vertices {missing}")
        return cls(ring, tuple(seen[v] for v in range(vertex_count)))


@dataclass(frozen=True)
class IncrementVector:
    """Multiset of neighbor differences at a vertex, one entry per incident
    edge: f(neighbor) - f(center)."""

    ring: Ring
    center: int
    increments: tuple

    def __post_init__(self):
        object.__setattr__(self, "increments", tuple(sorted(self.increments)))


def checked_vertices(g) -> tuple:
    """Vertices at which local conditions apply: everything for a Graph,
    the non-boundary vertices for a TruncatedTree."""
    if isinstance(g, TruncatedTree):
        return tuple(v for v in range(g.vertex_count) if v not in g.boundary)
    return tuple(range(g.vertex_count))


def _require_total(g, f: GraphFunction):
    if len(f.values) != g.vertex_count:
        raise ValueError(
            f"function has {len(f.values)} values for a graph on {g.vertex_count} vertices"
        )


def laplacian(g, f: GraphFunction) -> GraphFunction:
    """(Lap f)(x) = sum over incident edges of f(y) - f(x)."""
    _require_total(g, f)
    r = f.ring
    out = []
    for x in range(g.vertex_count):
        fx = f.values[x]
        acc = r.zero()
        for y in g.neighbors(x):
            acc = r.add(acc, r.sub(f.values[y], fx))
        out.append(acc)
    return GraphFunction(r, tuple(out))


def local_increments(g, f: GraphFunction, v: int) -> IncrementVector:
    _require_total(g, f)
    r = f.ring
    fv = f.values[v]
    return IncrementVector(r, v, tuple(r.sub(f.values[w], fv) for w in g.neighbors(v)))


def local_condition(inc: IncrementVector) -> bool:
    """True iff the increments sum to zero and their squares sum to zero."""
    r = inc.ring
    zero = r.zero()
    s = zero
    ssq = zero
    for a in inc.increments:
        s = r.add(s, a)
        ssq = r.add(ssq, r.square(a))
    return s == zero and ssq == zero


def harmonic_violations(g, f: GraphFunction) -> list:
    """Checked vertices where the Laplacian of f is nonzero."""
    _require_total(g, f)
    r = f.ring
    zero = r.zero()
    bad = []
    for x in checked_vertices(g):
        fx = f.values[x]
        acc = zero
        for y in g.neighbors(x):
            acc = r.add(acc, r.sub(f.values[y], fx))
        if acc != zero:
            bad.append(x)
    return bad


def is_harmonic(g, f: GraphFunction) -> bool:
    return not harmonic_violations(g, f)


def holomorphic_violations(g, f: GraphFunction) -> list:
    """Checked vertices where f or its square fails to be harmonic."""
    bad = set(harmonic_violations(g, f)) | set(harmonic_violations(g, f.squared()))
    return sorted(bad)


def is_holomorphic(g, f: GraphFunction) -> bool:
    """f and its pointwise square are both harmonic."""
    return is_harmonic(g, f) and is_harmonic(g, f.squared())
