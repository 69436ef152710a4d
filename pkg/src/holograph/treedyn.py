"""Constructive dynamics: grow functions outward on truncated regular trees
by solving the local system at each frontier vertex, plus the dynamic
programming count of valid assignments on a radius-r ball.

Randomness is fully deterministic and platform-independent: every choice is
made by a Mersenne Twister (``random.Random``) seeded per vertex.  The root
uses the configured seed directly; a child at sibling index i derives

    child_seed = (parent_seed * 1000003 + i + 1) mod 2^64

so independent subtrees could be grown concurrently and still reproduce the
single-threaded result bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .calculus import GraphFunction
from .enumeration import CountReport
from .graphs import edge_rooted_tree, tree
from .rings import EisensteinRing, Ring
from .solve import DEFAULT_BUDGET, local_solution_set, predicted_N1

_SEED_MASK = (1 << 64) - 1
_SEED_MULT = 1000003


def _child_seed(parent_seed: int, index: int) -> int:
    return (parent_seed * _SEED_MULT + index + 1) & _SEED_MASK


class DeadEndError(RuntimeError):
    """A frontier vertex whose incoming difference admits no extension."""

    def __init__(self, vertex: int, incoming):
        self.vertex = vertex
        self.incoming = incoming
        super().__init__(
            f"dead end at vertex {vertex}: no local solution for incoming {incoming!r}"
        )


@dataclass(frozen=True)
class DynamicsConfig:
    """Deterministic recipe for one sampled tree function.

    ``root_value`` defaults to the ring's zero.  ``first_neighbor_values``
    optionally fixes the values on the root's neighbors (they must satisfy
    the root-local condition).  ``exclude_constant_branches`` drops every
    all-equal increment choice from the branch tables (the mode in which
    constant-increment edges are neglected).
    """

    ring: Ring
    degree: int
    radius: int
    seed: int
    root_value: object = None
    first_neighbor_values: "tuple | None" = None
    exclude_constant_branches: bool = False

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError(f"degree must be >= 2, got {self.degree}")
        if self.radius < 1:
            raise ValueError(f"radius must be >= 1, got {self.radius}")


@lru_cache(maxsize=None)
def _branch_tuples(ring: Ring, arity: int, incoming, exclude_constant: bool,
                   budget) -> tuple:
    sols = local_solution_set(ring, arity, incoming, budget=budget).tuples
    if exclude_constant:
        # a branch is constant when every incident increment agrees, i.e.
        # each free slot repeats the negated incoming difference
        rep = ring.neg(incoming)
        sols = tuple(s for s in sols if any(x != rep for x in s))
    return sols


class BranchTable:
    """Map incoming difference t -> the ordered local solutions at a vertex
    with ``arity`` free neighbor slots."""

    def __init__(self, ring: Ring, arity: int, exclude_constant: bool = False,
                 budget=DEFAULT_BUDGET):
        self.ring = ring
        self.arity = arity
        self.exclude_constant = exclude_constant
        self.budget = budget

    def branches(self, incoming) -> tuple:
        return _branch_tuples(self.ring, self.arity, incoming,
                              self.exclude_constant, self.budget)

    def count(self, incoming) -> int:
        return len(self.branches(incoming))


def root_branches(ring: Ring, degree: int, exclude_constant: bool = False,
                  budget=DEFAULT_BUDGET) -> tuple:
    """Increment d-tuples valid at the tree root (no incoming slot): zero
    sum and zero square-sum."""
    sols = local_solution_set(ring, degree, ring.zero(), budget=budget).tuples
    if exclude_constant:
        sols = tuple(s for s in sols if any(x != s[0] for x in s))
    return sols


def sample_holomorphic_tree(cfg: DynamicsConfig):
    """Grow one function on the radius-r truncation of the d-regular tree.

    Returns (tree, function).  The function satisfies the local condition
    at every non-boundary vertex by construction; identical configs produce
    identical functions.
    """
    ring = cfg.ring
    t = tree(cfg.degree, cfg.radius)
    root_value = cfg.root_value if cfg.root_value is not None else ring.zero()
    if not ring.is_element(root_value):
        raise ValueError(f"root value {cfg.root_value!r} is not canonical in {ring.spec}")

    values = [None] * t.vertex_count
    values[t.root] = root_value
    root_kids = t.children(t.root)

    if cfg.first_neighbor_values is not None:
        fixed = tuple(cfg.first_neighbor_values)
        if len(fixed) != cfg.degree:
            raise ValueError(
                f"expected {cfg.degree} first-neighbor values, got {len(fixed)}"
            )
        increments = tuple(ring.sub(x, root_value) for x in fixed)
        if increments not in set(root_branches(ring, cfg.degree, cfg.exclude_constant_branches)):
            raise ValueError("first-neighbor values violate the root-local condition")
    else:
        options = root_branches(ring, cfg.degree, cfg.exclude_constant_branches)
        if not options:
            raise DeadEndError(t.root, None)
        rng = random.Random(cfg.seed)
        increments = options[rng.randrange(len(options))]
    for kid, inc in zip(root_kids, increments):
        values[kid] = ring.add(root_value, inc)

    table = BranchTable(ring, cfg.degree - 1, cfg.exclude_constant_branches)
    seeds = {t.root: cfg.seed}
    for i, kid in enumerate(root_kids):
        seeds[kid] = _child_seed(cfg.seed, i)

    # BFS by construction order: ids were assigned level by level
    for v in range(1, t.vertex_count):
        if v in t.boundary:
            continue
        kids = t.children(v)
        incoming = ring.sub(values[v], values[t.parent[v]])
        options = table.branches(incoming)
        if not options:
            raise DeadEndError(v, incoming)
        rng = random.Random(seeds[v])
        choice = options[rng.randrange(len(options))]
        for i, kid in enumerate(kids):
            values[kid] = ring.add(values[v], choice[i])
            seeds[kid] = _child_seed(seeds[v], i)

    return t, GraphFunction(ring, tuple(values))


def eisenstein_branches(t) -> tuple:
    """The extension choices over Z[w] for incoming difference t: the two
    orderings of (-t*w, -t*w^2), or the single pair (0, 0) when t = 0.

    Each pair (x1, x2) satisfies x1 + x2 = t and x1^2 + x2^2 = -t^2
    identically, since w + w^2 = -1 and w^2 + w^4 = -1.
    """
    a, b = t
    if (a, b) == (0, 0):
        return (((0, 0), (0, 0)),)
    minus_tw = (b, b - a)
    minus_tw2 = (a - b, a)
    return ((minus_tw, minus_tw2), (minus_tw2, minus_tw))


def sample_complex_tr3(seed: int, radius: int, alpha, beta):
    """Grow a Z[w]-valued function on the edge-rooted truncation of the
    3-regular tree, with value alpha at the inner endpoint and beta at the
    anchor.  Every vertex choice picks one of the two branch orderings.

    The increments are unit multiples of beta - alpha, so the function is
    nonconstant whenever alpha != beta (required).
    """
    ring = EisensteinRing()
    if not ring.is_element(alpha) or not ring.is_element(beta):
        raise ValueError("alpha and beta must be Eisenstein integer pairs")
    if alpha == beta:
        raise ValueError("root edge values must differ")
    t = edge_rooted_tree(3, radius)
    values = [None] * t.vertex_count
    values[0] = alpha
    values[1] = beta

    seeds = {0: seed}
    stack = [0]
    while stack:
        v = stack.pop()
        if v in t.boundary:
            continue
        kids = tuple(k for k in t.children(v) if k != 1)
        incoming = ring.sub(values[v], values[t.parent[v]] if v != 0 else values[1])
        options = eisenstein_branches(incoming)
        rng = random.Random(seeds[v])
        choice = options[rng.randrange(len(options))]
        for i, kid in enumerate(kids):
            values[kid] = ring.add(values[v], choice[i])
            seeds[kid] = _child_seed(seeds[v], i)
            stack.append(kid)

    return t, GraphFunction(ring, tuple(values))


def dp_neighborhood_count(ring: Ring, degree: int, radius: int, s=None,
                          budget=DEFAULT_BUDGET) -> int:
    """Exact count of assignments on the radius-r ball of the d-regular
    tree, pinned at the root, satisfying the local condition at every
    vertex of depth < r.

    Recursion over remaining height h below an edge carrying difference t:
    N_0(t) = 1 and N_h(t) = sum over branch tuples of prod N_{h-1}(x_j);
    the root combines its arity-d solutions the same way.  The pin value s
    does not affect the count (translation invariance) and is accepted only
    for interface symmetry.
    """
    if ring.size is None:
        raise ValueError("counting requires a finite ring")
    if s is not None and not ring.is_element(s):
        raise ValueError(f"pin {s!r} is not canonical in {ring.spec}")
    table = BranchTable(ring, degree - 1, budget=budget)
    memo = {}

    def count_below(height: int, incoming) -> int:
        if height == 0:
            return 1
        key = (height, incoming)
        if key not in memo:
            total = 0
            for tup in table.branches(incoming):
                prod = 1
                for x in tup:
                    prod *= count_below(height - 1, x)
                total += prod
            memo[key] = total
        return memo[key]

    total = 0
    for tup in root_branches(ring, degree, budget=budget):
        prod = 1
        for x in tup:
            prod *= count_below(radius - 1, x)
        total += prod
    return total


def compare_corollary10(field: Ring, degree: int, radius: int,
                        budget=DEFAULT_BUDGET) -> CountReport:
    """Compare the DP ball count against the closed-form candidate
    [q^(d-2) + (q-1) q^((d-3)/2) eta] * q^((d-3)(r-1)) for both signs.

    The DP count is ground truth; disagreement is reported, not asserted
    away.
    """
    plus, minus, eta_hyp = predicted_N1(field, degree)
    q = field.size
    factor = q ** ((degree - 3) * (radius - 1))
    formula_plus = plus * factor
    formula_minus = minus * factor
    observed = dp_neighborhood_count(field, degree, radius, budget=budget)
    context = {
        "kind": "cor10",
        "ring": field.spec,
        "degree": degree,
        "radius": radius,
        "formula_plus": formula_plus,
        "formula_minus": formula_minus,
        "eta_hypothesis": eta_hyp,
        "agrees_plus": observed == formula_plus,
        "agrees_minus": observed == formula_minus,
    }
    return CountReport(context=context, observed=observed)
