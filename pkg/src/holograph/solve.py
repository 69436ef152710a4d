"""Local algebra at a vertex: enumerate and count solutions of the paired
linear+quadratic system, plus closed-form point counts for nondegenerate
diagonal quadratic forms over finite fields.

The local system solved throughout is, for an incoming difference t and k
free neighbor slots,

    x_1 + ... + x_k = t      and      x_1^2 + ... + x_k^2 = -t^2,

which is exactly the condition for the vertex-local sum/square-sum
equations to close at a vertex whose already-assigned neighbor differs by
t.  (With all incident differences a_0 = -t, a_1 = x_1, ..., the two
equations sum a_i and a_i^2 to zero.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rings import Ring, TABLE_MAX, quadratic_character

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """An exhaustive scan would exceed the configured candidate budget."""


def _check_budget(size: int, arity: int, budget):
    if budget is not None and size**arity > budget:
        raise BudgetExceededError(
            f"scan of {size}^{arity} candidate tuples exceeds budget {budget}"
        )


@dataclass(frozen=True)
class LocalSolutionSet:
    """All ordered k-tuples solving the local system for incoming t.

    Closed under coordinate permutation; tuples are stored in the ring's
    element-index lexicographic order.
    """

    ring: Ring
    arity: int
    incoming: object
    tuples: tuple

    @property
    def count(self) -> int:
        return len(self.tuples)


@dataclass(frozen=True)
class QuadraticSystem:
    """A paired system over an odd-characteristic field:

        sum_j a_j x_j^2 = quad_rhs    and    sum_j b_j x_j = lin_rhs.

    The derived quantities b = sum_j b_j^2 / a_j and c = lin_rhs^2 -
    quad_rhs * b classify the reduction of the pair to a single quadratic
    form; c = 0 is the degenerate regime in which the solution count drops
    to q^(k-2) independent of the right-hand sides.
    """

    field: Ring
    diag: tuple
    linear: tuple
    quad_rhs: object
    lin_rhs: object

    def __post_init__(self):
        if self.field.kind not in ("prime-field", "extension-field"):
            raise ValueError(f"quadratic systems need a field, got {self.field.spec}")
        object.__setattr__(self, "diag", tuple(self.diag))
        object.__setattr__(self, "linear", tuple(self.linear))
        if len(self.diag) != len(self.linear) or not self.diag:
            raise ValueError("need matching nonempty coefficient tuples")
        if any(a == self.field.zero() for a in self.diag):
            raise ValueError("degenerate system: zero diagonal coefficient")

    @classmethod
    def vertex_system(cls, field: Ring, arity: int, incoming) -> "QuadraticSystem":
        """The local extension system for incoming difference t:
        all coefficients 1, quadratic side -t^2, linear side t."""
        one = field.one()
        return cls(field, (one,) * arity, (one,) * arity,
                   field.neg(field.square(incoming)), incoming)

    @property
    def reduced_b(self):
        f = self.field
        return f.sum(f.mul(f.square(b), f.inv(a))
                     for a, b in zip(self.diag, self.linear))

    @property
    def reduced_c(self):
        f = self.field
        return f.sub(f.square(self.lin_rhs), f.mul(self.quad_rhs, self.reduced_b))

    def count_solutions(self, budget=DEFAULT_BUDGET) -> int:
        """Exhaustive count of simultaneous solutions."""
        f = self.field
        k = len(self.diag)
        _check_budget(f.size, k, budget)
        t = f.tables
        add, elems, index = t.add, t.elements, t.index
        qn = len(elems)
        quad_slot = [[index[f.mul(a, f.square(x))] for x in elems] for a in self.diag]
        lin_slot = [[index[f.mul(b, x)] for x in elems] for b in self.linear]
        target_q = index[self.quad_rhs]
        target_l = index[self.lin_rhs]
        count = 0
        last = k - 1

        def rec(depth, sq, sl):
            nonlocal count
            if depth == last:
                qs, ls = quad_slot[depth], lin_slot[depth]
                row_q, row_l = add[sq], add[sl]
                for i in range(qn):
                    if row_q[qs[i]] == target_q and row_l[ls[i]] == target_l:
                        count += 1
                return
            for i in range(qn):
                rec(depth + 1, add[sq][quad_slot[depth][i]], add[sl][lin_slot[depth][i]])

        rec(0, 0, 0)
        return count


def _scan_tables(ring: Ring, k: int, target_sum, target_sq):
    t = ring.tables
    add, sq, elems = t.add, t.sq, t.elements
    ts = t.index[target_sum]
    tq = t.index[target_sq]
    qn = len(elems)
    out = []
    path = [0] * k
    last = k - 1

    def rec(depth, s, ss):
        if depth == last:
            row = add[s]
            for i in range(qn):
                if row[i] == ts and add[ss][sq[i]] == tq:
                    path[depth] = i
                    out.append(tuple(elems[j] for j in path))
            return
        for i in range(qn):
            path[depth] = i
            rec(depth + 1, add[s][i], add[ss][sq[i]])

    rec(0, 0, 0)
    return out


def _scan_direct(ring: Ring, k: int, target_sum, target_sq):
    elems = list(ring.elements())
    zero = ring.zero()
    out = []
    for tup in itertools.product(elems, repeat=k):
        s = zero
        ss = zero
        for x in tup:
            s = ring.add(s, x)
            ss = ring.add(ss, ring.square(x))
        if s == target_sum and ss == target_sq:
            out.append(tup)
    return out


def local_solution_set(ring: Ring, arity: int, incoming,
                       budget=DEFAULT_BUDGET) -> LocalSolutionSet:
    """Exhaustively solve sum(x) = t, sum(x^2) = -t^2 over ring^arity."""
    if ring.size is None:
        raise ValueError("local solution enumeration requires a finite ring")
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    if not ring.is_element(incoming):
        raise ValueError(f"{incoming!r} is not a canonical element of {ring.spec}")
    _check_budget(ring.size, arity, budget)
    target_sq = ring.neg(ring.square(incoming))
    if ring.size <= TABLE_MAX:
        tuples = _scan_tables(ring, arity, incoming, target_sq)
    else:
        tuples = _scan_direct(ring, arity, incoming, target_sq)
    return LocalSolutionSet(ring, arity, incoming, tuple(tuples))


def diagonal_counts_exhaustive(field: Ring, coeffs, budget=DEFAULT_BUDGET) -> dict:
    """Brute-force oracle: scan every tuple in field^k and histogram the
    value of sum(a_i * x_i^2).  Returns {value: count} covering all values.

    Independent of the closed-form path below; this is the gate the formula
    must pass before being trusted.
    """
    if field.size is None:
        raise ValueError("exhaustive counting requires a finite ring")
    k = len(coeffs)
    if k < 1:
        raise ValueError("need at least one coefficient")
    _check_budget(field.size, k, budget)
    t = field.tables
    add, elems, index = t.add, t.elements, t.index
    qn = len(elems)
    slot = [
        [index[field.mul(a, field.square(x))] for x in elems] for a in coeffs
    ]
    counts = [0] * qn
    last = k - 1

    def rec(depth, acc):
        vals = slot[depth]
        if depth == last:
            for i in range(qn):
                counts[add[acc][vals[i]]] += 1
            return
        for i in range(qn):
            rec(depth + 1, add[acc][vals[i]])

    rec(0, 0)
    return {elems[i]: counts[i] for i in range(qn)}


def count_diagonal_quadratic_zeros(field: Ring, coeffs, rhs) -> int:
    """Closed-form count of solutions of a_1 x_1^2 + ... + a_k x_k^2 = b
    over a finite field of odd characteristic, all a_i nonzero.

    k even: q^(k-1) + v(b) q^(k/2-1) X((-1)^(k/2) prod a)  with v(0) = q-1,
    v(b) = -1 otherwise; k odd: q^(k-1) + q^((k-1)/2) X((-1)^((k-1)/2) b
    prod a), where X is the quadratic character (X(0) = 0).
    """
    if field.kind not in ("prime-field", "extension-field"):
        raise ValueError(f"diagonal form counting needs a field, got {field.spec}")
    k = len(coeffs)
    if k < 1:
        raise ValueError("need at least one coefficient")
    zero = field.zero()
    prod = field.one()
    for a in coeffs:
        if a == zero:
            raise ValueError("degenerate form: zero diagonal coefficient")
        prod = field.mul(prod, a)
    q = field.size
    if k % 2 == 0:
        sign = field.from_int(-1) if (k // 2) % 2 else field.one()
        eps = quadratic_character(field, field.mul(sign, prod))
        v = q - 1 if rhs == zero else -1
        return q ** (k - 1) + v * q ** (k // 2 - 1) * eps
    sign = field.from_int(-1) if ((k - 1) // 2) % 2 else field.one()
    eps = quadratic_character(field, field.mul(sign, field.mul(rhs, prod)))
    return q ** (k - 1) + q ** ((k - 1) // 2) * eps


def two_squares_count(field: Ring, rhs) -> int:
    """Exhaustive count of pairs with x^2 + y^2 = b (independent of the
    closed-form path)."""
    if field.kind not in ("prime-field", "extension-field"):
        raise ValueError(f"two-squares counting needs a field, got {field.spec}")
    elems = list(field.elements())
    squares = [field.square(x) for x in elems]
    count = 0
    for sx in squares:
        for sy in squares:
            if field.add(sx, sy) == rhs:
                count += 1
    return count


def predicted_N1(field: Ring, degree: int):
    """Both candidate values of the local count at a vertex of odd degree d
    with char not dividing d, plus the hypothesized sign.

    Returns (count_plus, count_minus, eta_hypothesis) with
    count_± = q^(d-2) ± (q-1) q^((d-3)/2) and the hypothesis
    eta = X((-1)^((d-1)/2) d).  The hypothesis must be confirmed against
    the enumeration oracle before being reported as resolved.
    """
    if field.kind not in ("prime-field", "extension-field"):
        raise ValueError(f"predicted local count needs a field, got {field.spec}")
    if degree % 2 == 0:
        raise ValueError(f"degree must be odd, got {degree} (exponent not integral)")
    if degree % field.char == 0:
        raise ValueError(
            f"characteristic {field.char} divides degree {degree}: form degenerates"
        )
    q = field.size
    base = q ** (degree - 2)
    delta = (q - 1) * q ** ((degree - 3) // 2)
    sign = field.from_int(-1) if ((degree - 1) // 2) % 2 else field.one()
    eta = quadratic_character(field, field.mul(sign, field.from_int(degree)))
    return base + delta, base - delta, eta


def predicted_N2(field: Ring, degree: int) -> int:
    """Predicted extension count q^(p-3) past a vertex of degree p = char;
    independent of the incoming difference."""
    if field.kind not in ("prime-field", "extension-field"):
        raise ValueError(f"predicted extension count needs a field, got {field.spec}")
    if degree != field.char:
        raise ValueError(
            f"degree must equal the characteristic {field.char}, got {degree}"
        )
    return field.size ** (degree - 3)
