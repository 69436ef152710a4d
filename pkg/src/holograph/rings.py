"""Exact arithmetic over the coefficient structures used by the package.

Four kinds of rings are supported:

* ``PrimeField``     -- F_p for an odd prime p
* ``ExtensionField`` -- F_{p^n} as F_p[x]/(poly), p an odd prime
* ``ModRing``        -- Z_m for any modulus m >= 2 (composite allowed)
* ``EisensteinRing`` -- Z[w] with w^2 + w + 1 = 0 (exact, unbounded)

Elements are plain hashable Python values in canonical form:

* prime field / mod ring: ``int`` in ``[0, modulus)``
* extension field: length-n tuple of ints in ``[0, p)``, low-degree
  coefficient first, so ``(2, 1)`` means ``2 + x``
* Eisenstein: pair ``(a, b)`` meaning ``a + b*w``; Python ints are
  arbitrary precision, so no overflow handling is needed

Equality of elements is equality of representations.  A ring handle is an
immutable value object; handles and elements can be shared freely between
workers.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property
from typing import Iterable, NamedTuple

# Largest ring size for which dense index tables are precomputed; bigger
# rings fall back to direct element arithmetic in the scan routines.
TABLE_MAX = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class OpTables(NamedTuple):
    """Dense index-based operation tables for a small finite ring."""

    elements: tuple
    index: dict
    add: list
    neg: list
    sq: list


class Ring:
    """Handle exposing exact arithmetic on canonical elements."""

    kind: str
    char: int
    size: "int | None"
    spec: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def is_element(self, a) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def square(self, a):
        return self.mul(a, a)

    def sum(self, items: Iterable):
        acc = self.zero()
        for x in items:
            acc = self.add(acc, x)
        return acc

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc = self.one()
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def elements(self) -> Iterable:
        """All canonical elements, in index order (zero first)."""
        raise ValueError(f"{self.spec} is not a finite ring")

    def element_index(self, a) -> int:
        raise ValueError(f"{self.spec} is not a finite ring")

    @cached_property
    def tables(self) -> OpTables:
        """Index-based add/neg/square tables; only for small finite rings."""
        if self.size is None:
            raise ValueError(f"{self.spec} is not a finite ring")
        if self.size > TABLE_MAX:
            raise ValueError(f"{self.spec} too large for dense tables")
        elems = tuple(self.elements())
        assert elems[0] == self.zero()
        index = {e: i for i, e in enumerate(elems)}
        add = [[index[self.add(a, b)] for b in elems] for a in elems]
        neg = [index[self.neg(a)] for a in elems]
        sq = [index[self.square(a)] for a in elems]
        return OpTables(elems, index, add, neg, sq)

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}({self.spec!r})"


class PrimeField(Ring):
    kind = "prime-field"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("fields of characteristic 2 are not supported")
        self.p = p
        self.char = p
        self.size = p
        self.spec = f"Fp:{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in {self.spec}")
        return pow(a, self.p - 2, self.p)

    def from_int(self, k):
        return k % self.p

    def is_element(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p

    def elements(self):
        return range(self.p)

    def element_index(self, a):
        return a

    def parse(self, text):
        return int(text) % self.p

    def format(self, a):
        return str(a)

    def _key(self):
        return ("Fp", self.p)


class ModRing(Ring):
    kind = "mod-ring"

    def __init__(self, m: int):
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        self.m = m
        self.char = m
        self.size = m
        self.spec = f"Z:{m}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return -a % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def inv(self, a):
        try:
            return pow(a, -1, self.m)
        except ValueError:
            raise ZeroDivisionError(f"{a} is not a unit in {self.spec}") from None

    def from_int(self, k):
        return k % self.m

    def is_element(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.m

    def elements(self):
        return range(self.m)

    def element_index(self, a):
        return a

    def parse(self, text):
        return int(text) % self.m

    def format(self, a):
        return str(a)

    def _key(self):
        return ("Z", self.m)


# -- polynomial helpers over F_p (tuples of ints, low-degree first) --------


def _ptrim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        shift = len(a) - 1 - dm
        factor = a[-1] * lead_inv % p
        for i, mi in enumerate(m):
            a[i + shift] = (a[i + shift] - factor * mi) % p
        a = list(_ptrim(a))
    return _ptrim(a)


def _ppowmod(base, e, m, p):
    acc = (1,)
    b = _pmod(base, m, p)
    while e:
        if e & 1:
            acc = _pmod(_pmul(acc, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return acc


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b != (0,):
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _ptrim(out)


def _prime_divisors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(coeffs, p: int) -> bool:
    """Rabin's test: monic f of degree n is irreducible over F_p iff
    x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n."""
    f = _ptrim(coeffs)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    x = (0, 1)
    frob = {}
    t = x
    for i in range(1, n + 1):
        t = _ppowmod(t, p, f, p)
        frob[i] = t
    if frob[n] != _pmod(x, f, p):
        return False
    for r in _prime_divisors(n):
        g = _pgcd(_psub(frob[n // r], x, p), f, p)
        if len(g) > 1:
            return False
    return True


def irreducible_poly(p: int, n: int) -> tuple:
    """The first monic irreducible polynomial of degree n over F_p, taking
    candidates in increasing order of the coefficient vector read from the
    highest non-leading coefficient down to the constant term.  Deterministic
    across runs and platforms; coefficients returned low-degree first with
    the monic leading 1 included.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n == 1:
        return (0, 1)
    for vec in itertools.product(range(p), repeat=n):
        # vec = (c_{n-1}, ..., c_1, c_0)
        coeffs = tuple(reversed(vec)) + (1,)
        if poly_is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("unreachable: irreducible polynomials exist for every degree")


class ExtensionField(Ring):
    kind = "extension-field"

    def __init__(self, p: int, n: int, poly: "tuple | None" = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("fields of characteristic 2 are not supported")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        if poly is None:
            poly = irreducible_poly(p, n)
        else:
            poly = tuple(c % p for c in poly)
            if len(poly) != n + 1 or poly[-1] != 1:
                raise ValueError("modulus must be monic of degree n")
            if not poly_is_irreducible(poly, p):
                raise ValueError(f"{poly} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.poly = poly
        self.char = p
        self.size = p**n
        self.spec = f"Fq:{p}^{n}"

    def zero(self):
        return (0,) * self.n

    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        prod = _pmod(_pmul(a, b, self.p), self.poly, self.p)
        return prod + (0,) * (self.n - len(prod))

    def inv(self, a):
        if a == self.zero():
            raise ZeroDivisionError(f"0 is not invertible in {self.spec}")
        # extended Euclid in F_p[x]: find u with a*u = 1 mod poly
        p = self.p
        r0, r1 = self.poly, _ptrim(a)
        s0, s1 = (0,), (1,)
        while r1 != (0,):
            # r0 = q*r1 + r2
            q = self._pquot(r0, r1)
            r0, r1 = r1, _psub(r0, _pmul(q, r1, p), p)
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        lead_inv = pow(r0[-1], p - 2, p)
        u = tuple(c * lead_inv % p for c in s0)
        u = _pmod(u, self.poly, p)
        return u + (0,) * (self.n - len(u))

    def _pquot(self, a, b):
        p = self.p
        a = list(a)
        q = [0] * max(1, len(a) - len(b) + 1)
        lead_inv = pow(b[-1], p - 2, p)
        while len(a) - 1 >= len(b) - 1 and any(a):
            shift = len(a) - len(b)
            factor = a[-1] * lead_inv % p
            q[shift] = factor
            for i, bi in enumerate(b):
                a[i + shift] = (a[i + shift] - factor * bi) % p
            a = list(_ptrim(a))
        return _ptrim(q)

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.n - 1)

    def is_element(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.n
            and all(isinstance(c, int) and 0 <= c < self.p for c in a)
        )

    def element_from_index(self, i: int):
        p = self.p
        return tuple((i // p**j) % p for j in range(self.n))

    def elements(self):
        return (self.element_from_index(i) for i in range(self.size))

    def element_index(self, a):
        return sum(c * self.p**j for j, c in enumerate(a))

    def parse(self, text):
        parts = text.split(",")
        if len(parts) != self.n:
            raise ValueError(
                f"expected {self.n} comma-joined coefficients, got {text!r}"
            )
        return tuple(int(c) % self.p for c in parts)

    def format(self, a):
        return ",".join(str(c) for c in a)

    def _key(self):
        return ("Fq", self.p, self.n, self.poly)


_EIS_FULL = re.compile(r"([+-]?\d+)([+-]\d+)\*w")
_EIS_OMEGA = re.compile(r"([+-]?\d+)\*w")
_EIS_INT = re.compile(r"([+-]?\d+)")


class EisensteinRing(Ring):
    """Z[w], w a primitive cube root of unity; multiplication reduces via
    w^2 = -1 - w.  Infinite: no element enumeration."""

    kind = "eisenstein"

    def __init__(self):
        self.char = 0
        self.size = None
        self.spec = "Eisenstein"

    def zero(self):
        return (0, 0)

    def one(self):
        return (1, 0)

    def omega(self):
        return (0, 1)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c - b * d, a * d + b * c - b * d)

    def norm(self, x) -> int:
        a, b = x
        return a * a - a * b + b * b

    def conj(self, x):
        a, b = x
        return (a - b, -b)

    def inv(self, x):
        if self.norm(x) != 1:
            raise ZeroDivisionError(f"{x} is not a unit in Z[w]")
        return self.conj(x)

    def from_int(self, k):
        return (k, 0)

    def is_element(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and all(isinstance(c, int) and not isinstance(c, bool) for c in a)
        )

    def parse(self, text):
        s = text.replace(" ", "")
        m = _EIS_FULL.fullmatch(s)
        if m:
            return (int(m.group(1)), int(m.group(2)))
        m = _EIS_OMEGA.fullmatch(s)
        if m:
            return (0, int(m.group(1)))
        m = _EIS_INT.fullmatch(s)
        if m:
            return (int(m.group(1)), 0)
        raise ValueError(f"cannot parse Eisenstein integer {text!r}")

    def format(self, a):
        return f"{a[0]}{a[1]:+}*w"

    def _key(self):
        return ("Eisenstein",)


def quadratic_character(field: Ring, x) -> int:
    """0 for x = 0, +1 for a nonzero square, -1 otherwise.

    Defined on field kinds of odd characteristic only; computed as
    x^((q-1)/2).
    """
    if field.kind not in ("prime-field", "extension-field"):
        raise ValueError(f"quadratic character undefined on {field.spec}")
    if x == field.zero():
        return 0
    e = field.pow(x, (field.size - 1) // 2)
    if e == field.one():
        return 1
    if e == field.neg(field.one()):
        return -1
    raise ArithmeticError(f"{field.spec} does not behave like a field")


_SPEC_FP = re.compile(r"Fp:(\d+)")
_SPEC_FQ = re.compile(r"Fq:(\d+)\^(\d+)")
_SPEC_Z = re.compile(r"Z:(\d+)")


def ring_make(spec: str) -> Ring:
    """Build a ring from a spec string: "Fp:<p>", "Fq:<p>^<n>", "Z:<m>",
    or "Eisenstein"."""
    s = spec.strip()
    if s.lower() == "eisenstein":
        return EisensteinRing()
    m = _SPEC_FP.fullmatch(s)
    if m:
        return PrimeField(int(m.group(1)))
    m = _SPEC_FQ.fullmatch(s)
    if m:
        return ExtensionField(int(m.group(1)), int(m.group(2)))
    m = _SPEC_Z.fullmatch(s)
    if m:
        return ModRing(int(m.group(1)))
    raise ValueError(f"unrecognized ring spec {spec!r}")
