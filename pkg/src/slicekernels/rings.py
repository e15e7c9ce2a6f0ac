"""Coefficient rings: exact rationals, guarded floats, and truncated Taylor jets.

All algebraic containers in this library (multivectors, paravectors,
differential operators) are generic over a small ring interface:

    ring.zero(), ring.one(), ring.lift(v), ring.is_zero(v), ring.invert(v)

Ring *elements* combine through ordinary Python operators, so ``Fraction``,
``float`` and :class:`Jet` all drive the same Clifford arithmetic.  Jets are
the substrate of the differentiation oracle: a jet holds the Taylor
coefficients of a scalar quantity in ``num_vars`` real coordinates up to a
fixed total order, so evaluating any expression over jets yields all its
partial derivatives at the base point in one pass.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import InvalidParams, NonInvertibleConstantTerm, OrderExceeded

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RationalRing:
    """Exact field of rationals backed by arbitrary-precision integers."""

    name = "rational"
    exact = True

    def zero(self) -> Fraction:
        return _ZERO

    def one(self) -> Fraction:
        return _ONE

    def lift(self, v) -> Fraction:
        # float inputs convert exactly (every float is dyadic rational)
        return Fraction(v)

    def is_zero(self, v) -> bool:
        return v == 0

    def invert(self, v) -> Fraction:
        return 1 / Fraction(v)

    def magnitude(self, v) -> float:
        try:
            return abs(float(v))
        except OverflowError:
            return math.inf

    def __repr__(self):
        return "RationalRing()"


class FloatRing:
    """Double-precision arithmetic with a tolerance-based zero test."""

    name = "float"
    exact = False

    def __init__(self, tol: float = 1e-12):
        self.tol = tol

    def zero(self) -> float:
        return 0.0

    def one(self) -> float:
        return 1.0

    def lift(self, v) -> float:
        return float(v)

    def is_zero(self, v) -> bool:
        return abs(v) <= self.tol

    def invert(self, v) -> float:
        return 1.0 / v

    def magnitude(self, v) -> float:
        return abs(v)

    def __repr__(self):
        return f"FloatRing(tol={self.tol!r})"


RATIONALS = RationalRing()
FLOATS = FloatRing()


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


@lru_cache(maxsize=None)
def jet_context(num_vars: int, order: int) -> "JetContext":
    return JetContext(num_vars, order)


class JetContext:
    """Shared index tables for jets of a fixed shape (num_vars, order).

    Multi-indices are enumerated in graded lexicographic order; positions in
    that enumeration are the storage keys, so products reduce to integer
    index arithmetic.
    """

    __slots__ = ("num_vars", "order", "exponents", "index", "degree", "size", "_pair")

    def __init__(self, num_vars: int, order: int):
        if num_vars < 1 or order < 0:
            raise InvalidParams(f"bad jet shape ({num_vars}, {order})")
        exps = []
        for total in range(order + 1):
            exps.extend(_compositions(total, num_vars))
        self.num_vars = num_vars
        self.order = order
        self.exponents = tuple(exps)
        self.index = {e: i for i, e in enumerate(exps)}
        self.degree = tuple(sum(e) for e in exps)
        self.size = len(exps)
        self._pair: dict[tuple[int, int], int] = {}

    def pair_index(self, i: int, j: int) -> int:
        """Storage index of exponents[i] + exponents[j] (caller checks degree)."""
        key = (i, j)
        k = self._pair.get(key)
        if k is None:
            ea, eb = self.exponents[i], self.exponents[j]
            k = self.index[tuple(a + b for a, b in zip(ea, eb))]
            self._pair[key] = k
        return k


def _multi_index_factorial(alpha: Iterable[int]) -> int:
    out = 1
    for a in alpha:
        out *= math.factorial(a)
    return out


class Jet:
    """Truncated multivariate Taylor expansion of a scalar quantity.

    Coefficients are stored per graded-lex index as Taylor coefficients
    (derivative divided by alpha factorial), sparsely: indices with exactly
    zero coefficient are absent.
    """

    __slots__ = ("ctx", "ring", "coeffs")

    def __init__(self, ctx: JetContext, ring, coeffs: dict):
        self.ctx = ctx
        self.ring = ring
        self.coeffs = coeffs

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Jet"):
        if self.ctx is not other.ctx:
            if (self.ctx.num_vars, self.ctx.order) != (other.ctx.num_vars, other.ctx.order):
                raise InvalidParams("jet shape mismatch")

    def __add__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            cur = out.get(k)
            if cur is None:
                out[k] = v
            else:
                s = cur + v
                if s == 0:
                    del out[k]
                else:
                    out[k] = s
        return Jet(self.ctx, self.ring, out)

    def __neg__(self):
        return Jet(self.ctx, self.ring, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            ctx = self.ctx
            degree = ctx.degree
            order = ctx.order
            pair_index = ctx.pair_index
            out: dict = {}
            for i, av in self.coeffs.items():
                di = degree[i]
                for j, bv in other.coeffs.items():
                    if di + degree[j] > order:
                        continue
                    k = pair_index(i, j)
                    p = av * bv
                    cur = out.get(k)
                    if cur is None:
                        out[k] = p
                    else:
                        s = cur + p
                        if s == 0:
                            del out[k]
                        else:
                            out[k] = s
            return Jet(ctx, self.ring, out)
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c):
        if c == 0:
            return Jet(self.ctx, self.ring, {})
        return Jet(self.ctx, self.ring, {k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None  # mutable-dict backed; jets are not hashable

    # -- queries ------------------------------------------------------

    def constant_term(self):
        return self.coeffs.get(0, self.ring.zero())

    def derivative(self, alpha: tuple) -> object:
        """Partial derivative d^alpha at the base point (coefficient * alpha!)."""
        ctx = self.ctx
        if len(alpha) != ctx.num_vars:
            raise InvalidParams("multi-index length mismatch")
        if sum(alpha) > ctx.order:
            raise OrderExceeded(f"|alpha|={sum(alpha)} exceeds jet order {ctx.order}")
        c = self.coeffs.get(ctx.index[tuple(alpha)])
        if c is None:
            return self.ring.zero()
        return c * _multi_index_factorial(alpha)

    def __repr__(self):
        terms = ", ".join(
            f"{self.ctx.exponents[k]}: {v}" for k, v in sorted(self.coeffs.items())
        )
        return f"Jet({self.ctx.num_vars} vars, order {self.ctx.order}, {{{terms}}})"


class JetRing:
    """Ring of jets over a scalar ring, with fixed variable count and order."""

    name = "jet"

    def __init__(self, num_vars: int, order: int, scalar_ring=RATIONALS):
        self.ctx = jet_context(num_vars, order)
        self.scalar_ring = scalar_ring
        self.exact = scalar_ring.exact

    @property
    def num_vars(self):
        return self.ctx.num_vars

    @property
    def order(self):
        return self.ctx.order

    def zero(self) -> Jet:
        return Jet(self.ctx, self.scalar_ring, {})

    def one(self) -> Jet:
        return Jet(self.ctx, self.scalar_ring, {0: self.scalar_ring.one()})

    def lift(self, v) -> Jet:
        if isinstance(v, Jet):
            return v
        sv = self.scalar_ring.lift(v)
        if sv == 0:
            return self.zero()
        return Jet(self.ctx, self.scalar_ring, {0: sv})

    def seed(self, i: int, value) -> Jet:
        """Jet of the i-th coordinate function at base value `value`."""
        ctx = self.ctx
        if not 0 <= i < ctx.num_vars:
            raise InvalidParams(f"variable index {i} out of range")
        coeffs = {}
        sv = self.scalar_ring.lift(value)
        if sv != 0:
            coeffs[0] = sv
        if ctx.order >= 1:
            unit = tuple(1 if k == i else 0 for k in range(ctx.num_vars))
            coeffs[ctx.index[unit]] = self.scalar_ring.one()
        return Jet(ctx, self.scalar_ring, coeffs)

    def is_zero(self, jet: Jet) -> bool:
        sr = self.scalar_ring
        return all(sr.is_zero(v) for v in jet.coeffs.values())

    def invert(self, jet: Jet) -> Jet:
        return self.reciprocal(jet)

    def reciprocal(self, jet: Jet) -> Jet:
        """Multiplicative inverse up to the truncation order, order by order."""
        ctx = jet.ctx
        sr = self.scalar_ring
        c0 = jet.constant_term()
        if sr.is_zero(c0):
            raise NonInvertibleConstantTerm("jet constant term is not invertible")
        inv0 = sr.invert(c0)
        out = {0: inv0}
        rest = sorted(
            ((i, v) for i, v in jet.coeffs.items() if i != 0),
            key=lambda item: item[0],
        )
        exponents = ctx.exponents
        degree = ctx.degree
        index = ctx.index
        for k in range(1, ctx.size):
            alpha = exponents[k]
            dk = degree[k]
            acc = None
            for i, av in rest:
                if degree[i] > dk:
                    break
                beta = exponents[i]
                gamma = tuple(a - b for a, b in zip(alpha, beta))
                if any(g < 0 for g in gamma):
                    continue
                bv = out.get(index[gamma])
                if bv is None:
                    continue
                p = av * bv
                acc = p if acc is None else acc + p
            if acc is not None:
                val = -(inv0 * acc)
                if val != 0:
                    out[k] = val
        return Jet(ctx, sr, out)

    def magnitude(self, jet: Jet) -> float:
        sr = self.scalar_ring
        return max((sr.magnitude(v) for v in jet.coeffs.values()), default=0.0)

    def __repr__(self):
        return f"JetRing(num_vars={self.num_vars}, order={self.order}, scalar={self.scalar_ring!r})"


# Spec-level operation aliases; the methods above carry the behavior.

def jet_seed_coordinate(i: int, value, num_vars: int, order: int, scalar_ring=RATIONALS) -> Jet:
    return JetRing(num_vars, order, scalar_ring).seed(i, value)


def jet_mul(a: Jet, b: Jet) -> Jet:
    return a * b


def jet_reciprocal(a: Jet, scalar_ring=None) -> Jet:
    ring = JetRing(a.ctx.num_vars, a.ctx.order, scalar_ring or a.ring)
    return ring.reciprocal(a)


def jet_extract_derivative(a: Jet, alpha: tuple):
    return a.derivative(alpha)
