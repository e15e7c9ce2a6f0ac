"""Slice-plane contour integration: Cauchy reconstruction and the integral
form of the Fueter-Sce map, on axially symmetric balls at desk scale.

Quadrature runs in float arithmetic only; the trapezoidal rule on the
periodic circle parametrization is spectrally accurate for the analytic
integrands used here.  Node evaluations are independent and summed
pairwise for reproducibility.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .clifford import Multivector, Paravector
from .errors import DomainError, InvalidParams, ParityError
from .kernels import cauchy_left, fueter_sce_kernel
from .rings import FLOATS


class SliceFunction:
    """Polynomial slice function alpha(u,v) + I beta(u,v).

    `alpha` and `beta` map exponent pairs (i, j) of u^i v^j to real
    coefficients.  The even-odd conditions are enforced structurally: alpha
    may only carry even powers of v and beta only odd powers.
    """

    def __init__(self, alpha: dict, beta: dict, series=None):
        self.alpha = {k: Fraction(v) for k, v in alpha.items() if v != 0}
        self.beta = {k: Fraction(v) for k, v in beta.items() if v != 0}
        for (_, j) in self.alpha:
            if j % 2 == 1:
                raise ParityError("alpha carries an odd power of v")
        for (_, j) in self.beta:
            if j % 2 == 0:
                raise ParityError("beta carries an even power of v")
        self.series = tuple(Fraction(c) for c in series) if series is not None else None

    @classmethod
    def from_power_series(cls, coeffs) -> "SliceFunction":
        """Intrinsic polynomial sum a_k x^k with real coefficients."""
        alpha: dict = {}
        beta: dict = {}
        for k, a in enumerate(coeffs):
            a = Fraction(a)
            if a == 0:
                continue
            for t in range(k + 1):
                c = a * math.comb(k, t)
                if t % 2 == 0:
                    sign = -1 if (t // 2) % 2 else 1
                    key = (k - t, t)
                    alpha[key] = alpha.get(key, Fraction(0)) + sign * c
                else:
                    sign = -1 if ((t - 1) // 2) % 2 else 1
                    key = (k - t, t)
                    beta[key] = beta.get(key, Fraction(0)) + sign * c
        return cls(alpha, beta, series=coeffs)

    def is_hyperholomorphic(self) -> bool:
        """Cauchy-Riemann system du alpha = dv beta, dv alpha = -du beta,
        checked exactly as polynomial identities."""
        pairs = set()
        for (i, j) in self.alpha:
            pairs.add((i, j))
        for (i, j) in self.beta:
            pairs.add((i, j))
        span_i = max((i for i, _ in pairs), default=0) + 2
        span_j = max((j for _, j in pairs), default=0) + 2
        za = Fraction(0)
        for i in range(span_i):
            for j in range(span_j):
                da_du = (i + 1) * self.alpha.get((i + 1, j), za)
                db_dv = (j + 1) * self.beta.get((i, j + 1), za)
                if da_du != db_dv:
                    return False
                da_dv = (j + 1) * self.alpha.get((i, j + 1), za)
                db_du = (i + 1) * self.beta.get((i + 1, j), za)
                if da_dv != -db_du:
                    return False
        return True

    def eval_components(self, u: float, v: float) -> tuple[float, float]:
        a = 0.0
        for (i, j), c in self.alpha.items():
            a += float(c) * u**i * v**j
        b = 0.0
        for (i, j), c in self.beta.items():
            b += float(c) * u**i * v**j
        return a, b

    def __call__(self, x: Paravector) -> Multivector:
        """Slice extension alpha(x0,|xv|) + (xv/|xv|) beta(x0,|xv|)."""
        u = float(x.x0)
        v2 = float(x.vector_norm_sq())
        n = x.n
        if v2 == 0.0:
            a, _ = self.eval_components(u, 0.0)
            return Multivector.scalar(n, FLOATS, a)
        v = math.sqrt(v2)
        a, b = self.eval_components(u, v)
        out = Multivector.zero(n, FLOATS)
        out.coeffs[0] = a
        for i, c in enumerate(x.xu):
            out.coeffs[1 << i] = float(c) / v * b
        return out

    def as_ring_function(self):
        """Ring-generic closure sum x^k a_k, usable by the jet oracle."""
        if self.series is None:
            raise InvalidParams("no power-series representation available")
        series = self.series

        def f(ring, x):
            acc = Multivector.zero(x.n, ring)
            for k, a in enumerate(series):
                if a == 0:
                    continue
                acc = acc + x.pow(k).to_multivector().scale(ring.lift(a))
            return acc

        return f


def slice_extend(alpha: dict, beta: dict) -> SliceFunction:
    return SliceFunction(alpha, beta)


class ContourSpec:
    """Circle of given center (real) and radius inside the slice plane C_I."""

    __slots__ = ("I", "center", "radius", "nodes")

    def __init__(self, I, center: float, radius: float, nodes: int):
        I = tuple(float(c) for c in I)
        norm = sum(c * c for c in I)
        if abs(norm - 1.0) > 1e-9:
            raise InvalidParams("I must be a unit 1-vector (I^2 = -1)")
        if radius <= 0:
            raise InvalidParams("radius must be positive")
        if nodes < 8 or nodes % 2:
            raise InvalidParams("node count must be even and >= 8")
        self.I = I
        self.center = float(center)
        self.radius = float(radius)
        self.nodes = nodes

    @property
    def n(self) -> int:
        return len(self.I)

    def with_nodes(self, nodes: int) -> "ContourSpec":
        return ContourSpec(self.I, self.center, self.radius, nodes)


def contour_nodes(contour: ContourSpec):
    """Quadrature nodes s_j and weights ds_I * (2 pi / N).

    With s(t) = center + r cos t + I r sin t one has ds_I = ds (-I)
    = (s - center) dt, so the weight is just the radial offset scaled by
    the angular step.
    """
    n = contour.n
    r = contour.radius
    c = contour.center
    N = contour.nodes
    step = 2.0 * math.pi / N
    out = []
    for j in range(N):
        t = step * j
        ct, st = math.cos(t), math.sin(t)
        s = Paravector(FLOATS, c + r * ct, tuple(comp * (r * st) for comp in contour.I))
        w = Paravector(FLOATS, r * ct * step, tuple(comp * (r * st * step) for comp in contour.I))
        out.append((s, w))
    return out


def _require_interior(x: Paravector, contour: ContourSpec):
    if x.n != contour.n:
        raise InvalidParams("point and contour dimensions differ")
    v = math.sqrt(float(x.vector_norm_sq()))
    dist = math.hypot(float(x.x0) - contour.center, v)
    r = contour.radius
    if abs(dist - r) <= 1e-9 * max(1.0, r):
        raise DomainError("x lies on the contour")
    if dist > r:
        raise DomainError("x lies outside the axially symmetric domain")


def _pairwise_sum(values):
    k = len(values)
    if k == 1:
        return values[0]
    half = k // 2
    return _pairwise_sum(values[:half]) + _pairwise_sum(values[half:])


def cauchy_reconstruct(f, x: Paravector, contour: ContourSpec) -> Multivector:
    """(1/2pi) sum of S_L^{-1}(s_j, x) ds_I f(s_j) over the circle nodes."""
    _require_interior(x, contour)
    terms = [
        cauchy_left(s, x, form="II") * w.to_multivector() * f(s)
        for s, w in contour_nodes(contour)
    ]
    return _pairwise_sum(terms).scale(1.0 / (2.0 * math.pi))


def fueter_sce_integral(f, x: Paravector, contour: ContourSpec) -> Multivector:
    """(1/2pi) sum of F_L^n(s_j, x) ds_I f(s_j); the axially monogenic image."""
    if x.n % 2 == 0 or x.n < 3:
        raise InvalidParams("integral Fueter-Sce map needs odd dimension >= 3")
    _require_interior(x, contour)
    terms = [
        fueter_sce_kernel(s, x, side="left") * w.to_multivector() * f(s)
        for s, w in contour_nodes(contour)
    ]
    return _pairwise_sum(terms).scale(1.0 / (2.0 * math.pi))


def convergence_table(integral, f, x: Paravector, contour: ContourSpec,
                      node_counts, reference: Multivector):
    """Error versus node count; `ratio` is the decay per row."""
    rows = []
    prev = None
    for N in node_counts:
        approx = integral(f, x, contour.with_nodes(N))
        err = (approx - reference).norm_float()
        ratio = (err / prev) if (prev and prev > 0) else None
        rows.append({"N": N, "abs_error": err, "ratio": ratio})
        prev = err
    return rows


def write_convergence_csv(rows, stream):
    stream.write("N,abs_error,ratio\n")
    for row in rows:
        ratio = "" if row["ratio"] is None else repr(row["ratio"])
        stream.write(f"{row['N']},{row['abs_error']!r},{ratio}\n")
