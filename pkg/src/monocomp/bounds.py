"""Guarantee formulas for the largest monochromatic component, the
prefix-constrained smoothing maximizer, and a per-coloring diagnostic trace.

The trace takes any full coloring, singles out the densest color, and checks
the vertex-prefix inequalities that every coloring must satisfy; a failure is
always an implementation bug.  All pass/fail decisions are made with exact
rational arithmetic (irrational square roots are eliminated by comparing
squares, sign by sign); floats appear only as reported diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graphs import (
    ColoredCompleteGraph,
    TheoremCheckError,
    color_class,
    components_of,
)

#: Comparison tolerance used when the square root of z is irrational and the
#: computation falls back to floating point.
FLOAT_TOL = 1e-12

RationalLike = int | Fraction


def lower_bound(n: int, k: int) -> Fraction | int:
    """Guaranteed edge count of some monochromatic component of any full
    k-coloring of K_n: C(n,2)/(k^2-k+5/4) in general, and the stronger
    ceil(C(n,2)/6) for k = 3.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 2:
        raise ValueError("n must be at least 2")
    total = comb(n, 2)
    if k == 3:
        return -(-total // 6)
    return Fraction(4 * total, 4 * k * k - 4 * k + 5)


def exact_sqrt(z: Fraction) -> Fraction | None:
    """The exact rational square root of z, or None if it is irrational."""
    num, den = z.numerator, z.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class SmoothingInstance:
    """Parameters (x, z, m) of the prefix-constrained maximization of sum v_i^2.

    Requires 0 < z <= 1, z <= x <= sqrt(z) and m >= floor(x/z) + 1; anything
    else is rejected rather than guessed at.
    """

    x: Fraction
    z: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "z", Fraction(self.z))
        if self.x <= 0 or self.z <= 0:
            raise ValueError("x and z must be positive")
        if self.z > 1:
            raise ValueError("z must be at most 1")
        if self.x * self.x > self.z:
            raise ValueError(f"x > sqrt(z): ({self.x})^2 > {self.z}")
        if self.x < self.z:
            raise ValueError("x < z leaves no room for the flat stretch")
        if self.m < self.m_prime + 1:
            raise ValueError(f"need m >= {self.m_prime + 1}, got {self.m}")

    @property
    def m_prime(self) -> int:
        return math.floor(self.x / self.z)


def smoothing_max(
    inst: SmoothingInstance,
) -> tuple[tuple[Fraction | float, ...], Fraction | float]:
    """The maximizing vector and its sum of squares.

    v_1 = 1 - x/sqrt(z) + sqrt(z), then a flat stretch of sqrt(z), then the
    leftover x/sqrt(z) - floor(x/z)*sqrt(z), then zeros.  Exact Fractions when
    sqrt(z) is rational, floats (documented tolerance FLOAT_TOL) otherwise.
    """
    s = exact_sqrt(inst.z)
    if s is not None:
        x: Fraction | float = inst.x
        zero: Fraction | float = Fraction(0)
    else:
        x = float(inst.x)
        s = math.sqrt(float(inst.z))
        zero = 0.0
    mp = inst.m_prime
    v: list[Fraction | float] = [zero] * inst.m
    v[0] = 1 - x / s + s
    for i in range(1, mp):
        v[i] = s
    v[mp] = x / s - mp * s
    value = sum(t * t for t in v)
    if not smoothing_feasible(v, inst):
        raise TheoremCheckError("smoothing maximizer is infeasible")
    return tuple(v), value


def smoothing_feasible(v, inst: SmoothingInstance) -> bool:
    """True iff v is nonincreasing, nonnegative, sums to 1, and every prefix
    sum respects 1 - x/sqrt(z) + j*sqrt(z)."""
    if len(v) != inst.m:
        raise ValueError(f"expected a vector of length {inst.m}")
    s_exact = exact_sqrt(inst.z)
    exact = s_exact is not None and not any(isinstance(t, float) for t in v)
    if exact:
        s: Fraction | float = s_exact
        x: Fraction | float = inst.x
        tol: Fraction | float = Fraction(0)
        vals = [Fraction(t) for t in v]
    else:
        s = math.sqrt(float(inst.z))
        x = float(inst.x)
        tol = FLOAT_TOL
        vals = [float(t) for t in v]
    if vals[-1] < -tol:
        return False
    if any(vals[i] < vals[i + 1] - tol for i in range(len(vals) - 1)):
        return False
    if abs(sum(vals) - 1) > tol:
        return False
    prefix = 0
    for j in range(1, inst.m):
        prefix += vals[j - 1]
        if prefix > 1 - x / s + j * s + tol:
            return False
    return True


@dataclass(frozen=True)
class PrefixCheck:
    """One vertex-prefix inequality: sum of the j largest component orders
    against (1 - x/sqrt(z) + j*sqrt(z)) * n."""

    j: int
    prefix: int
    bound: float
    ok: bool


@dataclass(frozen=True)
class Theorem1Trace:
    """Diagnostics of the densest color of a full coloring."""

    n: int
    k: int
    dense_color: int
    x: Fraction
    z: Fraction
    delta: float
    component_vertex_counts: tuple[int, ...]
    prefix_checks: tuple[PrefixCheck, ...]
    all_prefix_ok: bool
    pair_sum: int
    smoothing_applicable: bool
    smoothing_bound: float | None
    smoothing_ok: bool | None


def _prefix_ok(P: int, n: int, j: int, x: Fraction, z: Fraction) -> bool:
    # P <= (1 - x/sqrt(z) + j sqrt(z)) n  <=>  (x - jz)/sqrt(z) <= (n-P)/n
    gap = x - j * z
    if gap <= 0:
        return True
    a = Fraction(n - P, n)
    if a < 0:
        return False
    return gap * gap <= a * a * z


def _compare_to_sqrt_multiple(lhs: Fraction, coeff: Fraction, z: Fraction) -> bool:
    """Exact test of lhs <= coeff * sqrt(z) for rational lhs, coeff and z > 0."""
    if lhs <= 0 and coeff >= 0:
        return True
    if lhs > 0 and coeff <= 0:
        return False
    if lhs > 0:  # coeff > 0
        return lhs * lhs <= coeff * coeff * z
    return lhs * lhs >= coeff * coeff * z  # both negative


def theorem1_trace(coloring: ColoredCompleteGraph) -> Theorem1Trace:
    """Trace the densest color's component structure of a full coloring.

    Computes the densest color's edge fraction x, the global largest
    component fraction z, sorted component vertex counts, and every
    vertex-prefix check; records the sum of within-component pair counts
    against the smoothing bound when that bound applies.
    """
    n, k = coloring.n, coloring.k
    if n < 2:
        raise ValueError("need n >= 2")
    if k < 2:
        raise ValueError("need k >= 2")
    if not coloring.is_full:
        raise ValueError("trace requires a full coloring")
    total = comb(n, 2)
    sizes = coloring.class_sizes()
    dense = max(range(1, k + 1), key=lambda c: (sizes[c], -c))
    x = Fraction(sizes[dense], total)
    z_edges = 0
    dense_counts: list[int] = []
    for c in range(1, k + 1):
        comps = components_of(color_class(coloring, c))
        z_edges = max(z_edges, max(comp.edge_count for comp in comps))
        if c == dense:
            dense_counts = sorted((len(comp.vertices) for comp in comps), reverse=True)
    z = Fraction(z_edges, total)
    if sum(dense_counts) != n:
        raise TheoremCheckError("component vertex counts do not sum to n")
    if x * k < 1:
        raise TheoremCheckError("densest color below 1/k of the edges")
    if z < x * x:
        raise TheoremCheckError("largest component below x^2 of the edges")
    zf = float(z)
    delta = k - 1 / math.sqrt(zf)
    m = len(dense_counts)
    checks = []
    prefix = 0
    for j in range(1, m):
        prefix += dense_counts[j - 1]
        ok = _prefix_ok(prefix, n, j, x, z)
        bound = (1 - float(x) / math.sqrt(zf) + j * math.sqrt(zf)) * n
        checks.append(PrefixCheck(j=j, prefix=prefix, bound=bound, ok=ok))
    pair_sum = sum(comb(c, 2) for c in dense_counts)
    applicable = x >= z and m >= math.floor(x / z) + 1
    smoothing_bound = None
    smoothing_ok = None
    if applicable:
        # sum of squares of v_i = count_i / n is at most
        # (1 - x/sqrt(z) + sqrt(z))^2 + (x/z - 1) z = a + c*sqrt(z) with
        a = 1 - x + x * x / z
        c = 2 - 2 * x / z
        # pair_sum <= (n^2 (a + c sqrt(z)) - n) / 2
        lhs = Fraction(2 * pair_sum + n) - n * n * a
        smoothing_ok = _compare_to_sqrt_multiple(lhs, n * n * c, z)
        smoothing_bound = (n * n * (float(a) + float(c) * math.sqrt(zf)) - n) / 2
    return Theorem1Trace(
        n=n,
        k=k,
        dense_color=dense,
        x=x,
        z=z,
        delta=delta,
        component_vertex_counts=tuple(dense_counts),
        prefix_checks=tuple(checks),
        all_prefix_ok=all(c.ok for c in checks),
        pair_sum=pair_sum,
        smoothing_applicable=applicable,
        smoothing_bound=smoothing_bound,
        smoothing_ok=smoothing_ok,
    )
