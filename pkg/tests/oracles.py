"""Independent oracles for the test suite.

Nothing here calls back into the code paths it checks: the polytope vertex
enumerator solves exact linear systems from scratch, and the feasible-vector
samplers only rely on the constraint definitions.
"""

from __future__ import annotations

import random
from fractions import Fraction

from monocomp.bounds import SmoothingInstance, exact_sqrt


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gaussian elimination over Fractions; None if the system is singular."""
    n = len(rows)
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _constraints(inst: SmoothingInstance) -> list[tuple[list[Fraction], Fraction]]:
    """All inequality constraints as (coefficients, rhs) with coeffs . v <= rhs."""
    s = exact_sqrt(inst.z)
    if s is None:
        raise ValueError("polytope oracle needs a rational sqrt(z)")
    m = inst.m
    rows: list[tuple[list[Fraction], Fraction]] = []
    for i in range(m - 1):  # v_{i+1} <= v_i
        coeffs = [Fraction(0)] * m
        coeffs[i + 1] = Fraction(1)
        coeffs[i] = Fraction(-1)
        rows.append((coeffs, Fraction(0)))
    last = [Fraction(0)] * m
    last[m - 1] = Fraction(-1)
    rows.append((last, Fraction(0)))  # v_m >= 0
    for j in range(1, m):
        coeffs = [Fraction(1)] * j + [Fraction(0)] * (m - j)
        rows.append((coeffs, 1 - inst.x / s + j * s))
    return rows


def polytope_vertices(inst: SmoothingInstance) -> list[tuple[Fraction, ...]]:
    """Vertices of the feasible region, by enumerating active constraint sets.

    A vertex of the (m-1)-dimensional region (inside the sum-to-one
    hyperplane) is the unique solution of m-1 active inequalities plus the
    equality; every candidate is kept only if it satisfies all constraints.
    """
    from itertools import combinations

    cons = _constraints(inst)
    m = inst.m
    vertices: set[tuple[Fraction, ...]] = set()
    for active in combinations(range(len(cons)), m - 1):
        rows = [cons[i][0] for i in active] + [[Fraction(1)] * m]
        rhs = [cons[i][1] for i in active] + [Fraction(1)]
        sol = solve_exact(rows, rhs)
        if sol is None:
            continue
        if all(
            sum(c * v for c, v in zip(coeffs, sol)) <= bound
            for coeffs, bound in cons
        ):
            vertices.add(tuple(sol))
    return sorted(vertices)


class ExactFeasibleSampler:
    """Feasible vectors for an instance with rational sqrt(z), as exact
    Fractions backed by integer arithmetic.

    Rejection-samples sorted integer weight vectors; whenever a draw lands
    outside the region it is pulled back toward the known maximizer by a
    dyadic binary search (the region is convex and the maximizer feasible, so
    the result is always a feasible point).
    """

    SCALE = 10**6

    def __init__(self, inst: SmoothingInstance, maximizer: tuple[Fraction, ...]):
        s = exact_sqrt(inst.z)
        if s is None:
            raise ValueError("exact sampler needs a rational sqrt(z)")
        self.inst = inst
        self.maximizer = maximizer
        # prefix bounds as (numerator, denominator) pairs
        self.bounds = [
            (1 - inst.x / s + j * s) for j in range(1, inst.m)
        ]

    def _weights_ok(self, w: list[int], total: int) -> bool:
        prefix = 0
        for j, bound in enumerate(self.bounds, start=1):
            prefix += w[j - 1]
            if prefix * bound.denominator > bound.numerator * total:
                return False
        return True

    def draw(self, rng: random.Random) -> tuple[Fraction, ...]:
        w = sorted((rng.randint(0, self.SCALE) for _ in range(self.inst.m)), reverse=True)
        total = sum(w)
        if total == 0:
            w[0], total = 1, 1
        if self._weights_ok(w, total):
            return tuple(Fraction(x, total) for x in w)
        # binary search the largest dyadic t with t*w + (1-t)*maximizer feasible
        raw = [Fraction(x, total) for x in w]
        lo, hi = Fraction(0), Fraction(1)
        for _ in range(20):
            mid = (lo + hi) / 2
            cand = [
                mid * r + (1 - mid) * v for r, v in zip(raw, self.maximizer)
            ]
            if self._feasible(cand):
                lo = mid
            else:
                hi = mid
        return tuple(lo * r + (1 - lo) * v for r, v in zip(raw, self.maximizer))

    def _feasible(self, v: list[Fraction]) -> bool:
        if any(v[i] < v[i + 1] for i in range(len(v) - 1)) or v[-1] < 0:
            return False
        prefix = Fraction(0)
        for j, bound in enumerate(self.bounds, start=1):
            prefix += v[j - 1]
            if prefix > bound:
                return False
        return True

    def squares_leq(self, v: tuple[Fraction, ...], value: Fraction) -> bool:
        return sum(t * t for t in v) <= value
