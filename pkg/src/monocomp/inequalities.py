"""Exact checkers and constructive selectors for the core component
inequalities.

The central fact: a spanning subgraph H of a complete multipartite host G
always contains a connected component H' with |E(H')| * |E(G)| >= |E(H)|^2.
`heavy_component` picks that component constructively (maximum edge count per
unit of f-weight); the two Cauchy-Schwarz-flavored checkers verify the
inequalities the selection rests on.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graphs import (
    ColoredCompleteGraph,
    Component,
    MultipartiteHost,
    Subgraph,
    TheoremCheckError,
    color_class,
    components_of,
    induced_edge_count,
    ordered_pair_count,
)


def number_str(x: int | Fraction) -> str:
    """Arbitrary-precision rendering: integers as decimals, rationals as 'p/q'."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


@dataclass(frozen=True)
class WeightVectors:
    """A pair of equal-length nonnegative integer weight vectors."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("weight vectors must have equal length")
        if len(self.a) < 1:
            raise ValueError("weight vectors must be nonempty")
        if any(x < 0 for x in self.a) or any(x < 0 for x in self.b):
            raise ValueError("weight vector entries must be nonnegative")


@dataclass(frozen=True)
class InequalityReport:
    """lhs >= rhs verdict with exact slack."""

    lhs: int | Fraction
    rhs: int | Fraction
    holds: bool
    slack: int | Fraction

    @classmethod
    def compare(cls, lhs: int | Fraction, rhs: int | Fraction) -> InequalityReport:
        slack = lhs - rhs
        return cls(lhs=lhs, rhs=rhs, holds=slack >= 0, slack=slack)

    def as_json_dict(self) -> dict:
        return {
            "lhs": number_str(self.lhs),
            "rhs": number_str(self.rhs),
            "holds": self.holds,
            "slack": number_str(self.slack),
        }


def check_weight_cs(w: WeightVectors) -> InequalityReport:
    """Check ((Σa)(Σb) - Σab)^2 >= ((Σa)^2 - Σa^2)((Σb)^2 - Σb^2).

    Holds for all nonnegative inputs; a falsification is an implementation bug.
    """
    sa, sb = sum(w.a), sum(w.b)
    sab = sum(x * y for x, y in zip(w.a, w.b))
    saa = sum(x * x for x in w.a)
    sbb = sum(y * y for y in w.b)
    lhs = (sa * sb - sab) ** 2
    rhs = (sa * sa - saa) * (sb * sb - sbb)
    return InequalityReport.compare(lhs, rhs)


def check_multipartite_cs(
    host: MultipartiteHost, S, T
) -> InequalityReport:
    """Check e(S,T)^2 >= 4 |E(G[S])| |E(G[T])| on a multipartite host."""
    lhs = ordered_pair_count(host, S, T) ** 2
    rhs = 4 * induced_edge_count(host, S) * induced_edge_count(host, T)
    return InequalityReport.compare(lhs, rhs)


def heavy_component(host: MultipartiteHost, h: Subgraph) -> Component:
    """The component of h maximizing edge count per unit of f-weight.

    Exact cross-multiplied comparisons; ties break toward the component with
    the smallest vertex id.  The output is guaranteed (and checked) to satisfy
    |E(H')| * |E(G)| >= |E(H)|^2.
    """
    if host.r < 2:
        raise ValueError("host must have at least two parts")
    if h.host is not host and h.host != host:
        raise ValueError("subgraph does not live on the given host")
    comps = components_of(h)
    # weight[i] = e(S_i, V) = 2 * f(S_i); integers, positive for r >= 2.
    part_of = host._part_of
    sizes = host.part_sizes
    n = host.n
    weights = []
    for comp in comps:
        counts = [0] * len(sizes)
        for v in comp.vertices:
            counts[part_of[v]] += 1
        weights.append(sum(c * (n - s) for c, s in zip(counts, sizes) if c))
    best = 0
    for i in range(1, len(comps)):
        # edge/weight ratio comparison: e_i / w_i > e_best / w_best
        if comps[i].edge_count * weights[best] > comps[best].edge_count * weights[i]:
            best = i
    chosen = comps[best]
    e_g = host.edge_count
    e_h = h.edge_count
    # Mediant step: the chosen ratio is at least the global density e_h / e_g.
    if 2 * chosen.edge_count * e_g < e_h * weights[best]:
        raise TheoremCheckError(
            "mediant selection failed: chosen component ratio below global density"
        )
    if chosen.edge_count * e_g < e_h * e_h:
        raise TheoremCheckError(
            f"heavy component bound failed: {chosen.edge_count} * {e_g} < {e_h}^2"
        )
    return chosen


def guaranteed_component(
    coloring: ColoredCompleteGraph,
) -> tuple[int, Component]:
    """A monochromatic component with at least C(n,2)/k^2 edges.

    Picks the largest color class (ties toward the smaller color index) and
    applies heavy_component over K_n.  Rejects partial colorings.
    """
    if coloring.n < 2:
        raise ValueError("need n >= 2")
    if not coloring.is_full:
        raise ValueError("guaranteed_component requires a full coloring")
    sizes = coloring.class_sizes()
    best_color = max(range(1, coloring.k + 1), key=lambda c: (sizes[c], -c))
    total = comb(coloring.n, 2)
    if sizes[best_color] * coloring.k < total:
        raise TheoremCheckError("pigeonhole failed: largest class below C(n,2)/k")
    host = MultipartiteHost.complete(coloring.n)
    comp = heavy_component(host, color_class(coloring, best_color))
    if comp.edge_count * coloring.k**2 < total:
        raise TheoremCheckError(
            f"guaranteed component below C(n,2)/k^2: {comp.edge_count} < {total}/{coloring.k}^2"
        )
    return best_color, comp
