"""Generators for extremal and near-extremal configurations.

Three families live here:

* `density_split` - slices every host part into k near-equal pieces and keeps
  only edges inside matching slices, giving a subgraph whose components all
  carry close to |E(H)|^2/|E(G)| edges (the density-equality witness).
* `affine_coloring` - a (q+1)-coloring of K_n driven by the parallel classes
  of an affine plane of prime order q; every color class splits into exactly
  q line components, keeping the largest component near n^2/(2k(k-1)).
* `k3_initial_nice` / `k3_optimize` - the balanced four-block three-coloring
  whose green and blue components each hold exactly ceil(C(n,2)/6) edges,
  plus the edge-swap loop that pulls the heavier red component down to the
  same ceiling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graphs import (
    ColoredCompleteGraph,
    MultipartiteHost,
    Subgraph,
    color_class,
    components_of,
    iter_pairs,
    pair_index,
)

RED, GREEN, BLUE = 1, 2, 3

# Cross-block color pattern: opposite block pairs share a color.
CROSS_COLOR = {
    (0, 1): RED,
    (2, 3): RED,
    (0, 2): GREEN,
    (1, 3): GREEN,
    (0, 3): BLUE,
    (1, 2): BLUE,
}

# For a red internal edge in block p, the internal swap partners that keep
# both components of its new color at their exact edge quota: recoloring the
# red edge adds one edge to the component its block belongs to, and turning
# the partner edge red removes one from that same component.
SWAP_PARTNERS = {
    0: ((GREEN, 2), (BLUE, 3)),
    1: ((GREEN, 3), (BLUE, 2)),
    2: ((GREEN, 0), (BLUE, 1)),
    3: ((GREEN, 1), (BLUE, 0)),
}


class SwapSearchExhausted(RuntimeError):
    """No legal color swap exists while a red component is still too heavy."""


def edge_target(n: int) -> int:
    """ceil(C(n,2)/6): the per-component edge quota of the three-coloring."""
    return -(-comb(n, 2) // 6)


@dataclass(frozen=True)
class FourPartition:
    """Four near-equal contiguous vertex blocks, sizes sorted descending."""

    part_sizes: tuple[int, int, int, int]

    def __post_init__(self):
        s = self.part_sizes
        if len(s) != 4 or any(x < 1 for x in s):
            raise ValueError("need four positive part sizes")
        if list(s) != sorted(s, reverse=True) or s[0] - s[3] > 1:
            raise ValueError("part sizes must be near-equal and descending")

    @classmethod
    def for_n(cls, n: int) -> FourPartition:
        base, extra = divmod(n, 4)
        return cls(tuple(base + 1 if i < extra else base for i in range(4)))

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    def block(self, i: int) -> range:
        start = 1 + sum(self.part_sizes[:i])
        return range(start, start + self.part_sizes[i])

    def block_of(self, v: int) -> int:
        total = 0
        for i, s in enumerate(self.part_sizes):
            total += s
            if v <= total:
                return i
        raise ValueError(f"vertex {v} out of range")


def density_split(host: MultipartiteHost, k: int) -> Subgraph:
    """Union of k vertex-disjoint induced slices, one per slice index.

    Every host part is cut into k near-equal contiguous slices; leftover
    vertices rotate across slice indices from part to part so that slice
    totals stay balanced even for singleton parts.  The result keeps an edge
    iff its endpoints carry the same slice index, so it has at most k
    edge-bearing components, each within k*n edges of |E(H)|^2/|E(G)|.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = host.n
    slice_of = [0] * (n + 1)
    for i in range(host.r):
        verts = list(host.part_vertices(i))
        base, extra = divmod(len(verts), k)
        pos = 0
        for j in range(k):
            size = base + (1 if (j - i) % k < extra else 0)
            for v in verts[pos : pos + size]:
                slice_of[v] = j
            pos += size
    edges = frozenset(
        (u, v)
        for (u, v) in iter_pairs(n)
        if slice_of[u] == slice_of[v] and host.adjacent(u, v)
    )
    result = Subgraph(host, edges)
    e_g = host.edge_count
    if e_g:
        ideal = Fraction(result.edge_count**2, e_g)
        per_slice = [0] * k
        for u, v in edges:
            per_slice[slice_of[u]] += 1
        for count in per_slice:
            if count and not (ideal - k * n <= count <= ideal + k * n):
                raise AssertionError(
                    f"slice edge count {count} strays more than {k}*{n} from {ideal}"
                )
    return result


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class AffinePlane:
    """Affine plane of prime order q over Z_q x Z_q.

    Parallel classes are indexed 0..q: index s < q holds the q lines of slope
    s, index q holds the vertical lines.  Any two distinct points lie on
    exactly one line, and each class partitions the q^2 points.
    """

    q: int

    def __post_init__(self):
        if not _is_prime(self.q):
            raise ValueError(f"order {self.q} is not prime")

    @property
    def class_count(self) -> int:
        return self.q + 1

    def points(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.q) for y in range(self.q)]

    def lines(self, cls: int) -> list[tuple[tuple[int, int], ...]]:
        q = self.q
        if not (0 <= cls <= q):
            raise ValueError(f"parallel class {cls} out of range 0..{q}")
        if cls == q:
            return [tuple((a, y) for y in range(q)) for a in range(q)]
        return [tuple((x, (cls * x + b) % q) for x in range(q)) for b in range(q)]

    def class_of(self, p1: tuple[int, int], p2: tuple[int, int]) -> int:
        """Index of the parallel class containing the line through p1 and p2."""
        if p1 == p2:
            raise ValueError("points must be distinct")
        q = self.q
        if p1[0] == p2[0]:
            return q
        return (p2[1] - p1[1]) * pow(p2[0] - p1[0], q - 2, q) % q


def affine_coloring(q: int, n: int) -> ColoredCompleteGraph:
    """(q+1)-coloring of K_n from the parallel classes of an affine plane.

    Vertices spread over the q^2 points as evenly as possible (contiguous
    blocks, larger blocks first).  Cross-point edges take the color of the
    parallel class of the line through their points; edges inside one point
    round-robin over all q+1 colors in lexicographic edge order.
    """
    plane = AffinePlane(q)
    if n < q * q:
        raise ValueError(f"need n >= q^2 = {q * q}")
    k = plane.class_count
    num_points = q * q
    base, extra = divmod(n, num_points)
    point_of = [0] * (n + 1)
    v = 1
    for t in range(num_points):
        for _ in range(base + (1 if t < extra else 0)):
            point_of[v] = t
            v += 1
    pts = plane.points()
    table = [[0] * num_points for _ in range(num_points)]
    for t1 in range(num_points):
        for t2 in range(num_points):
            if t1 != t2:
                table[t1][t2] = 1 + plane.class_of(pts[t1], pts[t2])
    colors = [0] * comb(n, 2)
    idx = 0
    rr = 0
    for u in range(1, n + 1):
        pu = point_of[u]
        row = table[pu]
        for w in range(u + 1, n + 1):
            pw = point_of[w]
            if pu == pw:
                colors[idx] = 1 + rr % k
                rr += 1
            else:
                colors[idx] = row[pw]
            idx += 1
    return ColoredCompleteGraph(n, k, tuple(colors))


def _internal_pairs(part: FourPartition, block: int):
    verts = part.block(block)
    for u in verts:
        for v in range(u + 1, verts.stop):
            yield u, v


def _block_lookup(part: FourPartition) -> list[int]:
    lookup = [0] * (part.n + 1)
    for i in range(4):
        for v in part.block(i):
            lookup[v] = i
    return lookup


def k3_initial_nice(n: int) -> ColoredCompleteGraph:
    """The quota-filling three-coloring over four near-equal blocks.

    Cross edges follow the fixed pattern (V1V2 and V3V4 red, V1V3 and V2V4
    green, V1V4 and V2V3 blue).  Green quotas inside V1 and V2 and blue
    quotas inside V3 and V4 top their components up to exactly
    ceil(C(n,2)/6) edges; all remaining internal edges are red.  Quota edges
    are the lexicographically first internal pairs of each block.
    """
    if n < 46:
        raise ValueError("the four-block coloring needs n >= 46")
    part = FourPartition.for_n(n)
    s = part.part_sizes
    target = edge_target(n)
    lookup = _block_lookup(part)
    colors = [0] * comb(n, 2)
    idx = 0
    for u in range(1, n + 1):
        bu = lookup[u]
        for v in range(u + 1, n + 1):
            bv = lookup[v]
            if bu != bv:
                colors[idx] = CROSS_COLOR[(bu, bv)]
            idx += 1
    quotas = {
        0: (GREEN, target - s[0] * s[2]),
        1: (GREEN, target - s[1] * s[3]),
        2: (BLUE, target - s[1] * s[2]),
        3: (BLUE, target - s[0] * s[3]),
    }
    for block, (color, quota) in quotas.items():
        if not 0 <= quota <= comb(s[block], 2):
            raise ValueError(
                f"internal quota {quota} infeasible for block of {s[block]} vertices"
            )
        remaining = quota
        for u, v in _internal_pairs(part, block):
            colors[pair_index(n, u, v)] = color if remaining > 0 else RED
            remaining -= 1
    return ColoredCompleteGraph(n, 3, tuple(colors))


def _validate_nice(coloring: ColoredCompleteGraph, part: FourPartition, target: int):
    """Check the cross pattern and the exact green/blue component quotas.

    Returns per-(block, color) deques of internal pair indices in
    lexicographic order.
    """
    n = coloring.n
    internal: dict[tuple[int, int], deque[int]] = {
        (b, c): deque() for b in range(4) for c in (RED, GREEN, BLUE)
    }
    lookup = _block_lookup(part)
    colors = coloring.colors
    idx = 0
    for u in range(1, n + 1):
        bu = lookup[u]
        for v in range(u + 1, n + 1):
            c = colors[idx]
            bv = lookup[v]
            if bu != bv:
                if c != CROSS_COLOR[(bu, bv)]:
                    raise ValueError(
                        f"edge ({u},{v}) breaks the cross-block color pattern"
                    )
            else:
                if c == 0:
                    raise ValueError("coloring must be full")
                internal[(bu, c)].append(idx)
            idx += 1
    s = part.part_sizes
    green = (
        s[0] * s[2] + len(internal[(0, GREEN)]) + len(internal[(2, GREEN)]),
        s[1] * s[3] + len(internal[(1, GREEN)]) + len(internal[(3, GREEN)]),
    )
    blue = (
        s[0] * s[3] + len(internal[(0, BLUE)]) + len(internal[(3, BLUE)]),
        s[1] * s[2] + len(internal[(1, BLUE)]) + len(internal[(2, BLUE)]),
    )
    for count in green + blue:
        if count != target:
            raise ValueError(
                f"not a nice coloring: green/blue component has {count} != {target} edges"
            )
    return internal


def k3_optimize_trace(
    coloring: ColoredCompleteGraph,
) -> tuple[ColoredCompleteGraph, tuple[tuple[int, int, int], ...]]:
    """Swap-balance a nice four-block coloring; also return the swap log.

    Each log entry is (red_pair_index, partner_pair_index, partner_color).
    """
    if coloring.k != 3:
        raise ValueError("expected a three-coloring")
    n = coloring.n
    part = FourPartition.for_n(n)
    target = edge_target(n)
    internal = _validate_nice(coloring, part, target)
    s = part.part_sizes
    red = [
        s[0] * s[1] + len(internal[(0, RED)]) + len(internal[(1, RED)]),
        s[2] * s[3] + len(internal[(2, RED)]) + len(internal[(3, RED)]),
    ]
    colors = list(coloring.colors)
    swaps: list[tuple[int, int, int]] = []
    while max(red) > target:
        heavy = 0 if red[0] >= red[1] else 1
        heavy_blocks = (0, 1) if heavy == 0 else (2, 3)
        for block in heavy_blocks:
            if not internal[(block, RED)]:
                continue
            partner = next(
                (
                    (pc, pb)
                    for pc, pb in SWAP_PARTNERS[block]
                    if internal[(pb, pc)]
                ),
                None,
            )
            if partner is None:
                continue
            pc, pb = partner
            e_idx = internal[(block, RED)].popleft()
            f_idx = internal[(pb, pc)].popleft()
            colors[e_idx] = pc
            colors[f_idx] = RED
            internal[(block, pc)].append(e_idx)
            internal[(pb, RED)].append(f_idx)
            red[heavy] -= 1
            red[1 - heavy] += 1
            swaps.append((e_idx, f_idx, pc))
            break
        else:
            raise SwapSearchExhausted(
                f"red component stuck at {max(red)} > {target} edges for n={n}"
            )
    result = ColoredCompleteGraph(n, 3, tuple(colors))
    _assert_balanced(result, target)
    return result, tuple(swaps)


def k3_optimize(coloring: ColoredCompleteGraph) -> ColoredCompleteGraph:
    """Swap colors until every monochromatic component has at most
    ceil(C(n,2)/6) edges, preserving the exact green/blue quotas."""
    return k3_optimize_trace(coloring)[0]


def _assert_balanced(coloring: ColoredCompleteGraph, target: int):
    for c in (RED, GREEN, BLUE):
        comps = [
            comp
            for comp in components_of(color_class(coloring, c))
            if comp.edge_count
        ]
        for comp in comps:
            if comp.edge_count > target:
                raise AssertionError(
                    f"color {c} component with {comp.edge_count} > {target} edges"
                )
        if c in (GREEN, BLUE) and [comp.edge_count for comp in comps] != [
            target,
            target,
        ]:
            raise AssertionError(f"color {c} components lost their exact quota")
