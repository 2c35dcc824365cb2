"""Core graph representations: multipartite hosts, edge colorings, spanning
subgraphs, and connected-component decomposition.

Vertices are 1-based and contiguous.  A complete r-partite host assigns
vertices to parts in contiguous blocks in declaration order; K_n is the host
with n singleton parts.  Everything here is immutable after construction and
all counting is done in exact integer / rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator


class ColoringFormatError(ValueError):
    """Malformed coloring file.  `line` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TheoremCheckError(RuntimeError):
    """A theorem-implied inequality failed; this always indicates a bug."""


def pair_index(n: int, u: int, v: int) -> int:
    """Rank of the unordered pair {u,v} (1 <= u < v <= n) in lexicographic order."""
    if not (1 <= u < v <= n):
        raise ValueError(f"bad pair ({u},{v}) for n={n}")
    i, j = u - 1, v - 1
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered pairs 1 <= u < v <= n in lexicographic order."""
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            yield u, v


@dataclass(frozen=True)
class MultipartiteHost:
    """A complete r-partite graph given by its part sizes.

    Vertex ids 1..n are assigned to parts in contiguous blocks; two vertices
    are adjacent iff they lie in different parts.
    """

    part_sizes: tuple[int, ...]
    _part_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sizes = tuple(self.part_sizes)
        if len(sizes) < 1 or any(s < 1 for s in sizes):
            raise ValueError("part sizes must be a nonempty list of positive integers")
        object.__setattr__(self, "part_sizes", sizes)
        lookup = [0]  # index 0 unused; vertices are 1-based
        for part, size in enumerate(sizes):
            lookup.extend([part] * size)
        object.__setattr__(self, "_part_of", tuple(lookup))

    @classmethod
    def complete(cls, n: int) -> MultipartiteHost:
        """K_n, encoded as n singleton parts."""
        if n < 1:
            raise ValueError("n must be positive")
        return cls(tuple([1] * n))

    @property
    def n(self) -> int:
        return len(self._part_of) - 1

    @property
    def r(self) -> int:
        return len(self.part_sizes)

    @property
    def edge_count(self) -> int:
        n = self.n
        return (n * n - sum(s * s for s in self.part_sizes)) // 2

    def part_of(self, v: int) -> int:
        """0-based part index of vertex v."""
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return self._part_of[v]

    def adjacent(self, u: int, v: int) -> bool:
        return self.part_of(u) != self.part_of(v)

    def part_vertices(self, part: int) -> range:
        """Vertex ids of one part (contiguous block)."""
        start = 1 + sum(self.part_sizes[:part])
        return range(start, start + self.part_sizes[part])

    def part_profile(self, vertices: Iterable[int]) -> list[int]:
        """Per-part intersection counts |V_i ∩ S| for a vertex set S."""
        counts = [0] * self.r
        lookup = self._part_of
        n = self.n
        for v in vertices:
            if not (1 <= v <= n):
                raise ValueError(f"vertex {v} out of range 1..{n}")
            counts[lookup[v]] += 1
        return counts


@dataclass(frozen=True)
class ColoredCompleteGraph:
    """A (possibly partial) k-coloring of the edges of K_n.

    `colors[pair_index(n,u,v)]` is the color of {u,v}; 0 means uncolored.
    """

    n: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        expected = comb(self.n, 2)
        if len(self.colors) != expected:
            raise ValueError(f"expected {expected} pair colors, got {len(self.colors)}")
        if any(c < 0 or c > self.k for c in self.colors):
            raise ValueError("colors must lie in 0..k")

    @classmethod
    def from_pairs(
        cls, n: int, k: int, assignment: dict[tuple[int, int], int]
    ) -> ColoredCompleteGraph:
        """Build from a {(u,v): color} mapping; missing pairs stay uncolored."""
        colors = [0] * comb(n, 2)
        for (u, v), c in assignment.items():
            if u > v:
                u, v = v, u
            colors[pair_index(n, u, v)] = c
        return cls(n, k, tuple(colors))

    def color_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.colors[pair_index(self.n, u, v)]

    @property
    def is_full(self) -> bool:
        return 0 not in self.colors

    def class_sizes(self) -> list[int]:
        """Edge count per color; index 0 counts uncolored pairs."""
        sizes = [0] * (self.k + 1)
        for c in self.colors:
            sizes[c] += 1
        return sizes


@dataclass(frozen=True)
class Subgraph:
    """A spanning subgraph of a multipartite host (edge subset, all vertices)."""

    host: MultipartiteHost
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        lookup = self.host._part_of
        n = self.host.n
        norm = []
        for u, v in self.edges:
            if u > v:
                u, v = v, u
            if u < 1 or v > n or lookup[u] == lookup[v]:
                raise ValueError(f"({u},{v}) is not an edge of the host")
            norm.append((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in range(1, self.host.n + 1)}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class Component:
    """One connected component of a spanning subgraph.

    Isolated vertices form singleton components with edge_count 0.
    """

    vertices: frozenset[int]
    edge_count: int
    subgraph: Subgraph

    def min_vertex(self) -> int:
        return min(self.vertices)

    def edges(self) -> frozenset[tuple[int, int]]:
        """The component's edges, filtered from the parent subgraph."""
        vs = self.vertices
        return frozenset(e for e in self.subgraph.edges if e[0] in vs)

    def f_weight(self) -> Fraction:
        """Weighted vertex count of the component within its host."""
        return f_weight(self.subgraph.host, self.vertices)


def _find(parent: list[int], x: int) -> int:
    # Path halving.
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def components_of(subgraph: Subgraph) -> list[Component]:
    """Connected components of a spanning subgraph, sorted by smallest vertex.

    The components partition the full host vertex set; isolated vertices come
    back as singletons.  Output is independent of edge insertion order.
    """
    n = subgraph.host.n
    parent = list(range(n + 1))
    for u, v in subgraph.edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[rv] = ru
    members: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        members.setdefault(_find(parent, v), []).append(v)
    edge_counts = dict.fromkeys(members, 0)
    for u, _ in subgraph.edges:
        edge_counts[_find(parent, u)] += 1
    comps = [
        Component(frozenset(vs), edge_counts[root], subgraph)
        for root, vs in members.items()
    ]
    comps.sort(key=lambda c: min(c.vertices))
    return comps


def ordered_pair_count(
    host: MultipartiteHost, S: Iterable[int], T: Iterable[int]
) -> int:
    """Number of ordered pairs (s,t) in S x T whose endpoints are adjacent.

    S and T may overlap; the count is symmetric in S and T, and
    ordered_pair_count(V,V) equals twice the host's edge count.
    """
    a = host.part_profile(S)
    b = host.part_profile(T)
    return sum(a) * sum(b) - sum(x * y for x, y in zip(a, b))


def induced_edge_count(host: MultipartiteHost, S: Iterable[int]) -> int:
    """Number of host edges with both endpoints in S."""
    a = host.part_profile(S)
    total = sum(a)
    return (total * total - sum(x * x for x in a)) // 2


def f_weight(host: MultipartiteHost, S: Iterable[int]) -> Fraction:
    """Half the ordered adjacency count between S and the full vertex set.

    Acts as a weighted vertex count: it is additive over disjoint unions and
    sums to the host's edge count over any partition of the vertices.
    """
    a = host.part_profile(S)
    n = host.n
    e_s_v = sum(cnt * (n - size) for cnt, size in zip(a, host.part_sizes))
    return Fraction(e_s_v, 2)


def color_class(coloring: ColoredCompleteGraph, c: int) -> Subgraph:
    """The spanning subgraph of K_n formed by the edges of one color."""
    if not (1 <= c <= coloring.k):
        raise ValueError(f"color {c} out of range 1..{coloring.k}")
    host = MultipartiteHost.complete(coloring.n)
    colors = coloring.colors
    edges = []
    idx = 0
    for u in range(1, coloring.n + 1):
        for v in range(u + 1, coloring.n + 1):
            if colors[idx] == c:
                edges.append((u, v))
            idx += 1
    return Subgraph(host, frozenset(edges))


#: Result of max_mono_component on a graph with no edges to inspect (n < 2).
EMPTY_RESULT: tuple[int, None] = (0, None)


def max_mono_component(
    coloring: ColoredCompleteGraph,
) -> tuple[int, Component | None]:
    """The monochromatic component with the most edges, over all color classes.

    Ties break toward the smaller color index, then the smaller minimum
    vertex id.  Returns EMPTY_RESULT when n < 2.
    """
    if coloring.n < 2:
        return EMPTY_RESULT
    best_color = 0
    best: Component | None = None
    for c in range(1, coloring.k + 1):
        for comp in components_of(color_class(coloring, c)):
            if best is None or comp.edge_count > best.edge_count:
                best_color, best = c, comp
    return best_color, best


# ---------------------------------------------------------------------------
# Coloring text format: first line "n k", then "u v c" lines (1 <= u < v <= n,
# 0 <= c <= k).  Absent pairs default to 0; duplicate pair lines are an error.
# ---------------------------------------------------------------------------


def parse_coloring(text: str) -> ColoredCompleteGraph:
    """Parse the coloring text format; raises ColoringFormatError on bad input."""
    lines = text.splitlines()
    header_line = 0
    header = None
    for i, raw in enumerate(lines, start=1):
        if raw.strip():
            header, header_line = raw.split(), i
            break
    if header is None:
        raise ColoringFormatError(1, "missing 'n k' header")
    if len(header) != 2:
        raise ColoringFormatError(header_line, "header must be 'n k'")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise ColoringFormatError(header_line, "header must be two integers") from None
    if n < 1 or k < 1:
        raise ColoringFormatError(header_line, "need n >= 1 and k >= 1")
    colors = [0] * comb(n, 2)
    seen = [False] * comb(n, 2)
    for i in range(header_line, len(lines)):
        raw = lines[i]
        lineno = i + 1
        if not raw.strip():
            continue
        fields = raw.split()
        if len(fields) != 3:
            raise ColoringFormatError(lineno, "expected 'u v c'")
        try:
            u, v, c = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise ColoringFormatError(lineno, "expected three integers") from None
        if not (1 <= u < v <= n):
            raise ColoringFormatError(lineno, f"need 1 <= u < v <= {n}")
        if not (0 <= c <= k):
            raise ColoringFormatError(lineno, f"color must lie in 0..{k}")
        idx = pair_index(n, u, v)
        if seen[idx]:
            raise ColoringFormatError(lineno, f"duplicate pair {u} {v}")
        seen[idx] = True
        colors[idx] = c
    return ColoredCompleteGraph(n, k, tuple(colors))


def render_coloring(coloring: ColoredCompleteGraph) -> str:
    """Canonical writer: colored pairs only, lexicographic order, one per line."""
    out = [f"{coloring.n} {coloring.k}"]
    colors = coloring.colors
    idx = 0
    for u in range(1, coloring.n + 1):
        for v in range(u + 1, coloring.n + 1):
            if colors[idx]:
                out.append(f"{u} {v} {colors[idx]}")
            idx += 1
    return "\n".join(out) + "\n"
