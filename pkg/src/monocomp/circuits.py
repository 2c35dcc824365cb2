"""Even-degree reduction and monochromatic circuit extraction.

`parity_fix` peels an acyclic edge set off a subgraph so that every vertex of
what remains has even degree: it walks a canonical spanning forest bottom-up
and marks a vertex's parent edge whenever the vertex would otherwise be left
odd.  Each resulting component then carries a closed trail through all of its
edges, built by `eulerian_circuit` with the usual splice construction.
`best_mono_circuit` runs the pipeline per color class and keeps the longest
circuit found.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import (
    ColoredCompleteGraph,
    Component,
    Subgraph,
    color_class,
    components_of,
)


@dataclass(frozen=True)
class ParityFixResult:
    """An acyclic removed edge set plus the all-even-degree remainder."""

    removed: frozenset[tuple[int, int]]
    trimmed: Subgraph


@dataclass(frozen=True)
class Circuit:
    """A closed trail: vertex sequence with equal endpoints, length in edges."""

    vertices: tuple[int, ...]
    length: int

    def __post_init__(self):
        if len(self.vertices) != self.length + 1:
            raise ValueError("circuit must list length+1 vertices")
        if self.vertices[0] != self.vertices[-1]:
            raise ValueError("circuit must start and end at the same vertex")

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted(
            (min(u, v), max(u, v))
            for u, v in zip(self.vertices, self.vertices[1:])
        )


def _sorted_adjacency(edges) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nbrs in adj.values():
        nbrs.sort()
    return adj


def parity_fix(g: Subgraph) -> ParityFixResult:
    """Remove an acyclic edge set meeting every odd vertex, leaving all
    degrees even.

    The spanning forest is canonical (breadth-first from the lowest unvisited
    vertex, neighbors in increasing order), so the output is deterministic.
    Processing forest vertices children-first, a vertex's parent edge is
    marked for removal exactly when the vertex's degree stayed odd after its
    child edges were decided.
    """
    n = g.host.n
    adj = _sorted_adjacency(g.edges)
    degree = {v: len(adj.get(v, ())) for v in range(1, n + 1)}
    parent: dict[int, int] = {}
    order: list[int] = []
    seen = [False] * (n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj.get(v, ()):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    queue.append(w)
    marked: set[tuple[int, int]] = set()
    marked_count = dict.fromkeys(range(1, n + 1), 0)
    for v in reversed(order):
        if v not in parent:
            continue  # forest root; its parity is forced even by the rest
        if (degree[v] + marked_count[v]) % 2 == 1:
            p = parent[v]
            marked.add((v, p) if v < p else (p, v))
            marked_count[v] += 1
            marked_count[p] += 1
    trimmed = Subgraph(g.host, g.edges - marked)
    bad = [v for v, d in trimmed.degrees().items() if d % 2]
    if bad:
        raise AssertionError(f"parity fix left odd vertices {bad}")
    return ParityFixResult(removed=frozenset(marked), trimmed=trimmed)


def eulerian_circuit(c: Component) -> Circuit:
    """A circuit through every edge of an even-degree connected component.

    Starts at the component's smallest vertex and always follows the smallest
    available neighbor, so the output is deterministic.  A single vertex with
    no edges gives the empty circuit at that vertex.
    """
    edges = c.edges()
    if len(edges) != c.edge_count:
        raise ValueError("component edge set is inconsistent")
    start = min(c.vertices)
    if not edges:
        if len(c.vertices) != 1:
            raise ValueError("edgeless component must be a single vertex")
        return Circuit((start,), 0)
    adj = _sorted_adjacency(edges)
    odd = [v for v, nbrs in adj.items() if len(nbrs) % 2]
    if odd:
        raise ValueError(f"odd-degree vertices present: {sorted(odd)}")
    reached = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    if reached != set(c.vertices):
        raise ValueError("component is not connected")
    pointer = dict.fromkeys(adj, 0)
    used_pairs: set[tuple[int, int]] = set()
    stack = [start]
    path: list[int] = []
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        i = pointer[v]
        while i < len(nbrs):
            w = nbrs[i]
            key = (v, w) if v < w else (w, v)
            if key not in used_pairs:
                break
            i += 1
        pointer[v] = i
        if i < len(nbrs):
            w = nbrs[i]
            key = (v, w) if v < w else (w, v)
            used_pairs.add(key)
            stack.append(w)
        else:
            path.append(stack.pop())
    path.reverse()
    circuit = Circuit(tuple(path), len(path) - 1)
    if circuit.length != c.edge_count or circuit.edge_multiset() != sorted(edges):
        raise AssertionError("circuit does not traverse the component exactly")
    return circuit


def best_mono_circuit(coloring: ColoredCompleteGraph) -> tuple[int, Circuit]:
    """Longest monochromatic circuit after making every color class even.

    Each color class loses at most n-1 edges to its parity-fixing forest;
    every trimmed component is Eulerian, and the longest circuit over all of
    them wins (ties: smaller color, then smaller start vertex).  A coloring
    whose trimmed classes are all empty yields the length-0 circuit at
    vertex 1 in color 1.
    """
    if not coloring.is_full:
        raise ValueError("best_mono_circuit requires a full coloring")
    n = coloring.n
    best: tuple[int, Circuit] | None = None
    total_removed = 0
    for c in range(1, coloring.k + 1):
        fix = parity_fix(color_class(coloring, c))
        if len(fix.removed) > n - 1:
            raise AssertionError("removed more than n-1 edges from one class")
        total_removed += len(fix.removed)
        for comp in components_of(fix.trimmed):
            if comp.edge_count == 0:
                continue
            circuit = eulerian_circuit(comp)
            if best is None or circuit.length > best[1].length:
                best = (c, circuit)
    if total_removed > coloring.k * (n - 1):
        raise AssertionError("total forest removal exceeded k(n-1)")
    if best is None:
        return (1, Circuit((1,), 0))
    return best
