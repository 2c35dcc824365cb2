"""Exhaustive computation of the smallest achievable largest monochromatic
component at tiny n, plus seeded random coloring generation.

The search enumerates full k-colorings in lexicographic edge order with color
labels canonicalized by first use (edge i may only take colors up to one past
the largest label used so far), and prunes a branch as soon as the partial
coloring's largest monochromatic component already matches the incumbent:
components only ever grow as edges are added.  Parallel runs split the search
space by the canonical color prefixes of the first few edges; every worker is
deterministic on its own slice, so the merged result does not depend on
scheduling.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass
from math import comb

from .constructions import affine_coloring
from .graphs import ColoredCompleteGraph, max_mono_component

#: Default feasibility guard; larger instances are rejected, not attempted.
GUARD_MAX_N = 7
GUARD_MAX_K = 3


@dataclass(frozen=True)
class SearchResult:
    """Exact minimax value with an attaining coloring and the node count."""

    value: int
    witness: ColoredCompleteGraph
    nodes: int


def random_coloring(n: int, k: int, seed: int) -> ColoredCompleteGraph:
    """Uniform full k-coloring of K_n from a Mersenne Twister stream.

    Pairs are drawn in lexicographic order from random.Random(seed), so equal
    seeds give byte-identical colorings.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = random.Random(seed)
    colors = tuple(rng.randrange(1, k + 1) for _ in range(comb(n, 2)))
    return ColoredCompleteGraph(n, k, colors)


def _initial_incumbent(n: int, k: int) -> tuple[int, ColoredCompleteGraph | None]:
    """Upper bound seeded from a known construction when one applies."""
    if k == 3 and n >= 4:
        col = affine_coloring(2, n)
        _, comp = max_mono_component(col)
        return comp.edge_count, col
    return comb(n, 2) + 1, None


def _dfs(
    n: int, k: int, forced: tuple[int, ...], incumbent: int
) -> tuple[int, list[int] | None, int]:
    """Exact minimax over all canonical colorings extending `forced`.

    Returns (min(incumbent, slice minimum), attaining colors or None if the
    slice cannot beat the incumbent, nodes explored).
    """
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    m = len(pairs)
    # Per-color union-find without path compression so unions roll back in O(1).
    parent = [list(range(n + 1)) for _ in range(k + 1)]
    rank = [[0] * (n + 1) for _ in range(k + 1)]
    comp_edges = [[0] * (n + 1) for _ in range(k + 1)]
    assignment = [0] * m
    best = incumbent
    best_colors: list[int] | None = None
    nodes = 0

    def find(par: list[int], x: int) -> int:
        while par[x] != x:
            x = par[x]
        return x

    def rec(i: int, used: int, cur_max: int):
        nonlocal best, best_colors, nodes
        if cur_max >= best:
            return
        if i == m:
            best = cur_max
            best_colors = assignment.copy()
            return
        u, v = pairs[i]
        if i < len(forced):
            candidates: range | tuple[int, ...] = (forced[i],)
        else:
            candidates = range(1, min(used + 1, k) + 1)
        for c in candidates:
            nodes += 1
            par = parent[c]
            ce = comp_edges[c]
            ru, rv = find(par, u), find(par, v)
            assignment[i] = c
            if ru == rv:
                ce[ru] += 1
                rec(i + 1, max(used, c), max(cur_max, ce[ru]))
                ce[ru] -= 1
            else:
                rk = rank[c]
                if rk[ru] < rk[rv]:
                    ru, rv = rv, ru
                par[rv] = ru
                bumped = rk[ru] == rk[rv]
                if bumped:
                    rk[ru] += 1
                old = ce[ru]
                ce[ru] = old + ce[rv] + 1
                rec(i + 1, max(used, c), max(cur_max, ce[ru]))
                ce[ru] = old
                par[rv] = rv
                if bumped:
                    rk[ru] -= 1

    rec(0, max(forced, default=0), 0)
    return best, best_colors, nodes


def _canonical_prefixes(depth: int, k: int) -> list[tuple[int, ...]]:
    """All color sequences of the given length with labels canonical by first use."""
    prefixes: list[tuple[int, ...]] = [()]
    for _ in range(depth):
        prefixes = [
            p + (c,)
            for p in prefixes
            for c in range(1, min(max(p, default=0) + 1, k) + 1)
        ]
    return prefixes


def _worker(args: tuple[int, int, tuple[int, ...], int]):
    return _dfs(*args)


def brute_force_M(
    n: int,
    k: int,
    *,
    jobs: int = 1,
    max_n: int = GUARD_MAX_N,
    max_k: int = GUARD_MAX_K,
) -> SearchResult:
    """Smallest possible largest monochromatic component over all full
    k-colorings of K_n, by exhaustive branch-and-bound.

    The (configurable) guard rejects instances beyond n=7 or k=3 outright.
    The witness is deterministic: ties resolve in canonical enumeration order.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if n > max_n or k > max_k:
        raise ValueError(
            f"instance (n={n}, k={k}) exceeds the feasibility guard "
            f"(n <= {max_n}, k <= {max_k})"
        )
    if jobs < 1:
        raise ValueError("jobs must be positive")
    incumbent, incumbent_col = _initial_incumbent(n, k)
    m = comb(n, 2)
    if jobs == 1 or m < 3:
        best, colors, nodes = _dfs(n, k, (), incumbent)
        results = [(best, colors, nodes)]
    else:
        depth = 1
        while depth < m - 1 and len(_canonical_prefixes(depth, k)) < 4 * jobs:
            depth += 1
        tasks = [
            (n, k, prefix, incumbent) for prefix in _canonical_prefixes(depth, k)
        ]
        with multiprocessing.Pool(processes=jobs) as pool:
            results = pool.map(_worker, tasks)
    value = min(r[0] for r in results)
    nodes = sum(r[2] for r in results)
    witness_colors = next((r[1] for r in results if r[0] == value and r[1]), None)
    if witness_colors is not None:
        witness = ColoredCompleteGraph(n, k, tuple(witness_colors))
    else:
        if incumbent_col is None or value != incumbent:
            raise RuntimeError("search finished without an attaining coloring")
        witness = incumbent_col
    _, comp = max_mono_component(witness)
    if comp.edge_count != value:
        raise RuntimeError("witness does not attain the reported value")
    return SearchResult(value=value, witness=witness, nodes=nodes)
