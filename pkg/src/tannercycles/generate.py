"""Seeded random bipartite graphs of each regularity class.

Regular sides are filled with the configuration model: every node gets as
many stubs as its degree and the W stubs are randomly permuted against the U
stubs.  Parallel edges are repaired by random stub swaps, which keep every
degree intact.  A girth constraint is enforced the same way: edges lying on a
too-short cycle are swapped with random partners while that does not make
things worse.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InfeasibleSpec, RetriesExhausted
from .graph import BipartiteGraph, build_graph, complete_bipartite, girth

KINDS = ("complete", "biregular", "variable-regular", "irregular")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    m: Optional[int] = None
    d_v: Optional[int] = None
    d_c: Optional[int] = None
    w_degree_bounds: Optional[tuple[int, int]] = None
    edge_prob: Optional[float] = None
    seed: int = 0
    min_girth: Optional[int] = None
    retries: int = 50

    @classmethod
    def complete(cls, a: int, b: int) -> "GenSpec":
        return cls("complete", a, b)

    @classmethod
    def biregular(cls, n: int, d_v: int, d_c: int, seed: int = 0,
                  min_girth: Optional[int] = None) -> "GenSpec":
        return cls("biregular", n, d_v=d_v, d_c=d_c, seed=seed, min_girth=min_girth)

    @classmethod
    def variable_regular(cls, n: int, d_v: int, w_degree_bounds: tuple[int, int],
                         seed: int = 0, min_girth: Optional[int] = None) -> "GenSpec":
        return cls("variable-regular", n, d_v=d_v, w_degree_bounds=tuple(w_degree_bounds),
                   seed=seed, min_girth=min_girth)

    @classmethod
    def irregular(cls, n: int, m: int, edge_prob: float, seed: int = 0,
                  min_girth: Optional[int] = None) -> "GenSpec":
        return cls("irregular", n, m=m, edge_prob=edge_prob, seed=seed, min_girth=min_girth)


def generate(spec: GenSpec) -> BipartiteGraph:
    """Build the graph described by ``spec``; same spec, same graph."""
    if spec.kind not in KINDS:
        raise InfeasibleSpec(f"unknown kind {spec.kind!r}; expected one of {KINDS}")
    if spec.kind == "complete":
        return complete_bipartite(spec.n, spec.m)
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "irregular":
        return _irregular(spec, rng)
    if spec.kind == "biregular":
        n, d_v, d_c = spec.n, spec.d_v, spec.d_c
        if d_v < 1 or d_c < 1 or (n * d_v) % d_c:
            raise InfeasibleSpec(f"n*d_v = {n * d_v} is not divisible by d_c = {d_c}")
        m = n * d_v // d_c
        if d_v > m or d_c > n:
            raise InfeasibleSpec("degree larger than the opposite side")
        u_deg, w_deg = [d_v] * n, [d_c] * m
        if spec.min_girth and spec.min_girth > 4 and not _pairs_fit(u_deg, w_deg):
            raise InfeasibleSpec(
                f"({d_v},{d_c})-regular with n={n} cannot avoid 4-cycles: "
                "too many neighbour pairs")
    else:
        u_deg = [spec.d_v] * spec.n
    for _ in range(spec.retries):
        if spec.kind == "variable-regular":
            # fresh check degrees each attempt; some sequences cannot reach the girth
            w_deg = _w_degrees(spec, rng)
            if spec.min_girth and spec.min_girth > 4 and not _pairs_fit(u_deg, w_deg):
                continue
        edges = _configuration(u_deg, w_deg, rng)
        if edges is None:
            continue
        if spec.min_girth and not _raise_girth(edges, len(u_deg), len(w_deg), spec.min_girth, rng):
            continue
        return build_graph(len(u_deg), len(w_deg), edges)
    raise RetriesExhausted(f"no valid graph after {spec.retries} attempts for {spec}")


def _pairs_fit(u_deg: list[int], w_deg: list[int]) -> bool:
    """Necessary condition for girth above 4.

    Two nodes may then share at most one neighbour, so the node pairs inside
    the neighbourhoods on one side must all be distinct pairs of the other.
    """
    for side, other in ((u_deg, w_deg), (w_deg, u_deg)):
        pairs = sum(d * (d - 1) // 2 for d in side)
        if pairs > len(other) * (len(other) - 1) // 2:
            return False
    return True


def _w_degrees(spec: GenSpec, rng: np.random.Generator) -> list[int]:
    lo, hi = spec.w_degree_bounds
    total = spec.n * spec.d_v
    if lo < 1 or hi < lo or hi > spec.n or spec.d_v < 1:
        raise InfeasibleSpec(f"bad degree bounds {spec.w_degree_bounds} for n={spec.n}")
    degs: list[int] = []
    while sum(degs) < total:
        degs.append(int(rng.integers(lo, hi + 1)))
    excess = sum(degs) - total
    while excess:
        room = [k for k, d in enumerate(degs) if d > lo]
        if not room:
            raise InfeasibleSpec(f"cannot split {total} stubs into degrees in [{lo}, {hi}]")
        k = room[int(rng.integers(len(room)))]
        degs[k] -= 1
        excess -= 1
    if len(degs) < spec.d_v:
        raise InfeasibleSpec("fewer check nodes than the variable degree")
    return degs


def _configuration(u_deg: list[int], w_deg: list[int], rng) -> Optional[list[list[int]]]:
    """Random stub matching without parallel edges, as ``[u, w]`` pairs."""
    u_stubs = np.repeat(np.arange(len(u_deg)), u_deg)
    w_stubs = rng.permutation(np.repeat(np.arange(len(w_deg)), w_deg))
    edges = [[int(u), int(w)] for u, w in zip(u_stubs, w_stubs)]
    count: dict[tuple[int, int], int] = {}
    for u, w in edges:
        count[(u, w)] = count.get((u, w), 0) + 1
    for _ in range(50 * len(edges) + 100):
        dups = [k for k, (u, w) in enumerate(edges) if count[(u, w)] > 1]
        if not dups:
            return edges
        a = dups[int(rng.integers(len(dups)))]
        b = int(rng.integers(len(edges)))
        (ua, wa), (ub, wb) = edges[a], edges[b]
        if ua == ub or (ua, wb) in count and count[(ua, wb)] or (ub, wa) in count and count[(ub, wa)]:
            continue
        _move(count, edges, a, b)
    return None


def _move(count, edges, a, b) -> None:
    (ua, wa), (ub, wb) = edges[a], edges[b]
    count[(ua, wa)] -= 1
    count[(ub, wb)] -= 1
    edges[a][1], edges[b][1] = wb, wa
    count[(ua, wb)] = count.get((ua, wb), 0) + 1
    count[(ub, wa)] = count.get((ub, wa), 0) + 1


def _short_edges(edges, n, m, min_girth) -> list[int]:
    """Indices of edges lying on some cycle shorter than ``min_girth``."""
    nbrs: list[list[int]] = [[] for _ in range(n + m)]
    for u, w in edges:
        nbrs[u].append(n + w)
        nbrs[n + w].append(u)
    limit = min_girth - 2
    bad = []
    for k, (u, w) in enumerate(edges):
        # shortest u -> w path avoiding the edge itself
        src, dst = u, n + w
        dist = {src: 0}
        queue = deque([src])
        found = False
        while queue and not found:
            v = queue.popleft()
            if dist[v] >= limit:
                continue
            for x in nbrs[v]:
                if (v == src and x == dst) or x in dist:
                    continue
                dist[x] = dist[v] + 1
                if x == dst:
                    found = True
                    break
                queue.append(x)
        if found:
            bad.append(k)
    return bad


def _raise_girth(edges, n, m, min_girth, rng, max_swaps: int = 5000,
                 patience: int = 500) -> bool:
    """Swap stubs until no edge lies on a cycle shorter than ``min_girth``.

    Gives up after ``patience`` consecutive swaps without progress.
    """
    present = {(u, w) for u, w in edges}
    bad = _short_edges(edges, n, m, min_girth)
    best, stalled = len(bad), 0
    for _ in range(max_swaps):
        if not bad:
            return True
        if len(bad) < best:
            best, stalled = len(bad), 0
        else:
            stalled += 1
            if stalled > patience:
                return False
        a = bad[int(rng.integers(len(bad)))]
        b = int(rng.integers(len(edges)))
        (ua, wa), (ub, wb) = edges[a], edges[b]
        if ua == ub or wa == wb or (ua, wb) in present or (ub, wa) in present:
            continue
        edges[a][1], edges[b][1] = wb, wa
        trial = _short_edges(edges, n, m, min_girth)
        if len(trial) <= len(bad):
            present -= {(ua, wa), (ub, wb)}
            present |= {(ua, wb), (ub, wa)}
            bad = trial
        else:
            edges[a][1], edges[b][1] = wa, wb
    return not bad


def _irregular(spec: GenSpec, rng) -> BipartiteGraph:
    n, m, p = spec.n, spec.m, spec.edge_prob
    if p is None or not 0 <= p <= 1:
        raise InfeasibleSpec(f"edge probability must lie in [0, 1], got {p}")
    mask = rng.random((n, m)) < p
    candidates = [(int(u), int(w)) for u, w in zip(*np.nonzero(mask))]
    if not spec.min_girth:
        return build_graph(n, m, candidates)
    # keep an edge only if it closes no cycle shorter than min_girth
    order = rng.permutation(len(candidates))
    nbrs: list[list[int]] = [[] for _ in range(n + m)]
    kept = []
    for k in order:
        u, w = candidates[k]
        if _distance(nbrs, u, n + w, spec.min_girth - 2) is None:
            nbrs[u].append(n + w)
            nbrs[n + w].append(u)
            kept.append((u, w))
    graph = build_graph(n, m, kept)
    g = girth(graph)
    assert g is None or g >= spec.min_girth
    return graph


def _distance(nbrs, src, dst, limit) -> Optional[int]:
    """Hop distance from ``src`` to ``dst`` if at most ``limit``."""
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            return dist[v]
        if dist[v] >= limit:
            continue
        for x in nbrs[v]:
            if x not in dist:
                dist[x] = dist[v] + 1
                queue.append(x)
    return None
