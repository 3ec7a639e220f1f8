"""Brute-force ground truth for small graphs.

Nothing here uses traces, degrees or closed forms: cycles are found by
backtracking over simple paths and closed walks are listed one by one.  The
two engines exist to check the spectral pipeline, so keep them independent
of it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import BipartiteGraph

DEFAULT_PATH_BUDGET = 10 ** 7
DEFAULT_WALK_BUDGET = 5 * 10 ** 7
MAX_WALK_NODES = 14
MAX_WALK_LENGTH = 12


def _bfs_dist(nbrs: list[list[int]], source: int, allowed_min: int, limit: int) -> list[int]:
    """Hop distances from ``source`` using only nodes ``>= allowed_min``."""
    dist = [-1] * len(nbrs)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if dist[v] >= limit:
            continue
        for x in nbrs[v]:
            if x >= allowed_min and dist[x] < 0:
                dist[x] = dist[v] + 1
                queue.append(x)
    return dist


def backtrack_cycle_count(graph: BipartiteGraph, max_len: int,
                          budget: int = DEFAULT_PATH_BUDGET) -> dict[int, int]:
    """Number of cycles of every even length ``4..max_len``.

    A cycle is counted from its lowest-numbered node (the root), in the
    direction whose second node is smaller than its last node, so each cycle
    is seen exactly once.
    """
    counts = {i: 0 for i in range(4, max_len + 1, 2)}
    if max_len < 4:
        return counts
    nbrs = graph.neighbors()
    size = len(nbrs)
    explored = 0
    for root in range(size):
        dist = _bfs_dist(nbrs, root, root, max_len // 2)
        on_path = [False] * size
        on_path[root] = True
        path = [root]
        # stack of (node, iterator over its neighbours)
        stack = [iter(nbrs[root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            length = len(path)  # edges used after stepping to nxt
            if nxt == root:
                if length >= 4 and path[1] < path[-1]:
                    counts[length] += 1
                continue
            if nxt < root or on_path[nxt]:
                continue
            d = dist[nxt]
            if d < 0 or length + d > max_len:
                continue
            explored += 1
            if explored > budget:
                raise BudgetExceeded(f"more than {budget} partial paths explored")
            on_path[nxt] = True
            path.append(nxt)
            stack.append(iter(nbrs[nxt]))
    return counts


@dataclass(frozen=True)
class WalkClassification:
    """Closed walks of one length split into cycles, cycle-free walks and CWWCs.

    ``cwwc_unicyclic`` and ``cwwc_single_edge`` count the CWWCs whose edge set
    holds exactly one cycle and those that traverse some edge exactly once.
    """

    length: int
    total_closed_walks: int
    cycle_walks: int
    cycle_free_walks: int
    cwwc_walks: int
    cwwc_unicyclic: int
    cwwc_single_edge: int

    def is_partition(self) -> bool:
        return self.total_closed_walks == (
            self.cycle_walks + self.cycle_free_walks + self.cwwc_walks)


def classify_closed_walks(graph: BipartiteGraph, i: int, *,
                          max_nodes: int = MAX_WALK_NODES,
                          max_length: int = MAX_WALK_LENGTH,
                          budget: int = DEFAULT_WALK_BUDGET) -> WalkClassification:
    """Enumerate every closed walk of length ``i`` and classify it.

    Walks are distinguished by start node and direction.  The edge-induced
    subgraph of a closed walk is connected, so it is acyclic exactly when it
    has one edge fewer than nodes; distinct node and edge counts are kept
    incrementally along the depth-first search.
    """
    if graph.num_nodes > max_nodes:
        raise BudgetExceeded(f"{graph.num_nodes} nodes exceeds the limit of {max_nodes}")
    if i > max_length:
        raise BudgetExceeded(f"length {i} exceeds the limit of {max_length}")
    if i < 2 or i % 2:
        raise ValueError(f"walk length must be even and >= 2, got {i}")

    nbrs = graph.neighbors()
    size = len(nbrs)
    n = graph.n
    edge_id = {}
    for u, w in graph.edges():
        edge_id[(u, n + w)] = edge_id[(n + w, u)] = len(edge_id) // 2
    edge_mult = [0] * (len(edge_id) // 2)
    node_mult = [0] * size

    tally = {"total": 0, "cycle": 0, "free": 0, "cwwc": 0, "uni": 0, "single": 0}
    state = {"edges": 0, "nodes": 0, "ones": 0}

    def finish() -> None:
        tally["total"] += 1
        if tally["total"] > budget:
            raise BudgetExceeded(f"more than {budget} closed walks enumerated")
        e, v = state["edges"], state["nodes"]
        if i >= 4 and v == i:
            tally["cycle"] += 1
        elif e == v - 1:
            tally["free"] += 1
        else:
            tally["cwwc"] += 1
            if e == v:
                tally["uni"] += 1
            if state["ones"]:
                tally["single"] += 1

    def step(v: int, x: int) -> None:
        eid = edge_id[(v, x)]
        c = edge_mult[eid]
        if c == 0:
            state["edges"] += 1
            state["ones"] += 1
        elif c == 1:
            state["ones"] -= 1
        edge_mult[eid] = c + 1
        if node_mult[x] == 0:
            state["nodes"] += 1
        node_mult[x] += 1

    def unstep(v: int, x: int) -> None:
        eid = edge_id[(v, x)]
        c = edge_mult[eid] - 1
        edge_mult[eid] = c
        if c == 0:
            state["edges"] -= 1
            state["ones"] -= 1
        elif c == 1:
            state["ones"] += 1
        node_mult[x] -= 1
        if node_mult[x] == 0:
            state["nodes"] -= 1

    for start in range(size):
        if not nbrs[start]:
            continue
        dist = _bfs_dist(nbrs, start, 0, i)

        def walk(v: int, remaining: int) -> None:
            if remaining == 0:
                if v == start:
                    finish()
                return
            for x in nbrs[v]:
                if dist[x] < 0 or dist[x] > remaining - 1:
                    continue
                step(v, x)
                walk(x, remaining - 1)
                unstep(v, x)

        # the start node counts once; its return at the end is not a new visit
        node_mult[start] = 1
        state["nodes"] = 1
        walk(start, i)
        node_mult[start] = 0
        state["nodes"] = 0
    return _result(i, tally)


def _result(i: int, tally: dict) -> WalkClassification:
    return WalkClassification(
        length=i,
        total_closed_walks=tally["total"],
        cycle_walks=tally["cycle"],
        cycle_free_walks=tally["free"],
        cwwc_walks=tally["cwwc"],
        cwwc_unicyclic=tally["uni"],
        cwwc_single_edge=tally["single"],
    )
