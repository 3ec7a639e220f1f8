"""Bipartite (Tanner) graph representation, degree profiling and girth.

Nodes on the U side (variable nodes) are numbered ``0..n-1`` and nodes on the
W side (check nodes) ``0..m-1``.  Whenever a single index space is needed
(adjacency matrix rows, walk enumeration) U comes first: U node ``u`` has
global index ``u`` and W node ``w`` has global index ``n + w``.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional

import numpy as np
import scipy.sparse as sp

from .errors import DuplicateEdge, IndexOutOfRange


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable simple bipartite graph.

    Build instances with :func:`build_graph`; the constructor trusts its
    arguments.
    """

    n: int
    m: int
    adj_u: tuple[tuple[int, ...], ...]
    adj_w: tuple[tuple[int, ...], ...] = field(repr=False)
    edge_count: int

    @property
    def num_nodes(self) -> int:
        return self.n + self.m

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, ws in enumerate(self.adj_u):
            for w in ws:
                yield u, w

    def u_degrees(self) -> list[int]:
        return [len(ws) for ws in self.adj_u]

    def w_degrees(self) -> list[int]:
        return [len(us) for us in self.adj_w]

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists in the global index space (U block first)."""
        n = self.n
        out = [[n + w for w in ws] for ws in self.adj_u]
        out.extend(list(us) for us in self.adj_w)
        return out

    def degree(self, v: int) -> int:
        if v < self.n:
            return len(self.adj_u[v])
        return len(self.adj_w[v - self.n])

    def adjacency_matrix(self, dtype=np.int64) -> sp.csr_matrix:
        """Symmetric ``(n+m) x (n+m)`` adjacency matrix in CSR form."""
        rows, cols = [], []
        for u, w in self.edges():
            rows.append(u)
            cols.append(self.n + w)
        rows, cols = rows + cols, cols + rows
        data = np.ones(len(rows), dtype=dtype)
        size = self.num_nodes
        return sp.csr_matrix((data, (rows, cols)), shape=(size, size))

    def transpose(self) -> "BipartiteGraph":
        """Same graph with the roles of U and W swapped."""
        return BipartiteGraph(self.m, self.n, self.adj_w, self.adj_u, self.edge_count)

    def relabel(self, u_perm: Iterable[int], w_perm: Iterable[int]) -> "BipartiteGraph":
        """Return the isomorphic graph with U node ``u`` renamed ``u_perm[u]``."""
        u_perm, w_perm = list(u_perm), list(w_perm)
        return build_graph(self.n, self.m, [(u_perm[u], w_perm[w]) for u, w in self.edges()])


def build_graph(n: int, m: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Validate an edge list and return the corresponding graph.

    Raises :class:`IndexOutOfRange` for endpoints outside ``[0, n) x [0, m)``
    and :class:`DuplicateEdge` for a repeated pair.
    """
    if n < 0 or m < 0:
        raise IndexOutOfRange(f"negative side size: n={n}, m={m}")
    adj_u: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for u, w in edges:
        u, w = int(u), int(w)
        if not 0 <= u < n:
            raise IndexOutOfRange(f"U index {u} outside [0, {n})")
        if not 0 <= w < m:
            raise IndexOutOfRange(f"W index {w} outside [0, {m})")
        if w in adj_u[u]:
            raise DuplicateEdge(f"edge ({u}, {w}) given more than once")
        adj_u[u].add(w)
        count += 1
    adj_w: list[list[int]] = [[] for _ in range(m)]
    for u, ws in enumerate(adj_u):
        for w in ws:
            adj_w[w].append(u)
    return BipartiteGraph(
        n=n,
        m=m,
        adj_u=tuple(tuple(sorted(ws)) for ws in adj_u),
        adj_w=tuple(tuple(sorted(us)) for us in adj_w),
        edge_count=count,
    )


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    return build_graph(a, b, [(u, w) for u in range(a) for w in range(b)])


@dataclass(frozen=True)
class DegreeProfile:
    """Degree sequences of both sides, sorted non-increasing."""

    u_degrees: tuple[int, ...]
    w_degrees: tuple[int, ...]

    @property
    def d_v(self) -> Optional[int]:
        return _uniform(self.u_degrees)

    @property
    def d_c(self) -> Optional[int]:
        return _uniform(self.w_degrees)

    @property
    def n(self) -> int:
        return len(self.u_degrees)

    @property
    def m(self) -> int:
        return len(self.w_degrees)

    @classmethod
    def of(cls, g: BipartiteGraph) -> "DegreeProfile":
        return cls(
            tuple(sorted(g.u_degrees(), reverse=True)),
            tuple(sorted(g.w_degrees(), reverse=True)),
        )

    def swapped(self) -> "DegreeProfile":
        return DegreeProfile(self.w_degrees, self.u_degrees)


def _uniform(seq: tuple[int, ...]) -> Optional[int]:
    # an empty side is not "regular" with any particular degree
    if seq and seq[0] == seq[-1]:
        return seq[0]
    return None


class ClassKind(str, Enum):
    BIREGULAR = "bi-regular"
    VARIABLE_REGULAR = "variable-regular"
    CHECK_REGULAR = "check-regular"
    IRREGULAR = "irregular"


@dataclass(frozen=True)
class GraphClass:
    kind: ClassKind
    d_v: Optional[int] = None
    d_c: Optional[int] = None

    @property
    def is_biregular(self) -> bool:
        return self.kind is ClassKind.BIREGULAR

    @property
    def is_half_regular(self) -> bool:
        return self.kind in (ClassKind.VARIABLE_REGULAR, ClassKind.CHECK_REGULAR)

    def __str__(self) -> str:
        if self.kind is ClassKind.BIREGULAR:
            return f"BiRegular({self.d_v},{self.d_c})"
        if self.kind is ClassKind.VARIABLE_REGULAR:
            return f"VariableRegular({self.d_v})"
        if self.kind is ClassKind.CHECK_REGULAR:
            return f"CheckRegular({self.d_c})"
        return "Irregular"


def classify(g: BipartiteGraph) -> tuple[DegreeProfile, GraphClass]:
    """Degree profile and the most specific regularity class of ``g``."""
    profile = DegreeProfile.of(g)
    d_v, d_c = profile.d_v, profile.d_c
    if d_v is not None and d_c is not None:
        assert g.n * d_v == g.m * d_c == g.edge_count
        return profile, GraphClass(ClassKind.BIREGULAR, d_v, d_c)
    if d_v is not None:
        return profile, GraphClass(ClassKind.VARIABLE_REGULAR, d_v=d_v)
    if d_c is not None:
        return profile, GraphClass(ClassKind.CHECK_REGULAR, d_c=d_c)
    return profile, GraphClass(ClassKind.IRREGULAR)


def girth(g: BipartiteGraph) -> Optional[int]:
    """Length of the shortest cycle, or ``None`` if ``g`` is a forest.

    Breadth-first search from every node; a non-tree edge between levels
    ``a`` and ``b`` closes a cycle of length at most ``a + b + 1`` through
    the root, and the minimum over all roots is exact.
    """
    nbrs = g.neighbors()
    size = len(nbrs)
    best = None
    dist = [-1] * size
    parent = [-1] * size
    for root in range(size):
        if not nbrs[root]:
            continue
        touched = [root]
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if best is not None and 2 * dv + 2 > best:
                break
            for x in nbrs[v]:
                if dist[x] < 0:
                    dist[x] = dv + 1
                    parent[x] = v
                    touched.append(x)
                    queue.append(x)
                elif x != parent[v]:
                    length = dv + dist[x] + 1
                    if best is None or length < best:
                        best = length
        for v in touched:
            dist[v] = -1
            parent[v] = -1
        if best == 4:
            break
    return best


def degree_histogram(degrees: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(degrees).items()))
