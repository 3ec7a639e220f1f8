"""Closed cycle-free walk counts.

``S(x, y, i)`` is the number of closed walks of length ``i`` from a node of
degree ``x`` back to itself, in a bi-regular setting whose other side has
degree ``y``, that never close a cycle.  Such walks live in the universal
cover, a tree whose root has ``x`` children, whose odd levels branch ``y - 1``
ways and whose even levels (below the root) branch ``x - 1`` ways.

``Q(x, y, i)`` counts the walks that return to the root exactly once, at the
end.  Every closed walk from the root is a sequence of such excursions, so
``S`` is the sum over compositions of ``i / 2`` of products of ``Q`` values.

Two routes are provided: closed-form polynomials (``i <= 10``) and a
level-indexed dynamic program over the tree (:func:`s_tree_dp`), which is the
reference.  ``omega_*`` functions aggregate these into whole-graph counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .errors import InconsistentParameters, ResourceLimit, UnsupportedLength
from .graph import DegreeProfile

CLOSED_FORM_LENGTHS = (2, 4, 6, 8, 10)
TREE_DP_MAX_LENGTH = 16


class OmegaMethod(str, Enum):
    BIREGULAR = "bi-regular"
    IRREGULAR_4 = "irregular-4"
    HALFREGULAR_6 = "half-regular-6"
    TREE_DP = "tree-dp"


@dataclass(frozen=True)
class CycleFreeWalkCount:
    x: int
    y: int
    i: int
    s_value: int
    q_value: Optional[int] = None


@dataclass(frozen=True)
class OmegaValue:
    i: int
    omega: int
    class_used: OmegaMethod


def _check_degrees(x: int, y: int) -> None:
    if x < 1 or y < 1:
        raise ValueError(f"degrees must be >= 1, got x={x}, y={y}")


def q_closed_form(x: int, y: int, i: int) -> int:
    """Single-excursion count ``Q(x, y, i)``, polynomial in ``x`` and ``y``."""
    a, b = x - 1, y - 1
    if i == 2:
        return x
    if i == 4:
        return x * b
    if i == 6:
        return x * (b ** 2 + a * b)
    if i == 8:
        return x * (b ** 3 + 3 * a * b ** 2) + x * a ** 2 * b
    if i == 10:
        return x * (b ** 4 + 6 * a * b ** 3) + x * (6 * a ** 2 * b ** 2 + a ** 3 * b)
    raise UnsupportedLength(f"no closed form for length {i}; use s_tree_dp")


def s_closed_form(x: int, y: int, i: int) -> CycleFreeWalkCount:
    """Closed-form ``S(x, y, i)`` and ``Q(x, y, i)`` for ``i`` in 2..10."""
    if i not in CLOSED_FORM_LENGTHS:
        raise UnsupportedLength(f"closed forms exist for {CLOSED_FORM_LENGTHS}, got {i}")
    _check_degrees(x, y)
    a, b = x - 1, y - 1
    if i == 2:
        s = x
    elif i == 4:
        s = x * (x + y - 1)
    elif i == 6:
        s = x * (x ** 2 + 2 * x * b + a * b + b ** 2)
    elif i == 8:
        s = (x * (b ** 3 + 3 * a * b ** 2 + a ** 2 * b)
             + x * (2 * x * (b ** 2 + a * b) + x * b ** 2 + 3 * x ** 2 * b + x ** 3))
    else:
        q2, q4, q6, q8, q10 = (q_closed_form(x, y, k) for k in CLOSED_FORM_LENGTHS)
        # compositions of 5: (5), (1,4)x2, (2,3)x2, (1,2,2)x3, (1,1,3)x3, (1,1,1,2)x4, (1^5)
        s = (q10 + 2 * q2 * q8 + 2 * q4 * q6 + 3 * q2 * q4 ** 2
             + 3 * q2 ** 2 * q6 + 4 * q2 ** 3 * q4 + q2 ** 5)
    return CycleFreeWalkCount(x, y, i, s, q_closed_form(x, y, i))


def _branching(x: int, y: int, level: int) -> int:
    if level == 0:
        return x
    return y - 1 if level % 2 else x - 1


def s_tree_dp(x: int, y: int, i: int, max_length: int = TREE_DP_MAX_LENGTH) -> CycleFreeWalkCount:
    """``S(x, y, i)`` as the root-to-root walk count of the alternating tree.

    Equivalent to the (root, root) entry of the ``i``-th power of the tree's
    adjacency matrix; the tree is never built because all nodes on a level
    look alike.  ``counts[l]`` holds the number of walks currently at some
    node of level ``l``.
    """
    _check_degrees(x, y)
    if i < 2 or i % 2:
        raise UnsupportedLength(f"walk length must be even and >= 2, got {i}")
    if i > max_length:
        raise ResourceLimit(f"length {i} exceeds the configured bound {max_length}")
    height = i // 2
    counts = [1] + [0] * height
    for _ in range(i):
        nxt = [0] * (height + 1)
        for level, c in enumerate(counts):
            if not c:
                continue
            if level < height:
                nxt[level + 1] += c * _branching(x, y, level)
            if level > 0:
                nxt[level - 1] += c
        counts = nxt
    return CycleFreeWalkCount(x, y, i, counts[0], _first_return(x, y, i))


def _first_return(x: int, y: int, i: int) -> int:
    # root -> child, closed walk of length i-2 inside the child's subtree, back up
    height = (i - 2) // 2
    counts = [1] + [0] * height
    for _ in range(i - 2):
        nxt = [0] * (height + 1)
        for level, c in enumerate(counts):
            if not c:
                continue
            if level < height:
                nxt[level + 1] += c * (y - 1 if level % 2 == 0 else x - 1)
            if level > 0:
                nxt[level - 1] += c
        counts = nxt
    return x * counts[0]


def s_value(x: int, y: int, i: int) -> int:
    """``S(x, y, i)`` by closed form when available, else by the tree DP."""
    if i in CLOSED_FORM_LENGTHS:
        return s_closed_form(x, y, i).s_value
    return s_tree_dp(x, y, i).s_value


def omega_biregular(n: int, m: int, d_v: int, d_c: int, i: int) -> OmegaValue:
    """Cycle-free closed walks of length ``i`` in an (d_v, d_c)-regular graph."""
    if n * d_v != m * d_c:
        raise InconsistentParameters(
            f"n*d_v = {n * d_v} differs from m*d_c = {m * d_c}")
    if i < 2 or i % 2:
        raise UnsupportedLength(f"walk length must be even and >= 2, got {i}")
    if n == 0 and m == 0:
        return OmegaValue(i, 0, OmegaMethod.BIREGULAR)
    if d_v < 1 or d_c < 1:
        # edgeless graph: the only closed walks have length 0
        return OmegaValue(i, 0, OmegaMethod.BIREGULAR)
    method = OmegaMethod.BIREGULAR if i in CLOSED_FORM_LENGTHS else OmegaMethod.TREE_DP
    omega = n * s_value(d_v, d_c, i) + m * s_value(d_c, d_v, i)
    return OmegaValue(i, omega, method)


def omega_irregular_4(profile: DegreeProfile) -> OmegaValue:
    """Cycle-free closed 4-walks of any bipartite graph: sum of d(2d-1)."""
    total = sum(d * (2 * d - 1) for d in (*profile.u_degrees, *profile.w_degrees))
    return OmegaValue(4, total, OmegaMethod.IRREGULAR_4)


def omega_halfregular_6(n: int, d_v: int, w_degrees: Iterable[int]) -> OmegaValue:
    """Cycle-free closed 6-walks of a variable-regular graph.

    Every U node has degree ``d_v``; ``w_degrees`` lists the W side.  Valid as
    the full count of non-cycle closed 6-walks only when the girth is at least
    six, which the caller must ensure.
    """
    a = d_v - 1
    total = n * d_v * (1 + 3 * a + 2 * a * (d_v - 2))
    for d in w_degrees:
        total += d * (3 * d - 2) + 2 * d * (d - 1) * (d - 2) + 6 * d * (d - 1) * a
        total += 3 * d * (d - 1 + a)
    return OmegaValue(6, total, OmegaMethod.HALFREGULAR_6)
