"""Closed walks with cycle (CWWCs) in bi-regular graphs.

A CWWC of length ``i <= 2g - 2`` is one cycle plus closed cycle-free walks
hanging off its nodes, and it traverses at least one edge exactly once.  Its
``2i`` rotations/reflections are therefore distinct walks, so every count
below is ``2i`` times a count of unrooted, undirected structures.

These are pure functions of ``(g, d_v, d_c, N_g, N_{g+2})``; they never look
at a graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import GirthTooSmall


@dataclass(frozen=True)
class PsiValue:
    i: int
    psi: int
    g: int
    d_v: int
    d_c: int
    n_g: int
    n_g2: Optional[int] = None

    @property
    def unrooted(self) -> int:
        """Number of CWWCs ignoring start edge and direction."""
        return self.psi // (2 * self.i)


def _check_girth(g: int, minimum: int) -> None:
    if g < minimum or g % 2:
        raise GirthTooSmall(f"girth must be even and >= {minimum}, got {g}")


def psi_g2(g: int, d_v: int, d_c: int, n_g: int) -> PsiValue:
    """Closed walks with cycle of length ``g + 2``.

    Each one is a ``g``-cycle plus a back-and-forth step at one of its nodes,
    either along an edge leaving the cycle or along a cycle edge.
    """
    _check_girth(g, 4)
    h = g // 2
    per_cycle = h * (d_v + d_c) - g
    i = g + 2
    return PsiValue(i, n_g * per_cycle * 2 * i, g, d_v, d_c, n_g)


def psi_g4(g: int, d_v: int, d_c: int, n_g: int, n_g2: int) -> PsiValue:
    """Closed walks with cycle of length ``g + 4`` (girth at least six)."""
    _check_girth(g, 6)
    h = g // 2
    h2 = (g + 2) // 2
    a, b = d_v - 2, d_c - 2
    # (g+2)-cycle plus one back-and-forth step
    from_longer = n_g2 * (h2 * (d_v + d_c) - (g + 2))
    # g-cycle with a two-edge pendant path
    pendant_path = h * a * (d_c - 1) + h * b * (d_v - 1)
    # g-cycle with two pendant steps (same node or two nodes)
    two_pendants = (comb(h, 2) + h) * a * a + (comb(h, 2) + h) * b * b + h * h * a * b
    # remaining shapes: doubled cycle edges and mixed pendant/cycle-edge steps
    mixed = comb(g, 2) + 2 * g + (g + 2) * (h * a + h * b)
    per_walk = from_longer + n_g * (pendant_path + two_pendants + mixed)
    i = g + 4
    return PsiValue(i, per_walk * 2 * i, g, d_v, d_c, n_g, n_g2)
