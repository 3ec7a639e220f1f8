"""Cycle multiplicities from traces and degrees.

For every supported length ``i`` the count is

    N_i = (tr(A^i) - Omega_i - Psi_i) / (2 i)

where ``Omega_i`` counts closed cycle-free walks and ``Psi_i`` closed walks
that contain a cycle but are not one.  Which lengths can be handled depends
on the regularity class and girth of the graph; :func:`capability` encodes
that table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .cwwc import PsiValue, psi_g2, psi_g4
from .errors import CapabilityRefused, GirthTooSmall, NonDivisibleTrace
from .graph import (BipartiteGraph, ClassKind, DegreeProfile, GraphClass,
                    classify, girth as compute_girth)
from .traces import TraceVector, exact_traces
from .walks import (OmegaValue, omega_biregular, omega_halfregular_6,
                    omega_irregular_4)


class Capability(str, Enum):
    SUPPORTED = "P"
    IMPOSSIBLE = "IP"
    NOT_IMPLEMENTED = "not implemented"

    def describe(self) -> str:
        if self is Capability.IMPOSSIBLE:
            return "IP (impossible in general from spectrum and degree sequences)"
        if self is Capability.NOT_IMPLEMENTED:
            return "possible in principle, but no closed form for Psi is available"
        return "P (possible)"


def capability(cls: GraphClass, g: Optional[int], i: int) -> Capability:
    """Whether ``N_i`` is computable for a graph of class ``cls`` and girth ``g``.

    ``g=None`` means the graph is a forest, where every count is zero.  Lengths
    below the girth are trivially zero and reported as supported.
    """
    if g is None or i % 2 or i < g:
        return Capability.SUPPORTED
    if cls.kind is ClassKind.BIREGULAR:
        if i >= 2 * g:
            return Capability.IMPOSSIBLE
        if i <= g + 4:
            return Capability.SUPPORTED
        return Capability.NOT_IMPLEMENTED
    if cls.is_half_regular:
        if i == g and g in (4, 6):
            return Capability.SUPPORTED
        return Capability.IMPOSSIBLE
    if i == g == 4:
        return Capability.SUPPORTED
    return Capability.IMPOSSIBLE


def auto_lengths(cls: GraphClass, g: Optional[int]) -> list[int]:
    """The lengths ``g, g+2, g+4`` that :func:`capability` accepts."""
    if g is None:
        return [4]
    return [i for i in (g, g + 2, g + 4) if capability(cls, g, i) is Capability.SUPPORTED]


@dataclass
class CycleReport:
    girth: Optional[int]
    graph_class: GraphClass
    profile: DegreeProfile
    counts: dict[int, int] = field(default_factory=dict)
    traces: Optional[TraceVector] = None
    methods: dict[int, str] = field(default_factory=dict)
    refused: dict[int, Capability] = field(default_factory=dict)
    omegas: dict[int, OmegaValue] = field(default_factory=dict)
    psis: dict[int, PsiValue] = field(default_factory=dict)
    # N values computed only because a longer target needed them
    prerequisites: dict[int, int] = field(default_factory=dict)


def _divide(numerator: int, i: int) -> int:
    q, r = divmod(numerator, 2 * i)
    if r or numerator < 0:
        raise NonDivisibleTrace(
            f"length {i}: tr - Omega - Psi = {numerator} is not a non-negative "
            f"multiple of {2 * i}")
    return q


def n4_irregular(trace4: int, profile: DegreeProfile) -> tuple[int, OmegaValue]:
    """4-cycles of any bipartite graph from ``tr(A^4)`` and its degrees."""
    omega = omega_irregular_4(profile)
    return _divide(trace4 - omega.omega, 4), omega


def n6_halfregular(trace6: int, profile: DegreeProfile, g: Optional[int]) -> tuple[int, OmegaValue]:
    """6-cycles of a half-regular graph with girth at least six.

    A check-regular profile is handled by exchanging the two sides first.
    """
    if g is not None and g < 6:
        raise GirthTooSmall(f"the half-regular 6-cycle count needs girth >= 6, got {g}")
    if profile.d_v is None:
        if profile.d_c is None:
            raise ValueError("profile is not half-regular")
        profile = profile.swapped()
    omega = omega_halfregular_6(profile.n, profile.d_v, profile.w_degrees)
    return _divide(trace6 - omega.omega, 6), omega


def count_cycles(graph: BipartiteGraph, targets: Iterable[int], *,
                 strict: bool = False, workers: Optional[int] = None) -> CycleReport:
    """Count ``i``-cycles for every requested length that the graph class allows.

    Refused lengths land in ``report.refused`` with their verdict, or raise
    :class:`CapabilityRefused` when ``strict`` is set.
    """
    targets = sorted(set(targets))
    if not targets:
        raise ValueError("no target lengths given")
    profile, cls = classify(graph)
    g = compute_girth(graph)
    report = CycleReport(girth=g, graph_class=cls, profile=profile)

    wanted = []
    for i in targets:
        verdict = capability(cls, g, i)
        if verdict is Capability.SUPPORTED:
            wanted.append(i)
        elif strict:
            raise CapabilityRefused(i, verdict)
        else:
            report.refused[i] = verdict

    if g is None:
        for i in wanted:
            report.counts[i] = 0
            report.methods[i] = "acyclic"
        return report
    if not wanted:
        return report

    k_max = max(max(wanted), 2)
    k_max += k_max % 2
    traces = exact_traces(graph, k_max, workers=workers)
    report.traces = traces

    for i in wanted:
        if i % 2 or i < 4:
            report.counts[i] = 0
            report.methods[i] = "no cycles of this length in a bipartite graph"
        elif cls.is_biregular:
            _biregular(report, graph, traces, g, i)
        elif i == 4:
            n4, omega = n4_irregular(traces[4], profile)
            report.counts[4], report.omegas[4] = n4, omega
            report.methods[4] = "irregular-4: (tr - sum d(2d-1)) / 8"
        elif i == 6 and cls.is_half_regular:
            n6, omega = n6_halfregular(traces[6], profile, g)
            report.counts[6], report.omegas[6] = n6, omega
            side = "" if cls.kind is ClassKind.VARIABLE_REGULAR else " (sides exchanged)"
            report.methods[6] = f"half-regular-6: (tr - Omega_6) / 12{side}"
        else:
            # shorter than the girth, no closed form for this class
            report.counts[i] = 0
            report.methods[i] = "below girth"
    for i in [k for k in report.counts if k not in targets]:
        report.prerequisites[i] = report.counts.pop(i)
    return report


def _biregular(report: CycleReport, graph: BipartiteGraph, traces: TraceVector,
               g: int, i: int) -> None:
    """Fill ``report.counts[i]`` for a bi-regular graph, computing prerequisites."""
    if i in report.counts:
        return
    cls = report.graph_class
    d_v, d_c = cls.d_v, cls.d_c
    omega = omega_biregular(graph.n, graph.m, d_v, d_c, i)
    report.omegas[i] = omega
    if i <= g:
        psi = None
        method = "bi-regular: (tr - Omega) / 2i"
    elif i == g + 2:
        _biregular(report, graph, traces, g, g)
        psi = psi_g2(g, d_v, d_c, report.counts[g])
        method = "bi-regular g+2: (tr - Omega - Psi) / 2i"
    elif i == g + 4:
        _biregular(report, graph, traces, g, g)
        _biregular(report, graph, traces, g, g + 2)
        psi = psi_g4(g, d_v, d_c, report.counts[g], report.counts[g + 2])
        method = "bi-regular g+4: (tr - Omega - Psi) / 2i"
    else:
        raise CapabilityRefused(i, capability(cls, g, i))
    numerator = traces[i] - omega.omega
    if psi is not None:
        report.psis[i] = psi
        numerator -= psi.psi
    report.counts[i] = _divide(numerator, i)
    report.methods[i] = method
