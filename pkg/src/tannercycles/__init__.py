"""Exact short-cycle counts in bipartite (Tanner) graphs from traces and degrees."""
from .counter import Capability, CycleReport, auto_lengths, capability, count_cycles
from .cwwc import PsiValue, psi_g2, psi_g4
from .errors import *  # noqa: F401,F403
from .generate import GenSpec, generate
from .graph import (BipartiteGraph, ClassKind, DegreeProfile, GraphClass, build_graph,
                    classify, complete_bipartite, girth)
from .io import (parse_alist, parse_edgelist, read_graph, serialize_alist,
                 serialize_edgelist, write_graph)
from .oracle import WalkClassification, backtrack_cycle_count, classify_closed_walks
from .traces import SpectrumSummary, TraceVector, exact_traces, spectrum, spectrum_residual
from .walks import (CycleFreeWalkCount, OmegaValue, omega_biregular, omega_halfregular_6,
                    omega_irregular_4, s_closed_form, s_tree_dp)

__version__ = "0.1.0"
