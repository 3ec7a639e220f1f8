"""Exact traces of adjacency-matrix powers.

``tr(A^k)`` is the number of closed walks of length ``k`` (start and direction
distinguished).  The counts are computed by walk propagation from blocks of
start vertices: with ``W_t = A^t E`` for a block ``E`` of unit vectors,

    tr(A^(2t))   = sum over the block of <W_t, W_t>
    tr(A^(2t+1)) = sum over the block of <W_t, W_(t+1)>

so ``k_max / 2`` sparse products per block suffice.  The ``direct`` method
instead reads the diagonal of every ``W_k`` and exists to cross-check the
shortcut.

All arithmetic is exact.  When ``|V| * maxdeg**k_max`` fits in a signed 64-bit
integer the propagation runs in plain ``int64``; otherwise it runs modulo
several primes below ``2**26`` and the result is rebuilt by the Chinese
remainder theorem.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

import numpy as np

from .errors import OverflowDetected, TooLarge
from .graph import BipartiteGraph

INT64_MAX = np.iinfo(np.int64).max
BLOCK = 256
MAX_DENSE_NODES = 2000
THREADS_ENV = "TANNERCYCLES_THREADS"

# primes just below 2**26; products of two residues stay below 2**52
_PRIMES = (67108859, 67108837, 67108819, 67108777, 67108763, 67108757,
           67108753, 67108747, 67108739, 67108729, 67108721, 67108709)


@dataclass(frozen=True)
class TraceVector:
    """Exact ``tr(A^k)`` for ``k = 1..k_max``."""

    k_max: int
    values: Mapping[int, int]

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.k_max:
            raise KeyError(k)
        return self.values[k]

    def __iter__(self) -> Iterator[int]:
        return iter(range(1, self.k_max + 1))

    def items(self):
        return [(k, self.values[k]) for k in self]

    def even(self) -> dict[int, int]:
        return {k: v for k, v in self.items() if k % 2 == 0}


def _workers(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return 1


def _max_degree(g: BipartiteGraph) -> int:
    return max([0, *g.u_degrees(), *g.w_degrees()])


def trace_bound(g: BipartiteGraph, k_max: int) -> int:
    """Upper bound on every partial sum met while computing the traces."""
    return g.num_nodes * max(1, _max_degree(g)) ** k_max


def _block_traces(A, start: int, stop: int, size: int, k_max: int,
                  method: str, modulus: Optional[int]) -> list[int]:
    """Trace contributions of start vertices ``start..stop-1``."""
    width = stop - start
    cols = np.arange(width)
    W = np.zeros((size, width), dtype=np.int64)
    W[start + cols, cols] = 1
    out = [0] * (k_max + 1)

    def reduce(x):
        return x % modulus if modulus else x

    def inner(X, Y) -> int:
        if modulus:
            return int(np.sum((X * Y) % modulus, dtype=np.int64)) % modulus
        return int(np.sum(X * Y, dtype=np.int64))

    if method == "direct":
        for t in range(1, k_max + 1):
            W = reduce(A @ W)
            out[t] = int(np.sum(W[start + cols, cols], dtype=np.int64))
        return out

    half = k_max // 2
    prev = W
    for t in range(1, half + 1):
        cur = reduce(A @ prev)
        # tr(A^(2t-1)) = <W_(t-1), W_t>
        out[2 * t - 1] = inner(prev, cur)
        out[2 * t] = inner(cur, cur)
        prev = cur
    if k_max % 2:
        cur = reduce(A @ prev)
        out[k_max] = inner(prev, cur)
    return out


def _traces_mod(g: BipartiteGraph, k_max: int, method: str,
                modulus: Optional[int], workers: int) -> list[int]:
    A = g.adjacency_matrix()
    size = g.num_nodes
    spans = [(s, min(s + BLOCK, size)) for s in range(0, size, BLOCK)]

    def job(span):
        return _block_traces(A, span[0], span[1], size, k_max, method, modulus)

    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, spans))
    else:
        parts = [job(span) for span in spans]
    total = [0] * (k_max + 1)
    for part in parts:
        for k in range(1, k_max + 1):
            total[k] += part[k]
    if modulus:
        total = [t % modulus for t in total]
    return total


def exact_traces(g: BipartiteGraph, k_max: int, *, method: str = "norm",
                 arithmetic: str = "auto", workers: Optional[int] = None) -> TraceVector:
    """Exact closed-walk counts ``tr(A^k)`` for ``k = 1..k_max``.

    ``method`` is ``"norm"`` (inner products of half-length walk vectors) or
    ``"direct"`` (diagonal of every power).  ``arithmetic="int64"`` refuses
    instances whose counts could leave the int64 range with
    :class:`OverflowDetected`; the default ``"auto"`` switches to
    multi-modular arithmetic for them instead.
    """
    if k_max < 2 or k_max % 2:
        raise ValueError(f"k_max must be an even integer >= 2, got {k_max}")
    if method not in ("norm", "direct"):
        raise ValueError(f"unknown method {method!r}")
    if arithmetic not in ("auto", "int64"):
        raise ValueError(f"unknown arithmetic {arithmetic!r}")
    nworkers = _workers(workers)
    if g.num_nodes == 0:
        return TraceVector(k_max, {k: 0 for k in range(1, k_max + 1)})

    bound = trace_bound(g, k_max)
    if bound <= INT64_MAX:
        raw = _traces_mod(g, k_max, method, None, nworkers)
    elif arithmetic == "int64":
        raise OverflowDetected(
            f"closed-walk counts up to {bound} may exceed int64 for k_max={k_max}")
    else:
        raw = _crt_traces(g, k_max, method, bound, nworkers)
    values = {k: raw[k] for k in range(1, k_max + 1)}
    return TraceVector(k_max, values)


def _crt_traces(g, k_max, method, bound, workers) -> list[int]:
    moduli = []
    product = 1
    for p in _PRIMES:
        moduli.append(p)
        product *= p
        if product > bound:
            break
    else:
        raise OverflowDetected(f"trace bound {bound} exceeds the modular range")
    residues = [_traces_mod(g, k_max, method, p, workers) for p in moduli]
    out = [0] * (k_max + 1)
    for k in range(1, k_max + 1):
        x = 0
        for p, res in zip(moduli, residues):
            q = product // p
            x += res[k] * q * pow(q, -1, p)
        out[k] = x % product
    return out


@dataclass(frozen=True)
class SpectrumSummary:
    """Floating-point adjacency spectrum, kept only for cross-checks."""

    eigenvalues: np.ndarray
    tolerance: float = 1e-9

    def power_sum(self, k: int) -> float:
        return float(np.sum(self.eigenvalues ** k))

    def spectral_radius(self) -> float:
        if self.eigenvalues.size == 0:
            return 0.0
        return float(np.max(np.abs(self.eigenvalues)))

    def is_symmetric(self) -> bool:
        ev = np.sort(self.eigenvalues)
        scale = max(1.0, self.spectral_radius())
        return bool(np.allclose(ev, -ev[::-1], atol=self.tolerance * scale * 1e3))

    def sum_is_zero(self) -> bool:
        scale = max(1.0, self.spectral_radius())
        return abs(float(np.sum(self.eigenvalues))) <= 1e3 * self.tolerance * scale * len(self.eigenvalues)


def spectrum(g: BipartiteGraph, tolerance: float = 1e-9) -> SpectrumSummary:
    if g.num_nodes > MAX_DENSE_NODES:
        raise TooLarge(f"{g.num_nodes} nodes exceeds the dense eigensolver limit "
                       f"of {MAX_DENSE_NODES}")
    dense = g.adjacency_matrix(dtype=np.float64).toarray()
    return SpectrumSummary(np.linalg.eigvalsh(dense), tolerance)


def spectrum_residual(g: BipartiteGraph, k_max: int) -> list[tuple[int, float]]:
    """Relative gap between ``sum(lambda**k)`` and the exact trace, even ``k``."""
    spec = spectrum(g)
    exact = exact_traces(g, k_max)
    out = []
    for k in range(2, k_max + 1, 2):
        t = exact[k]
        out.append((k, abs(spec.power_sum(k) - t) / max(1, t)))
    return out


def odd_power_sums(g: BipartiteGraph, k_max: int) -> list[tuple[int, float, float]]:
    """``(k, |sum(lambda**k)|, 1e-6 * rho**k)`` for odd ``k``; first must not exceed second."""
    spec = spectrum(g)
    rho = spec.spectral_radius()
    return [(k, abs(spec.power_sum(k)), 1e-6 * max(rho, 1.0) ** k)
            for k in range(1, k_max + 1, 2)]

