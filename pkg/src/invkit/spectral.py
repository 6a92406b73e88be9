"""Laplacian matrices, the two-block symmetry split, and spectral invariant formulas.

The split: given a fixed-point-free, order-2 automorphism sigma of a graph,
index the vertices as V1 = {i : i < sigma(i)} followed by V2 = sigma(V1).
The Laplacian then has equal diagonal blocks and equal off-diagonal blocks,
and its spectrum is the union of the spectra of block_a = L11 + L12 and
block_s = L11 - L12. The orthogonal change of basis behind this is never
materialized; the blocks are read straight off the vertex partition.

Spectral values computed here are floating-point cross-checks. Authoritative
results live in `invkit.exact`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import DisconnectedGraphError, Graph, degrees

# an eigenvalue counts as "the" zero of a connected Laplacian below this,
# scaled by max(1, largest eigenvalue)
ZERO_EIGENVALUE_RTOL = 1e-8


class DecompositionError(ValueError):
    """The supplied permutation does not induce a valid two-block split."""


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian: degree diagonal minus adjacency."""
    n = g.vertex_count
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        m[i, i] = len(g.adjacency[i])
        for j in g.adjacency[i]:
            m[i, j] = -1
    return m


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Degree-normalized Laplacian, float64.

    Diagonal 1, entry (i, j) = -1/sqrt(d_i d_j) on edges. Built so the
    result is exactly symmetric in floating point. Raises ValueError on an
    isolated vertex.
    """
    deg = degrees(g)
    if min(deg) == 0:
        raise ValueError("normalized Laplacian undefined with an isolated vertex")
    dinv = 1.0 / np.sqrt(np.asarray(deg, dtype=np.float64))
    scale = np.outer(dinv, dinv)
    return laplacian(g).astype(np.float64) * scale


@dataclass
class SpectrumSplit:
    """The two half-size blocks of a symmetry split plus their spectra."""

    block_a: np.ndarray
    block_s: np.ndarray
    eigs_a: np.ndarray
    eigs_s: np.ndarray

    def combined(self) -> np.ndarray:
        """Sorted union of the two eigenvalue multisets."""
        return np.sort(np.concatenate([self.eigs_a, self.eigs_s]))


def involution_split(g: Graph, sigma, normalized: bool = False) -> SpectrumSplit:
    """Split the (normalized) Laplacian along a rim-swapping symmetry.

    `sigma` must be an order-2, fixed-point-free automorphism of g, given as
    a sequence with sigma[i] = image of vertex i. The returned blocks are
    L11 + L12 and L11 - L12 for the vertex order V1 = {i : i < sigma(i)},
    V2 = sigma(V1); the union of their spectra is the full spectrum.
    Violated preconditions raise DecompositionError.
    """
    n = g.vertex_count
    sig = list(sigma)
    if len(sig) != n or sorted(sig) != list(range(n)):
        raise DecompositionError("sigma is not a permutation of the vertices")
    for i in range(n):
        if sig[i] == i:
            raise DecompositionError(f"sigma fixes vertex {i}")
        if sig[sig[i]] != i:
            raise DecompositionError("sigma is not an involution")
    for u in range(n):
        image = sorted(sig[v] for v in g.adjacency[u])
        if image != list(g.adjacency[sig[u]]):
            raise DecompositionError("sigma is not a graph automorphism")

    v1 = [i for i in range(n) if i < sig[i]]
    v2 = [sig[i] for i in v1]
    full = normalized_laplacian(g) if normalized else laplacian(g)
    l11 = full[np.ix_(v1, v1)]
    l12 = full[np.ix_(v1, v2)]
    l21 = full[np.ix_(v2, v1)]
    l22 = full[np.ix_(v2, v2)]
    if not (np.array_equal(l11, l22) and np.array_equal(l12, l21)):
        raise DecompositionError("blocks are not symmetric under sigma")

    block_a = l11 + l12
    block_s = l11 - l12
    return SpectrumSplit(
        block_a=block_a,
        block_s=block_s,
        eigs_a=eigenvalues_sym(block_a),
        eigs_s=eigenvalues_sym(block_s),
    )


def cycle_spectrum(n: int) -> np.ndarray:
    """Laplacian eigenvalues of the n-cycle: 4 sin^2(pi i / n), i = 1..n.

    Returned in i-order, so the final entry is the zero eigenvalue.
    """
    if n < 3:
        raise ValueError(f"cycle spectrum needs n >= 3, got {n}")
    return np.array([4.0 * math.sin(math.pi * i / n) ** 2 for i in range(1, n + 1)])


def eigenvalues_sym(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, with multiplicity."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric")
    return np.linalg.eigvalsh(m.astype(np.float64))


def _nonzero_eigenvalues(eigs: np.ndarray) -> np.ndarray:
    """Drop the single zero eigenvalue of a connected graph's spectrum."""
    eigs = np.asarray(eigs, dtype=np.float64)
    cutoff = ZERO_EIGENVALUE_RTOL * max(1.0, float(np.max(eigs, initial=0.0)))
    near_zero = np.abs(eigs) < cutoff
    count = int(np.count_nonzero(near_zero))
    if count > 1:
        raise DisconnectedGraphError(f"{count} near-zero eigenvalues: graph is disconnected")
    if count == 0:
        raise ValueError("no zero eigenvalue: input is not a connected Laplacian spectrum")
    return eigs[~near_zero]


def spectral_kf(eigs, n_vertices: int) -> float:
    """Kirchhoff index from Laplacian eigenvalues: n * sum of reciprocals."""
    return n_vertices * float(np.sum(1.0 / _nonzero_eigenvalues(eigs)))


def spectral_kf_star(eigs, m_edges: int) -> float:
    """Degree-weighted Kirchhoff index from normalized-Laplacian eigenvalues."""
    return 2 * m_edges * float(np.sum(1.0 / _nonzero_eigenvalues(eigs)))


@dataclass(frozen=True)
class TreeCount:
    """Spanning-tree count estimated from a spectrum.

    `log_value` is always valid; `value` is the rounded count when the
    product fits integer-exact floating range, else None.
    """

    log_value: float
    value: int | None

    @property
    def fits(self) -> bool:
        return self.value is not None


def spectral_tree_count(eigs, n_vertices: int) -> TreeCount:
    """Spanning-tree count from Laplacian eigenvalues, computed in log space.

    The product of nonzero eigenvalues over n is accumulated as a log-sum so
    large graphs cannot overflow; the rounded integer is reported only while
    it is faithfully representable (below 2**53).
    """
    nz = _nonzero_eigenvalues(eigs)
    log_value = float(np.sum(np.log(nz))) - math.log(n_vertices)
    if log_value < 53 * math.log(2.0):
        return TreeCount(log_value=log_value, value=round(math.exp(log_value)))
    return TreeCount(log_value=log_value, value=None)
