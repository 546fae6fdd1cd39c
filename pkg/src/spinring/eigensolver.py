"""Dense Hermitian diagonalization, degeneracy analysis and sector detection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tolerances import (
    ALGEBRA_TOL,
    DEG_TOL_FACTOR,
    MAX_DENSE_DIM,
    RESIDUAL_FACTOR,
    SECTOR_TOL,
    SPECTRUM_TOL,
)


class NumericalError(RuntimeError):
    """Raised when an eigensolve fails its residual contract."""


@dataclass
class SpectrumResult:
    """Ascending eigenvalues, orthonormal eigenvectors (columns), degeneracy
    grouping at tol_deg, and the ground-doublet splitting delta = E_1 - E_0."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    degeneracy_groups: list[list[int]]
    delta: float
    tol_deg: float


def default_deg_tol(ham: np.ndarray) -> float:
    return DEG_TOL_FACTOR * max(1.0, float(np.max(np.abs(ham))))


def group_degeneracies(eigenvalues: np.ndarray, tol_deg: float) -> list[list[int]]:
    """Partition indices into groups split at gaps larger than tol_deg.

    Gap-based grouping is tolerance-monotone: coarsening tol_deg can only
    merge groups, never split one.
    """
    groups: list[list[int]] = [[0]]
    for i in range(1, len(eigenvalues)):
        if eigenvalues[i] - eigenvalues[i - 1] < tol_deg:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def diagonalize(ham: np.ndarray, tol_deg: float | None = None) -> SpectrumResult:
    """Full spectrum of a dense Hermitian matrix.

    Within a degenerate group the eigenvectors are an arbitrary orthonormal
    basis; callers must not rely on that gauge (use ground_space projections
    for any quantity defined on a near-degenerate ground multiplet).
    """
    ham = np.asarray(ham)
    if ham.ndim != 2 or ham.shape[0] != ham.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {ham.shape}")
    if ham.shape[0] > MAX_DENSE_DIM:
        raise ValueError(f"dimension {ham.shape[0]} exceeds dense cap {MAX_DENSE_DIM}")
    scale = max(1.0, float(np.max(np.abs(ham))))
    if np.max(np.abs(ham - ham.conj().T)) > ALGEBRA_TOL * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    evals, evecs = np.linalg.eigh(ham)
    residual = np.max(np.abs(ham @ evecs - evecs * evals))
    if residual > RESIDUAL_FACTOR * scale * ham.shape[0]:
        raise NumericalError(f"eigensolver residual {residual:.3e} violates contract")
    if tol_deg is None:
        tol_deg = default_deg_tol(ham)
    delta = float(evals[1] - evals[0]) if len(evals) > 1 else 0.0
    return SpectrumResult(evals, evecs, group_degeneracies(evals, tol_deg), delta, tol_deg)


def ground_space(spectrum: SpectrumResult, tol_deg: float | None = None) -> tuple[np.ndarray, float]:
    """Orthonormal basis (columns) of the lowest degeneracy group, plus delta."""
    if len(spectrum.eigenvalues) == 0:
        raise ValueError("empty spectrum")
    if tol_deg is None:
        ground_idx = spectrum.degeneracy_groups[0]
    else:
        ground_idx = group_degeneracies(spectrum.eigenvalues, tol_deg)[0]
    return spectrum.eigenvectors[:, ground_idx], spectrum.delta


@dataclass
class SectorDecomposition:
    """Uncoupled blocks of the product basis: index sets and per-block spectra."""

    blocks: list[np.ndarray]
    block_eigenvalues: list[np.ndarray]
    block_eigenvectors: list[np.ndarray]

    def embedded_vector(self, block: int, column: int, dim: int) -> np.ndarray:
        """Lift a block eigenvector back into the full product space."""
        vec = np.zeros(dim, dtype=complex)
        vec[self.blocks[block]] = self.block_eigenvectors[block][:, column]
        return vec


def detect_sectors(ham: np.ndarray, threshold: float = SECTOR_TOL) -> SectorDecomposition:
    """Connected components of the nonzero structure of H in the product basis."""
    ham = np.asarray(ham)
    dim = ham.shape[0]
    adjacency = np.abs(ham) > threshold
    np.fill_diagonal(adjacency, False)
    labels = -np.ones(dim, dtype=int)
    n_blocks = 0
    for start in range(dim):
        if labels[start] >= 0:
            continue
        stack = [start]
        labels[start] = n_blocks
        while stack:
            node = stack.pop()
            for nbr in np.nonzero(adjacency[node])[0]:
                if labels[nbr] < 0:
                    labels[nbr] = n_blocks
                    stack.append(nbr)
        n_blocks += 1
    blocks = [np.nonzero(labels == b)[0] for b in range(n_blocks)]
    evals_list, evecs_list = [], []
    for idx in blocks:
        sub = ham[np.ix_(idx, idx)]
        evals, evecs = np.linalg.eigh(sub)
        evals_list.append(evals)
        evecs_list.append(evecs)
    return SectorDecomposition(blocks, evals_list, evecs_list)


def compare_spectra(a: SpectrumResult, b: SpectrumResult) -> float:
    """Max pairwise deviation between two ascending eigenvalue lists."""
    if len(a.eigenvalues) != len(b.eigenvalues):
        raise ValueError("spectra have different dimensions")
    return float(np.max(np.abs(a.eigenvalues - b.eigenvalues)))


def spectra_match(a: SpectrumResult, b: SpectrumResult, tol: float = SPECTRUM_TOL) -> bool:
    return compare_spectra(a, b) < tol
