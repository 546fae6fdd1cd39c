"""Reduced density matrices, block purity, concurrence and residual tangle."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .spin_algebra import local_dim

TANGLE_CLIP = 1e-10

# sigma_y x sigma_y spin-flip kernel of the two-qubit concurrence
_SY2 = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def partial_trace(state: np.ndarray, keep, n_sites: int, s: float) -> np.ndarray:
    """Reduced density matrix of the sites in `keep` (1-based, ascending order).

    The kept subsystem inherits the global basis ordering: the smallest kept
    site is the most significant digit.
    """
    keep = sorted(set(keep))
    if not keep or len(keep) >= n_sites:
        raise ValueError("keep must be a nonempty proper subset of sites")
    if any(not 1 <= k <= n_sites for k in keep):
        raise ValueError(f"sites out of range 1..{n_sites}: {keep}")
    d = local_dim(s)
    psi = np.asarray(state).reshape([d] * n_sites)
    traced = [k - 1 for k in range(1, n_sites + 1) if k not in keep]
    rho = np.tensordot(psi, psi.conj(), axes=(traced, traced))
    dim_keep = d ** len(keep)
    return rho.reshape(dim_keep, dim_keep)


def purity(rho: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ rho)))


def block_purity_profile(state: np.ndarray, n_sites: int, s: float) -> np.ndarray:
    """Tr(rho_1^2) for contiguous blocks {1..N1}, N1 = 1..N-1."""
    return np.array(
        [purity(partial_trace(state, range(1, n1 + 1), n_sites, s)) for n1 in range(1, n_sites)]
    )


def concurrence(state: np.ndarray, pair, n_sites: int, s: float = 0.5) -> float:
    """Wootters concurrence of the two-site reduced state (s = 1/2 only).

    C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
    eigenvalues of rho (sy x sy) rho* (sy x sy), computed from the Hermitian
    similarity sqrt(rho) rho~ sqrt(rho).
    """
    if s != 0.5:
        raise ValueError("concurrence is defined here for s = 1/2 only")
    k, l = pair
    if k == l:
        raise ValueError("concurrence needs two distinct sites")
    if n_sites == 2:
        rho = np.outer(state, state.conj())
    else:
        rho = partial_trace(state, (k, l), n_sites, s)
    rho_tilde = _SY2 @ rho.conj() @ _SY2
    evals, vecs = np.linalg.eigh(rho)
    sqrt_rho = (vecs * np.sqrt(np.clip(evals, 0.0, None))) @ vecs.conj().T
    lam2 = np.linalg.eigvalsh(sqrt_rho @ rho_tilde @ sqrt_rho)
    lam = np.sqrt(np.clip(lam2, 0.0, None))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_matrix(state: np.ndarray, n_sites: int) -> np.ndarray:
    """Symmetric N x N matrix of pairwise concurrences (diagonal zero)."""
    mat = np.zeros((n_sites, n_sites))
    for k in range(1, n_sites + 1):
        for l in range(k + 1, n_sites + 1):
            mat[k - 1, l - 1] = mat[l - 1, k - 1] = concurrence(state, (k, l), n_sites)
    return mat


def ring_distance_concurrence(
    state: np.ndarray, n_sites: int, cmat: np.ndarray | None = None
) -> np.ndarray:
    """Mean concurrence over pairs at ring distance d = 1..N//2."""
    if cmat is None:
        cmat = concurrence_matrix(state, n_sites)
    out = []
    for dist in range(1, n_sites // 2 + 1):
        pairs = [(k, (k + dist - 1) % n_sites) for k in range(n_sites)]
        vals = [cmat[a, b] for a, b in pairs]
        out.append(float(np.mean(vals)))
    return np.array(out)


def residual_tangle(
    state: np.ndarray, site: int, n_sites: int, cmat: np.ndarray | None = None
) -> float:
    """tau_k = 4 det(rho_k) - sum_{i != k} C_ik^2 (s = 1/2).

    Monogamy makes this nonnegative; round-off down to -1e-10 is clipped to
    zero silently, anything lower is clipped with a warning.
    """
    rho = partial_trace(state, (site,), n_sites, 0.5)
    tau = 4 * float(np.real(np.linalg.det(rho)))
    if cmat is None:
        cmat = concurrence_matrix(state, n_sites)
    tau -= float(np.sum(cmat[site - 1] ** 2))
    if tau < -TANGLE_CLIP:
        warnings.warn(f"residual tangle {tau:.3e} below the monogamy clip", stacklevel=2)
    return max(tau, 0.0)


@dataclass
class EntanglementReport:
    """Ground-state entanglement summary: pairwise, single-site and block."""

    concurrences: np.ndarray  # N x N symmetric
    tangles: np.ndarray  # per site, length N
    purities: np.ndarray  # contiguous blocks, length N-1

    @property
    def nearest_neighbour_concurrence(self) -> float:
        n = self.concurrences.shape[0]
        return float(np.mean([self.concurrences[k, (k + 1) % n] for k in range(n)]))


def entanglement_report(state: np.ndarray, n_sites: int, s: float = 0.5) -> EntanglementReport:
    cmat = concurrence_matrix(state, n_sites)
    tangles = np.array(
        [residual_tangle(state, k, n_sites, cmat) for k in range(1, n_sites + 1)]
    )
    return EntanglementReport(cmat, tangles, block_purity_profile(state, n_sites, s))
