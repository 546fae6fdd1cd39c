"""Analytic trial wavefunctions, overlaps and order vectors.

The two macroscopic branches are products of coherent single-spin states,

    beta_k = [prod_l Rz(phi_l + phi + k*pi)] |alpha_x>,   k = 0, 1,

with phi_l the radial site angles and |alpha_x> the uniform (F) or
alternating (AF) product of in-plane spin states.  The tilted family
gamma_k(theta) replaces |alpha_x> by y-rotated states, reducing to beta_k
at theta = pi/2.

Phase convention: inside trial states the z rotation uses the generator
S_z - s, i.e. phases are measured relative to the m = +s reference state.
This leaves every single-spin direction (and all expectation values)
unchanged, but fixes the interference between the k = 0 and k = 1 branches:
the symmetric combination then always selects the flip-parity sector of the
reference configuration, <gamma_0|gamma_1> = cos(theta)**N is real, and the
normalization 2(1+|cos theta|**N) is exact.  With the bare spinor phases the
combination lands in the wrong sector whenever N = 2 (mod 4).
"""

from __future__ import annotations

import numpy as np

from .eigensolver import SectorDecomposition, detect_sectors
from .ring_models import RingConfig, site_angles_a
from .spin_algebra import local_dim, local_rotation, normalize, single_spin_operator

CHARACTERS = ("F", "AF")


def _reference_rz(angle: float, s: float) -> np.ndarray:
    """exp(-i angle (S_z - s)): z rotation, phases relative to m = +s."""
    return np.exp(1j * angle * s) * local_rotation("z", angle, s)


def _kron_vectors(sites: list[np.ndarray]) -> np.ndarray:
    out = sites[0]
    for v in sites[1:]:
        out = np.kron(out, v)
    return out


def _top_state(s: float) -> np.ndarray:
    e0 = np.zeros(local_dim(s), dtype=complex)
    e0[0] = 1.0
    return e0


def _axis_states(axis: str, s: float) -> tuple[np.ndarray, np.ndarray]:
    """(up, down) single-spin states along the axis, m = +-s.

    The x-axis pair is generated by rotating the m = +s state by +-pi/2
    about y, which keeps the phases coherent with the tilted family.
    """
    top = _top_state(s)
    if axis == "z":
        down = np.zeros_like(top)
        down[-1] = 1.0
        return top, down
    if axis == "x":
        return local_rotation("y", np.pi / 2, s) @ top, local_rotation("y", -np.pi / 2, s) @ top
    raise ValueError(f"unsupported axis {axis!r}")


def alpha_state(character: str, axis: str, n_sites: int, s: float) -> np.ndarray:
    """Product reference state: uniform (F) or up/down alternating (AF)."""
    if character not in CHARACTERS:
        raise ValueError(f"character must be F or AF, got {character!r}")
    up, down = _axis_states(axis, s)
    sites = [up if (character == "F" or l % 2 == 0) else down for l in range(n_sites)]
    return _kron_vectors(sites)


def beta_state(character: str, phi: float, branch: int, n_sites: int, s: float) -> np.ndarray:
    """Branch state: site l carries in-plane azimuth phi_l + phi + branch*pi."""
    if branch not in (0, 1):
        raise ValueError("branch must be 0 or 1")
    up, down = _axis_states("x", s)
    phis = site_angles_a(n_sites)
    sites = []
    for l in range(n_sites):
        base = up if (character == "F" or l % 2 == 0) else down
        sites.append(_reference_rz(phis[l] + phi + branch * np.pi, s) @ base)
    return _kron_vectors(sites)


def ghz_trial(character: str, phi: float, n_sites: int, s: float) -> np.ndarray:
    """(beta_0 + beta_1)/sqrt(2), renormalized (site overlaps vanish for any s)."""
    b0 = beta_state(character, phi, 0, n_sites, s)
    b1 = beta_state(character, phi, 1, n_sites, s)
    return normalize(b0 + b1)


def gamma_state(
    character: str, theta: float, phi: float, branch: int, n_sites: int, s: float
) -> np.ndarray:
    """Tilted branch: y rotations by theta (staggered for AF, site 1 gets +theta),
    then the in-plane azimuth pattern of beta."""
    if not 0.0 <= theta <= np.pi:
        raise ValueError("theta must lie in [0, pi]")
    top = _top_state(s)
    phis = site_angles_a(n_sites)
    sites = []
    for l in range(n_sites):
        sign = 1.0 if (character == "F" or l % 2 == 0) else -1.0
        tilted = local_rotation("y", sign * theta, s) @ top
        sites.append(_reference_rz(phis[l] + phi + branch * np.pi, s) @ tilted)
    return _kron_vectors(sites)


def tilted_trial(character: str, theta: float, phi: float, n_sites: int, s: float) -> np.ndarray:
    """(gamma_0 + gamma_1)/sqrt(C) with C = 2(1 + cos(theta)**N), exactly normalized."""
    g0 = gamma_state(character, theta, phi, 0, n_sites, s)
    g1 = gamma_state(character, theta, phi, 1, n_sites, s)
    return normalize(g0 + g1)


def overlap_p(ground: np.ndarray, trial: np.ndarray) -> float:
    """Squared overlap with a ground state or, gauge-free, a ground space.

    `ground` is a vector or a (dim x g) matrix of orthonormal columns;
    degenerate case: the squared norm of the projection of `trial` onto the
    span, invariant under any unitary remix of the basis.
    """
    ground = np.asarray(ground)
    if ground.ndim == 1:
        ground = ground[:, None]
    if ground.shape[0] != trial.shape[0]:
        raise ValueError("ground space and trial state dimensions differ")
    amplitudes = ground.conj().T @ trial
    return float(np.real(np.sum(np.abs(amplitudes) ** 2)))


def default_trial_params(cfg: RingConfig) -> tuple[str, float]:
    """(character, phi) used for GHZ-like trials of each variant.

    Model B: AF for J > 0 on the active axis, F for J < 0; phi = pi/2 for
    the X axis, 0 for Y.  Model A: F for J < 0, AF for J > 0; phi = 0 for
    axis X (matching collinear axes), pi/2 for Y.
    """
    j = cfg.model.jxx if cfg.model.jxx != 0.0 else cfg.model.jyy
    if cfg.model.family == "B":
        character = "AF" if j > 0 else "F"
        phi = np.pi / 2 if cfg.model.jxx != 0.0 else 0.0
    elif cfg.model.family == "A":
        character = "F" if j < 0 else "AF"
        phi = 0.0 if cfg.model.jxx != 0.0 else np.pi / 2
    else:
        raise ValueError("trial parameters are defined for families A and B")
    return character, phi


def maximize_theta(
    ground: np.ndarray,
    character: str,
    phi: float,
    n_sites: int,
    s: float,
    grid_step: float = np.pi / 200,
    tol: float = 1e-4 * np.pi,
) -> tuple[float, float]:
    """Maximize p(theta) over the tilted family; report theta_M in [0, pi/2].

    The polar parameter is scanned over the full [0, pi] (a field along +z
    cants the spins toward the -z pole, i.e. past pi/2), with a coarse grid
    at `grid_step` followed by golden-section refinement of the bracketing
    cell down to an interval shorter than `tol`.  The returned theta_M is
    the tilt measured from the nearer pole, min(theta*, pi - theta*), so
    theta_M = pi/2 is the in-plane (GHZ) point for either canting direction.
    """

    def p_of(theta: float) -> float:
        return overlap_p(ground, tilted_trial(character, theta, phi, n_sites, s))

    thetas = np.arange(0.0, np.pi + grid_step / 2, grid_step)
    thetas[-1] = min(thetas[-1], np.pi)
    values = [p_of(t) for t in thetas]
    best = int(np.argmax(values))
    lo = thetas[max(best - 1, 0)]
    hi = thetas[min(best + 1, len(thetas) - 1)]

    inv_golden = (np.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - inv_golden * (b - a)
    d = a + inv_golden * (b - a)
    fc, fd = p_of(c), p_of(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_golden * (b - a)
            fc = p_of(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_golden * (b - a)
            fd = p_of(d)
    theta_star = (a + b) / 2
    p_star = p_of(theta_star)
    return float(min(theta_star, np.pi - theta_star)), p_star


def resolve_ground_with_trial(ground_basis: np.ndarray, trial: np.ndarray) -> np.ndarray:
    """Deterministic representative of a degenerate ground space.

    Returns the normalized projection of `trial` onto the span.  Inside an
    exactly degenerate multiplet every member is an eigenstate but their
    entanglement differs (the span mixes product-like and GHZ-like states);
    projecting the trial picks the branch-symmetric member the analysis is
    about, independent of eigensolver gauge.
    """
    ground_basis = np.asarray(ground_basis)
    if ground_basis.ndim == 1 or ground_basis.shape[1] == 1:
        return ground_basis.reshape(-1)
    amplitudes = ground_basis.conj().T @ trial
    return normalize(ground_basis @ amplitudes)


def order_vector(
    state: np.ndarray, character: str, phi: float, n_sites: int, s: float
) -> np.ndarray:
    """Expectation of the frame-unwound collective vector (n_F or n_AF).

    Components (1/Ns) sum_k w_k <R_k S_{k,a} R_k^dag> with R_k = Rz(phi_k+phi)
    and w_k = 1 (F) or (-1)^k (AF); the unwinding makes both beta branches
    give opposite unit-modulus vectors.
    """
    phis = site_angles_a(n_sites)
    d = local_dim(s)
    dim = d**n_sites
    psi = state.reshape([d] * n_sites)
    ops = {a: single_spin_operator(a, s) for a in "xyz"}
    total = np.zeros(3)
    for k in range(n_sites):
        rot = local_rotation("z", phis[k] + phi, s)
        weight = 1.0 if character == "F" else (-1.0) ** (k + 1)
        # single-site reduced density matrix of site k
        kept = np.moveaxis(psi, k, 0).reshape(d, dim // d)
        rho = kept @ kept.conj().T
        for i, axis in enumerate("xyz"):
            unwound = rot @ ops[axis] @ rot.conj().T
            total[i] += weight * np.real(np.trace(rho @ unwound))
    return total / (n_sites * s)


def sector_ground_overlap(
    ham: np.ndarray, trial: np.ndarray, decomposition: SectorDecomposition | None = None
) -> list[float]:
    """Per-sector squared overlap of `trial` with each block's ground space.

    Used for odd N, where the Hilbert space splits into two uncoupled
    blocks; the trial concentrates in the reference sector, so the overlap
    against that block's ground is directly comparable to the even-N p.
    Degenerate block grounds (frustrated AF case) are handled by projection.
    """
    if decomposition is None:
        decomposition = detect_sectors(ham)
    dim = ham.shape[0]
    scale = max(1.0, float(np.max(np.abs(ham))))
    overlaps = []
    for b, idx in enumerate(decomposition.blocks):
        evals = decomposition.block_eigenvalues[b]
        ground_cols = np.nonzero(evals - evals[0] < 1e-9 * scale)[0]
        basis = np.stack(
            [decomposition.embedded_vector(b, int(c), dim) for c in ground_cols], axis=1
        )
        overlaps.append(overlap_p(basis, trial))
    return overlaps
