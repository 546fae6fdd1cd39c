"""Spin-ring Hamiltonians with noncollinear Ising exchange.

Two twisted-frame families are built on a regular N-gon of spins:

* model A — each spin's local x axis points radially, site angles
  ``phi_k = 2(k-1)pi/N``; bond k couples the primed components of spins
  k and k+1, each taken in its own site frame.
* model B — the local frames follow the bonds, angles
  ``varphi_k = pi/2 + (2k-1)pi/N``; both spins of bond k use frame k, so
  spin k enters with frame k-1 (left bond) and frame k (right bond).

Collinear references (Ising X/Y and isotropic XY in a single global frame),
the general-frame symmetric/antisymmetric tensors, the A->B frame
conversion, Zeeman terms and the point-group/equivalence unitaries live
here as well.  Energies are in units of |J| = 1; periodic closure
``s_{N+1} == s_1`` everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .spin_algebra import (
    cyclic_permutation,
    embed_site_operator,
    full_dim,
    global_rotation,
    local_dim,
    local_rotation,
    product_rotation,
    single_spin_operator,
    two_site_term,
)
from .tolerances import MAX_SITES

FAMILIES = ("A", "B", "collinear", "XY")


@dataclass(frozen=True)
class ModelVariant:
    """Exchange variant: family plus the two in-plane couplings.

    A pure Ising variant sets `axis` to "X" or "Y" and zeroes the other
    coupling; general in-plane couplings use axis "none" (needed for the
    isotropic/XY consistency checks).
    """

    family: str
    axis: str = "none"
    jxx: float = 0.0
    jyy: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown model family {self.family!r}")
        if self.axis not in ("X", "Y", "none"):
            raise ValueError(f"unknown Ising axis {self.axis!r}")
        if self.axis == "X" and not (self.jyy == 0.0 and self.jxx != 0.0):
            raise ValueError("axis X requires J_yy = 0 != J_xx")
        if self.axis == "Y" and not (self.jxx == 0.0 and self.jyy != 0.0):
            raise ValueError("axis Y requires J_xx = 0 != J_yy")
        if self.family == "XY" and self.jxx != self.jyy:
            raise ValueError("XY variant requires J_xx = J_yy")

    @classmethod
    def ising(cls, family: str, axis: str, j: float) -> "ModelVariant":
        if axis == "X":
            return cls(family, "X", jxx=j)
        if axis == "Y":
            return cls(family, "Y", jyy=j)
        raise ValueError(f"Ising axis must be X or Y, got {axis!r}")

    @classmethod
    def xy(cls, j: float) -> "ModelVariant":
        return cls("XY", "none", jxx=j, jyy=j)


@dataclass(frozen=True)
class RingConfig:
    """Full problem definition: ring size, spin magnitude, variant, field."""

    n_sites: int
    s: float
    model: ModelVariant
    field: float = 0.0
    field_axis: str = "none"

    def __post_init__(self):
        if self.n_sites < 3:
            raise ValueError(f"need at least 3 spins, got N={self.n_sites}")
        if self.n_sites > MAX_SITES:
            raise ValueError(f"N={self.n_sites} exceeds the supported cap {MAX_SITES}")
        local_dim(self.s)
        if self.field_axis not in ("x", "z", "none"):
            raise ValueError(f"field axis must be x, z or none, got {self.field_axis!r}")
        if self.field_axis != "none" and self.field < 0:
            raise ValueError("field magnitude must be >= 0 when a direction is set")
        if self.field_axis == "none" and self.field != 0.0:
            raise ValueError("nonzero field needs a direction")


@dataclass(frozen=True)
class FrameTensors:
    """Per-bond general-frame couplings: symmetric J and antisymmetric D.

    jxy holds both symmetric off-diagonal entries (J^xy = J^yx); the only
    antisymmetric component is dxy (D^xx = D^yy = 0 identically).
    """

    jxx: np.ndarray
    jyy: np.ndarray
    jxy: np.ndarray
    dxy: np.ndarray


def site_angles_a(n_sites: int) -> np.ndarray:
    """Model-A site angles phi_k = 2(k-1)pi/N, k = 1..N."""
    return 2 * np.arange(n_sites) * np.pi / n_sites


def site_angles_b(n_sites: int) -> np.ndarray:
    """Model-B bond angles varphi_k = pi/2 + (2k-1)pi/N, k = 1..N."""
    return np.pi / 2 + (2 * np.arange(1, n_sites + 1) - 1) * np.pi / n_sites


def _inplane_ops(angle: float, s: float) -> tuple[np.ndarray, np.ndarray]:
    """Local operators along the rotated in-plane axes at `angle`."""
    sx = single_spin_operator("x", s)
    sy = single_spin_operator("y", s)
    ax = np.cos(angle) * sx + np.sin(angle) * sy
    ay = np.cos(angle) * sy - np.sin(angle) * sx
    return ax, ay


def build_model_a(cfg: RingConfig) -> np.ndarray:
    """H^A: bond k couples the radial-frame components of spins k, k+1."""
    if cfg.model.family != "A":
        raise ValueError(f"build_model_a needs family A, got {cfg.model.family!r}")
    n, s = cfg.n_sites, cfg.s
    phi = site_angles_a(n)
    ham = np.zeros((full_dim(n, s),) * 2, dtype=complex)
    for k in range(n):
        knext = (k + 1) % n
        axk, ayk = _inplane_ops(phi[k], s)
        axn, ayn = _inplane_ops(phi[knext], s)
        if cfg.model.jxx:
            ham += cfg.model.jxx * two_site_term(axk, k + 1, axn, knext + 1, n, s)
        if cfg.model.jyy:
            ham += cfg.model.jyy * two_site_term(ayk, k + 1, ayn, knext + 1, n, s)
    return ham


def build_model_b(cfg: RingConfig) -> np.ndarray:
    """H^B: bond k couples spins k and k+1, both taken in bond frame k."""
    if cfg.model.family != "B":
        raise ValueError(f"build_model_b needs family B, got {cfg.model.family!r}")
    n, s = cfg.n_sites, cfg.s
    varphi = site_angles_b(n)
    ham = np.zeros((full_dim(n, s),) * 2, dtype=complex)
    for k in range(n):
        knext = (k + 1) % n
        ax, ay = _inplane_ops(varphi[k], s)
        if cfg.model.jxx:
            ham += cfg.model.jxx * two_site_term(ax, k + 1, ax, knext + 1, n, s)
        if cfg.model.jyy:
            ham += cfg.model.jyy * two_site_term(ay, k + 1, ay, knext + 1, n, s)
    return ham


def build_collinear(cfg: RingConfig) -> np.ndarray:
    """Collinear reference J_xx sum s_x s_x + J_yy sum s_y s_y (global frame)."""
    if cfg.model.family not in ("collinear", "XY"):
        raise ValueError(f"build_collinear needs family collinear/XY, got {cfg.model.family!r}")
    n, s = cfg.n_sites, cfg.s
    sx = single_spin_operator("x", s)
    sy = single_spin_operator("y", s)
    ham = np.zeros((full_dim(n, s),) * 2, dtype=complex)
    for k in range(1, n + 1):
        knext = k % n + 1
        if cfg.model.jxx:
            ham += cfg.model.jxx * two_site_term(sx, k, sx, knext, n, s)
        if cfg.model.jyy:
            ham += cfg.model.jyy * two_site_term(sy, k, sy, knext, n, s)
    return ham


def build_zeeman(direction: str, b: float, n_sites: int, s: float) -> np.ndarray:
    """Uniform field term b sum_k S_{k,direction}, direction in {x, z}."""
    if direction not in ("x", "z"):
        raise ValueError(f"unsupported field direction {direction!r}")
    if not np.isfinite(b):
        raise ValueError("field magnitude must be finite")
    op = single_spin_operator(direction, s)
    ham = np.zeros((full_dim(n_sites, s),) * 2, dtype=complex)
    for k in range(1, n_sites + 1):
        ham += b * embed_site_operator(op, k, n_sites, s)
    return ham


def build_exchange(cfg: RingConfig) -> np.ndarray:
    """Exchange part of the configured Hamiltonian (no Zeeman term)."""
    if cfg.model.family == "A":
        return build_model_a(cfg)
    if cfg.model.family == "B":
        return build_model_b(cfg)
    return build_collinear(cfg)


def build_hamiltonian(cfg: RingConfig) -> np.ndarray:
    """Full Hamiltonian: exchange plus the configured Zeeman term."""
    ham = build_exchange(cfg)
    if cfg.field_axis != "none" and cfg.field != 0.0:
        ham = ham + build_zeeman(cfg.field_axis, cfg.field, cfg.n_sites, cfg.s)
    return ham


def general_frame_coefficients(cfg: RingConfig) -> FrameTensors:
    """Per-bond general-frame tensors for models A and B.

    Reconstruction contract: feeding the result to
    :func:`reconstruct_from_frame` reproduces build_model_a/b exactly.
    """
    n = cfg.n_sites
    jxx_c, jyy_c = cfg.model.jxx, cfg.model.jyy
    if cfg.model.family == "A":
        phi = site_angles_a(n)
        phi_next = np.roll(phi, -1)  # periodic closure: phi_{N+1} == phi_1
        return FrameTensors(
            jxx=jxx_c * np.cos(phi) * np.cos(phi_next) + jyy_c * np.sin(phi) * np.sin(phi_next),
            jyy=jyy_c * np.cos(phi) * np.cos(phi_next) + jxx_c * np.sin(phi) * np.sin(phi_next),
            jxy=0.5 * (jxx_c - jyy_c) * np.sin(phi_next + phi),
            dxy=0.5 * (jxx_c + jyy_c) * np.sin(phi_next - phi),
        )
    if cfg.model.family == "B":
        varphi = site_angles_b(n)
        return FrameTensors(
            jxx=jxx_c * np.cos(varphi) ** 2 + jyy_c * np.sin(varphi) ** 2,
            jyy=jyy_c * np.cos(varphi) ** 2 + jxx_c * np.sin(varphi) ** 2,
            jxy=(jxx_c - jyy_c) * np.cos(varphi) * np.sin(varphi),
            dxy=np.zeros(n),
        )
    raise ValueError("general-frame tensors are defined for families A and B")


def reconstruct_from_frame(tensors: FrameTensors, n_sites: int, s: float) -> np.ndarray:
    """sum_k sum_{ab} (J^ab_k + D^ab_k) s_{k,a} s_{k+1,b} from per-bond tensors."""
    sx = single_spin_operator("x", s)
    sy = single_spin_operator("y", s)
    ham = np.zeros((full_dim(n_sites, s),) * 2, dtype=complex)
    for k in range(n_sites):
        a, b = k + 1, (k + 1) % n_sites + 1
        ham += tensors.jxx[k] * two_site_term(sx, a, sx, b, n_sites, s)
        ham += tensors.jyy[k] * two_site_term(sy, a, sy, b, n_sites, s)
        ham += (tensors.jxy[k] + tensors.dxy[k]) * two_site_term(sx, a, sy, b, n_sites, s)
        ham += (tensors.jxy[k] - tensors.dxy[k]) * two_site_term(sy, a, sx, b, n_sites, s)
    return ham


def a_to_b_frame(jxx_a: float, jyy_a: float, n_sites: int) -> tuple[float, float, float, float]:
    """Rewrite model-A couplings in the bond-frame (B) representation.

    Returns (J^B_xx, J^B_yy, J^B_xy, D^B_xy).  The reverse map is obtained
    by swapping the A and B roles and flipping the sign of the antisymmetric
    coefficient.
    """
    sn, cn = np.sin(np.pi / n_sites), np.cos(np.pi / n_sites)
    return (
        -jxx_a * sn**2 + jyy_a * cn**2,
        jxx_a * cn**2 - jyy_a * sn**2,
        0.0,
        (jxx_a + jyy_a) * cn * sn,
    )


def sigma_h_reflection(n_sites: int, s: float) -> np.ndarray:
    """Spin-sector reflection about the ring plane: (sx, sy, sz) -> (-sx, -sy, sz).

    Realized as a pi rotation about z on every site.
    """
    return global_rotation("z", np.pi, n_sites, s)


def cn_spin_orbit_rotation(n_sites: int, s: float) -> np.ndarray:
    """Combined C_n: cyclic site permutation times a global 2pi/N z rotation."""
    return cyclic_permutation(n_sites, s) @ global_rotation("z", 2 * np.pi / n_sites, n_sites, s)


def symmetry_generators(cfg: RingConfig) -> list[tuple[str, np.ndarray]]:
    """Spin-sector symmetries of the zero-field exchange Hamiltonian.

    For models A and B: the sigma_h reflection and the combined C_n rotation
    (the genuine C_2 axes of D_nh act on orbital and spin degrees of freedom
    together and have no spin-only representation, so they are not listed).
    For the collinear/XY references: the three global pi spin rotations.
    Commutators are guaranteed against the b = 0 Hamiltonian only; a field
    along x breaks sigma_h.
    """
    n, s = cfg.n_sites, cfg.s
    if cfg.model.family in ("A", "B"):
        return [
            ("sigma_h", sigma_h_reflection(n, s)),
            ("C_n", cn_spin_orbit_rotation(n, s)),
        ]
    return [
        ("pi_x", global_rotation("x", np.pi, n, s)),
        ("pi_y", global_rotation("y", np.pi, n, s)),
        ("pi_z", global_rotation("z", np.pi, n, s)),
    ]


# phase phi(xi, xi') entering the collinear -> model-A equivalence
EQUIVALENCE_PHASE = {
    ("X", "X"): 0.0,
    ("Y", "Y"): 0.0,
    ("Y", "X"): np.pi / 2,
    ("X", "Y"): -np.pi / 2,
}


def equivalence_unitary(xi: str, xi_prime: str, n_sites: int, s: float) -> np.ndarray:
    """U with U H_{xi'} U^dag = H^A_xi (collinear Ising -> noncollinear model A).

    U = prod_k exp(-i s_{k,z} (phi_k + phi)) with phi = 0 for matching axes
    and +-pi/2 for the crossed (Y,X)/(X,Y) pairs.
    """
    key = (xi, xi_prime)
    if key not in EQUIVALENCE_PHASE:
        raise ValueError(f"axes must be X or Y, got {key}")
    offset = EQUIVALENCE_PHASE[key]
    phi = site_angles_a(n_sites)
    return product_rotation([("z", p + offset) for p in phi], n_sites, s)


def staggered_flip_unitary(n_sites: int, s: float) -> np.ndarray:
    """pi z rotation on even sites; conjugates H^B_X into -H^B_X for even N."""
    angles = [np.pi if k % 2 == 0 else 0.0 for k in range(1, n_sites + 1)]
    return product_rotation([("z", a) for a in angles], n_sites, s)
