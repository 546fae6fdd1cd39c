"""Fast invariant suite backing `spinring verify`.

Each check re-derives a structural identity of the implementation
(unitarity, equivalence of spectra, reconstruction contracts, trial-state
algebra) at small ring sizes; the whole run takes a few seconds.
"""

from __future__ import annotations

import numpy as np

from .eigensolver import detect_sectors, diagonalize, ground_space
from .entanglement import concurrence, residual_tangle
from .ring_models import (
    ModelVariant,
    RingConfig,
    build_collinear,
    build_model_a,
    build_model_b,
    equivalence_unitary,
    general_frame_coefficients,
    reconstruct_from_frame,
    symmetry_generators,
)
from .symmetry_subspace import reduced_ground_state
from .trial_states import beta_state, gamma_state, ghz_trial, overlap_p


def _ising(family, axis, j, n):
    return RingConfig(n, 0.5, ModelVariant.ising(family, axis, j))


def check_spectrum_equivalences() -> tuple[bool, str]:
    worst = 0.0
    for n in (4, 5):
        spectra = [
            np.linalg.eigvalsh(build_model_a(_ising("A", "X", 1.0, n))),
            np.linalg.eigvalsh(build_model_a(_ising("A", "Y", 1.0, n))),
            np.linalg.eigvalsh(build_collinear(_ising("collinear", "X", 1.0, n))),
            np.linalg.eigvalsh(build_collinear(_ising("collinear", "Y", 1.0, n))),
        ]
        for sp in spectra[1:]:
            worst = max(worst, float(np.max(np.abs(sp - spectra[0]))))
    return worst < 1e-10, f"max spectrum deviation {worst:.2e}"


def check_frame_reconstruction() -> tuple[bool, str]:
    rng = np.random.default_rng(23)
    worst = 0.0
    for family in ("A", "B"):
        for n in (3, 5, 6):
            jxx, jyy = rng.uniform(-1, 1, size=2)
            cfg = RingConfig(n, 0.5, ModelVariant(family, jxx=jxx, jyy=jyy))
            built = build_model_a(cfg) if family == "A" else build_model_b(cfg)
            recon = reconstruct_from_frame(general_frame_coefficients(cfg), n, 0.5)
            worst = max(worst, float(np.max(np.abs(built - recon))))
    return worst < 1e-12, f"max reconstruction error {worst:.2e}"


def check_symmetry_generators() -> tuple[bool, str]:
    worst = 0.0
    for cfg in (_ising("A", "X", 1.0, 4), _ising("B", "X", 1.0, 5), _ising("collinear", "X", 1.0, 4)):
        ham = build_model_a(cfg) if cfg.model.family == "A" else (
            build_model_b(cfg) if cfg.model.family == "B" else build_collinear(cfg)
        )
        for _, u in symmetry_generators(cfg):
            worst = max(worst, float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))))
            worst = max(worst, float(np.max(np.abs(ham @ u - u @ ham))))
    return worst < 1e-10, f"max unitarity/commutator violation {worst:.2e}"


def check_equivalence_unitary() -> tuple[bool, str]:
    n = 4
    hx = build_collinear(_ising("collinear", "X", 1.0, n))
    ha = build_model_a(_ising("A", "X", 1.0, n))
    u = equivalence_unitary("X", "X", n, 0.5)
    dev = float(np.max(np.abs(u @ hx @ u.conj().T - ha)))
    return dev < 1e-10, f"conjugation error {dev:.2e}"


def check_trial_states() -> tuple[bool, str]:
    n = 6
    worst = 0.0
    for branch in (0, 1):
        g = gamma_state("AF", np.pi / 2, 0.3, branch, n, 0.5)
        b = beta_state("AF", 0.3, branch, n, 0.5)
        worst = max(worst, float(np.max(np.abs(g - b))))
    theta = 0.8
    g0 = gamma_state("F", theta, 0.0, 0, n, 0.5)
    g1 = gamma_state("F", theta, 0.0, 1, n, 0.5)
    worst = max(worst, abs(np.vdot(g0, g1) - np.cos(theta) ** n))
    ham = build_model_a(_ising("A", "X", -1.0, 4))
    e0 = np.linalg.eigvalsh(ham)[0]
    vec = beta_state("F", 0.0, 0, 4, 0.5)
    worst = max(worst, float(np.linalg.norm(ham @ vec - e0 * vec)))
    return worst < 1e-10, f"max trial-state identity violation {worst:.2e}"


def check_ghz_overlap() -> tuple[bool, str]:
    basis, _ = ground_space(diagonalize(build_model_b(_ising("B", "X", 1.0, 8))))
    p = overlap_p(basis, ghz_trial("AF", np.pi / 2, 8, 0.5))
    return abs(p - 0.985) < 0.001, f"p(N=8) = {p:.4f}"


def check_sector_structure() -> tuple[bool, str]:
    dec = detect_sectors(build_model_b(_ising("B", "X", 1.0, 5)))
    ok = len(dec.blocks) == 2
    dev = float(np.max(np.abs(dec.block_eigenvalues[0] - dec.block_eigenvalues[1])))
    return ok and dev < 1e-10, f"{len(dec.blocks)} blocks, pair deviation {dev:.2e}"


def check_reduced_ground() -> tuple[bool, str]:
    ham = build_model_b(_ising("B", "X", 1.0, 6))
    full = diagonalize(ham)
    red = reduced_ground_state(ham, 6)
    err = abs(red.ground_energy - full.eigenvalues[0])
    return err < 1e-9, f"reduced-vs-full energy gap {err:.2e}"


def check_entanglement_oracles() -> tuple[bool, str]:
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    ghz3 = np.zeros(8)
    ghz3[0] = ghz3[-1] = 1 / np.sqrt(2)
    w3 = np.zeros(8)
    w3[[1, 2, 4]] = 1 / np.sqrt(3)
    errs = [
        abs(concurrence(bell, (1, 2), 2) - 1),
        abs(residual_tangle(ghz3, 1, 3) - 1),
        abs(residual_tangle(w3, 1, 3)),
    ]
    return max(errs) < 1e-10, f"bell/ghz/w errors {max(errs):.2e}"


CHECKS = [
    ("spectrum-equivalences", check_spectrum_equivalences),
    ("frame-reconstruction", check_frame_reconstruction),
    ("symmetry-generators", check_symmetry_generators),
    ("equivalence-unitary", check_equivalence_unitary),
    ("trial-states", check_trial_states),
    ("ghz-overlap", check_ghz_overlap),
    ("sector-structure", check_sector_structure),
    ("reduced-ground", check_reduced_ground),
    ("entanglement-oracles", check_entanglement_oracles),
]


def run_checks(verbose: bool = True) -> bool:
    all_ok = True
    for name, fn in CHECKS:
        ok, detail = fn()
        all_ok &= ok
        if verbose:
            print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
    return all_ok
