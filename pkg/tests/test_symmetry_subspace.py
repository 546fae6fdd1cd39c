import itertools
from math import comb

import numpy as np
import pytest

from spinring.eigensolver import diagonalize, ground_space
from spinring.ring_models import ModelVariant, RingConfig, build_model_a, build_model_b
from spinring.symmetry_subspace import (
    FlipVector,
    build_component,
    canonicalize,
    coefficient_ratios,
    component_basis,
    enumerate_flip_vectors,
    expected_table_ratio,
    nonzero_coefficient_count,
    paired_coefficient_count,
    reduced_ground_state,
    spin_flip_partner,
)
from spinring.trial_states import alpha_state, overlap_p


def build(family, axis, j, n):
    cfg = RingConfig(n, 0.5, ModelVariant.ising(family, axis, j))
    return build_model_a(cfg) if family == "A" else build_model_b(cfg)


# ------------------------------------------------------------ enumeration


def test_pair_orbits_n6():
    reps = enumerate_flip_vectors(6, 1)
    assert len(reps) == 3  # separations d = 1, 2, 3
    assert [v.sites for v in reps] == [(1, 2), (1, 3), (1, 4)]


def test_empty_flip_vector_n8():
    reps = enumerate_flip_vectors(8, 0)
    assert len(reps) == 1
    assert reps[0].sites == ()


def test_total_orbit_count_n8():
    assert sum(len(enumerate_flip_vectors(8, k)) for k in range(5)) == 20
    assert paired_coefficient_count(8) == 12


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_orbit_sizes_partition_subsets(n):
    # brute-force oracle: orbits partition all C(N, 2k) subsets
    for k in range(n // 2 + 1):
        reps = enumerate_flip_vectors(n, k)
        seen = set()
        for v in reps:
            orbit = {
                tuple(sorted((s - 1 + t) % n + 1 for s in v.sites)) for t in range(n)
            }
            assert not (orbit & seen)
            seen |= orbit
        assert len(seen) == comb(n, 2 * k)


def test_odd_ring_rejected():
    with pytest.raises(ValueError):
        enumerate_flip_vectors(5, 1)


def test_canonicalize_is_minimal_translate():
    assert canonicalize((2, 3), 6) == (1, 2)
    assert canonicalize((6, 1), 6) == (1, 2)
    assert canonicalize((2, 5), 6) == (1, 4)


# ------------------------------------------------------------ components


def test_empty_component_is_reference():
    v = FlipVector(0, ())
    state = build_component(v, "F", 6)
    expected = alpha_state("F", "z", 6, 0.5)
    assert np.max(np.abs(state - expected)) < 1e-15


def test_component_n4_adjacent_pair():
    # translates of |down down up up>: equal weights, prefactor (-1)^(1+2) = -1
    v = FlipVector(1, (1, 2))
    state = build_component(v, "F", 4)
    nonzero = np.nonzero(state)[0]
    assert len(nonzero) == 4
    assert np.allclose(state[nonzero], -0.5, atol=1e-15)
    # supported exactly on the 4 cyclic translates of 1100 (site 1 most significant)
    assert sorted(nonzero.tolist()) == sorted([0b1100, 0b0110, 0b0011, 0b1001])


def test_components_orthonormal():
    for reference in ("F", "AF"):
        basis = component_basis(6, reference)
        mat = np.stack([s for _, s in basis], axis=1)
        gram = mat.conj().T @ mat
        assert np.max(np.abs(gram - np.eye(len(basis)))) < 1e-12


def test_stabilized_orbit_normalized():
    # N=4, flips at (1,3): orbit size 2, merged duplicates
    state = build_component(FlipVector(1, (1, 3)), "F", 4)
    assert abs(np.linalg.norm(state) - 1) < 1e-15
    assert len(np.nonzero(state)[0]) == 2


# ------------------------------------------------------------ reduction


@pytest.mark.parametrize("n", [4, 6, 8])
@pytest.mark.parametrize("family,axis,j", [
    ("B", "X", 1.0), ("B", "X", -1.0), ("A", "X", -1.0), ("A", "Y", 1.0),
])
def test_reduced_ground_energy_matches_full(family, axis, j, n):
    ham = build(family, axis, j, n)
    full = diagonalize(ham)
    red = reduced_ground_state(ham, n)
    assert abs(red.ground_energy - full.eigenvalues[0]) < 1e-9


def test_reduced_ground_energy_n10():
    ham = build("B", "X", 1.0, 10)
    full = diagonalize(ham)
    red = reduced_ground_state(ham, 10)
    assert abs(red.ground_energy - full.eigenvalues[0]) < 1e-9
    assert len(red.flip_vectors) == 56
    assert paired_coefficient_count(10) == 28


@pytest.mark.parametrize("family,axis,j", [("B", "X", 1.0), ("A", "X", -1.0)])
def test_reconstruction_overlap(family, axis, j):
    n = 8
    ham = build(family, axis, j, n)
    basis, _ = ground_space(diagonalize(ham))
    red = reduced_ground_state(ham, n)
    assert overlap_p(basis, red.reconstructed_ground()) > 1 - 1e-9


def test_af_reference_spans_ground_when_parity_matches():
    # N=8: AF flips have even parity, same sector as the ground
    ham = build("B", "X", -1.0, 8)
    full = diagonalize(ham)
    red = reduced_ground_state(ham, 8, reference="AF")
    assert abs(red.ground_energy - full.eigenvalues[0]) < 1e-9


def test_af_reference_lands_on_doublet_partner_n6():
    # N=6: AF flips have odd parity, the sector of the tunneling partner
    ham = build("B", "X", 1.0, 6)
    full = diagonalize(ham)
    red = reduced_ground_state(ham, 6, reference="AF")
    assert abs(red.ground_energy - full.eigenvalues[1]) < 1e-9


def test_k0_coefficient_fixed_positive():
    red = reduced_ground_state(build("B", "X", 1.0, 6), 6)
    c0 = red.coefficients[0]
    assert abs(c0.imag) < 1e-12 and c0.real > 0


# ------------------------------------------------------------ ratios


def test_spin_flip_partner_roundtrip():
    for n in (6, 8):
        for k in range(n // 2 + 1):
            for v in enumerate_flip_vectors(n, k):
                p = spin_flip_partner(v, n)
                assert p.k == n // 2 - k
                assert spin_flip_partner(p, n) == v


@pytest.mark.parametrize("family,axis,j", sorted(
    itertools.product(("A", "B"), ("X", "Y"), (1.0, -1.0))
))
def test_table_ratios_n6(family, axis, j):
    ham = build(family, axis, j, 6)
    red = reduced_ground_state(ham, 6)
    expected = expected_table_ratio(family, axis, j)
    for entry in coefficient_ratios(red, 6):
        assert entry.raw_ratio is not None
        assert abs(entry.raw_ratio - expected) < 1e-8


@pytest.mark.parametrize("family,axis,j", sorted(
    itertools.product(("A", "B"), ("X", "Y"), (1.0, -1.0))
))
def test_ratios_n8_all_plus_one(family, axis, j):
    # middle-level self-complementary orbits carry nonvanishing weight for
    # N = 0 (mod 4), which forces every pairing ratio to +1
    ham = build(family, axis, j, 8)
    red = reduced_ground_state(ham, 8)
    for entry in coefficient_ratios(red, 8):
        assert entry.raw_ratio is not None
        assert abs(entry.raw_ratio - 1.0) < 1e-8
        assert abs(entry.ratio - 1.0) < 1e-8  # prefactors pairwise even at N=8


def test_all_coefficients_nonzero_n8():
    red = reduced_ground_state(build("B", "X", 1.0, 8), 8)
    assert nonzero_coefficient_count(red) == 20
