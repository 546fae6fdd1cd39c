"""Single-spin operators, tensor embeddings and site-local rotations.

Conventions used across the package:

* hbar = 1; spin-s matrices act in the S_z eigenbasis ordered m = +s ... -s.
* Sites are labelled 1..N.  The product-basis index encodes site 1 as the
  most significant digit in base d = 2s+1 (big-endian in the site index),
  i.e. ``index = sum_k digit_k * d**(N-k)``.
* Rotations are ``R(a) = exp(-i a S_axis)``, computed exactly through the
  spectral decomposition of the generator.  A spin direction transforms as
  ``R(a) S_x R(a)^dag = cos(a) S_x + sin(a) S_y`` for rotations about z.

Everything here returns plain dense complex ndarrays; all outputs are new
arrays, never views of shared state.
"""

from __future__ import annotations

import numpy as np

from .tolerances import ALGEBRA_TOL, MAX_DENSE_DIM

SUPPORTED_SPINS = (0.5, 1.0)


def local_dim(s: float) -> int:
    """Local Hilbert-space dimension 2s+1 for a supported spin magnitude."""
    if s not in SUPPORTED_SPINS:
        raise ValueError(f"unsupported spin magnitude s={s}; supported: {SUPPORTED_SPINS}")
    return int(round(2 * s + 1))


def full_dim(n_sites: int, s: float) -> int:
    d = local_dim(s) ** n_sites
    if d > MAX_DENSE_DIM:
        raise ValueError(
            f"product-space dimension {d} exceeds the dense cap {MAX_DENSE_DIM} "
            f"(N={n_sites}, s={s})"
        )
    return d


def single_spin_operator(axis: str, s: float) -> np.ndarray:
    """Spin-s matrix for axis in {x, y, z}, basis ordered m = +s ... -s."""
    d = local_dim(s)
    m = s - np.arange(d)  # +s, s-1, ..., -s
    if axis == "z":
        return np.diag(m).astype(complex)
    # ladder elements: <m+1| S_+ |m> = sqrt(s(s+1) - m(m+1))
    ladder = np.sqrt(s * (s + 1) - m[1:] * (m[1:] + 1))
    sp = np.diag(ladder, k=1).astype(complex)
    sm = sp.conj().T
    if axis == "x":
        return (sp + sm) / 2
    if axis == "y":
        return (sp - sm) / (2j)
    raise ValueError(f"unknown spin axis {axis!r}")


def local_rotation(axis: str, angle: float, s: float) -> np.ndarray:
    """Exact d x d unitary exp(-i angle S_axis) via spectral decomposition."""
    if not np.isfinite(angle):
        raise ValueError("rotation angle must be finite")
    if axis == "z":
        m = s - np.arange(local_dim(s))
        return np.diag(np.exp(-1j * angle * m))
    gen = single_spin_operator(axis, s)
    evals, vecs = np.linalg.eigh(gen)
    return (vecs * np.exp(-1j * angle * evals)) @ vecs.conj().T


def _kron_chain(factors: list[np.ndarray]) -> np.ndarray:
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def embed_site_operator(op: np.ndarray, site: int, n_sites: int, s: float) -> np.ndarray:
    """Embed a local operator at `site` (1-based), identity elsewhere."""
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} out of range 1..{n_sites}")
    d = local_dim(s)
    full_dim(n_sites, s)
    eye = np.eye(d, dtype=complex)
    return _kron_chain([op if k == site else eye for k in range(1, n_sites + 1)])


def two_site_term(
    op_a: np.ndarray, site_a: int, op_b: np.ndarray, site_b: int, n_sites: int, s: float
) -> np.ndarray:
    """Tensor product op_a(site_a) * op_b(site_b), identity elsewhere.

    Built as a single kron chain, so it costs O(dim^2) rather than a dense
    matrix product; the two sites must differ.
    """
    if site_a == site_b:
        raise ValueError("two_site_term requires distinct sites")
    for site in (site_a, site_b):
        if not 1 <= site <= n_sites:
            raise ValueError(f"site {site} out of range 1..{n_sites}")
    d = local_dim(s)
    eye = np.eye(d, dtype=complex)
    placed = {site_a: op_a, site_b: op_b}
    return _kron_chain([placed.get(k, eye) for k in range(1, n_sites + 1)])


def site_rotation(axis: str, site: int, angle: float, n_sites: int, s: float) -> np.ndarray:
    """exp(-i angle S_{site,axis}) embedded on the N-site product space."""
    if axis not in ("y", "z"):
        raise ValueError(f"site_rotation supports axes y and z, got {axis!r}")
    return embed_site_operator(local_rotation(axis, angle, s), site, n_sites, s)


def product_rotation(rotations, n_sites: int, s: float) -> np.ndarray:
    """Ordered product of commuting site rotations, one (axis, angle) per site.

    Equals the kron chain of the local rotations, since each factor acts on
    its own site.
    """
    rotations = list(rotations)
    if len(rotations) != n_sites:
        raise ValueError(f"need one (axis, angle) entry per site: got {len(rotations)}, N={n_sites}")
    return _kron_chain([local_rotation(axis, angle, s) for axis, angle in rotations])


def global_rotation(axis: str, angle: float, n_sites: int, s: float) -> np.ndarray:
    """Uniform rotation exp(-i angle sum_k S_{k,axis})."""
    return product_rotation([(axis, angle)] * n_sites, n_sites, s)


def index_to_digits(index: int, n_sites: int, s: float) -> tuple[int, ...]:
    """Product-basis index -> per-site digits, site 1 most significant."""
    d = local_dim(s)
    digits = []
    for k in range(n_sites - 1, -1, -1):
        digits.append((index // d**k) % d)
    return tuple(digits)


def digits_to_index(digits, s: float) -> int:
    d = local_dim(s)
    index = 0
    for dig in digits:
        index = index * d + int(dig)
    return index


def cyclic_permutation(n_sites: int, s: float) -> np.ndarray:
    """Permutation P shifting site content k -> k+1, so P S_k P^dag = S_{k+1}."""
    d = local_dim(s)
    dim = full_dim(n_sites, s)
    perm = np.zeros((dim, dim), dtype=complex)
    for idx in range(dim):
        digits = index_to_digits(idx, n_sites, s)
        shifted = (digits[-1],) + digits[:-1]
        perm[digits_to_index(shifted, s), idx] = 1.0
    return perm


def is_hermitian(mat: np.ndarray, tol: float = ALGEBRA_TOL) -> bool:
    return np.max(np.abs(mat - mat.conj().T)) < tol * max(1.0, np.max(np.abs(mat)))


def is_unitary(mat: np.ndarray, tol: float = ALGEBRA_TOL) -> bool:
    eye = np.eye(mat.shape[0])
    return np.max(np.abs(mat.conj().T @ mat - eye)) < tol


def normalize(state: np.ndarray) -> np.ndarray:
    """Return state / ||state||, rejecting numerically null vectors."""
    nrm = np.linalg.norm(state)
    if nrm < 1e-14:
        raise ValueError("cannot normalize a (numerically) null state")
    return state / nrm
