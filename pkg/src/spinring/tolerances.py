"""Central numerical tolerances.

All algebraic identities (Hermiticity, unitarity, su(2) commutators) are held
to ALGEBRA_TOL; spectral comparisons between unitarily equivalent Hamiltonians
to SPECTRUM_TOL.  Degeneracy detection scales DEG_TOL_FACTOR with the matrix
norm, which separates true degeneracies from the model-B pseudo-doublet
(splitting >= 1e-5 for N <= 10).
"""

ALGEBRA_TOL = 1e-12
SPECTRUM_TOL = 1e-10
RESIDUAL_FACTOR = 1e-9
DEG_TOL_FACTOR = 1e-9
SECTOR_TOL = 1e-14

# dense solves only; (2s+1)**N above this is refused
MAX_DENSE_DIM = 4096
MAX_SITES = 12
