"""Dense numerical kernels for the small matrices used across the package.

Every operator handled here is real in its computational basis, so the
symmetric eigensolver is the single spectral workhorse.  Complex arithmetic
is only needed for plain matrix products (unitary conjugations in the
dense-coding routines) and never for an eigenproblem.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Relative tolerance for accepting a matrix as symmetric.
SYMMETRY_RTOL = 1e-13


def maxabs(a: np.ndarray) -> float:
    """Largest absolute entry of an array (0 for an empty one)."""
    return float(np.max(np.abs(a))) if a.size else 0.0


def _as_square(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def require_symmetric(a: np.ndarray) -> np.ndarray:
    """Return `a` as a float array after checking squareness and symmetry."""
    a = _as_square(a)
    tol = SYMMETRY_RTOL * max(1.0, maxabs(a))
    dev = maxabs(a - a.T)
    if dev > tol:
        raise ValueError(f"matrix is not symmetric: max |A - A^T| = {dev:.3e} exceeds {tol:.3e}")
    return a


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigendecomposition of a real symmetric matrix.

    Attributes
    ----------
    values : ndarray
        Eigenvalues in ascending order.
    vectors : ndarray
        Orthonormal eigenvectors as columns; vectors[:, i] belongs to values[i].
    """

    values: np.ndarray
    vectors: np.ndarray

    def __len__(self) -> int:
        return int(self.values.shape[0])


def sym_eig(a: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix.

    The input must be symmetric within SYMMETRY_RTOL (relative to its largest
    entry); it is symmetrized before the solve so round-off in the caller's
    assembly cannot leak into the decomposition.  Deterministic for identical
    input bytes.
    """
    a = require_symmetric(a)
    values, vectors = np.linalg.eigh(0.5 * (a + a.T))
    return Spectrum(values=values, vectors=vectors)


def singular_values(a: np.ndarray) -> np.ndarray:
    """Singular values of a real matrix, descending."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {a.shape}")
    return np.linalg.svd(a, compute_uv=False)


def entropy_bits(p: np.ndarray) -> float:
    """Shannon entropy (base 2) of a probability vector.

    Entries in [-1e-12, 0) are treated as round-off and clamped to 0; anything
    more negative, or a total off 1 by more than 1e-10, is rejected.
    """
    p = np.asarray(p, dtype=float)
    if p.size and float(p.min()) < -1e-12:
        raise ValueError(f"negative probability {p.min():.3e} below round-off tolerance")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"probabilities sum to {total!r}, expected 1 within 1e-10")
    q = np.clip(p, 0.0, None)
    nz = q[q > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def cmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two equal-size complex square matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b
