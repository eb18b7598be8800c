"""Bipartite state containers and the basic channel-free manipulations.

Composite basis convention: for local dimensions (da, db) the product state
|i>|k> sits at row i*db + k, which is exactly numpy's kron ordering.  All
density matrices kept in this type are real symmetric; complex intermediates
(unitary conjugates) live as plain arrays in the modules that need them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numkernel import maxabs, require_symmetric

TRACE_TOL = 1e-10
EIG_FLOOR = -1e-10


@dataclass(frozen=True)
class BipartiteDims:
    """Local dimensions (da, db) of a bipartite system."""

    da: int
    db: int

    def __post_init__(self) -> None:
        if self.da < 2 or self.db < 2:
            raise ValueError(f"local dimensions must be at least 2, got ({self.da}, {self.db})")

    @property
    def total(self) -> int:
        return self.da * self.db


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated real bipartite density matrix."""

    mat: np.ndarray
    dims: BipartiteDims

    def __post_init__(self) -> None:
        mat = require_symmetric(self.mat)
        if mat.shape[0] != self.dims.total:
            raise ValueError(
                f"matrix is {mat.shape[0]}x{mat.shape[0]} but dims {self.dims} need {self.dims.total}"
            )
        tr = float(np.trace(mat))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {tr!r} is not 1 within {TRACE_TOL}")
        low = float(np.linalg.eigvalsh(mat)[0])
        if low < EIG_FLOOR:
            raise ValueError(f"matrix is not positive semidefinite: lowest eigenvalue {low:.3e}")
        object.__setattr__(self, "mat", mat)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product in the package's composite-index convention."""
    return np.kron(np.asarray(a), np.asarray(b))


def _split(rho: DensityMatrix) -> tuple[int, int, np.ndarray]:
    da, db = rho.dims.da, rho.dims.db
    return da, db, rho.mat.reshape(da, db, da, db)


def partial_transpose(rho: DensityMatrix, subsystem: str = "B") -> np.ndarray:
    """Partial transpose of `rho` on one subsystem, as a plain matrix."""
    da, db, t = _split(rho)
    if subsystem == "B":
        out = t.transpose(0, 3, 2, 1)
    elif subsystem == "A":
        out = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return out.reshape(da * db, da * db).copy()


def partial_trace(rho: DensityMatrix, traced: str = "B") -> np.ndarray:
    """Reduced state after tracing out one subsystem, as a plain matrix."""
    _, _, t = _split(rho)
    if traced == "B":
        return np.einsum("ikjk->ij", t).copy()
    if traced == "A":
        return np.einsum("kikj->ij", t).copy()
    raise ValueError(f"traced must be 'A' or 'B', got {traced!r}")


def max_entangled(d: int) -> np.ndarray:
    """Maximally entangled vector (1/sqrt(d)) sum_i |ii> for equal local dims d."""
    if d < 2:
        raise ValueError(f"local dimension must be at least 2, got {d}")
    v = np.zeros(d * d)
    v[:: d + 1] = 1.0 / np.sqrt(d)
    return v


def singlet() -> np.ndarray:
    """Two-qubit singlet (|01> - |10>)/sqrt(2)."""
    return np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)


def dm_from_pure(v: np.ndarray, dims: BipartiteDims) -> DensityMatrix:
    """Projector onto a unit vector as a DensityMatrix."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.shape[0] != dims.total:
        raise ValueError(f"vector length {v.shape} does not match dims {dims}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"vector norm {norm!r} is not 1 within 1e-10")
    return DensityMatrix(mat=np.outer(v, v), dims=dims)


def purity_of(mat: np.ndarray) -> float:
    """Tr(rho^2) for a symmetric matrix given as a plain array."""
    m = np.asarray(mat, dtype=float)
    return float(np.sum(m * m))


def is_symmetric(a: np.ndarray, rtol: float = 1e-13) -> bool:
    a = np.asarray(a, dtype=float)
    return maxabs(a - a.T) <= rtol * max(1.0, maxabs(a))
