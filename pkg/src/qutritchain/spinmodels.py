"""Hamiltonians for the spin-1 pair and the spin-1/2 XY cross-check model.

Spin-1 single-site basis is (|1>, |0>, |-1>) mapped to indices (0, 1, 2), so

    Sz = diag(1, 0, -1),   Sx = (1/sqrt 2) [[0,1,0],[1,0,1],[0,1,0]],

and the composite |m1 m2> state sits at index 3*i1 + i2.  The pair model is

    H = J (S1.S2) + K (S1.S2)^2 + B1 S1z + B2 S2z,

bilinear-biquadratic exchange in a field that may differ between the sites.
Total Sz is conserved, which splits H into five blocks: two trivial ones
(|1 1>, |-1 -1>), two 2x2 ones (spanned by {|1 0>, |0 1>} and
{|-1 0>, |0 -1>}) whose eigenpairs are written in closed form below, and a
central 3x3 block on span{|0 0>, |1 -1>, |-1 1>} that is kept numerical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .numkernel import maxabs

_SQRT2 = math.sqrt(2.0)

# Composite indices of the total-Sz = 0 block, in the order (|00>, |1 -1>, |-1 1>).
CENTRAL_BLOCK_INDICES = (4, 2, 6)


@dataclass(frozen=True)
class QutritChainParams:
    """Couplings and fields of the spin-1 pair."""

    J: float
    K: float
    B1: float
    B2: float


@dataclass(frozen=True)
class XYParams:
    """Anisotropic XY pair: J (S1+S2- + S1-S2+) + J*gamma (S1+S2+ + S1-S2-) + B (S1z + S2z)."""

    J: float
    gamma: float
    B: float


def spin1_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (Sx, Sy x Sy, Sz) for a single spin 1.

    Sy is purely imaginary, so only the already-real two-site product Sy x Sy
    is exposed; an imaginary residue in that product would mean the basis
    conventions were broken and raises.
    """
    sx = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]) / _SQRT2
    sz = np.diag([1.0, 0.0, -1.0])
    sy = np.array([[0.0, -1.0j, 0.0], [1.0j, 0.0, -1.0j], [0.0, 1.0j, 0.0]]) / _SQRT2
    sysy = np.kron(sy, sy)
    if maxabs(sysy.imag) > 1e-15:
        raise RuntimeError("Sy x Sy has an imaginary residue; basis conventions are broken")
    return sx, sysy.real.copy(), sz


def heisenberg_coupling() -> np.ndarray:
    """The 9x9 exchange operator S1.S2."""
    sx, sysy, sz = spin1_operators()
    return np.kron(sx, sx) + sysy + np.kron(sz, sz)


def hamiltonian_qutrit(p: QutritChainParams) -> np.ndarray:
    """Full 9x9 Hamiltonian of the spin-1 pair."""
    _, _, sz = spin1_operators()
    d = heisenberg_coupling()
    eye3 = np.eye(3)
    return p.J * d + p.K * (d @ d) + p.B1 * np.kron(sz, eye3) + p.B2 * np.kron(eye3, sz)


class ClosedFormEnergies(NamedTuple):
    e1: float
    e2: float
    e3: float
    e7: float
    e8: float
    e9: float


class ClosedFormVectors(NamedTuple):
    phi1: np.ndarray
    phi2: np.ndarray
    phi3: np.ndarray
    phi7: np.ndarray
    phi8: np.ndarray
    phi9: np.ndarray


def closed_form_energies(p: QutritChainParams) -> ClosedFormEnergies:
    """The six closed-form eigenvalues outside the central block.

    e1 and e9 belong to |1 1> and |-1 -1>; (e2, e3) and (e7, e8) are the
    eigenvalues of the total-Sz = +1 and -1 blocks.  The remaining three
    eigenvalues come numerically from central_block().
    """
    root = math.hypot(p.B1 - p.B2, 2.0 * p.J)
    half_sum = 0.5 * (p.B1 + p.B2)
    return ClosedFormEnergies(
        e1=p.J + p.B1 + p.B2 + p.K,
        e2=half_sum + p.K + 0.5 * root,
        e3=half_sum + p.K - 0.5 * root,
        e7=-half_sum + p.K + 0.5 * root,
        e8=-half_sum + p.K - 0.5 * root,
        e9=p.J - p.B1 - p.B2 + p.K,
    )


def closed_form_vectors(p: QutritChainParams) -> ClosedFormVectors:
    """Unit eigenvectors paired with closed_form_energies, same labels.

    phi2 mixes |1 0> and |0 1> with weights (a, b); phi7 mixes |-1 0> and
    |0 -1> with weights (f, g); phi3 and phi8 are the orthogonal partners.
    Degenerate only when both a, b (or f, g) vanish, which needs J = 0.
    """
    root = math.hypot(p.B1 - p.B2, 2.0 * p.J)
    a = p.B1 - p.B2 + root
    b = 2.0 * p.J
    f = p.B2 - p.B1 + root
    g = 2.0 * p.J
    norm_ab = a * a + b * b
    norm_fg = f * f + g * g
    if norm_ab <= 0.0 or norm_fg <= 0.0:
        raise ValueError("degenerate field-exchange parameters: closed-form vectors undefined")

    def _unit(pairs: list[tuple[int, float]]) -> np.ndarray:
        v = np.zeros(9)
        for idx, amp in pairs:
            v[idx] = amp
        return v / np.linalg.norm(v)

    return ClosedFormVectors(
        phi1=_unit([(0, 1.0)]),                      # |1 1>
        phi2=_unit([(1, a), (3, b)]),                # a|1 0> + b|0 1>
        phi3=_unit([(1, b), (3, -a)]),
        phi7=_unit([(7, f), (5, g)]),                # f|-1 0> + g|0 -1>
        phi8=_unit([(7, g), (5, -f)]),
        phi9=_unit([(8, 1.0)]),                      # |-1 -1>
    )


def central_block(p: QutritChainParams) -> np.ndarray:
    """The 3x3 total-Sz = 0 block of H on (|00>, |1 -1>, |-1 1>).

    The couplings leaving the block are identically zero by Sz conservation;
    a nonzero residue means the Hamiltonian assembly regressed.
    """
    h = hamiltonian_qutrit(p)
    idx = np.array(CENTRAL_BLOCK_INDICES)
    rest = np.setdiff1d(np.arange(9), idx)
    leak = maxabs(h[np.ix_(idx, rest)])
    if leak > 1e-14:
        raise RuntimeError(f"central block is not invariant: leakage {leak:.3e}")
    return h[np.ix_(idx, idx)].copy()


def hamiltonian_xy(p: XYParams) -> np.ndarray:
    """4x4 Hamiltonian of the anisotropic XY spin-1/2 pair in a uniform field."""
    sp = np.array([[0.0, 1.0], [0.0, 0.0]])
    sm = sp.T
    sz = np.diag([0.5, -0.5])
    eye2 = np.eye(2)
    flip = np.kron(sp, sm) + np.kron(sm, sp)
    pair = np.kron(sp, sp) + np.kron(sm, sm)
    field = np.kron(sz, eye2) + np.kron(eye2, sz)
    return p.J * flip + p.J * p.gamma * pair + p.B * field


class XYEnergies(NamedTuple):
    e1: float
    e2: float
    e3: float
    e4: float


def xy_closed_form_energies(p: XYParams) -> XYEnergies:
    """Closed-form XY spectrum: (J, -J, +r, -r) with r = sqrt(B^2 + (J*gamma)^2)."""
    r = math.hypot(p.B, p.J * p.gamma)
    return XYEnergies(e1=p.J, e2=-p.J, e3=r, e4=-r)
