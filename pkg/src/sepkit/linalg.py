"""Dense complex matrix primitives for small bipartite systems.

All functions are pure: inputs are never mutated, results are fresh arrays.
Matrices are plain complex128 ndarrays; the bipartite index convention is
row-major, i.e. basis state |i>_A |k>_B sits at index i*dB + k.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, NotHermitianError, NotPSDError

TOL_HERM = 1e-9
TOL_PSD = 1e-9

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class BipartiteDims(NamedTuple):
    """Subsystem dimensions (dA, dB) of a bipartite space."""

    dA: int
    dB: int

    @property
    def side(self) -> int:
        return self.dA * self.dB


def as_cmat(m) -> np.ndarray:
    """Coerce to a finite complex128 2-D array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise DimensionMismatchError("matrix contains non-finite entries")
    return a


def _check_square(rho: np.ndarray, dims: BipartiteDims) -> None:
    side = dims.side
    if rho.shape != (side, side):
        raise DimensionMismatchError(
            f"matrix shape {rho.shape} does not match dims {tuple(dims)} "
            f"(expected {(side, side)})"
        )


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product a (x) b."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def eig_hermitian(h: np.ndarray, tol: float = TOL_HERM) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (real, ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Raises NotHermitianError if max |h - h^dag| entry exceeds `tol`.
    """
    h = as_cmat(h)
    dev = np.abs(h - h.conj().T).max()
    if dev > tol:
        raise NotHermitianError(f"matrix deviates from Hermitian by {dev:.3e} (tol {tol:.1e})")
    w, v = np.linalg.eigh(h)
    return w, v


def singular_values(m: np.ndarray) -> np.ndarray:
    """Singular values, non-negative, descending."""
    return np.linalg.svd(as_cmat(m), compute_uv=False)


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values."""
    return float(singular_values(m).sum())


def sqrt_psd(h: np.ndarray, tol: float = TOL_PSD) -> np.ndarray:
    """Positive square root of a PSD Hermitian matrix.

    Eigenvalues in [-tol, 0) are clamped to 0; below -tol raises NotPSDError.
    """
    w, v = eig_hermitian(h)
    if w[0] < -tol:
        raise NotPSDError(f"minimum eigenvalue {w[0]:.3e} below -{tol:.1e}")
    w = np.sqrt(np.clip(w, 0.0, None))
    return (v * w) @ v.conj().T


def partial_transpose(rho: np.ndarray, dims: BipartiteDims, side: str = "A") -> np.ndarray:
    """Transpose the indices of one subsystem.

    For side "A": result[(i,k),(j,l)] = rho[(j,k),(i,l)].
    """
    rho = as_cmat(rho)
    _check_square(rho, dims)
    r4 = rho.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    if side == "A":
        out = r4.transpose(2, 1, 0, 3)
    elif side == "B":
        out = r4.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return out.reshape(dims.side, dims.side).copy()


def partial_trace(rho: np.ndarray, dims: BipartiteDims, keep: str = "A") -> np.ndarray:
    """Trace out one subsystem, keeping the other."""
    rho = as_cmat(rho)
    _check_square(rho, dims)
    r4 = rho.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    if keep == "A":
        return np.einsum("ikjk->ij", r4)
    if keep == "B":
        return np.einsum("kikj->ij", r4)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def realign(rho: np.ndarray, dims: BipartiteDims) -> np.ndarray:
    """Reshuffle a bipartite operator into its dA^2 x dB^2 realigned form.

    result[(i,j),(k,l)] = rho[(i,k),(j,l)]; for a product input rhoA (x) rhoB
    this is the rank-one matrix vec(rhoA) vec(rhoB)^T.
    """
    rho = as_cmat(rho)
    _check_square(rho, dims)
    r4 = rho.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    return r4.transpose(0, 2, 1, 3).reshape(dims.dA**2, dims.dB**2).copy()


def swap_operator(d: int) -> np.ndarray:
    """Flip operator V on a d (x) d space: V |phi>|psi> = |psi>|phi>."""
    v = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            v[j * d + i, i * d + j] = 1.0
    return v
