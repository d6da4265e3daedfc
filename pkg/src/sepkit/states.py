"""Validated quantum-state data model, Bloch decomposition and state families.

States are immutable value objects; every constructor goes through the same
validation, so holding a DensityMatrix means the Hermiticity, trace and
positivity invariants were checked.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadTraceError,
    BadWeightsError,
    DimensionMismatchError,
    NotPSDError,
    OutOfRangeError,
    UnsupportedDimsError,
)
from .linalg import (
    PAULIS,
    TOL_HERM,
    TOL_PSD,
    BipartiteDims,
    as_cmat,
    eig_hermitian,
    kron,
    partial_trace,
)

TRACE_TOL = 1e-9
NORM_TOL = 1e-9
RANK_TOL = 1e-9

# sigma_i (x) sigma_j stacked as a (3, 3, 4, 4) block, used by the Fano maps
_PAULI_KRON = np.array([[kron(a, b) for b in PAULIS] for a in PAULIS])
_PAULI_A = np.array([kron(p, np.eye(2)) for p in PAULIS])
_PAULI_B = np.array([kron(np.eye(2), p) for p in PAULIS])


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, PSD operator with recorded subsystem dimensions."""

    dims: BipartiteDims
    mat: np.ndarray


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit vector on a bipartite space."""

    dims: BipartiteDims
    vec: np.ndarray


@dataclass(frozen=True, eq=False)
class SchmidtData:
    """Bi-orthogonal expansion data of a pure state.

    coefficients are non-negative and descending; rank counts those above
    RANK_TOL.
    """

    coefficients: np.ndarray
    vectors_a: np.ndarray  # rows are the A-side Schmidt vectors
    vectors_b: np.ndarray
    rank: int


@dataclass(frozen=True, eq=False)
class FanoForm:
    """Local Bloch vectors r, s and 3x3 correlation matrix tau of a two-qubit state."""

    r: np.ndarray
    s: np.ndarray
    tau: np.ndarray


def validate_density(m, dims: BipartiteDims) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity; return the validated state.

    Each failure raises an error naming the violated invariant and the
    offending magnitude.
    """
    dims = BipartiteDims(*dims)
    if dims.dA < 2 or dims.dB < 2:
        raise OutOfRangeError(f"subsystem dimensions must be >= 2, got {tuple(dims)}")
    mat = as_cmat(m)
    if mat.shape != (dims.side, dims.side):
        raise DimensionMismatchError(
            f"matrix shape {mat.shape} does not match dims {tuple(dims)}"
        )
    w, _ = eig_hermitian(mat, tol=TOL_HERM)  # raises NotHermitianError
    tr = float(mat.trace().real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise BadTraceError(f"trace is {tr!r}, deviates from 1 by {abs(tr - 1.0):.3e}")
    if w[0] < -TOL_PSD:
        raise NotPSDError(f"minimum eigenvalue {w[0]:.3e} below -{TOL_PSD:.1e}")
    return DensityMatrix(dims, mat)


def pure_state(v, dims: BipartiteDims) -> PureState:
    """Validate a state vector: finite, correct length, unit norm."""
    dims = BipartiteDims(*dims)
    vec = np.asarray(v, dtype=complex).ravel()
    if vec.size != dims.side:
        raise DimensionMismatchError(
            f"vector length {vec.size} does not match dims {tuple(dims)}"
        )
    if not (np.all(np.isfinite(vec.real)) and np.all(np.isfinite(vec.imag))):
        raise DimensionMismatchError("vector contains non-finite entries")
    nrm = float(np.linalg.norm(vec))
    if abs(nrm - 1.0) > NORM_TOL:
        raise BadTraceError(f"norm is {nrm!r}, deviates from 1 by {abs(nrm - 1.0):.3e}")
    return PureState(dims, vec)


def pure_to_density(psi: PureState) -> DensityMatrix:
    """Rank-one projector |psi><psi|."""
    return DensityMatrix(psi.dims, np.outer(psi.vec, psi.vec.conj()))


def schmidt(psi: PureState) -> SchmidtData:
    """Schmidt decomposition via SVD of the dA x dB coefficient matrix."""
    m = psi.vec.reshape(psi.dims.dA, psi.dims.dB)
    u, lam, vh = np.linalg.svd(m)
    k = min(psi.dims.dA, psi.dims.dB)
    rank = int(np.count_nonzero(lam > RANK_TOL))
    return SchmidtData(lam[:k], u.T[:k], vh[:k], rank)


def schmidt_reconstruct(sd: SchmidtData, dims: BipartiteDims) -> np.ndarray:
    """Rebuild the state vector sum_i lambda_i |u_i>|v_i|> from Schmidt data."""
    vec = np.zeros(dims.dA * dims.dB, dtype=complex)
    for lam, ua, vb in zip(sd.coefficients, sd.vectors_a, sd.vectors_b):
        vec += lam * np.kron(ua, vb)
    return vec


def fano_decompose(rho: DensityMatrix) -> FanoForm:
    """Bloch vectors and correlation matrix of a two-qubit state.

    r_i = Tr[rho (sigma_i (x) I)], s_j = Tr[rho (I (x) sigma_j)],
    tau_ij = Tr[rho (sigma_i (x) sigma_j)].
    """
    if tuple(rho.dims) != (2, 2):
        raise UnsupportedDimsError(f"Bloch decomposition needs dims (2, 2), got {tuple(rho.dims)}")
    m = rho.mat
    r = np.einsum("kij,ji->k", _PAULI_A, m).real
    s = np.einsum("kij,ji->k", _PAULI_B, m).real
    tau = np.einsum("klij,ji->kl", _PAULI_KRON, m).real
    return FanoForm(r, s, tau)


def fano_compose(f: FanoForm) -> DensityMatrix:
    """Inverse of fano_decompose; validation fails if f is not a physical state."""
    m = np.eye(4, dtype=complex)
    m += np.einsum("k,kij->ij", f.r, _PAULI_A)
    m += np.einsum("k,kij->ij", f.s, _PAULI_B)
    m += np.einsum("kl,klij->ij", f.tau, _PAULI_KRON)
    return validate_density(m / 4.0, BipartiteDims(2, 2))


BELL_PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2)
BELL_PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
BELL_PHI_MINUS = np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2)


def werner(p: float) -> DensityMatrix:
    """p |psi+><psi+| + (1-p)/4 I with |psi+> = (|01> + |10>)/sqrt(2)."""
    if not 0.0 <= p <= 1.0:
        raise OutOfRangeError(f"p must lie in [0, 1], got {p!r}")
    m = p * np.outer(BELL_PSI_PLUS, BELL_PSI_PLUS.conj()) + (1.0 - p) / 4.0 * np.eye(4)
    return DensityMatrix(BipartiteDims(2, 2), m.astype(complex))


def rho_p_family(p: float) -> DensityMatrix:
    """p |00><00| + (1-p) |psi+><psi+|."""
    if not 0.0 <= p <= 1.0:
        raise OutOfRangeError(f"p must lie in [0, 1], got {p!r}")
    v00 = np.zeros(4, dtype=complex)
    v00[0] = 1.0
    m = p * np.outer(v00, v00.conj()) + (1.0 - p) * np.outer(
        BELL_PSI_PLUS, BELL_PSI_PLUS.conj()
    )
    return DensityMatrix(BipartiteDims(2, 2), m)


def bell_diagonal(t: np.ndarray) -> DensityMatrix:
    """State with zero Bloch vectors and diagonal correlation matrix diag(t).

    Valid exactly when t lies in the tetrahedron spanned by the four Bell
    states; composition rejects anything outside (NotPSDError).
    """
    t = np.asarray(t, dtype=float)
    if t.shape != (3,):
        raise OutOfRangeError(f"t must be a 3-vector, got shape {t.shape}")
    return fano_compose(FanoForm(np.zeros(3), np.zeros(3), np.diag(t)))


def mixture(terms) -> DensityMatrix:
    """Convex combination sum_i w_i rhoA_i (x) rhoB_i; separable by construction.

    Each term is (weight, local A matrix, local B matrix). Weights must be
    positive and sum to 1 within 1e-9; local matrices must share dimensions
    across terms.
    """
    if not terms:
        raise BadWeightsError("mixture needs at least one term")
    weights = np.array([float(t[0]) for t in terms])
    if np.any(weights <= 0.0):
        raise BadWeightsError(f"weights must be positive, got {weights.tolist()}")
    if abs(weights.sum() - 1.0) > 1e-9:
        raise BadWeightsError(f"weights sum to {weights.sum()!r}, expected 1")
    mats_a = [as_cmat(t[1]) for t in terms]
    mats_b = [as_cmat(t[2]) for t in terms]
    dA, dB = mats_a[0].shape[0], mats_b[0].shape[0]
    for ma, mb in zip(mats_a, mats_b):
        if ma.shape != (dA, dA) or mb.shape != (dB, dB):
            raise DimensionMismatchError("mixture terms have inconsistent local dimensions")
    m = np.zeros((dA * dB, dA * dB), dtype=complex)
    for w, ma, mb in zip(weights, mats_a, mats_b):
        m += w * kron(ma, mb)
    return validate_density(m, BipartiteDims(dA, dB))


def reduced(rho: DensityMatrix, keep: str) -> np.ndarray:
    """Reduced density matrix of one subsystem."""
    return partial_trace(rho.mat, rho.dims, keep=keep)


def random_pure(dims: BipartiteDims, seed: int) -> PureState:
    """Haar-random pure state: normalized complex Gaussian vector."""
    dims = BipartiteDims(*dims)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dims.side) + 1j * rng.standard_normal(dims.side)
    return PureState(dims, v / np.linalg.norm(v))


def random_mixed(dims: BipartiteDims, rank: int, seed: int) -> DensityMatrix:
    """Ginibre-style random mixed state rho = G G^dag / Tr(G G^dag)."""
    dims = BipartiteDims(*dims)
    if not 1 <= rank <= dims.side:
        raise OutOfRangeError(f"rank must lie in [1, {dims.side}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dims.side, rank)) + 1j * rng.standard_normal((dims.side, rank))
    m = g @ g.conj().T
    m /= m.trace().real
    return validate_density(m, dims)


def random_separable(dims: BipartiteDims, terms: int, seed: int) -> DensityMatrix:
    """Random mixture of `terms` pure product states with Dirichlet weights."""
    dims = BipartiteDims(*dims)
    if terms < 1:
        raise OutOfRangeError(f"terms must be >= 1, got {terms}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(terms))
    m = np.zeros((dims.side, dims.side), dtype=complex)
    for w in weights:
        va = rng.standard_normal(dims.dA) + 1j * rng.standard_normal(dims.dA)
        vb = rng.standard_normal(dims.dB) + 1j * rng.standard_normal(dims.dB)
        v = np.kron(va / np.linalg.norm(va), vb / np.linalg.norm(vb))
        m += w * np.outer(v, v.conj())
    return validate_density(m, dims)
