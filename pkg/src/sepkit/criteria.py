"""Separability criteria, each producing a uniform CriterionVerdict.

Verdict semantics: Entangled is only emitted when the statistic strictly
violates the threshold beyond the tolerance. Separable is reserved for
criteria that are necessary and sufficient at the given dimensions (the
partial-transpose and reduction tests at 2x2/2x3, concurrence at 2x2, and
the pure-state tests); every other non-violation is Inconclusive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import kernels
from .errors import (
    DimensionMismatchError,
    LengthMismatchError,
    NotDichotomicError,
    NotHermitianError,
    OutOfRangeError,
    UnsupportedDimsError,
)
from .linalg import (
    PAULIS,
    SIGMA_Y,
    BipartiteDims,
    as_cmat,
    eig_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    realign,
    swap_operator,
    trace_norm,
)
from .states import (
    DensityMatrix,
    PureState,
    fano_decompose,
    pure_to_density,
    schmidt,
)

TOL = 1e-9

TSIRELSON = 2.0 * np.sqrt(2.0)


class Verdict(str, Enum):
    ENTANGLED = "Entangled"
    SEPARABLE = "Separable"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: str
    statistic: float
    threshold: float
    verdict: Verdict
    details: dict = field(default_factory=dict)


def _exact_dims(dims: BipartiteDims) -> bool:
    """Dimensions where positivity-based tests decide separability outright."""
    return tuple(sorted(dims)) in ((2, 2), (2, 3))


def _require_two_qubits(dims: BipartiteDims, what: str) -> None:
    if tuple(dims) != (2, 2):
        raise UnsupportedDimsError(f"{what} needs dims (2, 2), got {tuple(dims)}")


# ---------------------------------------------------------------------------
# dichotomic observables and the four-observable correlation test

@dataclass(frozen=True, eq=False)
class Dichotomic:
    """2x2 Hermitian observable with spectrum {+1, -1}."""

    matrix: np.ndarray


def dichotomic(m, tol: float = TOL) -> Dichotomic:
    """Validate a 2x2 Hermitian matrix with eigenvalues +1 and -1."""
    mat = as_cmat(m)
    if mat.shape != (2, 2):
        raise NotDichotomicError(f"observable must be 2x2, got {mat.shape}")
    w, _ = eig_hermitian(mat, tol=tol)
    if abs(w[0] + 1.0) > tol or abs(w[1] - 1.0) > tol:
        raise NotDichotomicError(f"eigenvalues {w.tolist()} are not (-1, +1) within {tol:.1e}")
    return Dichotomic(mat)


def bloch_observable(n) -> Dichotomic:
    """Spin observable n.sigma along a Bloch direction (normalized)."""
    n = np.asarray(n, dtype=float)
    nrm = np.linalg.norm(n)
    if nrm < 1e-12:
        raise NotDichotomicError("Bloch direction must be non-zero")
    n = n / nrm
    return Dichotomic(n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2])


def chsh_value(rho: DensityMatrix, a: Dichotomic, a2: Dichotomic,
               b: Dichotomic, b2: Dichotomic, tol: float = TOL) -> CriterionVerdict:
    """Correlation value Tr[rho (A(x)B + A(x)B' + A'(x)B - A'(x)B')].

    Any value with magnitude above 2 certifies entanglement; quantum states
    never exceed 2*sqrt(2).
    """
    _require_two_qubits(rho.dims, "the four-observable correlation test")
    for obs in (a, a2, b, b2):
        if not isinstance(obs, Dichotomic):
            raise NotDichotomicError("observables must be Dichotomic (use dichotomic())")
    op = (kron(a.matrix, b.matrix) + kron(a.matrix, b2.matrix)
          + kron(a2.matrix, b.matrix) - kron(a2.matrix, b2.matrix))
    stat = float(np.trace(rho.mat @ op).real)
    verdict = Verdict.ENTANGLED if abs(stat) > 2.0 + tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("chsh_value", stat, 2.0, verdict)


def chsh_optimize(rho: DensityMatrix, restarts: int = 32, seed: int = 0,
                  tol: float = TOL) -> CriterionVerdict:
    """Maximize |chsh_value| over the four observable directions.

    Coordinate ascent over the four Bloch vectors (each block update is the
    exact maximizer given the others), restarted from `restarts` random
    starting points. Deterministic given the seed. The winning directions
    are reported in details["bloch_vectors"] as rows (a, a', b, b').
    """
    _require_two_qubits(rho.dims, "the correlation optimizer")
    if restarts < 1:
        raise OutOfRangeError(f"restarts must be >= 1, got {restarts}")
    tau = fano_decompose(rho).tau
    rng = np.random.default_rng(seed)
    inits = rng.standard_normal((restarts, 4, 3))
    inits /= np.linalg.norm(inits, axis=2, keepdims=True)
    value, obs = kernels.chsh_ascend(tau, inits)
    verdict = Verdict.ENTANGLED if value > 2.0 + tol else Verdict.INCONCLUSIVE
    return CriterionVerdict(
        "chsh_optimize", float(value), 2.0, verdict,
        details={"bloch_vectors": np.asarray(obs).tolist()},
    )


# ---------------------------------------------------------------------------
# pure-state tests

def schmidt_rank_criterion(psi: PureState, tol: float = TOL) -> CriterionVerdict:
    """Product state if and only if the Schmidt rank is 1 (exact for pure states)."""
    sd = schmidt(psi)
    verdict = Verdict.SEPARABLE if sd.rank == 1 else Verdict.ENTANGLED
    return CriterionVerdict(
        "schmidt_rank", float(sd.rank), 1.0, verdict,
        details={"coefficients": sd.coefficients.tolist()},
    )


def entanglement_entropy(psi: PureState, tol: float = TOL) -> CriterionVerdict:
    """Entropy -sum lambda_i^2 ln lambda_i^2 of the Schmidt spectrum.

    Zero exactly on product states; maximal, ln(min(dA, dB)), when all
    coefficients are equal. Natural log; details carry the base-2 value.
    """
    lam2 = schmidt(psi).coefficients ** 2
    lam2 = lam2[lam2 > 0.0]
    entropy = float(-(lam2 * np.log(lam2)).sum())
    verdict = Verdict.SEPARABLE if entropy <= tol else Verdict.ENTANGLED
    return CriterionVerdict(
        "entanglement_entropy", entropy, 0.0, verdict,
        details={"entropy_bits": entropy / np.log(2.0)},
    )


def concurrence_pure(psi: PureState, tol: float = TOL) -> CriterionVerdict:
    """Two-qubit pure-state concurrence 2|alpha*eta - beta*gamma|.

    Equals |<psi|psi~>| with the spin-flipped state psi~ = (sy (x) sy) psi*;
    zero exactly on product states.
    """
    _require_two_qubits(psi.dims, "pure-state concurrence")
    alpha, beta, gamma, eta = psi.vec
    c = 2.0 * abs(alpha * eta - beta * gamma)
    verdict = Verdict.SEPARABLE if c <= tol else Verdict.ENTANGLED
    return CriterionVerdict("concurrence_pure", float(c), 0.0, verdict)


# ---------------------------------------------------------------------------
# positivity-based tests

def ppt(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Minimum eigenvalue of the partial transpose.

    Negative partial transpose certifies entanglement for any dimensions;
    at 2x2 and 2x3 a positive partial transpose certifies separability.
    """
    w, _ = eig_hermitian(partial_transpose(rho.mat, rho.dims, side="A"))
    stat = float(w[0])
    if stat < -tol:
        verdict = Verdict.ENTANGLED
    elif _exact_dims(rho.dims):
        verdict = Verdict.SEPARABLE
    else:
        verdict = Verdict.INCONCLUSIVE
    return CriterionVerdict("ppt", stat, 0.0, verdict, details={"eigenvalues": w.tolist()})


def reduction(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Positivity of rhoA (x) I - rho and I (x) rhoB - rho.

    The statistic is the smaller of the two minimum eigenvalues. Necessary
    for separability in general; necessary and sufficient at 2x2 and 2x3.
    """
    rho_a = partial_trace(rho.mat, rho.dims, keep="A")
    rho_b = partial_trace(rho.mat, rho.dims, keep="B")
    op_a = kron(rho_a, np.eye(rho.dims.dB)) - rho.mat
    op_b = kron(np.eye(rho.dims.dA), rho_b) - rho.mat
    wa, _ = eig_hermitian(op_a)
    wb, _ = eig_hermitian(op_b)
    stat = float(min(wa[0], wb[0]))
    if stat < -tol:
        verdict = Verdict.ENTANGLED
    elif _exact_dims(rho.dims):
        verdict = Verdict.SEPARABLE
    else:
        verdict = Verdict.INCONCLUSIVE
    return CriterionVerdict(
        "reduction", stat, 0.0, verdict,
        details={"min_eig_a_side": float(wa[0]), "min_eig_b_side": float(wb[0])},
    )


def majorization(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Spectral majorization of the state by both of its reductions.

    Compares prefix sums of the descending spectra (reduction spectra padded
    with zeros). The statistic is the worst margin min_k [sum_k(reduced) -
    sum_k(full)]; a value below -tol breaks majorization and certifies
    entanglement. Necessary only, so the test never reports Separable.
    """
    w_full = np.sort(np.linalg.eigvalsh(rho.mat))[::-1]
    margins = []
    for keep in ("A", "B"):
        w_red = np.sort(np.linalg.eigvalsh(partial_trace(rho.mat, rho.dims, keep=keep)))[::-1]
        w_red = np.concatenate([w_red, np.zeros(w_full.size - w_red.size)])
        margins.append(np.cumsum(w_red) - np.cumsum(w_full))
    stat = float(min(m.min() for m in margins))
    verdict = Verdict.ENTANGLED if stat < -tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("majorization", stat, 0.0, verdict)


# ---------------------------------------------------------------------------
# concurrence for mixed two-qubit states

_YY = kron(SIGMA_Y, SIGMA_Y)


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    """rho~ = (sy (x) sy) rho* (sy (x) sy)."""
    _require_two_qubits(rho.dims, "the spin flip")
    return _YY @ rho.mat.conj() @ _YY


def concurrence_mixed(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Two-qubit concurrence max{0, l1 - l2 - l3 - l4}.

    The l_i are the descending eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)),
    computed as the singular values of Psi^T (sy (x) sy) Psi with
    rho = Psi Psi^dag. The factored form avoids taking square roots of
    round-off-sized eigenvalues, which would cost ~1e-8 of accuracy on
    low-rank states. Zero exactly on separable two-qubit states.
    """
    _require_two_qubits(rho.dims, "mixed-state concurrence")
    w, v = eig_hermitian(rho.mat)
    psi = v * np.sqrt(np.clip(w, 0.0, None))
    lam = np.linalg.svd(psi.T @ _YY @ psi, compute_uv=False)
    c = max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))
    verdict = Verdict.ENTANGLED if c > tol else Verdict.SEPARABLE
    return CriterionVerdict(
        "concurrence_mixed", c, 0.0, verdict, details={"lambdas": lam.tolist()},
    )


# ---------------------------------------------------------------------------
# norm-based tests

def ccnr(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Trace norm of the realigned operator; above 1 certifies entanglement."""
    sv = np.linalg.svd(realign(rho.mat, rho.dims), compute_uv=False)
    stat = float(sv.sum())
    verdict = Verdict.ENTANGLED if stat > 1.0 + tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("ccnr", stat, 1.0, verdict, details={"singular_values": sv.tolist()})


def correlation_matrix(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Trace norm of the Bloch correlation matrix tau.

    Separable two-qubit states obey |tau|_1 <= 1 (the bound
    sqrt(4 (dA-1)(dB-1) / (dA dB)) at dA = dB = 2); larger correlations
    certify entanglement.
    """
    _require_two_qubits(rho.dims, "the correlation-matrix test")
    tau = fano_decompose(rho).tau
    stat = trace_norm(tau)
    verdict = Verdict.ENTANGLED if stat > 1.0 + tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("correlation_matrix", stat, 1.0, verdict)


# ---------------------------------------------------------------------------
# symmetric informationally complete measurements

@dataclass(frozen=True, eq=False)
class SicPovm:
    """d^2 subnormalized projectors Pi_k = |psi_k><psi_k| / d with equal
    pairwise fidelity (d delta_kl + 1)/(d + 1), resolving the identity."""

    d: int
    projectors: tuple


_TETRAHEDRON = np.array(
    [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
) / np.sqrt(3.0)


def sic_povm(d: int) -> SicPovm:
    """Construct the qubit SIC POVM from the Bloch tetrahedron."""
    if d != 2:
        raise UnsupportedDimsError(f"SIC construction implemented for d = 2 only, got {d}")
    projectors = tuple(
        (np.eye(2, dtype=complex) + n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2]) / 4.0
        for n in _TETRAHEDRON
    )
    return SicPovm(2, projectors)


def _esic_elements(s: SicPovm) -> list:
    scale = np.sqrt(s.d * (s.d + 1) / 2.0)
    return [scale * pi for pi in s.projectors]


_DEFAULT_SIC = sic_povm(2)
# Tr[(E_k (x) E_l) rho] for the default qubit pair, stacked for one einsum
_ESIC_STACK = np.array(
    [kron(ek, el) for ek in _esic_elements(_DEFAULT_SIC) for el in _esic_elements(_DEFAULT_SIC)]
)


def esic(rho: DensityMatrix, sic_a: SicPovm | None = None,
         sic_b: SicPovm | None = None, tol: float = TOL) -> CriterionVerdict:
    """Trace norm of the SIC correlation matrix [P]_kl = Tr[(E_k (x) E_l) rho].

    The elements E_k = sqrt(d(d+1)/2) Pi_k are scaled so that every pure
    product state sits exactly at the threshold 1; separable states never
    exceed it.
    """
    sic_a = sic_a or _DEFAULT_SIC
    sic_b = sic_b or _DEFAULT_SIC
    if sic_a.d != rho.dims.dA or sic_b.d != rho.dims.dB:
        raise DimensionMismatchError(
            f"SIC dimensions ({sic_a.d}, {sic_b.d}) do not match state dims {tuple(rho.dims)}"
        )
    if sic_a is _DEFAULT_SIC and sic_b is _DEFAULT_SIC and tuple(rho.dims) == (2, 2):
        p = np.einsum("kij,ji->k", _ESIC_STACK, rho.mat).real.reshape(4, 4)
    else:
        ea = _esic_elements(sic_a)
        eb = _esic_elements(sic_b)
        p = np.array([[np.trace(kron(ek, el) @ rho.mat).real for el in eb] for ek in ea])
    stat = float(np.linalg.svd(p, compute_uv=False).sum())
    verdict = Verdict.ENTANGLED if stat > 1.0 + tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("esic", stat, 1.0, verdict)


# ---------------------------------------------------------------------------
# local uncertainty relations

def lur(rho: DensityMatrix, obs_a, obs_b, c_a: float, c_b: float,
        tol: float = TOL) -> CriterionVerdict:
    """Sum of variances sum_k Var(A_k (x) I + I (x) B_k).

    Separable states obey the combined local uncertainty bound c_a + c_b;
    a variance sum below it certifies entanglement.
    """
    if len(obs_a) != len(obs_b):
        raise LengthMismatchError(
            f"observable lists differ in length: {len(obs_a)} vs {len(obs_b)}"
        )
    if c_a <= 0.0 or c_b <= 0.0:
        raise OutOfRangeError(f"uncertainty bounds must be positive, got {c_a}, {c_b}")
    eye_a = np.eye(rho.dims.dA)
    eye_b = np.eye(rho.dims.dB)
    total = 0.0
    for oa, ob in zip(obs_a, obs_b):
        c = kron(oa.matrix, eye_b) + kron(eye_a, ob.matrix)
        mean = np.trace(rho.mat @ c).real
        mean_sq = np.trace(rho.mat @ c @ c).real
        total += mean_sq - mean * mean
    threshold = c_a + c_b
    verdict = Verdict.ENTANGLED if total < threshold - tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("lur", float(total), threshold, verdict)


def lur_pauli_default(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """LUR test with the Pauli triple on both sides and bounds c_a = c_b = 2.

    The bound is min over single-qubit states of sum_i Var(sigma_i)
    = 3 - |bloch|^2 = 2. Signs of the B-side observables are flipped
    greedily, axis by axis, to minimize the variance sum before testing.
    """
    _require_two_qubits(rho.dims, "the default LUR test")
    obs_a = []
    obs_b = []
    signs = []
    for pauli in PAULIS:
        best_sign = 1.0
        best_var = np.inf
        for sign in (1.0, -1.0):
            c = kron(pauli, np.eye(2)) + sign * kron(np.eye(2), pauli)
            mean = np.trace(rho.mat @ c).real
            var = np.trace(rho.mat @ c @ c).real - mean * mean
            if var < best_var:
                best_var = var
                best_sign = sign
        obs_a.append(Dichotomic(pauli))
        obs_b.append(Dichotomic(best_sign * pauli))
        signs.append(best_sign)
    out = lur(rho, obs_a, obs_b, 2.0, 2.0, tol=tol)
    return CriterionVerdict("lur", out.statistic, out.threshold, out.verdict,
                            details={"b_signs": signs})


# ---------------------------------------------------------------------------
# witnesses and positive maps

def witness_eval(rho: DensityMatrix, w, tol: float = TOL) -> CriterionVerdict:
    """Expectation Tr(W rho) of a witness; a negative value certifies entanglement."""
    w = as_cmat(w)
    if w.shape != rho.mat.shape:
        raise DimensionMismatchError(
            f"witness shape {w.shape} does not match state side {rho.mat.shape}"
        )
    dev = np.abs(w - w.conj().T).max()
    if dev > TOL:
        raise NotHermitianError(f"witness deviates from Hermitian by {dev:.3e}")
    stat = float(np.trace(w @ rho.mat).real)
    verdict = Verdict.ENTANGLED if stat < -tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("witness", stat, 0.0, verdict)


def witness_swap(rho: DensityMatrix, tol: float = TOL) -> CriterionVerdict:
    """Witness test with the flip operator V (V|phi>|psi> = |psi>|phi>)."""
    if rho.dims.dA != rho.dims.dB:
        raise UnsupportedDimsError(
            f"the flip operator needs equal local dimensions, got {tuple(rho.dims)}"
        )
    out = witness_eval(rho, swap_operator(rho.dims.dA), tol=tol)
    return CriterionVerdict("witness_swap", out.statistic, out.threshold, out.verdict)


def choi_of_transpose(d: int) -> np.ndarray:
    """Choi matrix of the transpose map (the flip operator)."""
    return swap_operator(d)


def choi_of_reduction(d: int) -> np.ndarray:
    """Choi matrix of L(X) = I Tr(X) - X."""
    return np.eye(d * d, dtype=complex) - choi_of_identity(d)


def choi_of_identity(d: int) -> np.ndarray:
    """Choi matrix of the identity map."""
    c = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            c[i * d + i, j * d + j] = 1.0
    return c


def apply_map(rho: DensityMatrix, choi: np.ndarray, side: str = "A") -> np.ndarray:
    """Apply a map, given by its Choi matrix, to one subsystem of rho."""
    choi = as_cmat(choi)
    d = rho.dims.dA if side == "A" else rho.dims.dB
    if choi.shape != (d * d, d * d):
        raise DimensionMismatchError(
            f"Choi matrix shape {choi.shape} does not match side {side} dimension {d}"
        )
    c4 = choi.reshape(d, d, d, d)
    r4 = rho.mat.reshape(rho.dims.dA, rho.dims.dB, rho.dims.dA, rho.dims.dB)
    if side == "A":
        out = np.einsum("iajb,ikjl->akbl", c4, r4)
    elif side == "B":
        out = np.einsum("kalb,ikjl->iajb", c4, r4)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return out.reshape(rho.dims.side, rho.dims.side)


def map_criterion(rho: DensityMatrix, choi: np.ndarray, side: str = "A",
                  tol: float = TOL) -> CriterionVerdict:
    """Positivity of (Lambda applied to one side)(rho) for a positive map Lambda.

    The statistic is the minimum eigenvalue of the image; negativity
    certifies entanglement. With the transpose and reduction Choi matrices
    this reproduces the ppt and reduction statistics.
    """
    image = apply_map(rho, choi, side=side)
    w, _ = eig_hermitian(image)
    stat = float(w[0])
    verdict = Verdict.ENTANGLED if stat < -tol else Verdict.INCONCLUSIVE
    return CriterionVerdict("map_criterion", stat, 0.0, verdict)


# ---------------------------------------------------------------------------
# registry used by the sweep/audit harness and the CLI

@dataclass(frozen=True)
class CriterionInfo:
    name: str
    pure_only: bool
    run: object  # callable (state, tol, seed) -> CriterionVerdict
    dims: tuple | None = None  # None means any bipartite dims


def _mixed(fn):
    return lambda state, tol, seed: fn(state, tol=tol)


CRITERIA: dict[str, CriterionInfo] = {
    info.name: info
    for info in (
        CriterionInfo("ppt", False, _mixed(ppt)),
        CriterionInfo("reduction", False, _mixed(reduction)),
        CriterionInfo("concurrence_mixed", False, _mixed(concurrence_mixed), dims=(2, 2)),
        CriterionInfo("majorization", False, _mixed(majorization)),
        CriterionInfo("ccnr", False, _mixed(ccnr)),
        CriterionInfo("correlation_matrix", False, _mixed(correlation_matrix), dims=(2, 2)),
        CriterionInfo("esic", False, _mixed(esic), dims=(2, 2)),
        CriterionInfo("lur", False, _mixed(lur_pauli_default), dims=(2, 2)),
        CriterionInfo("witness_swap", False, _mixed(witness_swap), dims=(2, 2)),
        CriterionInfo("chsh_optimize", False,
                      lambda state, tol, seed: chsh_optimize(state, seed=seed, tol=tol),
                      dims=(2, 2)),
        CriterionInfo("schmidt_rank", True, _mixed(schmidt_rank_criterion)),
        CriterionInfo("entanglement_entropy", True, _mixed(entanglement_entropy)),
        CriterionInfo("concurrence_pure", True, _mixed(concurrence_pure), dims=(2, 2)),
    )
}


def applicable_criteria(dims: BipartiteDims, pure: bool) -> list[str]:
    """Names of all criteria usable on a state of the given kind and dims."""
    out = []
    for info in CRITERIA.values():
        if info.pure_only and not pure:
            continue
        if info.dims is not None and tuple(dims) != info.dims:
            continue
        out.append(info.name)
    return out


def evaluate(name: str, state, tol: float = TOL, seed: int = 0) -> CriterionVerdict:
    """Run one registered criterion on a DensityMatrix or PureState."""
    if name not in CRITERIA:
        raise OutOfRangeError(f"unknown criterion {name!r}; known: {sorted(CRITERIA)}")
    info = CRITERIA[name]
    if info.pure_only:
        if not isinstance(state, PureState):
            raise OutOfRangeError(f"criterion {name!r} applies to pure states only")
        return info.run(state, tol, seed)
    if isinstance(state, PureState):
        state = pure_to_density(state)
    return info.run(state, tol, seed)
