import numpy as np
import pytest

from sepkit.errors import DimensionMismatchError, NotHermitianError, NotPSDError
from sepkit.linalg import (
    PAULIS,
    SIGMA_X,
    BipartiteDims,
    eig_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    realign,
    singular_values,
    sqrt_psd,
    swap_operator,
    trace_norm,
)
from sepkit.states import BELL_PHI_PLUS, BELL_PSI_PLUS, rho_p_family, werner

D22 = BipartiteDims(2, 2)


def dm(vec):
    return np.outer(vec, vec.conj())


def random_rho(rng, d=4):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return m / m.trace().real


def realign_reference(rho, dA, dB):
    """Element-by-element index reshuffle, independent of the library path."""
    out = np.zeros((dA * dA, dB * dB), dtype=complex)
    for i in range(dA):
        for j in range(dA):
            for k in range(dB):
                for l in range(dB):
                    out[i * dA + j, k * dB + l] = rho[i * dB + k, j * dB + l]
    return out


def partial_transpose_reference(rho, dA, dB):
    out = np.zeros_like(rho)
    for i in range(dA):
        for j in range(dA):
            for k in range(dB):
                for l in range(dB):
                    out[i * dB + k, j * dB + l] = rho[j * dB + k, i * dB + l]
    return out


class TestKron:
    def test_identity(self):
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_sigma_x_pair(self):
        expected = np.zeros((4, 4))
        expected[0, 3] = expected[1, 2] = expected[2, 1] = expected[3, 0] = 1
        np.testing.assert_allclose(kron(SIGMA_X, SIGMA_X), expected)

    def test_basis_projectors(self):
        p0 = np.diag([1.0, 0.0])
        p1 = np.diag([0.0, 1.0])
        np.testing.assert_allclose(kron(p0, p1), np.diag([0.0, 1.0, 0.0, 0.0]))


class TestEigHermitian:
    def test_werner_two_thirds(self):
        w, v = eig_hermitian(werner(2 / 3).mat)
        np.testing.assert_allclose(w, [1 / 12, 1 / 12, 1 / 12, 3 / 4], atol=1e-12)
        np.testing.assert_allclose(v @ np.diag(w) @ v.conj().T, werner(2 / 3).mat, atol=1e-12)

    def test_identity(self):
        w, _ = eig_hermitian(np.eye(4))
        np.testing.assert_allclose(w, np.ones(4))

    def test_diagonal_sorted_ascending(self):
        w, _ = eig_hermitian(np.diag([3.0, -1.0]))
        np.testing.assert_allclose(w, [-1.0, 3.0])

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_eigenvalue_sum_is_trace(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            rho = random_rho(rng)
            w, _ = eig_hermitian(rho)
            assert abs(w.sum() - rho.trace().real) < 1e-9

    def test_reconstruction_bound(self):
        rng = np.random.default_rng(19)
        for _ in range(100):
            g = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
            h = g + g.conj().T
            w, v = eig_hermitian(h)
            err = np.linalg.norm(h - (v * w) @ v.conj().T, 2)
            assert err <= 1e-9 * np.linalg.norm(h, 2)
            np.testing.assert_allclose(v.conj().T @ v, np.eye(6), atol=1e-12)


class TestSingularValues:
    def test_identity(self):
        np.testing.assert_allclose(singular_values(np.eye(4)), np.ones(4))

    def test_rank_one(self):
        rng = np.random.default_rng(0)
        u = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        u /= np.linalg.norm(u)
        v /= np.linalg.norm(v)
        sv = singular_values(np.outer(u, v))
        np.testing.assert_allclose(sv, [1, 0, 0, 0], atol=1e-12)

    def test_realigned_bell_state(self):
        rho = dm(BELL_PHI_PLUS)
        sv_oracle = np.linalg.svd(realign_reference(rho, 2, 2), compute_uv=False)
        np.testing.assert_allclose(sv_oracle, [0.5] * 4, atol=1e-12)
        np.testing.assert_allclose(singular_values(realign(rho, D22)), sv_oracle, atol=1e-12)


class TestTraceNorm:
    def test_identity(self):
        assert abs(trace_norm(np.eye(4)) - 4.0) < 1e-12

    def test_zero(self):
        assert trace_norm(np.zeros((3, 3))) == 0.0

    def test_realigned_rho_p_at_one(self):
        # the pure product endpoint of the rho_p family sits exactly at 1
        assert abs(trace_norm(realign(rho_p_family(1.0).mat, D22)) - 1.0) < 1e-12

    def test_unitary_invariance(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            rho = random_rho(rng)
            q1, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
            q2, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
            assert abs(trace_norm(q1 @ rho @ q2.conj().T) - trace_norm(rho)) < 1e-9


class TestSqrtPsd:
    def test_identity(self):
        np.testing.assert_allclose(sqrt_psd(np.eye(3)), np.eye(3), atol=1e-12)

    def test_diagonal(self):
        np.testing.assert_allclose(sqrt_psd(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-12)

    def test_maximally_mixed(self):
        np.testing.assert_allclose(sqrt_psd(np.eye(4) / 4), np.eye(4) / 2, atol=1e-12)

    def test_square_recovers_input(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            h = random_rho(rng)
            r = sqrt_psd(h)
            err = np.abs(r @ r - h).max()
            assert err <= 1e-9 * np.linalg.norm(h, 2)

    def test_rejects_negative(self):
        with pytest.raises(NotPSDError):
            sqrt_psd(np.diag([1.0, -0.5]))

    def test_clamps_roundoff_negativity(self):
        got = sqrt_psd(np.diag([1.0, -1e-12]))
        np.testing.assert_allclose(got, np.diag([1.0, 0.0]), atol=1e-9)


class TestPartialTranspose:
    def test_werner_matrix_display(self):
        p = 0.37
        got = partial_transpose(werner(p).mat, D22)
        expected = np.array([
            [1 - p, 0, 0, 2 * p],
            [0, p + 1, 0, 0],
            [0, 0, p + 1, 0],
            [2 * p, 0, 0, 1 - p],
        ]) / 4.0
        np.testing.assert_allclose(got, expected, atol=1e-12)

    def test_product_state_factorizes(self):
        rng = np.random.default_rng(7)
        ra, rb = random_rho(rng, 2), random_rho(rng, 2)
        got = partial_transpose(kron(ra, rb), D22, side="A")
        np.testing.assert_allclose(got, kron(ra.T, rb), atol=1e-12)

    def test_matches_reference_and_involution(self):
        rng = np.random.default_rng(13)
        for dims in (BipartiteDims(2, 2), BipartiteDims(2, 3), BipartiteDims(3, 2)):
            for _ in range(20):
                rho = random_rho(rng, dims.side)
                for side in ("A", "B"):
                    pt = partial_transpose(rho, dims, side=side)
                    twice = partial_transpose(pt, dims, side=side)
                    np.testing.assert_allclose(twice, rho, atol=1e-12)
                    assert abs(pt.trace() - rho.trace()) < 1e-12
                    assert np.abs(pt - pt.conj().T).max() < 1e-12
                np.testing.assert_allclose(
                    partial_transpose(rho, dims, side="A"),
                    partial_transpose_reference(rho, dims.dA, dims.dB),
                    atol=1e-14,
                )

    def test_involution_bulk(self):
        rng = np.random.default_rng(17)
        for _ in range(1000):
            rho = random_rho(rng)
            pt = partial_transpose(rho, D22)
            np.testing.assert_allclose(partial_transpose(pt, D22), rho, atol=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            partial_transpose(np.eye(5), D22)


class TestPartialTrace:
    def test_bell_keep_a(self):
        got = partial_trace(dm(BELL_PHI_PLUS), D22, keep="A")
        np.testing.assert_allclose(got, np.eye(2) / 2, atol=1e-12)

    def test_product_recovers_factor(self):
        rng = np.random.default_rng(2)
        sigma, tau = random_rho(rng, 2), random_rho(rng, 2)
        np.testing.assert_allclose(partial_trace(kron(sigma, tau), D22, keep="A"), sigma, atol=1e-12)
        np.testing.assert_allclose(partial_trace(kron(sigma, tau), D22, keep="B"), tau, atol=1e-12)

    def test_plus_plus(self):
        plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
        got = partial_trace(dm(np.kron(plus, plus)), D22, keep="A")
        np.testing.assert_allclose(got, dm(plus), atol=1e-12)

    def test_trace_preserved(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            rho = random_rho(rng)
            assert abs(partial_trace(rho, D22, keep="A").trace() - rho.trace()) < 1e-12


class TestRealign:
    def test_maximally_mixed(self):
        assert abs(trace_norm(realign(np.eye(4) / 4, D22)) - 0.5) < 1e-12

    def test_bell_state(self):
        assert abs(trace_norm(realign(dm(BELL_PSI_PLUS), D22)) - 2.0) < 1e-12

    @pytest.mark.parametrize("p", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_rho_p_closed_form(self, p):
        inner = np.sqrt(p**2 + (1 - p) ** 2)
        closed = (1 - p
                  + np.sqrt(p**2 / 2 + (1 - p) ** 2 / 4 + p / 2 * inner)
                  + np.sqrt(p**2 / 2 + (1 - p) ** 2 / 4 - p / 2 * inner))
        assert abs(trace_norm(realign(rho_p_family(p).mat, D22)) - closed) < 1e-9

    def test_matches_reference(self):
        rng = np.random.default_rng(31)
        for dims in (BipartiteDims(2, 2), BipartiteDims(2, 3)):
            rho = random_rho(rng, dims.side)
            np.testing.assert_allclose(
                realign(rho, dims), realign_reference(rho, dims.dA, dims.dB), atol=1e-14
            )

    def test_shape(self):
        dims = BipartiteDims(2, 3)
        assert realign(np.eye(6) / 6, dims).shape == (4, 9)

    def test_product_factorization(self):
        rng = np.random.default_rng(37)
        for _ in range(100):
            ra, rb = random_rho(rng, 2), random_rho(rng, 2)
            expected = np.linalg.norm(ra) * np.linalg.norm(rb)  # Frobenius norms
            assert abs(trace_norm(realign(kron(ra, rb), D22)) - expected) < 1e-9


class TestSwapOperator:
    def test_swaps_product_vectors(self):
        rng = np.random.default_rng(41)
        v = swap_operator(3)
        a = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        b = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        np.testing.assert_allclose(v @ np.kron(a, b), np.kron(b, a), atol=1e-12)

    def test_trace_is_dimension(self):
        assert abs(swap_operator(2).trace() - 2.0) < 1e-12

    def test_paulis_are_dichotomic(self):
        for p in PAULIS:
            w = np.linalg.eigvalsh(p)
            np.testing.assert_allclose(w, [-1.0, 1.0], atol=1e-12)
