"""Tests for the finite-difference position-operator variants."""

import numpy as np
import pytest

from photonguide import momentum_basis as mb
from photonguide import position_operator as po
from photonguide.errors import ComponentMismatch, StencilCrossesSingularity
from photonguide.position_operator import PositionKind, Scheme

RNG = np.random.default_rng(20240818)


def sample_k(rng, n, min_seam=0.5):
    out = []
    while len(out) < n:
        k = rng.uniform(-3, 3, 3)
        if po.singular_distance(k) >= min_seam:
            out.append(k)
    return out


class TestGradK:
    def test_exact_on_linear(self):
        A = RNG.standard_normal((4, 3))
        b = RNG.standard_normal(4)
        grad = po.grad_k(lambda k: A @ k + b, [1.0, 0.5, 2.0], Scheme(h=1e-3))
        assert np.allclose(grad, A.T, atol=1e-12)

    def test_phase_gradient_richardson(self):
        # Oracle: d/dk_j exp(-i x0.k) = -i x0_j exp(-i x0.k); the error must
        # shrink by 4x when h is halved (order 2).
        x0 = np.array([1.0, -2.0, 0.5])
        k = np.array([0.3, 0.4, 1.2])

        def fn(q):
            return np.array([np.exp(-1j * x0 @ q)])

        exact = np.outer(-1j * x0, fn(k))
        err_h = np.max(np.abs(po.grad_k(fn, k, Scheme(h=1e-3)) - exact))
        err_h2 = np.max(np.abs(po.grad_k(fn, k, Scheme(h=5e-4)) - exact))
        # Leading truncation error is h^2 |x0_j|^3 / 6 <= 1.4e-6 here.
        assert err_h <= 2e-6
        assert 3.5 <= err_h / err_h2 <= 4.5

    def test_order_four_is_sharper(self):
        x0 = np.array([1.0, -2.0, 0.5])
        k = np.array([0.3, 0.4, 1.2])

        def fn(q):
            return np.array([np.exp(-1j * x0 @ q)])

        exact = np.outer(-1j * x0, fn(k))
        err2 = np.max(np.abs(po.grad_k(fn, k, Scheme(h=1e-3, order=2)) - exact))
        err4 = np.max(np.abs(po.grad_k(fn, k, Scheme(h=1e-3, order=4)) - exact))
        assert err4 < err2 * 1e-3

    def test_stencil_near_seam_rejected(self):
        with pytest.raises(StencilCrossesSingularity):
            po.grad_k(lambda k: k, [1e-5, 0.0, -1.0], Scheme(h=1e-4))
        with pytest.raises(StencilCrossesSingularity):
            po.grad_k(lambda k: k, [1e-5, 1e-5, 1e-5], Scheme(h=1e-4))

    def test_scheme_validation(self):
        with pytest.raises(ValueError):
            Scheme(h=0.0)
        with pytest.raises(ValueError):
            Scheme(h=1e-4, order=3)


class TestEigenvalueProperty:
    def test_origin_localized_state(self):
        ks = sample_k(RNG, 10)
        res = po.eigenvalue_residual([0, 0, 0], +1, ks, Scheme(h=1e-4))
        assert res <= 1e-6

    @pytest.mark.parametrize("lam", [-1, 0, +1])
    def test_shifted_state_all_helicities(self, lam):
        # The longitudinal mode participates on an equal footing.
        res = po.eigenvalue_residual(
            [1.0, -2.0, 0.5], lam, [np.array([0.3, 0.4, 1.2])], Scheme(h=1e-4))
        assert res <= 1e-6

    @pytest.mark.parametrize("kind", [PositionKind.SPINOR_PLUS, PositionKind.SPINOR_MINUS])
    def test_spinor_variants(self, kind):
        ks = sample_k(RNG, 5)
        for lam in mb.HELICITIES:
            res = po.eigenvalue_residual([0.7, 0.1, -0.4], lam, ks, Scheme(h=1e-4), kind=kind)
            assert res <= 1e-6, (kind, lam, res)

    def test_second_order_convergence(self):
        ks = sample_k(RNG, 5)
        r1 = po.eigenvalue_residual([1.0, -2.0, 0.5], +1, ks, Scheme(h=1e-4))
        r2 = po.eigenvalue_residual([1.0, -2.0, 0.5], +1, ks, Scheme(h=5e-5))
        order = np.log2(r1 / r2)
        assert abs(order - 2.0) <= 0.2

    def test_weight_term_is_load_bearing(self):
        # Dropping the spectral-weight compensation must degrade the residual
        # by at least three orders of magnitude (negative control).
        ks = sample_k(RNG, 10)
        good = po.eigenvalue_residual([0, 0, 0], +1, ks, Scheme(h=1e-4))
        bad = po.eigenvalue_residual([0, 0, 0], +1, ks, Scheme(h=1e-4),
                                     include_weight_term=False)
        assert bad >= 1e3 * good
        # The broken residual has the predicted 1/(2 omega) magnitude.
        expected = max(1.0 / (2.0 * mb.omega(k)) for k in ks)
        assert abs(bad - expected) <= 1e-6 * expected

    def test_naive_operator_fails_eigenvalue(self):
        # i d/dk alone is not diagonal on the localized family.
        ks = sample_k(RNG, 10)
        res = po.eigenvalue_residual([0, 0, 0], +1, ks, Scheme(h=1e-4),
                                     kind=PositionKind.NAIVE)
        assert res > 1e-2


class TestCommutators:
    @pytest.mark.parametrize("kind", list(PositionKind))
    def test_components_commute(self, kind):
        if kind in (PositionKind.VECTOR, PositionKind.NAIVE):
            phi = mb.localized_wavefunction([0.3, -0.2, 0.4], +1)
        else:
            branch = "plus" if kind is PositionKind.SPINOR_PLUS else "minus"
            phi = mb.localized_spinor_wavefunction([0.3, -0.2, 0.4], +1, branch)
        scheme = Scheme(h=1e-3)
        for k in sample_k(RNG, 3, min_seam=0.8):
            for i in range(3):
                for j in range(i + 1, 3):
                    res = po.commutator_residual(kind, i, j, phi, k, scheme)
                    assert res <= 1e-5, (kind, i, j, res)

    def test_commutator_decays_second_order(self):
        phi = mb.localized_wavefunction([0.3, -0.2, 0.4], +1)
        k = np.array([1.1, -0.8, 0.9])
        r1 = po.commutator_residual(PositionKind.VECTOR, 0, 1, phi, k, Scheme(h=1e-3))
        r2 = po.commutator_residual(PositionKind.VECTOR, 0, 1, phi, k, Scheme(h=5e-4))
        order = np.log2(r1 / r2)
        assert abs(order - 2.0) <= 0.4

    def test_diagonal_is_zero(self):
        phi = mb.localized_wavefunction([0, 0, 0], -1)
        assert po.commutator_residual(
            PositionKind.VECTOR, 1, 1, phi, [1.0, 0.5, 0.7], Scheme(h=1e-3)) == 0.0


class TestConnectionIdentity:
    def test_full_frame_reproduces_gradient(self):
        for k in sample_k(RNG, 20):
            for lam in mb.HELICITIES:
                res = po.connection_identity_residual(k, lam, Scheme(h=1e-4))
                assert res <= 1e-10, (k, lam, res)

    def test_truncated_frame_detected(self):
        # Dropping the longitudinal sector removes a projection of the
        # gradient and the residual jumps to order one.
        k = np.array([1.0, 0.7, -0.5])
        res = po.connection_identity_residual(k, +1, Scheme(h=1e-4), helicities=(-1, +1))
        assert res > 1e-3


class TestApplyPosition:
    def test_linearity(self):
        scheme = Scheme(h=1e-3)
        phi1 = mb.localized_wavefunction([0.3, 0.1, -0.2], +1)
        phi2 = mb.localized_wavefunction([-0.5, 0.4, 0.9], -1)
        a, b = 1.7 - 0.3j, -0.8 + 1.1j

        def combo(k):
            return a * phi1(k) + b * phi2(k)

        for k in sample_k(RNG, 5):
            lhs = po.apply_position(PositionKind.VECTOR, combo, k, scheme)
            rhs = (a * po.apply_position(PositionKind.VECTOR, phi1, k, scheme)
                   + b * po.apply_position(PositionKind.VECTOR, phi2, k, scheme))
            assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))

    def test_component_mismatch_rejected(self):
        phi6 = mb.localized_spinor_wavefunction([0, 0, 0], +1)
        with pytest.raises(ComponentMismatch):
            po.apply_position(PositionKind.VECTOR, phi6, [1.0, 0.5, 0.7], Scheme(h=1e-4))
        phi3 = mb.localized_wavefunction([0, 0, 0], +1)
        with pytest.raises(ComponentMismatch):
            po.apply_position(PositionKind.SPINOR_PLUS, phi3, [1.0, 0.5, 0.7], Scheme(h=1e-4))

    def test_naive_accepts_both_widths(self):
        phi3 = mb.localized_wavefunction([0, 0, 0], +1)
        phi6 = mb.localized_spinor_wavefunction([0, 0, 0], +1)
        k = [1.0, 0.5, 0.7]
        assert po.apply_position(PositionKind.NAIVE, phi3, k, Scheme(h=1e-4)).shape == (3, 3)
        assert po.apply_position(PositionKind.NAIVE, phi6, k, Scheme(h=1e-4)).shape == (3, 6)

    def test_singular_distance(self):
        assert po.singular_distance([0.0, 0.0, -2.0]) == 0.0
        assert po.singular_distance([3.0, 4.0, -1.0]) == 5.0
        assert po.singular_distance([0.6, 0.8, 2.0]) == pytest.approx(np.sqrt(5.0))
