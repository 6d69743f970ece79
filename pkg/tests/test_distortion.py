"""Distortion function phi_K: closed forms, round trips, the conjugation
identity, the explicit 4^{1-1/K} bound, derivative formulas against central
finite differences, and monotonicity of the auxiliary f_K.

Frozen values come from 40-digit mpmath bisection of u_a(s) = u_a(r)/K.
"""
import math

import numpy as np
import pytest

from gft import (
    DomainError,
    lemma3_fk,
    phi_k,
    phi_k_product,
    phi_ka,
    phi_partial_k,
    phi_partial_r,
)

R_GRID = np.linspace(0.01, 0.99, 99)
K_VALUES = (1.5, 2.0, 4.0)


class TestClosedForms:
    def test_phi_2_closed_form(self):
        for r in R_GRID:
            r = float(r)
            expected = 2.0 * math.sqrt(r) / (1.0 + r)
            assert phi_k(2.0, r).value == pytest.approx(expected, abs=1e-10)

    def test_phi_half_closed_form(self):
        for r in R_GRID:
            r = float(r)
            rc = math.sqrt((1.0 - r) * (1.0 + r))
            expected = (1.0 - rc) / (1.0 + rc)
            assert phi_k(0.5, r).value == pytest.approx(expected, abs=1e-10)

    @pytest.mark.parametrize("k, r, expected", [
        (3.0, 0.7, 0.99929684902983572),
        (1.5, 0.1, 0.33277035238850368),
    ])
    def test_frozen_oracle(self, k, r, expected):
        assert phi_k(k, r).value == pytest.approx(expected, abs=1e-10)

    def test_generalized_frozen_oracle(self):
        assert phi_ka(0.25, 2.0, 0.3).value == pytest.approx(
            0.92965903856082598, abs=1e-10)

    def test_identity_dilatation(self):
        res = phi_k(1.0, 0.37)
        assert res.value == 0.37
        assert res.residual == 0.0

    def test_residual_reported(self):
        assert phi_k(2.0, 0.25).residual < 1e-10


class TestRoundTripAndIdentity:
    def test_round_trip(self):
        for k in K_VALUES:
            for r in R_GRID:
                r = float(r)
                s = phi_k(k, r).value
                # once s is within ~1e-10 of 1, rounding s to a double already
                # costs ~1e-8 in the inverse image; only the well-conditioned
                # region can promise 1e-9
                tol = 1e-9 if 1.0 - s > 1e-10 else 2e-8
                assert phi_k(1.0 / k, s).value == pytest.approx(r, abs=tol)

    def test_conjugation_identity(self):
        # phi_K(r)^2 + phi_{1/K}(r')^2 = 1
        for k in (1.0,) + K_VALUES:
            for r in R_GRID:
                r = float(r)
                rc = math.sqrt((1.0 - r) * (1.0 + r))
                total = phi_k(k, r).value ** 2 + phi_k(1.0 / k, rc).value ** 2
                assert total == pytest.approx(1.0, abs=1e-9)

    def test_monotone_in_r(self):
        vals = [phi_k(2.0, float(r)).value for r in R_GRID]
        assert all(x < y for x, y in zip(vals, vals[1:]))

    def test_monotone_in_k(self):
        r = 0.4
        vals = [phi_k(k, r).value for k in (0.5, 1.0, 1.5, 2.0, 4.0)]
        assert all(x < y for x, y in zip(vals, vals[1:]))


class TestExplicitBound:
    def test_phi_4_bound(self):
        # phi_K(r) <= 4^{1-1/K} r^{1/K} for K >= 1, with margin >= -1e-12
        for k in (1.0,) + K_VALUES:
            for r in R_GRID:
                r = float(r)
                bound = 4.0 ** (1.0 - 1.0 / k) * r ** (1.0 / k)
                assert bound - phi_k(k, r).value >= -1e-12


class TestDerivatives:
    # kept inside the region where phi stays far enough from 1 that central
    # differences at h = 1e-6 are themselves accurate to ~1e-7
    A_GRID = (0.25, 0.4, 0.5)
    K_GRID = (1.25, 1.5, 2.0)
    R3 = (0.2, 0.5, 0.8)

    def test_partial_r_matches_central_difference(self):
        h = 1e-6
        for a in self.A_GRID:
            for k in self.K_GRID:
                for r in self.R3:
                    fd = (phi_ka(a, k, r + h).value - phi_ka(a, k, r - h).value) / (2 * h)
                    assert phi_partial_r(a, k, r) == pytest.approx(fd, rel=1e-5)

    def test_partial_k_matches_central_difference(self):
        h = 1e-6
        for a in self.A_GRID:
            for k in self.K_GRID:
                for r in self.R3:
                    fd = (phi_ka(a, k + h, r).value - phi_ka(a, k - h, r).value) / (2 * h)
                    assert phi_partial_k(a, k, r) == pytest.approx(fd, rel=1e-5)

    @pytest.mark.parametrize("fn, expected", [
        (phi_partial_r, 0.4391102071474887),
        (phi_partial_k, 0.2020398460540873),
    ])
    def test_frozen_oracle_generalized(self, fn, expected):
        assert fn(0.25, 2.0, 0.3) == pytest.approx(expected, rel=1e-9)

    @pytest.mark.parametrize("fn, expected", [
        (phi_partial_r, 0.5459926345523144),
        (phi_partial_k, 0.3108427610435973),
    ])
    def test_frozen_oracle_classical(self, fn, expected):
        assert fn(0.5, 1.5, 0.6) == pytest.approx(expected, rel=1e-9)


class TestProductForm:
    def test_collapses_at_k1(self):
        for r in (0.1, 0.37, 0.9):
            assert phi_k_product(1.0, r) == r

    def test_finite_positive(self):
        for k in K_VALUES:
            for r in (0.05, 0.5, 0.95):
                v = phi_k_product(k, r)
                assert math.isfinite(v) and v > 0.0


class TestLemma3Fk:
    def test_corrected_form_decreasing(self):
        for a in (0.1, 0.25, 0.5):
            for k in (1.5, 2.0, 4.0):
                vals = [lemma3_fk(a, k, float(r)) for r in R_GRID]
                assert all(x >= y - 1e-9 for x, y in zip(vals, vals[1:]))

    def test_literal_form_increasing(self):
        # the as-printed exponent gives an increasing function instead
        vals = [lemma3_fk(0.25, 2.0, float(r), literal=True) for r in R_GRID]
        assert all(x <= y + 1e-9 for x, y in zip(vals, vals[1:]))

    def test_forms_differ(self):
        assert lemma3_fk(0.25, 2.0, 0.5) != lemma3_fk(0.25, 2.0, 0.5, literal=True)


class TestDomains:
    def test_bad_r(self):
        for bad in (0.0, 1.0, -0.2):
            with pytest.raises(DomainError):
                phi_k(2.0, bad)

    def test_bad_k(self):
        for bad in (0.0, -1.0, math.inf):
            with pytest.raises(DomainError):
                phi_k(bad, 0.5)

    def test_bad_a(self):
        with pytest.raises(DomainError):
            phi_ka(0.7, 2.0, 0.5)
