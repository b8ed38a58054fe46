from fractions import Fraction

import numpy as np
import pytest

from torsionrank.rank_bounds import (
    FejerKernel,
    fourier_pair_check,
    moment_prime_integrals,
)


class TestFejerKernel:
    def test_values_at_zero(self) -> None:
        phi = FejerKernel(1 / 9)
        assert phi.phi(0) == phi.phi0 == pytest.approx(1 / 324)
        assert phi.phi_hat(0) == phi.phi_hat0 == pytest.approx(1 / 36)

    def test_support(self) -> None:
        phi = FejerKernel(0.5)
        assert phi.phi_hat(0.5) == 0
        assert phi.phi_hat(-0.7) == 0
        np.testing.assert_allclose(phi.phi_hat([-0.25, 0.25]), [0.0625, 0.0625])

    def test_nonnegative(self) -> None:
        x = np.linspace(-20, 20, 401)
        assert np.all(FejerKernel(0.3).phi(x) >= 0)

    @pytest.mark.parametrize("sigma", [0, -1])
    def test_invalid(self, sigma) -> None:
        with pytest.raises(ValueError):
            FejerKernel(sigma)


class TestFourierPair:
    def test_transform(self) -> None:
        assert fourier_pair_check(0.5, [0.0, 0.1, 0.25, 0.5, 0.6]) < 1e-6

    @pytest.mark.parametrize("sigma", [Fraction(1, 9), Fraction(1, 18), 1])
    def test_moment_integral(self, sigma) -> None:
        result = moment_prime_integrals(sigma)
        assert result.expected == Fraction(sigma) ** 4 / 96
        assert result.error < 1e-12
