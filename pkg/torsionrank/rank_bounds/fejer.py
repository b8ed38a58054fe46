"""Fejer-kernel test function with compactly supported Fourier transform."""

__all__ = [
    "FejerKernel",
    "fourier_pair_check",
    "moment_prime_integrals",
    "MomentIntegral",
]

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np
from scipy import integrate


@dataclass(frozen=True)
class FejerKernel:
    """``phi(x) = sin^2(pi sigma x) / (2 pi x)^2`` and ``phi_hat(u) = (sigma - |u|)/4``
    on ``|u| <= sigma``.

    Examples
    --------
    >>> phi = torsionrank.rank_bounds.FejerKernel(1 / 9)
    >>> phi.phi(0) == phi.phi0
    True

    """

    sigma: float

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise ValueError(f"Support must be positive, got sigma={self.sigma}.")
        object.__setattr__(self, "sigma", float(self.sigma))

    @property
    def phi0(self) -> float:
        """``phi(0) = sigma^2 / 4``."""
        return self.sigma**2 / 4

    @property
    def phi_hat0(self) -> float:
        """``phi_hat(0) = sigma / 4``."""
        return self.sigma / 4

    def phi(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            value = np.sin(np.pi * self.sigma * x) ** 2 / (2 * np.pi * x) ** 2
        value = np.where(x == 0, self.phi0, value)
        return value if value.ndim else float(value)

    def phi_hat(self, u):
        u = np.asarray(u, dtype=float)
        value = np.clip(self.sigma - np.abs(u), 0, None) / 4
        return value if value.ndim else float(value)


def _cos_tail(omega: float, L: float) -> float:
    """``int_L^inf cos(omega x) / x^2 dx``."""
    if omega == 0:
        return 1 / L
    return integrate.quad(lambda x: 1 / x**2, L, np.inf, weight="cos", wvar=omega)[0]


def _transform(test: FejerKernel, u: float, periods: int = 40) -> float:
    sigma = test.sigma
    L = periods / sigma
    edges = np.linspace(0.0, L, 8 * periods * max(1, int(np.ceil(abs(u) / sigma))) + 1)
    head = sum(
        integrate.quad(lambda x: test.phi(x) * np.cos(2 * np.pi * u * x), x0, x1)[0]
        for x0, x1 in zip(edges[:-1], edges[1:])
    )
    # phi = (1 - cos(2 pi sigma x)) / (8 pi^2 x^2) beyond L
    tail = (
        _cos_tail(2 * np.pi * abs(u), L)
        - _cos_tail(2 * np.pi * abs(sigma + u), L) / 2
        - _cos_tail(2 * np.pi * abs(sigma - u), L) / 2
    ) / (8 * np.pi**2)
    return 2 * (head + tail)


def fourier_pair_check(sigma: float, us: Iterable[float], /) -> float:
    """Largest ``|int phi(x) cos(2 pi u x) dx - phi_hat(u)|`` over ``us``."""
    test = FejerKernel(sigma)
    return max(abs(_transform(test, float(u)) - test.phi_hat(float(u))) for u in us)


@dataclass(frozen=True)
class MomentIntegral:
    value: float
    expected: Fraction

    @property
    def error(self) -> float:
        return abs(self.value - float(self.expected))


def moment_prime_integrals(sigma: Union[float, Fraction], /) -> MomentIntegral:
    """``int |u| phi_hat(u)^2 du`` by quadrature, against ``sigma^4/96 =
    phi(0)^2/6``.

    Examples
    --------
    >>> torsionrank.rank_bounds.moment_prime_integrals(1).error < 1e-10
    True

    """
    test = FejerKernel(float(sigma))
    value, _ = integrate.quad(
        lambda u: abs(u) * test.phi_hat(u) ** 2,
        -test.sigma,
        test.sigma,
        points=[0.0],
        epsabs=1e-14,
        epsrel=1e-12,
    )
    exact = Fraction(sigma).limit_denominator(10**12) ** 4 / 96
    return MomentIntegral(value, exact)
