"""Area and extents of the parameter region ``R_G(1) = {|f_G| <= 1, |g_G| <= 1}``.

``(a, b) = (rho^w_a cos t, rho^w_b sin t)`` turns the region into
``rho <= rho_max(t)``, so the area is a one-dimensional integral over ``t``::

    Area = int_0^2pi (w_a cos^2 t + w_b sin^2 t) rho_max(t)^W / W dt

with ``W = w_a + w_b`` and
``rho_max = min(|f(cos, sin)|^(-1/4), |g(cos, sin)|^(-1/6))``.

"""

__all__ = ["RegionArea", "region_area", "extents", "scaled_extents"]

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy import integrate

from ..core.configuration import config
from ..core.exceptions import RegionConvergenceError
from ..core.inform import get_logger
from ..torsion import TorsionGroup, model_polys

logger = get_logger(__name__)

MAX_SUBINTERVALS = 1 << 12


@dataclass(frozen=True)
class RegionArea:
    """Converged ``Area(R_G(1))``.

    Attributes
    ----------
    G
        The group.
    area
        Area estimate.
    tolerance
        Bound on the difference between the last two refinements.

    """

    G: TorsionGroup
    area: float
    tolerance: float

    def __float__(self) -> float:
        return self.area

    def lattice_estimate(self, X: Union[int, float], /) -> float:
        """Expected lattice points in ``R_G(X)``, ``Area X^(W/12)``."""
        return self.area * float(X) ** float(self.G.total_weight / 12)


def _rho_max(G: TorsionGroup) -> Callable[[np.ndarray], np.ndarray]:
    polys = model_polys(G)

    def rho_max(theta):
        f, g = polys.evaluate(np.cos(theta), np.sin(theta))
        with np.errstate(divide="ignore"):
            return np.minimum(np.abs(f) ** -0.25, np.abs(g) ** (-1 / 6))

    return rho_max


def _integrand(G: TorsionGroup) -> Callable[[float], float]:
    wa, wb = map(float, G.weights)
    W = wa + wb
    rho_max = _rho_max(G)

    def integrand(theta: float) -> float:
        c, s = np.cos(theta), np.sin(theta)
        return float((wa * c * c + wb * s * s) * rho_max(theta) ** W / W)

    return integrand


def _is_antipodal(G: TorsionGroup) -> bool:
    """``|f|`` and ``|g|`` are unchanged by ``(a, b) -> (-a, -b)``."""
    polys = model_polys(G)
    return all(
        len({(i + j) % 2 for i, j in poly}) == 1 for poly in (polys.f, polys.g)
    )


def _estimate(func: Callable[[float], float], lo: float, hi: float, n: int) -> float:
    edges = np.linspace(lo, hi, n + 1)
    return sum(
        integrate.quad(func, t0, t1, limit=200)[0]
        for t0, t1 in zip(edges[:-1], edges[1:])
    )


@lru_cache(maxsize=64)
def _region_area(label: str, tol: float, use_symmetry: bool) -> RegionArea:
    G = TorsionGroup.parse(label)
    func = _integrand(G)
    half = use_symmetry and _is_antipodal(G)
    hi, factor = (np.pi, 2.0) if half else (2 * np.pi, 1.0)

    n = 8
    previous = factor * _estimate(func, 0.0, hi, n)
    while n < MAX_SUBINTERVALS:
        n *= 2
        current = factor * _estimate(func, 0.0, hi, n)
        logger.debug(f"Area of R_{G.label}(1) with {n} subintervals: {current!r}")
        if abs(current - previous) < tol:
            return RegionArea(G, current, tol)
        previous = current
    raise RegionConvergenceError(
        f"Area of R_{G.label}(1) did not settle to {tol} within {n} subintervals."
    )


def region_area(
    G: Union[TorsionGroup, str],
    /,
    tol: Optional[float] = None,
    *,
    use_symmetry: bool = True,
) -> RegionArea:
    """Area of ``R_G(1)``, refined until successive estimates differ by ``< tol``.

    Parameters
    ----------
    G
        The group; the trivial group gives the square ``|a|, |b| <= 1``.
    tol
        Convergence tolerance. Defaults to ``config.census.tol``.
    use_symmetry
        Integrate over half the circle when the region is symmetric under
        ``(a, b) -> (-a, -b)``.

    Raises
    ------
    RegionConvergenceError
        If the estimate does not settle within the refinement cap.

    Examples
    --------
    >>> round(torsionrank.census.region_area("0").area, 6)
    4.0

    """
    G = TorsionGroup.parse(G)
    tol = float(config.census.tol if tol is None else tol)
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}.")
    return _region_area(G.label, tol, use_symmetry)


@lru_cache(maxsize=64)
def extents(
    G: Union[TorsionGroup, str], /, samples: int = 20001
) -> Tuple[float, float]:
    """Largest ``|a|`` and ``|b|`` over ``R_G(1)``, sampled on a dense angle grid."""
    G = TorsionGroup.parse(G)
    wa, wb = map(float, G.weights)
    theta = np.linspace(0.0, 2 * np.pi, samples)
    rho = _rho_max(G)(theta)
    a = np.max(rho**wa * np.abs(np.cos(theta)))
    b = np.max(rho**wb * np.abs(np.sin(theta)))
    return float(a), float(b)


def scaled_extents(
    G: Union[TorsionGroup, str], X: Union[int, float], /, slack: float = 1.02
) -> Tuple[int, int]:
    """Integer half-widths of a box containing ``R_G(X)``."""
    G = TorsionGroup.parse(G)
    ea, eb = extents(G)
    wa, wb = map(float, G.weights)
    X = float(X)
    return (
        int(np.ceil(slack * ea * X ** (wa / 12))),
        int(np.ceil(slack * eb * X ** (wb / 12))),
    )
