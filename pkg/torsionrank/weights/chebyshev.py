"""Normalized Chebyshev polynomials of the second kind and moment coefficients."""

__all__ = ["chebyshev_U", "chebyshev_coeff", "power_from_chebyshev"]

from math import comb


def chebyshev_U(k: int, t: int, q: int, /) -> int:
    """``U_k(t, q) = q^(k/2) U_k(t / 2 sqrt(q))``, an integer polynomial in t and q.

    Examples
    --------
    >>> [torsionrank.weights.chebyshev_U(k, 5, 7) for k in range(3)]
    [1, 5, 18]

    """
    if k < 0:
        raise ValueError(f"Degree must be nonnegative, got {k}.")
    previous, current = 1, t
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, t * current - q * previous
    return current


def _a(R: int, j: int) -> int:
    return comb(2 * R, j) - (comb(2 * R, j - 1) if j >= 1 else 0)


def chebyshev_coeff(R: int, j: int, /) -> int:
    """Coefficient ``C_{R,j}`` of ``q^j U_{R-2j}(t, q)`` in the expansion of ``t^R``.

    Raises
    ------
    ValueError
        Unless ``0 <= j <= R // 2``.

    Examples
    --------
    >>> torsionrank.weights.chebyshev_coeff(3, 1)
    2

    """
    if R < 0 or not 0 <= j <= R // 2:
        raise ValueError(f"j must lie in [0, {R // 2}], got j={j} for R={R}.")
    if R % 2 == 0:
        return _a(R // 2, j)
    return _a((R - 1) // 2, j) + (_a((R - 1) // 2, j - 1) if j >= 1 else 0)


def power_from_chebyshev(R: int, t: int, q: int, /) -> int:
    """``sum_j C_{R,j} q^j U_{R-2j}(t, q)``, which equals ``t^R``."""
    return sum(
        chebyshev_coeff(R, j) * q**j * chebyshev_U(R - 2 * j, t, q)
        for j in range(R // 2 + 1)
    )
