"""Informative exceptions raised by torsionrank."""

__all__ = [
    "TorsionRankConfigurationError",
    "TorsionRankParameterNameError",
    "SingularCurveError",
    "NotAUnitError",
    "UnsupportedGroupError",
    "DenominatorVanishesError",
    "NotCoprimeError",
    "InvalidDiscriminantError",
    "InvalidExponentPatternError",
    "VacuousThresholdError",
    "RegionConvergenceError",
    "RegionExhaustedError",
    "MissingLocalDataError",
    "CacheIntegrityError",
]


class TorsionRankConfigurationError(Exception):
    """Error related to parameter configuration."""

    pass


class TorsionRankParameterNameError(AttributeError):
    """Error related to limitation on parameter name."""

    pass


class SingularCurveError(ArithmeticError):
    """The model has vanishing discriminant where a nonsingular one is required.

    Examples
    --------
    >>> raise torsionrank.SingularCurveError("y^2 = x^3 over F_7 is singular")

    """

    pass


class NotAUnitError(ArithmeticError):
    """The element is not invertible in its ring."""

    pass


class UnsupportedGroupError(ValueError):
    """The torsion group is not supported by the requested operation."""

    pass


class DenominatorVanishesError(ZeroDivisionError):
    """A parametrization was evaluated at a pole."""

    pass


class NotCoprimeError(ValueError):
    """Parameters are required to be relatively prime."""

    pass


class InvalidDiscriminantError(ValueError):
    """Not a negative discriminant of a binary quadratic form."""

    pass


class InvalidExponentPatternError(ValueError):
    """Exponent pattern outside the cases the trace formula covers."""

    pass


class VacuousThresholdError(ValueError):
    """Rank threshold too small for the tail bound to say anything."""

    pass


class RegionConvergenceError(RuntimeError):
    """Area estimate did not converge within the refinement cap."""

    pass


class RegionExhaustedError(RuntimeError):
    """Enumeration box kept growing without closing the region."""

    pass


class MissingLocalDataError(KeyError):
    """Local data needed for a prime sum is not available."""

    pass


class CacheIntegrityError(ValueError):
    """Corrupted or stale cache file.

    Parameters
    ----------
    path
        Path to the offending file.
    line
        1-based line number, ``None`` if the problem is not line-specific.
    reason
        Human readable description.

    """

    def __init__(self, path: str, line, reason: str) -> None:
        self.path = str(path)
        self.line = line
        self.reason = reason
        where = self.path if line is None else f"{self.path}:{line}"
        super().__init__(f"{where}: {reason}")
