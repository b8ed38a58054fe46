"""Normalized Frobenius traces, the explicit-formula prime sums and the trace
formula over a census."""

__all__ = [
    "hat_a",
    "hat_a_census",
    "ExplicitSums",
    "empirical_S1_S2",
    "prime_window",
    "TraceFactor",
    "NormalizedCoefficient",
    "validate_pattern",
    "predicted_trace_constant",
    "predicted_local_mean",
    "TraceFormulaResult",
    "trace_formula_check",
]

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from ..census import CensusResult, predicted_density
from ..core.exceptions import (
    InvalidExponentPatternError,
    MissingLocalDataError,
    UnsupportedGroupError,
)
from ..core.inform import get_logger
from ..curves import ADDITIVE, GOOD, NONSPLIT, SPLIT, LocalData, Reduction, TraceCache
from ..torsion import TorsionGroup
from ..weights import class_numbers
from .fejer import FejerKernel

logger = get_logger(__name__)

TraceFactor = Tuple[int, int, int]
"""``(p, e, r)``: the factor ``a_hat(p^e)^r``."""

NormalizedCoefficient = float
"""``a_hat_E(p^e)``, bounded by 2 in absolute value at good primes."""

_CODE = {
    Reduction.GOOD: GOOD,
    Reduction.SPLIT: SPLIT,
    Reduction.NONSPLIT: NONSPLIT,
    Reduction.ADDITIVE: ADDITIVE,
}


def hat_a(ld: LocalData, e: int, /) -> NormalizedCoefficient:
    """``a_hat(p^e)`` for ``e`` in ``{1, 2}``.

    Examples
    --------
    >>> ld = torsionrank.curves.reduction_type(torsionrank.curves.CurveQ(2, 1), 5)
    >>> torsionrank.rank_bounds.hat_a(ld, 2)
    -1.8

    """
    if e not in (1, 2):
        raise ValueError(f"Only e = 1, 2 are supported, got {e}.")
    p = ld.p
    if ld.reduction is Reduction.ADDITIVE:
        return 0.0
    if ld.reduction is Reduction.GOOD:
        return ld.a_p / math.sqrt(p) if e == 1 else ld.a_p**2 / p - 2
    return ld.a_p / math.sqrt(p) if e == 1 else 1 / p


def _hat(codes: np.ndarray, traces: np.ndarray, p: int, e: int) -> np.ndarray:
    traces = traces.astype(float)
    if e == 1:
        # traces are 1, -1, 0 at split, non-split, additive
        return np.where(codes == ADDITIVE, 0.0, traces / math.sqrt(p))
    if e == 2:
        value = np.where(codes == GOOD, traces**2 / p - 2, 1 / p)
        return np.where(codes == ADDITIVE, 0.0, value)
    raise ValueError(f"Only e = 1, 2 are supported, got {e}.")


def _local_arrays(
    census: CensusResult, p: int, cache: Optional[TraceCache]
) -> Tuple[np.ndarray, np.ndarray]:
    if cache is None:
        return census.local_codes(p), census.local_traces(p)
    codes = np.empty(len(census), dtype=np.int64)
    traces = np.empty(len(census), dtype=np.int64)
    for i, (A, B) in enumerate(census):
        ld = cache.get(A, B, p)
        if ld is None:
            raise MissingLocalDataError(f"No a_p for ({A}, {B}) at p={p} in cache.")
        codes[i], traces[i] = _CODE[ld.reduction], ld.a_p
    return codes, traces


def hat_a_census(
    census: CensusResult, p: int, e: int, /, cache: Optional[TraceCache] = None
) -> np.ndarray:
    """``a_hat_E(p^e)`` for every curve of the census."""
    codes, traces = _local_arrays(census, p, cache)
    return _hat(codes, traces, p, e)


@dataclass(frozen=True)
class ExplicitSums:
    """Prime sums of the explicit formula and their limits ``S1 -> 0``,
    ``S2 -> -phi(0)/2``."""

    G: TorsionGroup
    X: int
    sigma: float
    S1: float
    S2: float
    target_S1: float
    target_S2: float
    primes_S1: Tuple[int, ...]
    primes_S2: Tuple[int, ...]

    @property
    def vacuous(self) -> bool:
        """No prime ``p >= 5`` in either window."""
        return not (self.primes_S1 or self.primes_S2)

    @property
    def deviation_S1(self) -> float:
        return abs(self.S1 - self.target_S1)

    @property
    def deviation_S2(self) -> float:
        return abs(self.S2 - self.target_S2)


def prime_window(X: int, exponent: float, /) -> Tuple[int, ...]:
    """Primes ``5 <= p <= X^exponent``."""
    top = math.floor(X**exponent * (1 + 1e-12))
    return tuple(int(p) for p in sympy.primerange(5, top + 1))


def empirical_S1_S2(
    census: CensusResult, sigma: float, /, cache: Optional[TraceCache] = None
) -> ExplicitSums:
    """``S1`` over ``p <= X^sigma`` and ``S2`` over ``p <= X^(sigma/2)``.

    Only primes ``p >= 5`` enter, the short model being singular at 2 and 3.

    Raises
    ------
    MissingLocalDataError
        If ``cache`` is given and lacks a record the sums need.

    """
    test = FejerKernel(sigma)
    X = census.X
    size = len(census)
    log_X = math.log(X) if X > 1 else math.inf
    primes_1 = prime_window(X, test.sigma)
    primes_2 = prime_window(X, test.sigma / 2)
    S1 = S2 = 0.0
    if size:
        for p in primes_1:
            u = math.log(p) / log_X
            S1 += math.log(p) / math.sqrt(p) * test.phi_hat(u) * float(
                hat_a_census(census, p, 1, cache).sum()
            )
        for p in primes_2:
            u = 2 * math.log(p) / log_X
            S2 += math.log(p) / p * test.phi_hat(u) * float(
                hat_a_census(census, p, 2, cache).sum()
            )
        S1 *= 2 / (log_X * size)
        S2 *= 2 / (log_X * size)
    result = ExplicitSums(
        census.G, X, test.sigma, S1, S2, 0.0, -test.phi0 / 2, primes_1, primes_2
    )
    if result.vacuous:
        logger.warning(f"No prime p >= 5 below X^sigma = {X ** test.sigma:.4g}")
    return result


def validate_pattern(pattern: Sequence[TraceFactor], /) -> List[TraceFactor]:
    """Check ``e = 1`` with odd ``r`` or ``r = 2``, and ``e = 2`` with ``r = 1``, at
    distinct primes ``p >= 5``.

    Raises
    ------
    InvalidExponentPatternError
        If any factor is outside these cases.

    """
    parsed = [tuple(int(x) for x in factor) for factor in pattern]
    if not parsed:
        raise InvalidExponentPatternError("Empty exponent pattern.")
    primes = [p for p, _, _ in parsed]
    if len(set(primes)) != len(primes):
        raise InvalidExponentPatternError(f"Primes must be distinct, got {primes}.")
    for p, e, r in parsed:
        if p < 5 or not sympy.isprime(p):
            raise InvalidExponentPatternError(f"{p} is not a prime >= 5.")
        if e == 1 and (r % 2 == 1 or r == 2) and r > 0:
            continue
        if e == 2 and r == 1:
            continue
        raise InvalidExponentPatternError(
            f"Unsupported factor (p, e, r)=({p}, {e}, {r})."
        )
    return parsed


def predicted_trace_constant(pattern: Sequence[TraceFactor], /) -> int:
    """Limit of the normalized trace sum.

    0 if some ``e = 1`` factor has odd ``r``; otherwise ``-1`` when the number of
    ``e = 2`` factors is odd and ``+1`` when it is even.

    Examples
    --------
    >>> torsionrank.rank_bounds.predicted_trace_constant([(5, 1, 2), (7, 2, 1)])
    -1

    """
    parsed = validate_pattern(pattern)
    if any(e == 1 and r % 2 for _, e, r in parsed):
        return 0
    squares = sum(e == 2 for _, e, _ in parsed)
    return -1 if squares % 2 else 1


def _local_mean(G: TorsionGroup, p: int, e: int, r: int) -> float:
    """``E[a_hat(p^e)^r]`` under the limiting local densities."""
    codes = {"split": SPLIT, "nonsplit": NONSPLIT}
    mean = 0.0
    for kind, code in codes.items():
        value = _hat(np.array([code]), np.array([1 if kind == "split" else -1]), p, e)
        mean += predicted_density(G, p, kind) * float(value[0]) ** r
    for a in class_numbers(G, p).H:
        value = _hat(np.array([GOOD]), np.array([a]), p, e)
        mean += predicted_density(G, p, f"trace:{a}") * float(value[0]) ** r
    return mean


def predicted_local_mean(
    G: Union[TorsionGroup, str], pattern: Sequence[TraceFactor], /
) -> float:
    """Exact limit at fixed primes, ``c + O(sum 1/p_i)``, as a product of local
    expectations over independent primes."""
    G = TorsionGroup.parse(G)
    mean = 1.0
    for p, e, r in validate_pattern(pattern):
        mean *= _local_mean(G, p, e, r)
    return mean


@dataclass(frozen=True)
class TraceFormulaResult:
    G: TorsionGroup
    X: int
    pattern: Tuple[TraceFactor, ...]
    count: int
    lhs: float
    predicted: int
    local_limit: float

    @property
    def deviation(self) -> float:
        """``|lhs - c|``."""
        return abs(self.lhs - self.predicted)

    @property
    def local_deviation(self) -> float:
        """``|lhs - local_limit|``."""
        return abs(self.lhs - self.local_limit)


def trace_formula_check(
    G: Union[TorsionGroup, str],
    census: CensusResult,
    pattern: Sequence[TraceFactor],
    /,
    cache: Optional[TraceCache] = None,
) -> TraceFormulaResult:
    """``sum_E prod_i a_hat_E(p_i^e_i)^r_i`` normalized by ``|E_G(X)|``.

    Examples
    --------
    >>> census = torsionrank.census.enumerate_census("2", 10**6)
    >>> torsionrank.rank_bounds.trace_formula_check("2", census, [(5, 2, 1)]).predicted
    -1

    """
    G = TorsionGroup.parse(G)
    if G.label not in ("2", "2x2"):
        raise UnsupportedGroupError(f"The trace formula covers Z/2 and 2x2, not {G}.")
    if census.G != G:
        raise ValueError(f"Census is for {census.G}, not {G}.")
    parsed = validate_pattern(pattern)
    product = np.ones(len(census))
    for p, e, r in parsed:
        product *= hat_a_census(census, p, e, cache) ** r
    lhs = float(product.mean()) if len(census) else math.nan
    return TraceFormulaResult(
        G,
        census.X,
        tuple(parsed),
        len(census),
        lhs,
        predicted_trace_constant(parsed),
        predicted_local_mean(G, parsed),
    )
