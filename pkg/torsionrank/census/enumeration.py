"""Exact census ``E_G(X)`` of minimal curves with torsion ``G`` and height ``<= X``."""

__all__ = [
    "CensusResult",
    "enumerate_census",
    "z2_oracle_census",
    "scaling_exponent",
    "reduction_check",
]

from collections import Counter
from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from ..core.configuration import config
from ..core.exceptions import RegionExhaustedError
from ..core.inform import get_logger
from ..core.security import map_stripes, stripes
from ..curves import (
    ADDITIVE,
    GOOD,
    NONSPLIT,
    SPLIT,
    CurveModP,
    CurveQ,
    is_minimal,
    local_tables,
    minimal_twist,
    naive_height,
    torsion_embeds,
)
from ..torsion import TorsionGroup, model_polys, multiplicity, phi
from .region import scaled_extents

logger = get_logger(__name__)

CHUNK = 1 << 22
"""Grid points evaluated per vectorized block."""


@dataclass
class CensusResult:
    """Deduplicated minimal models of ``E_G(X)``, sorted by ``(A, B)``.

    Attributes
    ----------
    G
        The group.
    X
        Height bound.
    models
        ``(n, 2)`` integer array of ``(A, B)``.
    histogram
        ``{preimage count: number of curves}`` over the directly hit minimal models.
    singular
        Number of parameter pairs whose image was singular and discarded.
    box
        Half-widths of the final parameter box.

    """

    G: TorsionGroup
    X: int
    models: np.ndarray = field(repr=False)
    histogram: Counter = field(default_factory=Counter)
    singular: int = 0
    box: Tuple[int, int] = (0, 0)
    _codes: Dict[int, np.ndarray] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        for A, B in self.models:
            yield int(A), int(B)

    @property
    def curves(self) -> Iterator[CurveQ]:
        for A, B in self:
            yield CurveQ(A, B, check=False)

    @property
    def multiplicity(self) -> int:
        """``r(G)``, the modal preimage count for groups of order > 4."""
        return multiplicity(self.G, self.histogram)

    @property
    def empirical(self) -> bool:
        """Whether :attr:`multiplicity` comes from this census."""
        return self.G.r is None

    def _residues(self, p: int) -> Tuple[np.ndarray, np.ndarray]:
        return self.models[:, 0] % p, self.models[:, 1] % p

    def local_codes(self, p: int, /) -> np.ndarray:
        """Reduction code of every curve at ``p >= 5``."""
        if p < 5:
            raise ValueError(f"The short model is not minimal at p={p}; need p >= 5.")
        if p not in self._codes:
            A, B = self._residues(p)
            self._codes[p] = local_tables(p).codes[A, B]
        return self._codes[p]

    def local_traces(self, p: int, /) -> np.ndarray:
        """``a_p`` of every curve, with 1, -1, 0 at split, non-split, additive."""
        A, B = self._residues(p)
        return local_tables(p).traces[A, B]

    def tally(self, p: int, /) -> Dict[str, int]:
        """Counts per local condition at ``p``, keyed by condition string."""
        codes = self.local_codes(p)
        counts = np.bincount(codes, minlength=4)
        result = {
            "good": int(counts[GOOD]),
            "split": int(counts[SPLIT]),
            "nonsplit": int(counts[NONSPLIT]),
            "mult": int(counts[SPLIT] + counts[NONSPLIT]),
            "addi": int(counts[ADDITIVE]),
            "semistable": int(len(codes) - counts[ADDITIVE]),
        }
        traces = Counter(self.local_traces(p)[codes == GOOD].tolist())
        for a in sorted(traces):
            result[f"trace:{a}"] = traces[a]
        return result

    def validate(self) -> None:
        """Assert height, nonsingularity and minimality of every stored model."""
        for A, B in self:
            if naive_height(A, B) > self.X:
                raise AssertionError(f"({A}, {B}) exceeds height {self.X}.")
            if 4 * A**3 + 27 * B**2 == 0:
                raise AssertionError(f"({A}, {B}) is singular.")
            if not is_minimal(A, B):
                raise AssertionError(f"({A}, {B}) is not minimal.")


def _sorted_models(models: Sequence[Tuple[int, int]]) -> np.ndarray:
    array = np.array(sorted(models), dtype=np.int64).reshape(-1, 2)
    return array


def _row_chunks(start: int, stop: int, width: int, workers: int):
    parts = max(workers, -(-(stop - start) * width // CHUNK))
    return stripes(start, stop, parts)


def _trivial_stripe(X: int, A0: int, A1: int, B_bound: int):
    A, B = np.meshgrid(
        np.arange(A0, A1, dtype=np.int64),
        np.arange(-B_bound, B_bound + 1, dtype=np.int64),
        indexing="ij",
    )
    nonsingular = 4 * A**3 + 27 * B**2 != 0
    keep = nonsingular.copy()
    for q in sympy.primerange(2, sympy.integer_nthroot(X, 12)[0] + 1):
        keep &= ~((A % q**4 == 0) & (B % q**6 == 0))
    return np.stack([A[keep], B[keep]], axis=1), int((~nonsingular).sum())


def _trivial_census(X: int, workers: int) -> CensusResult:
    A_bound = int(sympy.integer_nthroot(X, 3)[0])
    B_bound = isqrt(X)
    tasks = [
        (X, a0, a1, B_bound)
        for a0, a1 in _row_chunks(-A_bound, A_bound + 1, 2 * B_bound + 1, workers)
    ]
    results = map_stripes(_trivial_stripe, tasks, workers)
    models = np.concatenate([r[0] for r in results]).reshape(-1, 2)
    models = models[np.lexsort((models[:, 1], models[:, 0]))]
    G = TorsionGroup.parse("0")
    return CensusResult(
        G,
        X,
        models,
        Counter({1: len(models)}),
        sum(r[1] for r in results),
        (A_bound, B_bound),
    )


def _parameter_stripe(
    label: str, X: int, a0: int, a1: int, box: Tuple[int, int], eps: int
) -> Tuple[List[Tuple[int, int]], int, bool]:
    """Images of the parameters ``a0 <= a < a1``, ``|b| <= box[1]`` in the region.

    Returns the images (minimal for large groups, raw otherwise), the number of
    singular images, and whether an accepted parameter touched the box boundary.

    """
    G = TorsionGroup.parse(label)
    polys = model_polys(G)
    a_bound, b_bound = box
    a, b = np.meshgrid(
        np.arange(a0, a1, dtype=np.int64),
        np.arange(-b_bound, b_bound + 1, dtype=np.int64),
        indexing="ij",
    )
    keep = np.ones(a.shape, dtype=bool)
    if G.label == "2x2":
        keep &= (a - b) % 2 == 0
    if G.is_large:
        keep &= np.gcd(a, b) == 1
    scale = eps**12 * X
    f, g = polys.evaluate(a, b)
    keep &= np.abs(f) <= (scale ** (1 / 3)) * (1 + 1e-9) + 1
    keep &= np.abs(g) <= (scale ** (1 / 2)) * (1 + 1e-9) + 1

    images, singular, boundary = [], 0, False
    for x, y in zip(a[keep].tolist(), b[keep].tolist()):
        f, g = polys.exact(x, y)
        if naive_height(f, g) > scale:
            continue
        boundary |= abs(x) >= a_bound or abs(y) >= b_bound
        if 4 * f**3 + 27 * g**2 == 0:
            singular += 1
            continue
        if G.is_large:
            A, B = phi(G, x, y)
            if naive_height(A, B) <= X:
                images.append((A, B))
        else:
            images.append((int(f), int(g)))
    return images, singular, boundary


def _parametrized_census(G: TorsionGroup, X: int, workers: int) -> CensusResult:
    eps = G.epsilon if G.is_large else 1
    growth = float(config.census.growth)
    max_steps = int(config.census.max_growth_steps)
    box = scaled_extents(G, eps**12 * X)
    for step in range(max_steps + 1):
        tasks = [
            (G.label, X, a0, a1, box, eps)
            for a0, a1 in _row_chunks(-box[0], box[0] + 1, 2 * box[1] + 1, workers)
        ]
        results = map_stripes(_parameter_stripe, tasks, workers)
        if not any(r[2] for r in results):
            break
        box = (int(np.ceil(box[0] * growth)), int(np.ceil(box[1] * growth)))
        logger.debug(f"Parameter box of {G} at X={X} grown to {box}")
    else:
        raise RegionExhaustedError(
            f"Parameter box of {G} at X={X} did not close after {max_steps} steps."
        )

    images = Counter(image for r in results for image in r[0])
    if G.is_large:
        curves = set(images)
        histogram = Counter(images.values())
    else:
        curves = {minimal_twist(A, B) for A, B in images}
        histogram = Counter(n for (A, B), n in images.items() if is_minimal(A, B))
    return CensusResult(
        G, X, _sorted_models(curves), histogram, sum(r[1] for r in results), box
    )


def enumerate_census(
    G: Union[TorsionGroup, str], X: Union[int, float], /, workers: int = 1
) -> CensusResult:
    """Enumerate ``E_G(X)``.

    Groups of order at most 4 run over the integer points of ``R_G(X)`` (with
    ``a = b mod 2`` for ``2x2``) and reduce every image to its minimal twist.
    Larger groups run over coprime points of ``R_G(eps^12 X)``, apply the defect
    corrected parametrization and keep images of height at most ``X``. The trivial
    group gives all of ``E(X)``.

    Parameters
    ----------
    G
        The group.
    X
        Height bound, at least 1.
    workers
        Processes sharing the parameter box, split in stripes of ``a``.

    Raises
    ------
    RegionExhaustedError
        If accepted parameters keep reaching the edge of the growing box.

    Examples
    --------
    >>> census = torsionrank.census.enumerate_census("2", 10**4)
    >>> census.multiplicity, census.tally(7)["addi"] > 0
    (1, True)

    """
    G = TorsionGroup.parse(G)
    X = int(X)
    if X < 1:
        raise ValueError(f"Height bound must be at least 1, got {X}.")
    if G.is_trivial:
        result = _trivial_census(X, workers)
    else:
        result = _parametrized_census(G, X, workers)
    logger.info(
        f"Enumerated {len(result)} curves with torsion {G} up to X={X} "
        f"({result.singular} singular images discarded)"
    )
    return result


def z2_oracle_census(X: Union[int, float], /, workers: int = 1) -> CensusResult:
    """``E_Z/2(X)`` as the curves of ``E(X)`` whose cubic has an integer root.

    An integer root ``r`` satisfies ``r^2 <= |A| + |B| / |r|``, hence
    ``|r| <= sqrt(2) X^(1/6)`` once ``|r| >= X^(1/6)``.

    """
    base = enumerate_census("0", X, workers=workers)
    A, B = base.models[:, 0], base.models[:, 1]
    bound = int(np.sqrt(2) * float(base.X) ** (1 / 6)) + 2
    has_root = np.zeros(len(A), dtype=bool)
    for r in range(-bound, bound + 1):
        has_root |= r**3 + A * r + B == 0
    models = base.models[has_root]
    return CensusResult(
        TorsionGroup.parse("2"),
        base.X,
        models,
        Counter({1: len(models)}),
        base.singular,
        base.box,
    )


def scaling_exponent(results: Sequence[CensusResult], /) -> float:
    """Least squares slope of ``log |E_G(X)|`` against ``log X``."""
    if len(results) < 2:
        raise ValueError("Need censuses at two or more heights.")
    logX = np.log([float(r.X) for r in results])
    logN = np.log([float(len(r)) for r in results])
    return float(np.polyfit(logX, logN, 1)[0])


def reduction_check(census: CensusResult, p: int, /) -> Optional[bool]:
    """Whether ``G`` embeds in ``E(F_p)`` for every curve with good reduction at
    ``p``; ``None`` if ``p`` divides ``|G|``."""
    if census.G.order % p == 0:
        return None
    good = census.local_codes(p) == GOOD
    residues = {(int(A) % p, int(B) % p) for A, B in census.models[good]}
    return all(torsion_embeds(CurveModP(A, B, p), census.G) for A, B in residues)
