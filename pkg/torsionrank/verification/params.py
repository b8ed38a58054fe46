__all__ = ["VerifyParams"]

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..core.configuration import config
from ..core.data_type import PrimeRange


@dataclass(frozen=True)
class VerifyParams:
    """Parameter set of the acceptance suite, read from ``[verify.<name>]``."""

    name: str
    weights_primes: PrimeRange
    split_primes: PrimeRange
    odd_moment_primes: PrimeRange
    hurwitz_primes: PrimeRange
    moment_fit_primes: PrimeRange
    moment_check_primes: PrimeRange
    lemma_primes: PrimeRange
    chebyshev_samples: int
    chebyshev_max_r: int
    defect_box: int
    census_x: Dict[str, int]
    scaling_groups: Tuple[str, ...]
    local_x: int
    trend_x: Tuple[int, ...]
    tol: float
    workers: int = field(default=1, compare=False)

    @classmethod
    def from_config(cls, name: str = "full", /, workers: int = 1) -> "VerifyParams":
        view = config.verify[name]
        return cls(
            name=name,
            weights_primes=view.weights_primes,
            split_primes=view.split_primes,
            odd_moment_primes=view.odd_moment_primes,
            hurwitz_primes=view.hurwitz_primes,
            moment_fit_primes=view.moment_fit_primes,
            moment_check_primes=view.moment_check_primes,
            lemma_primes=view.lemma_primes,
            chebyshev_samples=int(view.chebyshev_samples),
            chebyshev_max_r=int(view.chebyshev_max_r),
            defect_box=int(view.defect_box),
            census_x={str(k): int(v) for k, v in view.census_x.items()},
            scaling_groups=tuple(str(g) for g in view.scaling_groups),
            local_x=int(view.local_x),
            trend_x=tuple(sorted(int(x) for x in view.trend_x)),
            tol=float(view.tol),
            workers=workers,
        )

    def primes(self, key: str, /) -> List[int]:
        return getattr(self, f"{key}_primes").primes()
