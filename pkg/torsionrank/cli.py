"""Command line entry point, ``torsionrank <command> [options]``.

Exit codes: 0 on success, 1 when a verification fails (or a census region does not
close), 2 on usage, configuration or I/O errors.

"""

__all__ = [
    "RunConfig",
    "build_parser",
    "cmd_weights",
    "cmd_census",
    "cmd_rank_bounds",
    "cmd_verify",
    "main",
]

import argparse
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import census as cen
from . import rank_bounds as rb
from .core.configuration import config
from .core.data_type import PrimeRange
from .core.exceptions import (
    CacheIntegrityError,
    RegionConvergenceError,
    RegionExhaustedError,
    TorsionRankConfigurationError,
    UnsupportedGroupError,
    VacuousThresholdError,
)
from .core.inform import get_logger
from .core.security import LoadChecker
from .curves import TraceCache, resolve_cache_path
from .recorders import (
    CensusWriter,
    ConsoleLogWriter,
    JsonWriter,
    Recorder,
    TableWriter,
)
from .torsion import ALL_GROUPS, TorsionGroup
from .verification import VerifyParams, run_criteria, summary_rows
from .weights import (
    admissible_primes,
    build_weight_table,
    class_numbers,
    expected_singular_weight_sum,
    singular_weight_sum,
)

logger = get_logger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PRIME_LIMITS = PrimeRange(5, 10**4)


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command."""

    command: str
    groups: Tuple[str, ...] = ()
    X: Optional[int] = None
    primes: Optional[PrimeRange] = None
    local: Tuple[int, ...] = ()
    tol: Optional[float] = None
    out: Path = Path(".")
    cache: Optional[Path] = None
    workers: int = 1
    quick: bool = False
    only: Optional[Tuple[int, ...]] = None
    moments: Tuple[int, ...] = ()
    tail: Tuple[float, ...] = ()
    average: bool = False

    def __post_init__(self) -> None:
        if self.X is not None and self.X < 1:
            raise UsageError(f"--X must be at least 1, got {self.X}.")
        if self.primes is not None and not PRIME_LIMITS.contain_all(self.primes):
            raise UsageError(f"--primes must lie within {PRIME_LIMITS}.")
        if not PRIME_LIMITS.contain_all(self.local):
            raise UsageError(f"--local primes must lie within {PRIME_LIMITS}.")
        if self.workers < 1:
            raise UsageError(f"--workers must be at least 1, got {self.workers}.")
        if self.tol is not None and not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}.")
        for label in self.groups:
            TorsionGroup.parse(label)

    @classmethod
    def from_args(cls, args: argparse.Namespace, /) -> "RunConfig":
        requested = args.workers
        if requested is None and int(config.get("workers", 0)) > 0:
            requested = int(config.workers)
        return cls(
            command=args.command,
            groups=tuple(args.group or ()),
            X=args.X,
            primes=args.primes,
            local=tuple(args.local or ()),
            tol=args.tol,
            out=Path(args.out),
            cache=resolve_cache_path(args.cache),
            workers=LoadChecker().default_workers(requested),
            quick=getattr(args, "quick", False),
            only=tuple(args.only) if getattr(args, "only", None) else None,
            moments=tuple(getattr(args, "moments", None) or ()),
            tail=tuple(getattr(args, "tail", None) or ()),
            average=getattr(args, "average", False),
        )

    def prime_list(self, default: PrimeRange, /) -> List[int]:
        primes = (self.primes or default).primes()
        if not primes:
            raise UsageError(f"No prime p >= 5 in {self.primes or default}.")
        return primes


def _height(text: str) -> int:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value != value.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _prime_range(text: str) -> PrimeRange:
    try:
        return PrimeRange.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_list(text: str) -> List[int]:
    """``"1..4"`` or ``"1,2,5"``."""
    try:
        if ".." in text:
            lower, upper = map(int, text.split(".."))
            return list(range(lower, upper + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}")


def _recorder(cfg: RunConfig, *writers) -> Recorder:
    recorder = Recorder(cfg.out)
    recorder.add_writer(ConsoleLogWriter(), *writers)
    return recorder


def cmd_weights(cfg: RunConfig) -> int:
    """Weight tables, class numbers and singular sums per group and prime."""
    groups = cfg.groups or tuple(G.label for G in ALL_GROUPS if not G.is_trivial)
    primes = cfg.prime_list(config.weights.primes)
    rows, tables, class_rows = [], [], []
    for label in groups:
        G = TorsionGroup.parse(label)
        if G.is_trivial:
            raise UsageError("The trivial group has no weight table.")
        admissible = set(admissible_primes(G, primes))
        for p in primes:
            table = build_weight_table(G, p, workers=cfg.workers)
            singular = singular_weight_sum(G, p)
            expected = expected_singular_weight_sum(G, p) if p in admissible else None
            total_ok = table.total == p * p
            sum_ok = expected is None or singular == expected
            rows.append(
                {
                    "G": G.label,
                    "p": p,
                    "total": table.total,
                    "singular": singular,
                    "expected": "" if expected is None else expected,
                    "status": "PASS" if total_ok and sum_ok else "FAIL",
                }
            )
            tables.extend(
                {"G": G.label, "p": p, "A": A, "B": B, "w": w}
                for A, B, w in table.rows()
            )
            class_rows.extend(
                {"G": G.label, "p": p, "a": a, "H": h}
                for a, h in class_numbers(G, p).rows()
            )
    with _recorder(cfg, TableWriter()) as recorder:
        recorder.append("weights.tsv", rows)
        recorder.append("weight_tables.tsv", tables)
        recorder.append("class_numbers.tsv", class_rows)
    failed = [r for r in rows if r["status"] == "FAIL"]
    for r in failed:
        logger.error(f"Weight check failed for {r['G']} at p={r['p']}")
    logger.info(f"{len(rows) - len(failed)} of {len(rows)} weight rows passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_census(cfg: RunConfig) -> int:
    """Census, leading constant and local densities of one or more groups."""
    if not cfg.groups:
        raise UsageError("census needs --group.")
    primes = list(cfg.local) or cfg.prime_list(config.census.local_primes)
    summaries, densities, corollaries = {}, [], []
    censuses = {}
    with _recorder(cfg, TableWriter(), JsonWriter(), CensusWriter()) as recorder:
        for label in cfg.groups:
            G = TorsionGroup.parse(label)
            X = cfg.X if cfg.X is not None else int(config.census.x[G.label])
            try:
                census = cen.enumerate_census(G, X, workers=cfg.workers)
                c = cen.c_constant(G, tol=cfg.tol, histogram=census.histogram)
            except (RegionExhaustedError, RegionConvergenceError) as e:
                logger.error(f"Census of {G} up to X={X} failed: {e}")
                return EXIT_FAIL
            censuses[G.label] = census
            recorder.append(census)
            expected = c * float(X) ** float(G.growth_exponent)
            summaries[G.label] = {
                "X": X,
                "count": len(census),
                "c": c,
                "expected": expected,
                "ratio": len(census) / expected if expected else None,
                "multiplicity": census.multiplicity,
                "empirical_multiplicity": census.empirical,
                "singular_discarded": census.singular,
            }
            for p in primes:
                if G.order % p == 0:
                    continue
                for kind in census.tally(p):
                    row = cen.local_density(census, p, kind)
                    densities.append(
                        {
                            "G": G.label,
                            "X": X,
                            "p": p,
                            "condition": str(row.condition),
                            "count": row.count,
                            "density": row.density,
                            "predicted": row.predicted,
                            "passed": row.passed,
                        }
                    )
            if cfg.cache is not None:
                cache = TraceCache.open(cfg.cache)
                added = cache.fill(census.curves, primes)
                logger.info(f"Added {added} local records to the cache")
                cache.save(cfg.cache)
        for r in cen.corollary_checks(censuses, primes):
            corollaries.append(
                {
                    "name": r.name,
                    "G": r.G,
                    "p": r.p,
                    "measured": r.measured,
                    "expected": r.expected,
                    "tolerance": r.tolerance,
                    "passed": r.passed,
                    "note": r.note,
                }
            )
        recorder.append("densities.tsv", densities)
        recorder.append("corollaries.tsv", corollaries)
        recorder.append("census.json", summaries)
    return EXIT_OK


def cmd_rank_bounds(cfg: RunConfig) -> int:
    """Moment, tail and average-rank bounds, and empirical prime sums."""
    groups = cfg.groups or ("2", "2x2")
    defaults = not (cfg.moments or cfg.tail or cfg.average)
    moments = cfg.moments or (tuple(config.rank_bounds.moments) if defaults else ())
    tails = cfg.tail or (tuple(config.rank_bounds.tail) if defaults else ())
    moment_rows, tail_rows, average_rows, sum_rows = [], [], [], []
    for label in groups:
        G = TorsionGroup.parse(label)
        n_level = G.label in rb.N_LEVEL_GROUPS
        if moments and n_level:
            for n in moments:
                moment_rows.append(
                    {
                        "G": G.label,
                        "n": n,
                        "sigma_n": rb.sigma_for(G, n),
                        "bound": rb.moment_bound(G, n),
                    }
                )
        for a in tails if n_level else ():
            try:
                t = rb.tail_bound(G, a)
                row = {"bound": t.bound, "n": t.n, "C": t.C, "vacuous": False}
            except VacuousThresholdError as e:
                logger.warning(str(e))
                row = {"bound": "", "n": "", "C": "", "vacuous": True}
            tail_rows.append({"G": G.label, "threshold": a, **row})
        if cfg.average or defaults:
            try:
                sigma = rb.sigma_for(G, 1 if n_level else None)
                bound = rb.average_rank_bound(G)
            except UnsupportedGroupError as e:
                logger.warning(str(e))
                continue
            average_rows.append({"G": G.label, "sigma": sigma, "bound": bound})
            if cfg.X is not None:
                sums = _explicit_sums(cfg, G, float(sigma))
                sum_rows.append(sums)
    with _recorder(cfg, TableWriter()) as recorder:
        for name, rows in (
            ("moments.tsv", moment_rows),
            ("tail.tsv", tail_rows),
            ("average.tsv", average_rows),
            ("explicit_sums.tsv", sum_rows),
        ):
            if rows:
                recorder.append(name, rows)
    return EXIT_OK


def _explicit_sums(cfg: RunConfig, G: TorsionGroup, sigma: float) -> Dict[str, object]:
    census = cen.enumerate_census(G, cfg.X, workers=cfg.workers)
    cache = None
    if cfg.cache is not None:
        cache = TraceCache.open(cfg.cache)
        window = rb.prime_window(census.X, sigma)
        cache.fill(census.curves, window)
        cache.save(cfg.cache)
    sums = rb.empirical_S1_S2(census, sigma, cache=cache)
    return {
        "G": G.label,
        "X": census.X,
        "sigma": sigma,
        "S1": sums.S1,
        "S2": sums.S2,
        "target_S2": sums.target_S2,
        "primes_S1": len(sums.primes_S1),
        "primes_S2": len(sums.primes_S2),
    }


def cmd_verify(cfg: RunConfig) -> int:
    """Acceptance suite; exit code 1 iff some criterion fails."""
    if cfg.cache is not None and cfg.cache.exists():
        cache = TraceCache.load(cfg.cache)
        logger.info(f"Cache {str(cfg.cache)!r} holds {len(cache)} valid records")
    params = VerifyParams.from_config(
        "quick" if cfg.quick else "full", workers=cfg.workers
    )
    results = run_criteria(params, only=cfg.only)
    summary = {
        "parameters": params.name,
        "passed": all(r.passed for r in results),
        "criteria": {
            str(r.number): {"name": r.name, "status": r.status, "details": r.details}
            for r in results
        },
    }
    with _recorder(cfg, TableWriter(), JsonWriter()) as recorder:
        recorder.append("verify.tsv", summary_rows(results))
        recorder.append("verify.json", summary)
    for r in results:
        print(f"{r.status}\t{r.number}\t{r.name}")
    return EXIT_OK if summary["passed"] else EXIT_FAIL


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "weights": cmd_weights,
    "census": cmd_census,
    "rank-bounds": cmd_rank_bounds,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--group", action="append", help="Torsion group label, e.g. 2, 5, 2x4."
    )
    common.add_argument("--X", type=_height, help="Height bound, e.g. 1e8.")
    common.add_argument("--primes", type=_prime_range, help="Prime range a..b.")
    common.add_argument(
        "--local", type=int, action="append", help="Prime for local tallies."
    )
    common.add_argument("--tol", type=float, help="Region area tolerance.")
    common.add_argument("--out", default=".", help="Output directory.")
    common.add_argument("--cache", help="a_p cache file.")
    common.add_argument("--workers", type=int, help="Worker processes.")

    parser = argparse.ArgumentParser(
        prog="torsionrank",
        description="Local weights, censuses and rank bounds for elliptic curves "
        "with prescribed torsion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("weights", parents=[common], help=cmd_weights.__doc__)
    sub.add_parser("census", parents=[common], help=cmd_census.__doc__)
    bounds = sub.add_parser(
        "rank-bounds", parents=[common], help=cmd_rank_bounds.__doc__
    )
    bounds.add_argument("--moments", type=_int_list, help="Moment orders, e.g. 1..4.")
    bounds.add_argument(
        "--tail", type=float, action="append", help="Rank threshold, repeatable."
    )
    bounds.add_argument(
        "--average", action="store_true", help="Average analytic rank bound."
    )
    verify = sub.add_parser("verify", parents=[common], help=cmd_verify.__doc__)
    verify.add_argument("--quick", action="store_true", help="Desk-scale subset.")
    verify.add_argument("--only", type=_int_list, help="Criteria, e.g. 1,4,9.")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except CacheIntegrityError as e:
        logger.error(f"Cache integrity error: {e}")
    except (
        UsageError,
        UnsupportedGroupError,
        TorsionRankConfigurationError,
        OSError,
        ValueError,
    ) as e:
        logger.error(f"{type(e).__name__}: {e}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
