__all__ = ["run_criteria", "summary_rows"]

import time
from typing import Dict, Iterable, List, Optional

from ..core.exceptions import RegionConvergenceError, RegionExhaustedError
from ..core.inform import get_logger
from .criteria import CRITERIA, CriterionResult
from .params import VerifyParams

logger = get_logger(__name__)


def run_criteria(
    params: VerifyParams, /, only: Optional[Iterable[int]] = None
) -> List[CriterionResult]:
    """Run the selected criteria in numerical order.

    A region that fails to close makes its criterion fail; every other error
    propagates. A criterion reporting ``vacuous`` in its details is not passed.

    Examples
    --------
    >>> params = torsionrank.verification.VerifyParams.from_config("quick")
    >>> [r.status for r in torsionrank.verification.run_criteria(params, only=[4])]
    ['PASS']

    """
    selected = sorted(CRITERIA) if only is None else sorted(set(only))
    unknown = [n for n in selected if n not in CRITERIA]
    if unknown:
        raise ValueError(f"No acceptance criteria numbered {unknown}.")

    results = []
    for number in selected:
        name, func = CRITERIA[number]
        start = time.perf_counter()
        try:
            passed, details = func(params)
        except (RegionConvergenceError, RegionExhaustedError) as e:
            logger.error(f"Criterion {number} ({name}) aborted: {e}")
            passed, details = False, {"error": str(e)}
        elapsed = time.perf_counter() - start
        vacuous = bool(details.get("vacuous", False))
        result = CriterionResult(
            number, name, bool(passed) and not vacuous, details, vacuous
        )
        logger.info(f"[{result.status}] {number:2d} {name} ({elapsed:.1f} s)")
        results.append(result)
    return results


def summary_rows(results: Iterable[CriterionResult], /) -> List[Dict[str, object]]:
    return [
        {"number": r.number, "name": r.name, "status": r.status} for r in results
    ]
