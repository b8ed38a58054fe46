__all__ = ["stripes", "map_stripes"]

import multiprocessing
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, Callable, List, Sequence, Tuple, TypeVar

from ..inform import get_logger
from .load_check import LoadChecker

T = TypeVar("T")
logger = get_logger(__name__)


def stripes(start: int, stop: int, parts: int, /) -> List[Tuple[int, int]]:
    """Split ``range(start, stop)`` into at most ``parts`` contiguous half-open
    intervals of nearly equal length.

    Examples
    --------
    >>> torsionrank.core.security.stripes(0, 10, 3)
    [(0, 4), (4, 7), (7, 10)]

    """
    total = max(0, stop - start)
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    bounds, lower = [], start
    for i in range(parts):
        upper = lower + size + (1 if i < extra else 0)
        bounds.append((lower, upper))
        lower = upper
    return bounds


def _make_executor(workers: int) -> Executor:
    try:
        ctx = multiprocessing.get_context("fork")
        return ProcessPoolExecutor(max_workers=workers, mp_context=ctx)
    except (ValueError, OSError) as e:
        logger.warning(f"Process pool unavailable ({e}), falling back to threads")
        return ThreadPoolExecutor(max_workers=workers)


def map_stripes(
    func: Callable[..., T], tasks: Sequence[Tuple[Any, ...]], workers: int = 1
) -> List[T]:
    """Evaluate ``func(*task)`` for every task, in task order.

    With a single worker everything runs in this process; otherwise ``func`` must be
    a module-level function so it can be shipped to the pool.

    """
    workers = LoadChecker().default_workers(workers)
    if workers == 1 or len(tasks) <= 1:
        return [func(*task) for task in tasks]
    with _make_executor(min(workers, len(tasks))) as executor:
        futures = [executor.submit(func, *task) for task in tasks]
        return [f.result() for f in futures]
