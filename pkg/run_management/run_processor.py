import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)

# Global worker configuration, set once by main.py
workers = 1

# Below this many items the pool costs more than it saves
MIN_PARALLEL_ITEMS = 32


def set_workers(count: int):
    """Set the worker count used by parallel_map."""
    global workers
    workers = max(1, int(count))


def parallel_map(fn: Callable[[T], R], items: Sequence[T]) -> List[R]:
    """Map fn over items in worker processes, results in input order whatever the worker count.

    fn and the items must pickle: pass a module-level function, bound with functools.partial.
    An exception surfaces for the first failing item in input order, as in the serial path.
    """
    items = list(items)
    if workers <= 1 or len(items) < MIN_PARALLEL_ITEMS:
        return [fn(item) for item in items]
    # One chunk per worker ships the bound arguments once per process
    chunksize = -(-len(items) // workers)
    logger.debug(f"🔄 Mapping {len(items)} items over {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
