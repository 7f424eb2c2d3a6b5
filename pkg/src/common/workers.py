from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from src.common.settings import settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    func: Callable[[T], R], items: Iterable[T], max_workers: Optional[int] = None
) -> List[R]:
    """
    Apply func to every item, optionally on a thread pool.

    Results come back in input order whatever the schedule, so callers that
    assemble them positionally get identical output for any worker count.

    Args:
        func: Pure function to apply
        items: Inputs
        max_workers: Pool size; defaults to settings.max_workers

    Returns:
        List of results aligned with items
    """
    max_workers = max_workers if max_workers is not None else settings.max_workers
    items = list(items)
    if max_workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(func, items))
