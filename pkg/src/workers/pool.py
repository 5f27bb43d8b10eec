import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

logger = logging.getLogger(__name__)

C = TypeVar("C")
R = TypeVar("R")


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most ``parts`` contiguous half-open ranges of near-equal size."""
    if total < 0 or parts < 1:
        raise ValueError(f"cannot split {total} items into {parts} parts")
    parts = min(parts, max(total, 1))
    size, extra = divmod(total, parts)
    ranges = []
    low = 0
    for i in range(parts):
        high = low + size + (1 if i < extra else 0)
        ranges.append((low, high))
        low = high
    return ranges


async def run_partitioned(task: Callable[[C], R], chunks: Sequence[C], workers: int = 1) -> list[R]:
    """
    Run ``task`` on every chunk and return the results in chunk order.

    Args:
        task: A picklable top-level function; it runs in a worker process when workers > 1.
        chunks: One argument per call.
        workers: Process count. With 1 the chunks run inline, one after another.

    Returns:
        list: ``task(chunk)`` for each chunk, in the order given.
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if workers == 1 or len(chunks) <= 1:
        return [task(chunk) for chunk in chunks]

    logger.debug("Running %d chunks of %s on %d worker processes", len(chunks), task.__name__, workers)
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, task, chunk) for chunk in chunks]
        return list(await asyncio.gather(*futures))
