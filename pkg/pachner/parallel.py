"""Process pool for batch-parallel expansion work.

Work is handed out as ordered batches and results come back in submission
order, so callers that commit results serially get the same answer for any
number of workers.
"""

import logging
import multiprocessing
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """Ordered map over a lazily started process pool; inline when ``jobs`` is 1."""

    def __init__(self, jobs: int = 1):
        """:param jobs: worker processes (1 runs everything in-process)"""
        if jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {jobs}")
        self.jobs = jobs
        self._executor: ProcessPoolExecutor | None = None

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply ``fn`` to every item, preserving order."""
        batch = list(items)
        if self.jobs == 1 or len(batch) < 2:
            return [fn(item) for item in batch]
        if self._executor is None:
            logger.debug("Starting %d worker processes", self.jobs)
            # spawn, not fork: the CLI spinner thread is running
            context = multiprocessing.get_context("spawn")
            self._executor = ProcessPoolExecutor(
                max_workers=self.jobs, mp_context=context
            )
        chunksize = max(1, len(batch) // (self.jobs * 8))
        return list(self._executor.map(fn, batch, chunksize=chunksize))

    def close(self) -> None:
        """Shut the pool down."""
        if self._executor is not None:
            self._executor.shutdown()
            self._executor = None

    def __enter__(self) -> "WorkerPool":
        """:return:"""
        return self

    def __exit__(self, *exc_info) -> None:
        """Shut down on leaving the block."""
        self.close()
