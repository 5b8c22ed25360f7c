from __future__ import annotations

import concurrent.futures
import logging
from typing import Any, Callable, List, Optional, Sequence

logger = logging.getLogger(__name__)


class ParallelExecutor:
    """
    Runs independent work items locally.

    ``sync`` evaluates in the calling thread; ``thread`` and ``process`` use
    the matching ``concurrent.futures`` pool. ``map`` always returns results
    in input order, so callers stay deterministic whatever the mode.
    """

    def __init__(self, max_workers: int = 4, mode: str = "sync"):
        if mode not in ("sync", "thread", "process"):
            raise ValueError(f"Unknown executor mode: {mode}")
        self.max_workers = max_workers
        self.mode = mode
        self._executor: Optional[concurrent.futures.Executor] = None

    def __enter__(self) -> "ParallelExecutor":
        self._ensure_executor()
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        self.shutdown()

    def _ensure_executor(self) -> None:
        if self._executor is None:
            if self.mode == "thread":
                self._executor = concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers)
            elif self.mode == "process":
                self._executor = concurrent.futures.ProcessPoolExecutor(
                    max_workers=self.max_workers
                )

    def shutdown(self, wait: bool = True) -> None:
        if self._executor:
            self._executor.shutdown(wait=wait)
            self._executor = None

    def map(self, func: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        if self.mode == "sync":
            return [func(item) for item in items]

        self._ensure_executor()
        assert self._executor is not None
        logger.debug(f"Dispatching {len(items)} items to a {self.mode} pool of {self.max_workers}")
        return list(self._executor.map(func, items))
