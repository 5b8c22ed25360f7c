from __future__ import annotations

import logging
import time
import uuid
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional

logger = logging.getLogger(__name__)


class Span:
    def __init__(self, name: str, trace_id: str):
        self.name = name
        self.trace_id = trace_id
        self.start_time = time.perf_counter()
        self.end_time: Optional[float] = None
        self.attributes: Dict[str, Any] = {}
        self.status = "OK"

    def set_attribute(self, key: str, value: Any) -> None:
        self.attributes[key] = value

    def set_status(self, status: str) -> None:
        self.status = status

    @property
    def duration_ms(self) -> float:
        end = self.end_time if self.end_time is not None else time.perf_counter()
        return (end - self.start_time) * 1000

    def end(self) -> None:
        self.end_time = time.perf_counter()
        attrs = " ".join(f"{k}={v}" for k, v in self.attributes.items())
        logger.debug(
            f"[Trace: {self.trace_id}] Span '{self.name}' finished in {self.duration_ms:.2f}ms. "
            f"Status: {self.status} {attrs}".rstrip()
        )


class Tracer:
    """
    Times realization stages and logs them at DEBUG level.

    Finished spans are kept so callers (and tests) can inspect the stage
    sequence of the last run.
    """

    def __init__(self, service_name: str = "selfconverse"):
        self.service_name = service_name
        self.finished: List[Span] = []

    @contextmanager
    def start_span(self, name: str, trace_id: Optional[str] = None) -> Iterator[Span]:
        span = Span(name, trace_id or uuid.uuid4().hex[:8])
        try:
            yield span
        except Exception as e:
            span.set_status("ERROR")
            span.set_attribute("error", type(e).__name__)
            raise
        finally:
            span.end()
            self.finished.append(span)
            del self.finished[:-64]


# Global tracer instance
tracer = Tracer()
