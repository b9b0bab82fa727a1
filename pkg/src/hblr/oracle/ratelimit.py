"""Process-wide sliding-window rate limiter shared by concurrent callers."""

from __future__ import annotations

import threading
import time
from collections import deque


class RateLimiter:
    """Blocks callers so at most `max_per_second` acquisitions happen in any
    one-second window. A limit of None disables throttling."""

    def __init__(self, max_per_second: float | None):
        if max_per_second is not None and max_per_second <= 0:
            raise ValueError("max_per_second must be positive")
        self._limit = max_per_second
        self._cond = threading.Condition()
        self._window: deque[float] = deque()

    def acquire(self) -> None:
        if self._limit is None:
            return
        with self._cond:
            while True:
                now = time.monotonic()
                while self._window and now - self._window[0] >= 1.0:
                    self._window.popleft()
                if len(self._window) < self._limit:
                    self._window.append(now)
                    return
                wait_for = 1.0 - (now - self._window[0])
                self._cond.wait(timeout=max(wait_for, 0.001))
