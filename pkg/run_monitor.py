"""Resource sampling for verification runs using psutil."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

try:
    import psutil
except ImportError:
    psutil = None


@dataclass(frozen=True)
class RunMetrics:
    """Cost of one verification suite."""

    elapsed_s: float
    rss_mb: float
    rss_delta_mb: float
    cpu_percent: float


class RunMonitor:
    """Measure wall time and resident memory of the current process between start() and stop().

    Without psutil only wall time is recorded; memory and CPU fields read 0.
    """

    def __init__(self) -> None:
        self._process = psutil.Process() if psutil is not None else None
        self._started: Optional[float] = None
        self._rss_start = 0.0

    def _rss_mb(self) -> float:
        if self._process is None:
            return 0.0
        return self._process.memory_info().rss / (1024 * 1024)

    def start(self) -> None:
        self._rss_start = self._rss_mb()
        if self._process is not None:
            self._process.cpu_percent(interval=None)
        self._started = time.perf_counter()

    def stop(self) -> RunMetrics:
        if self._started is None:
            raise RuntimeError("RunMonitor.stop() called before start()")
        elapsed = time.perf_counter() - self._started
        rss = self._rss_mb()
        cpu = self._process.cpu_percent(interval=None) if self._process is not None else 0.0
        self._started = None
        return RunMetrics(
            elapsed_s=elapsed,
            rss_mb=rss,
            rss_delta_mb=rss - self._rss_start,
            cpu_percent=cpu,
        )


def default_worker_count() -> int:
    """Physical core count when psutil can tell, else 1."""

    if psutil is None:
        return 1
    return psutil.cpu_count(logical=False) or 1


def is_psutil_available() -> bool:
    """False when suite metrics can only carry wall time."""
    return psutil is not None
