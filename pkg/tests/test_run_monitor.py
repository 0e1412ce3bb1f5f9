import pytest

import run_monitor
from run_monitor import RunMonitor, default_worker_count, is_psutil_available


def test_start_stop_measures_elapsed_time():
    monitor = RunMonitor()
    monitor.start()
    metrics = monitor.stop()
    assert metrics.elapsed_s >= 0.0
    if is_psutil_available():
        assert metrics.rss_mb > 0.0


def test_stop_without_start():
    with pytest.raises(RuntimeError):
        RunMonitor().stop()


def test_monitor_without_psutil(monkeypatch):
    monkeypatch.setattr(run_monitor, "psutil", None)
    monitor = RunMonitor()
    monitor.start()
    metrics = monitor.stop()
    assert metrics.rss_mb == 0.0
    assert metrics.cpu_percent == 0.0
    assert default_worker_count() == 1
    assert not is_psutil_available()


def test_default_worker_count_is_positive():
    assert default_worker_count() >= 1
