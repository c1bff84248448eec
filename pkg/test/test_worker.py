"""
测试试验队列与性能监控装饰器
"""
import sys
import os

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)
os.environ.setdefault("MAJORLAB_LOG_FILE", "0")

import time

import pytest

from internal.monitor import PerformanceMonitor, performance_monitor
from internal.service.run import RunService
from internal.worker import TrialChannel, run_tasks
from pkg.errors import BadDomain


def _task(value, delay=0.0):
    def run():
        time.sleep(delay)
        return value * value
    return run


def _failing(index):
    def run():
        raise BadDomain("任务失败", index=index)
    return run


# ==================== TrialChannel ====================

def test_results_keep_submission_order():
    tasks = [_task(i, delay=0.002 * (5 - i % 5)) for i in range(12)]
    assert run_tasks(tasks, jobs=4) == [i * i for i in range(12)]
    assert run_tasks(tasks, jobs=1) == [i * i for i in range(12)]


def test_channel_is_reusable():
    channel = TrialChannel(3)
    first = channel.run([_task(i) for i in range(5)])
    second = channel.run([_task(i) for i in range(7)])
    assert first == [i * i for i in range(5)]
    assert second == [i * i for i in range(7)]


def test_first_error_by_index_is_raised():
    tasks = [_task(0), _failing(1), _task(2), _failing(3)]
    with pytest.raises(BadDomain) as info:
        run_tasks(tasks, jobs=3)
    assert info.value.details["index"] == 1


def test_non_exception_stops_its_consumer_and_propagates():
    def interrupted():
        raise SystemExit(3)

    tasks = [_task(0), interrupted, _task(2), _task(3)]
    with pytest.raises(SystemExit):
        run_tasks(tasks, jobs=2)


# ==================== 性能监控 ====================

def test_performance_monitor_records_and_preserves_result(monkeypatch):
    records = []
    monkeypatch.setattr(PerformanceMonitor(), "record", lambda *args, **kwargs: records.append(args))

    @performance_monitor("run", operation_name="平方")
    def square(x):
        return x * x

    @performance_monitor("run")
    def broken():
        raise BadDomain("失败")

    assert square(4) == 16
    with pytest.raises(BadDomain):
        broken()
    assert [r[0] for r in records] == ["run", "run"]
    assert records[0][1] == "平方"
    assert records[0][3]["status"] == "success"
    assert records[1][3] == {"status": "error", "error_type": "BadDomain"}


def test_run_service_execute_is_monitored():
    assert hasattr(RunService.execute, "__wrapped__")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn) and fn.__code__.co_argcount == 0:
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ worker 测试全部完成")
