"""
性能监控模块

提供装饰器和上下文计时器，监控套件 / 探针 / 搜索的执行时间。
耗时总是以 DEBUG 写入日志；[monitor].enabled 为 true 时额外按天、按类型
追加到 json_monitor/ 目录。监控数据从不写入报告。

监控类型：
- suite: 检查套件
- probe: 泛函探针
- search: 反例 / 紧性搜索
- run: 一次完整的 CLI 运行
"""

import time
import json
from pathlib import Path
from datetime import datetime
from functools import wraps
from typing import Any, Callable, Dict, Optional

from internal.config import config
from log import logger


class PerformanceMonitor:
    """性能监控管理器"""

    _instance = None
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        project_root = Path(__file__).parent.parent.parent
        self.monitor_dir = project_root / "json_monitor"

        self._initialized = True
        logger.debug("性能监控系统已初始化", monitor_dir=str(self.monitor_dir))

    @property
    def enabled(self) -> bool:
        return bool(config.monitor_config.get("enabled", False))

    def _get_file_path(self, monitor_type: str) -> Path:
        """
        获取监控数据文件路径

        格式: json_monitor/YY_MM_DD_monitor/{type}.json
        """
        today_dir = datetime.now().strftime("%y_%m_%d_monitor")
        monitor_subdir = self.monitor_dir / today_dir
        monitor_subdir.mkdir(parents=True, exist_ok=True)
        return monitor_subdir / f"{monitor_type}.json"

    def record(
        self,
        monitor_type: str,
        operation: str,
        duration: float,
        metadata: Optional[Dict[str, Any]] = None
    ):
        """
        记录一次耗时

        Args:
            monitor_type: 监控类型（suite / probe / search）
            operation: 操作名称
            duration: 执行时间（秒）
            metadata: 额外的元数据（试验数、维度等）
        """
        metadata = metadata or {}
        duration_ms = round(duration * 1000, 2)
        logger.debug(f"⏱️  [{monitor_type}] {operation}: {duration_ms}ms", **metadata)

        if not self.enabled:
            return
        try:
            record = {
                "timestamp": datetime.now().isoformat(),
                "operation": operation,
                "duration_ms": duration_ms,
                "duration_s": round(duration, 4),
            }
            if metadata:
                record["metadata"] = metadata
                trials = metadata.get("trials")
                if trials and duration > 0:
                    record["trials_per_second"] = round(trials / duration, 2)

            # NDJSON：每行一个 JSON
            with open(self._get_file_path(monitor_type), 'a', encoding='utf-8') as f:
                f.write(json.dumps(record, ensure_ascii=False, default=str) + '\n')
        except OSError as e:
            logger.error(f"性能监控记录失败: {e}", exc_info=True)


# 全局单例
_monitor = PerformanceMonitor()


def performance_monitor(monitor_type: str, operation_name: Optional[str] = None):
    """
    同步函数性能监控装饰器

    用法:
        @performance_monitor('suite', operation_name='运行套件')
        def run_suite(...):
            ...
    """
    def decorator(func: Callable) -> Callable:
        op_name = operation_name or f"{func.__module__}.{func.__name__}"

        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            metadata: Dict[str, Any] = {}
            try:
                result = func(*args, **kwargs)
                metadata['status'] = 'success'
                return result
            except Exception as e:
                metadata['status'] = 'error'
                metadata['error_type'] = type(e).__name__
                raise
            finally:
                _monitor.record(monitor_type, op_name, time.perf_counter() - start_time, metadata)

        return wrapper
    return decorator


# ==================== 上下文管理器（用于手动计时）====================

class PerformanceTimer:
    """
    性能计时器上下文管理器

    用法:
        with PerformanceTimer('search', '爬山搜索', {"objective": "araki"}):
            report = search(...)
    """

    def __init__(self, monitor_type: str, operation: str, metadata: Optional[Dict] = None):
        self.monitor_type = monitor_type
        self.operation = operation
        self.metadata = metadata or {}
        self.start_time = None
        self.duration = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = time.perf_counter() - self.start_time

        if exc_type is not None:
            self.metadata['status'] = 'error'
            self.metadata['error_type'] = exc_type.__name__
        else:
            self.metadata['status'] = 'success'

        _monitor.record(self.monitor_type, self.operation, self.duration, self.metadata)

        # 不抑制异常
        return False
