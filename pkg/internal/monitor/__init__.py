"""
性能监控模块
"""
from .performance_monitor import (
    performance_monitor,
    PerformanceMonitor,
    PerformanceTimer,
)

__all__ = [
    'performance_monitor',
    'PerformanceMonitor',
    'PerformanceTimer',
]
