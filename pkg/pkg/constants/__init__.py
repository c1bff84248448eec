"""
常量配置模块
"""
from .constants import (
    ARTIFACT_VERSION,
    MAJORLAB_SEED,
    MAJORLAB_JOBS,
    MAJORLAB_LOG_LEVEL,
    MAJORLAB_LOG_FILE,
    MAJORLAB_CONFIG,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
)

__all__ = [
    "ARTIFACT_VERSION",
    "MAJORLAB_SEED",
    "MAJORLAB_JOBS",
    "MAJORLAB_LOG_LEVEL",
    "MAJORLAB_LOG_FILE",
    "MAJORLAB_CONFIG",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VIOLATION",
]
