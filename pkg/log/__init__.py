"""
日志模块（基于 loguru）

使用示例：
    from log import logger

    logger.info("✅ 套件完成", suite_id="araki-family", passed=100)
    logger.error("❌ 运行异常", exc_info=True, command="suite")
"""

from .logger import logger

__all__ = [
    "logger",
]
