"""
配置模块
"""
from .config_loader import ConfigLoader, config

__all__ = ["ConfigLoader", "config"]
