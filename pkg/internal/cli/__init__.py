"""
命令行入口
"""
from .runner import PROBE_VARIANTS, build_parser, main, to_run_config

__all__ = ["PROBE_VARIANTS", "build_parser", "main", "to_run_config"]
