"""
试验执行队列
"""
from .trial_channel import TrialChannel, run_tasks

__all__ = ["TrialChannel", "run_tasks"]
