"""
不等式检查注册表、随机实例生成与套件执行
"""
from .base_check import Evaluation, InequalityCheck
from .check_manager import (
    ALL_CHECKS,
    SUITES,
    get_check,
    get_suite,
    list_all_checks,
    list_check_ids,
)
from .runner import check_tolerance, evaluate_instance, run_check, run_checks, run_suite, summarize
from .golden import demo, det_schur_all_ones, golden_thompson_2x2, tightness_cartesian

__all__ = [
    "Evaluation",
    "InequalityCheck",
    "ALL_CHECKS",
    "SUITES",
    "get_check",
    "get_suite",
    "list_all_checks",
    "list_check_ids",
    "check_tolerance",
    "evaluate_instance",
    "run_check",
    "run_checks",
    "run_suite",
    "summarize",
    "demo",
    "det_schur_all_ones",
    "golden_thompson_2x2",
    "tightness_cartesian",
]
