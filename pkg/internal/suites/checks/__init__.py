"""
注册表检查的各个家族

每个模块导出 CHECKS 列表；注册与查找见 internal.suites.check_manager。
"""
from internal.suites.checks import (
    araki_family,
    counterexamples,
    exponential_family,
    holder_family,
    normal_family,
    proof_machinery,
)

__all__ = [
    "araki_family",
    "counterexamples",
    "exponential_family",
    "holder_family",
    "normal_family",
    "proof_machinery",
]
