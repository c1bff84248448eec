"""
检查注册表管理器
统一管理所有不等式检查与套件，ID 是 CLI 契约
"""
from typing import Dict, List

from internal.suites.base_check import InequalityCheck
from internal.suites.checks import (
    araki_family,
    counterexamples,
    exponential_family,
    holder_family,
    normal_family,
    proof_machinery,
)
from pkg.errors import UnknownCheck, UnknownSuite


# ==================== 所有检查 ====================

SUITE_FAMILIES = {
    "araki-family": araki_family.CHECKS,
    "normal-family": normal_family.CHECKS,
    "exponential-family": exponential_family.CHECKS,
    "holder-family": holder_family.CHECKS,
    "proof-machinery": proof_machinery.CHECKS,
    "counterexamples": counterexamples.CHECKS,
}

ALL_CHECKS: List[InequalityCheck] = [check for checks in SUITE_FAMILIES.values() for check in checks]

CHECK_MAP: Dict[str, InequalityCheck] = {check.check_id: check for check in ALL_CHECKS}

if len(CHECK_MAP) != len(ALL_CHECKS):
    raise RuntimeError("检查 ID 重复")


# ==================== 套件 ====================

SUITES: Dict[str, List[str]] = {
    name: [check.check_id for check in checks] for name, checks in SUITE_FAMILIES.items()
}
SUITES["all"] = [check.check_id for check in ALL_CHECKS]


# ==================== 查找 ====================

def get_check(check_id: str) -> InequalityCheck:
    """
    按 ID 获取检查

    Raises:
        UnknownCheck: ID 未注册
    """
    check = CHECK_MAP.get(check_id)
    if check is None:
        raise UnknownCheck("未注册的检查", check_id=check_id)
    return check


def get_suite(suite_id: str) -> List[InequalityCheck]:
    """
    按套件 ID 获取检查列表（注册顺序）

    Raises:
        UnknownSuite: 套件不存在
    """
    if suite_id not in SUITES:
        raise UnknownSuite("未知的套件", suite_id=suite_id, known=sorted(SUITES))
    return [CHECK_MAP[check_id] for check_id in SUITES[suite_id]]


def list_check_ids() -> List[str]:
    """所有检查 ID（注册顺序）"""
    return [check.check_id for check in ALL_CHECKS]


def list_all_checks() -> List[Dict]:
    """列出所有检查的信息"""
    return [check.to_dict() for check in ALL_CHECKS]
