"""
搜索目标注册表

每个注册表检查都是一个紧性目标（最小化最差 log 间隔）；另有两个专用目标：
- det_schur：det_schur_counterexample 的别名
- lie_trotter_z：Z 加权倒数 Lie–Trotter 序列的收敛性，间隔 = 1e-2 − 最后一个相邻差（只报告）
"""
from typing import Dict, List

from internal.config import config
from internal.functional import reciprocal_lie_trotter_probe
from internal.model import Instance
from internal.suites import ALL_CHECKS, Evaluation, InequalityCheck, get_check
from internal.suites.checks.common import psd
from internal.suites.generators import WELL_CONDITIONED, gen_ginibre, gen_psd
from pkg.errors import UnknownObjective

# lie_trotter_z 的收敛阈值
LIE_TROTTER_Z_THRESHOLD = 1e-2


def _gen_lie_trotter_z(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("B", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("Z", gen_ginibre(rng, n))


def _eval_lie_trotter_z(inst: Instance, tol) -> Evaluation:
    sequence = config.probe_config.get("limit_sequence", [1, 2, 4, 8, 16, 32, 64])
    report = reciprocal_lie_trotter_probe(psd(inst, "A", tol), psd(inst, "B", tol), inst.matrix("Z"), sequence, tol)
    final = float(report.differences[-1]) if report.differences else 0.0
    margin = LIE_TROTTER_Z_THRESHOLD - final
    return Evaluation(verdict=margin >= 0.0, margins=[margin],
                      details={"final_difference": final, "cauchy_tail": report.cauchy_tail})


LIE_TROTTER_Z = InequalityCheck(
    "lie_trotter_z", "(A^pZ*B^pZA^p)^{1/p} as p → ∞: open convergence question",
    ("A", "B", "Z"), _gen_lie_trotter_z, _eval_lie_trotter_z, profiles=(WELL_CONDITIONED,),
)

# ==================== 注册 ====================

OBJECTIVE_MAP: Dict[str, InequalityCheck] = {check.check_id: check for check in ALL_CHECKS}
OBJECTIVE_MAP["det_schur"] = get_check("det_schur_counterexample")
OBJECTIVE_MAP["lie_trotter_z"] = LIE_TROTTER_Z

# 只报告、不代表已证明不等式的目标
OPEN_OBJECTIVES = frozenset({"lie_trotter_z"})


def get_objective(objective_id: str) -> InequalityCheck:
    """
    Raises:
        UnknownObjective: 目标未注册
    """
    check = OBJECTIVE_MAP.get(objective_id)
    if check is None:
        raise UnknownObjective("未注册的搜索目标", objective_id=objective_id)
    return check


def is_proved(objective_id: str) -> bool:
    """目标对应已证明的不等式（负间隔意味着实现缺陷）"""
    return objective_id not in OPEN_OBJECTIVES and not get_objective(objective_id).expects_violation


def list_objective_ids() -> List[str]:
    return list(OBJECTIVE_MAP)
