"""
优超关系：≺_wlog、≺_log、≺^{wlog}，以及加法 ≺_w 与复合矩阵交叉校验

间隔全部在 log 空间计算（Weak 除外）。零特征值按计数处理：
- Y 的前 k 个特征值中有零而 X 没有 → 间隔 −∞
- X 有零而 Y 没有 → +∞
- 两者都有零 → 0（两个乘积都为 0）
"""
from typing import List, Optional, Tuple

import numpy as np

from internal.linalg import Tolerance, operator_norm, resolve_tolerance
from internal.matfun import PsdMatrix, compound
from internal.model import MajorizationReport, Relation
from pkg.errors import DimMismatch


def _check_pair(x: np.ndarray, y: np.ndarray) -> int:
    if x.shape != y.shape:
        raise DimMismatch("优超比较的维度不一致", left=x.shape, right=y.shape)
    return int(x.shape[0])


def _zero_floor(x: np.ndarray, y: np.ndarray, tol: Tolerance) -> float:
    """零特征值判定下限 rank_floor·λ_1（取两者中较大的 λ_1）"""
    top = max(float(np.max(x)), float(np.max(y)), 0.0)
    return tol.rank_floor * top


def _log_margins(lead: np.ndarray, trail: np.ndarray, floor: float) -> List[float]:
    """
    margin_k = Σ_{j≤k} log lead_j − Σ_{j≤k} log trail_j（零计数规则见模块说明）

    lead 是应当"更大"的一侧（WeakLog 中为 Y，SuperWeakLog 中为 X）。
    """
    lead_zero = lead <= floor
    trail_zero = trail <= floor
    lead_log = np.log(np.where(lead_zero, 1.0, lead))
    trail_log = np.log(np.where(trail_zero, 1.0, trail))
    lead_count = np.cumsum(lead_zero)
    trail_count = np.cumsum(trail_zero)
    diff = np.cumsum(lead_log) - np.cumsum(trail_log)

    margins = []
    for k in range(lead.shape[0]):
        if lead_count[k] > 0:
            margins.append(0.0 if trail_count[k] > 0 else float("-inf"))
        elif trail_count[k] > 0:
            margins.append(float("inf"))
        else:
            margins.append(float(diff[k]))
    return margins


def _linear_rescue(lead: np.ndarray, trail: np.ndarray, k: int, abs_tol: float) -> bool:
    """近奇异实例：∏lead − ∏trail ≥ −abs_tol·max(1, λ_1)^k"""
    scale = max(1.0, float(np.max(lead)), float(np.max(trail))) ** k
    return float(np.prod(lead[:k]) - np.prod(trail[:k])) >= -abs_tol * scale


def _build_report(
    relation: Relation,
    margins: List[float],
    lead: np.ndarray,
    trail: np.ndarray,
    tol: Tolerance,
    abs_tol: Optional[float],
    x_values: np.ndarray,
    y_values: np.ndarray,
) -> MajorizationReport:
    rescued = []
    passed = True
    for k, m in enumerate(margins, start=1):
        if m >= -tol.log_margin:
            continue
        if abs_tol is not None and _linear_rescue(lead, trail, k, abs_tol):
            rescued.append(k)
            continue
        passed = False

    worst_index = int(np.argmin(margins))
    return MajorizationReport(
        relation=relation,
        k_margins=margins,
        verdict=passed,
        tol=tol.log_margin,
        abs_tol=abs_tol,
        x_values=[float(v) for v in x_values],
        y_values=[float(v) for v in y_values],
        worst_k=worst_index + 1,
        worst_margin=float(margins[worst_index]),
        det_margin=float(margins[-1]),
        rescued_by_abs_tol=rescued,
    )


# ==================== 基于特征值数组的核心 ====================

def weak_log_majorize_values(
    x,
    y,
    tol=None,
    abs_tol: Optional[float] = None,
) -> MajorizationReport:
    """x ≺_wlog y（x、y 为非负数组，内部降序排列）"""
    tol = resolve_tolerance(tol)
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    _check_pair(x, y)
    margins = _log_margins(y, x, _zero_floor(x, y, tol))
    return _build_report(Relation.WEAK_LOG, margins, y, x, tol, abs_tol, x, y)


def log_majorize_values(
    x,
    y,
    tol=None,
    abs_tol: Optional[float] = None,
) -> MajorizationReport:
    """x ≺_log y：≺_wlog 且 k=n 处相等"""
    tol = resolve_tolerance(tol)
    report = weak_log_majorize_values(x, y, tol, abs_tol)
    x_arr = np.asarray(report.x_values)
    y_arr = np.asarray(report.y_values)
    det_margin = report.k_margins[-1]

    det_equal = abs(det_margin) <= tol.log_margin
    if not det_equal and abs_tol is not None:
        n = x_arr.shape[0]
        scale = max(1.0, float(np.max(x_arr)), float(np.max(y_arr))) ** n
        det_equal = abs(float(np.prod(y_arr) - np.prod(x_arr))) <= abs_tol * scale

    return report.model_copy(update={
        "relation": Relation.LOG,
        "verdict": report.verdict and det_equal,
    })


def super_weak_log_majorize_values(
    x,
    y,
    tol=None,
    abs_tol: Optional[float] = None,
) -> MajorizationReport:
    """x ≺^{wlog} y：∏_{j≤k} ν_j(x) ≥ ∏_{j≤k} ν_j(y)（ν 升序）"""
    tol = resolve_tolerance(tol)
    x = np.sort(np.asarray(x, dtype=float))
    y = np.sort(np.asarray(y, dtype=float))
    _check_pair(x, y)
    margins = _log_margins(x, y, _zero_floor(x, y, tol))
    return _build_report(Relation.SUPER_WEAK_LOG, margins, x, y, tol, abs_tol, x, y)


def weak_majorize_values(x, y, tol=None) -> MajorizationReport:
    """x ≺_w y：Σ_{j≤k} x_j ≤ Σ_{j≤k} y_j + tol·max(1, |Σ y|)"""
    tol = resolve_tolerance(tol)
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    _check_pair(x, y)
    sx = np.cumsum(x)
    sy = np.cumsum(y)
    margins = [float(v) for v in sy - sx]
    passed = all(m >= -tol.log_margin * max(1.0, abs(float(s))) for m, s in zip(margins, sy))
    worst_index = int(np.argmin(margins))
    return MajorizationReport(
        relation=Relation.WEAK,
        k_margins=margins,
        verdict=passed,
        tol=tol.log_margin,
        x_values=[float(v) for v in x],
        y_values=[float(v) for v in y],
        worst_k=worst_index + 1,
        worst_margin=margins[worst_index],
        det_margin=margins[-1],
    )


# ==================== PsdMatrix 入口 ====================

def _pair_values(X: PsdMatrix, Y: PsdMatrix) -> Tuple[np.ndarray, np.ndarray]:
    if X.dim != Y.dim:
        raise DimMismatch("优超比较的维度不一致", left=X.dim, right=Y.dim)
    return np.asarray(X.values), np.asarray(Y.values)


def weak_log_majorize(X: PsdMatrix, Y: PsdMatrix, tol=None, abs_tol: Optional[float] = None) -> MajorizationReport:
    """
    X ≺_wlog Y

    示例:
        X=diag(3,1), Y=diag(4,2)   -> True（3≤4, 3≤8）
        X=diag(1,1), Y=diag(2,0.4) -> False（k=2: 1 > 0.8）
    """
    x, y = _pair_values(X, Y)
    return weak_log_majorize_values(x, y, tol, abs_tol)


def log_majorize(X: PsdMatrix, Y: PsdMatrix, tol=None, abs_tol: Optional[float] = None) -> MajorizationReport:
    """X ≺_log Y（≺_wlog 加行列式相等）"""
    x, y = _pair_values(X, Y)
    return log_majorize_values(x, y, tol, abs_tol)


def super_weak_log_majorize(X: PsdMatrix, Y: PsdMatrix, tol=None, abs_tol: Optional[float] = None) -> MajorizationReport:
    """X ≺^{wlog} Y（升序特征值乘积反向比较）"""
    x, y = _pair_values(X, Y)
    return super_weak_log_majorize_values(x, y, tol, abs_tol)


def weak_majorize(X: PsdMatrix, Y: PsdMatrix, tol=None) -> MajorizationReport:
    """X ≺_w Y（Ky Fan 部分和）"""
    x, y = _pair_values(X, Y)
    return weak_majorize_values(x, y, tol)


def _compound_log_products(P: PsdMatrix, floor: float, tol: Tolerance) -> Tuple[np.ndarray, np.ndarray]:
    """
    由 ‖∧^k P‖_∞ 逐 k 还原 log ∏_{j≤k} λ_j 与零特征值计数

    λ_k = ‖∧^k‖ / ‖∧^{k−1}‖；比值 ≤ floor 记为零，之后的 λ 同样计零（降序）。
    floor 不低于 PsdMatrix 构造时的钳位下限 rank_floor·max(1, λ_1)。
    """
    n = P.dim
    floor = max(floor, tol.rank_floor * max(1.0, operator_norm(P.matrix)))
    logs = np.zeros(n)
    counts = np.zeros(n, dtype=int)
    prev_log, zeros = 0.0, 0
    for k in range(1, n + 1):
        if zeros == 0:
            norm_k = operator_norm(compound(P.matrix, k))
            if norm_k <= floor * np.exp(prev_log):
                zeros = 1
            else:
                prev_log = float(np.log(norm_k))
        else:
            zeros += 1
        logs[k - 1] = prev_log
        counts[k - 1] = zeros
    return logs, counts


def weak_log_majorize_by_compound(X: PsdMatrix, Y: PsdMatrix, tol=None) -> MajorizationReport:
    """
    复合矩阵路线：∏_{j≤k} λ_j = ‖∧^k ·‖_∞，逐 k 比较 log 比值

    独立于排序特征值的 log 求和，用作交叉校验；零计数规则与特征值路线相同。
    """
    tol = resolve_tolerance(tol)
    x, y = _pair_values(X, Y)
    floor = _zero_floor(x, y, tol)
    x_logs, x_zeros = _compound_log_products(X, floor, tol)
    y_logs, y_zeros = _compound_log_products(Y, floor, tol)

    margins = []
    for k in range(X.dim):
        if y_zeros[k] > 0:
            margins.append(0.0 if x_zeros[k] > 0 else float("-inf"))
        elif x_zeros[k] > 0:
            margins.append(float("inf"))
        else:
            margins.append(float(y_logs[k] - x_logs[k]))
    return _build_report(Relation.WEAK_LOG, margins, y, x, tol, None, x, y)
