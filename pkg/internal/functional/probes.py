"""
log 凸性 / 单调性 / 极限探针
"""
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from internal.functional.functional_spec import FunctionalSpec, Variant, log_evaluate_F
from internal.functional.grid import Point, ProbeGrid
from internal.linalg import operator_norm, resolve_tolerance, svd
from internal.matfun import PsdMatrix, psd_power, psd_product
from internal.model import (
    LimitProbeReport,
    MidpointCheck,
    PowerMeanReport,
    ProbeReport,
    SequenceReport,
)
from internal.monitor import PerformanceTimer
from internal.norms import SymmetricNorm
from internal.posmap import KrausMap
from internal.worker import run_tasks
from log import logger
from pkg.errors import BadDomain, BadGrid, NotContraction

# 压缩判定阈值 ‖Z‖_∞ ≤ 1 + 1e-12
_CONTRACTION_SLACK = 1e-12


def _midpoint_residual(la: float, lb: float, lm: float) -> float:
    """log F(mid) − (log F(a) + log F(b))/2，F 为 0 的端点按 −inf 处理"""
    avg = 0.5 * (la + lb)
    if lm == float("-inf"):
        return 0.0 if avg == float("-inf") else float("-inf")
    if avg == float("-inf"):
        return float("inf")
    return lm - avg


def _exp(value: float) -> float:
    if value == float("-inf"):
        return 0.0
    with np.errstate(over="ignore"):
        return float(np.exp(value))


def _midpoint_report(
    variant: str,
    norm: SymmetricNorm,
    alpha: float,
    grid: ProbeGrid,
    log_values: List[float],
    pairs: List[Tuple[int, int, int]],
    tol,
) -> ProbeReport:
    points = grid.points()
    checks = []
    for ia, ib, im in pairs:
        residual = _midpoint_residual(log_values[ia], log_values[ib], log_values[im])
        checks.append(MidpointCheck(a=list(points[ia]), b=list(points[ib]), mid=list(points[im]),
                                    residual=residual))
    residuals = [c.residual for c in checks]
    worst = max(residuals)
    return ProbeReport(
        variant=variant,
        norm=norm.label,
        alpha=alpha,
        grid=[list(pt) for pt in points],
        values=[_exp(v) for v in log_values],
        midpoint_checks=checks,
        worst_residual=worst,
        min_residual_margin=tol.log_margin - worst,
        tol=tol.log_margin,
        verdict=worst <= tol.log_margin,
    )


def _resolve_pairs(grid: ProbeGrid, pairs: Optional[Sequence[Tuple[Point, Point]]]) -> List[Tuple[int, int, int]]:
    resolved = grid.explicit_pairs(pairs) if pairs is not None else grid.midpoint_pairs()
    if not resolved:
        raise BadGrid("网格中没有中点也在网格内的点对", grid=grid.label)
    return resolved


# ==================== 联合 log 凸性 ====================

def probe_logconvexity(
    spec: FunctionalSpec,
    grid: Optional[ProbeGrid] = None,
    tol=None,
    jobs: Optional[int] = None,
    pairs: Optional[Sequence[Tuple[Point, Point]]] = None,
    verbose: bool = True,
) -> ProbeReport:
    """
    网格上的中点 log 凸性检查

    对每个轴对齐或对角点对 (a, b)（中点在网格内）检查
    log F(mid) ≤ (log F(a) + log F(b))/2 + tol。

    Args:
        spec: 泛函定义
        grid: (p, t) 网格，缺省取配置 [probe].default_grid
        tol: 容差策略
        jobs: 并行线程数（网格点独立求值，结果按网格顺序合并）
        pairs: 显式点对（缺省为全部可用点对）
        verbose: False 时开始 / 结束日志降为 DEBUG（注册表检查逐试验调用）

    Raises:
        BadGrid: 没有可用点对，或显式点对的中点不在网格内
        BadDomain: 网格点不在变体定义域内
    """
    tol = resolve_tolerance(tol)
    grid = grid or ProbeGrid.default()
    resolved = _resolve_pairs(grid, pairs)

    log_info = logger.info if verbose else logger.debug
    log_info("🔬 开始 log 凸性探针", variant=spec.variant.value, norm=spec.norm.label,
             grid=grid.label, pairs=len(resolved))
    with PerformanceTimer("probe", "log 凸性探针", {"points": len(grid.points())}):
        tasks = [lambda pt=pt: log_evaluate_F(spec, pt[0], pt[1]) for pt in grid.points()]
        log_values = run_tasks(tasks, jobs)

    report = _midpoint_report(spec.variant.value, spec.norm, spec.alpha, grid, log_values, resolved, tol)
    if report.verdict:
        log_info("✅ log 凸性探针通过", worst_residual=report.worst_residual)
    else:
        log_warn = logger.warning if verbose else logger.debug
        log_warn("⚠️ log 凸性探针未通过", variant=spec.variant.value, worst_residual=report.worst_residual)
    return report


# ==================== 单调截面 ====================

def monotone_section_check(spec: FunctionalSpec, p_grid: Sequence[float], tol=None) -> SequenceReport:
    """
    Z 为压缩时 p ↦ F(p, 1) 非增

    示例:
        A = B = diag(1, 4)，Z = I，算子范数，α = 1 -> 恒为 16

    Raises:
        NotContraction: ‖Z‖_∞ > 1 + 1e-12
        BadDomain: 变体不是 TWO_VAR / SECTION_T1，或 p 网格不是严格递增
    """
    tol = resolve_tolerance(tol)
    if spec.variant not in (Variant.TWO_VAR, Variant.SECTION_T1):
        raise BadDomain("单调截面只适用于 TWO_VAR / SECTION_T1", variant=spec.variant.value)
    z_norm = operator_norm(spec.Z)
    if z_norm > 1.0 + _CONTRACTION_SLACK:
        raise NotContraction("Z 不是压缩", operator_norm=z_norm)
    p_grid = [float(p) for p in p_grid]
    if any(b <= a for a, b in zip(p_grid, p_grid[1:])):
        raise BadDomain("p 网格必须严格递增", p_grid=p_grid)

    log_values = [log_evaluate_F(spec, p, 1.0) for p in p_grid]
    increases = []
    for la, lb in zip(log_values, log_values[1:]):
        if lb == float("-inf"):
            increases.append(-1.0 if la != float("-inf") else 0.0)
        elif la == float("-inf"):
            increases.append(float("inf"))
        else:
            increases.append(math.expm1(lb - la))
    worst = max(increases) if increases else 0.0
    return SequenceReport(
        p_grid=p_grid,
        values=[_exp(v) for v in log_values],
        worst_increase=worst,
        tol=tol.rel,
        verdict=worst <= tol.rel,
    )


# ==================== p → ∞ 极限 ====================

def _cauchy_tail(diffs: Sequence[float]) -> float:
    """后三分之一相邻差的最大值"""
    if not diffs:
        return 0.0
    span = max(1, math.ceil(len(diffs) / 3))
    return float(max(diffs[-span:]))


def _scaled(A: PsdMatrix) -> Tuple[PsdMatrix, float]:
    """A = a·A'，λ_1(A') = 1（A = 0 时 a = 0）"""
    top = float(A.values[0])
    if top <= 0.0:
        return A, 0.0
    return PsdMatrix._from_clean_spectrum(A.values / top, A.spectrum.vectors), top


def limit_probe(A: PsdMatrix, B: PsdMatrix, Z, j: int, p_sequence: Sequence[float], tol=None) -> LimitProbeReport:
    """
    λ_j^{1/p}(A^p Z* B^p Z A^p)，p 沿递增序列

    先把 A、B 归一化到 λ_1 = 1，再乘回 a²b，避免 p 较大时上溢。
    Cauchy 尾部为后三分之一相邻 |log| 差的最大值（诊断量，不做断言）。
    """
    tol = resolve_tolerance(tol)
    if j < 1 or j > A.dim:
        raise BadDomain("特征值下标越界", j=j, n=A.dim)
    A1, a = _scaled(A)
    B1, b = _scaled(B)
    Z = np.asarray(Z, dtype=np.complex128)

    values = []
    for p in p_sequence:
        p = float(p)
        # A^pZ*B^pZA^p 的特征值 = σ(B^{p/2} Z A^p)²
        M = psd_power(B1, 0.5 * p).matrix @ Z @ psd_power(A1, p).matrix
        sigma = float(svd(M, tol).singulars[j - 1])
        values.append(a * a * b * sigma ** (2.0 / p) if sigma > 0.0 else 0.0)

    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log(np.asarray(values))
    diffs = []
    for x, y in zip(logs, logs[1:]):
        diffs.append(0.0 if (np.isneginf(x) and np.isneginf(y)) else float(abs(y - x)))
    report = LimitProbeReport(j=j, p_sequence=[float(p) for p in p_sequence], values=values,
                              cauchy_tail=_cauchy_tail(diffs))
    logger.debug("极限探针完成", j=j, cauchy_tail=report.cauchy_tail)
    return report


def reciprocal_lie_trotter_probe(A: PsdMatrix, B: PsdMatrix, Z, p_sequence: Sequence[float], tol=None) -> LimitProbeReport:
    """
    矩阵序列 (A^p Z* B^p Z A^p)^{1/p} 的收敛诊断

    values 为每个矩阵的 λ_1，differences 为相邻矩阵的相对 Frobenius 差。
    只记录，不做断言。
    """
    tol = resolve_tolerance(tol)
    A1, a = _scaled(A)
    B1, b = _scaled(B)
    Z = np.asarray(Z, dtype=np.complex128)

    matrices = []
    for p in p_sequence:
        p = float(p)
        Ap = psd_power(A1, p)
        inner = psd_product(Ap, Z.conj().T, psd_power(B1, p), Z, Ap)
        matrices.append(a * a * b * psd_power(inner, 1.0 / p).matrix)

    differences = []
    for X, Y in zip(matrices, matrices[1:]):
        scale = max(float(np.linalg.norm(X)), np.finfo(float).tiny)
        differences.append(float(np.linalg.norm(Y - X)) / scale)
    values = [float(np.max(np.linalg.eigvalsh(0.5 * (X + X.conj().T)))) for X in matrices]
    return LimitProbeReport(j=1, p_sequence=[float(p) for p in p_sequence], values=values,
                            cauchy_tail=_cauchy_tail(differences), differences=differences)


# ==================== 正线性映射变体 ====================

def poslin_power_probe(
    phi: KrausMap,
    A: PsdMatrix,
    alpha: float,
    norm: SymmetricNorm,
    p_grid: Sequence[float],
    tol=None,
) -> ProbeReport:
    """
    p ↦ ‖Φ(A^{1/p})^α‖^p 的中点 log 凸性

    Raises:
        BadGrid: p 网格中没有中点也在网格内的点对
    """
    tol = resolve_tolerance(tol)
    grid = ProbeGrid.p_line(p_grid)
    resolved = _resolve_pairs(grid, None)
    log_values = []
    for p in grid.p_values:
        if p <= 0:
            raise BadDomain("p 必须为正", p=p)
        image = phi.apply_psd(psd_power(A, 1.0 / p))
        with np.errstate(divide="ignore"):
            log_eigs = np.log(np.asarray(image.values))
        log_values.append(p * norm.log_of_singulars(alpha * log_eigs))
    return _midpoint_report("poslin_power_p", norm, alpha, grid, log_values, resolved, tol)


def probe_map_logconvexity(
    phi: KrausMap,
    A: PsdMatrix,
    alpha: float,
    norm: SymmetricNorm,
    grid: Optional[ProbeGrid] = None,
    tol=None,
) -> ProbeReport:
    """
    (p, t) ↦ ‖{Φ(A^{t/p})}^{αp}‖ 的中点 log 凸性

    Φ(A^{t/p}) 是 PSD，其特征值即奇异值；αp 次幂在 log 空间完成。

    Raises:
        BadGrid: 没有可用点对
        BadDomain: 网格含 p ≤ 0
    """
    tol = resolve_tolerance(tol)
    grid = grid or ProbeGrid.default()
    resolved = _resolve_pairs(grid, None)
    log_values = []
    for p, t in grid.points():
        if p <= 0:
            raise BadDomain("p 必须为正", p=p)
        image = phi.apply_psd(psd_power(A, t / p))
        with np.errstate(divide="ignore"):
            log_eigs = np.log(np.asarray(image.values))
        log_values.append(norm.log_of_singulars(alpha * p * log_eigs))
    return _midpoint_report("poslin", norm, alpha, grid, log_values, resolved, tol)


def kyfan_geometric_limit(A: PsdMatrix, k: int, alphas: Sequence[float], tol=None) -> PowerMeanReport:
    """
    α ↦ ‖A^α‖_{k}^{1/α}（归一化 Ky Fan）

    这是前 k 个特征值的 α 次幂平均：随 α 非减，α → 0⁺ 时趋于几何平均
    (∏_{j≤k} λ_j)^{1/k}。
    """
    tol = resolve_tolerance(tol)
    norm = SymmetricNorm.normalized_kyfan(k)
    norm.check_dim(A.dim)
    alphas = sorted(float(a) for a in alphas)
    if not alphas or alphas[0] <= 0:
        raise BadDomain("α 必须为正", alphas=alphas)

    with np.errstate(divide="ignore"):
        log_lambda = np.log(np.asarray(A.values))
    values = [_exp(norm.log_of_singulars(a * log_lambda) / a) for a in alphas]
    geometric = _exp(float(np.sum(log_lambda[:k])) / k)

    decreases = [(x - y) / max(x, np.finfo(float).tiny) for x, y in zip(values, values[1:])]
    worst = max(decreases) if decreases else 0.0
    floor_ok = all(v >= geometric * (1.0 - tol.rel) for v in values)
    return PowerMeanReport(
        k=k,
        alphas=alphas,
        values=values,
        geometric_mean=geometric,
        gap=values[0] - geometric,
        worst_decrease=worst,
        tol=tol.rel,
        verdict=worst <= tol.rel and floor_ok,
    )
