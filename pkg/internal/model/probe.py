"""
泛函探针报告
"""
from typing import List, Optional

from pydantic import Field

from internal.model.base import LabModel


class MidpointCheck(LabModel):
    """一次中点 log 凸性检查"""
    a: List[float] = Field(..., description="端点 a = (p, t)")
    b: List[float] = Field(..., description="端点 b = (p, t)")
    mid: List[float] = Field(..., description="中点")
    residual: float = Field(..., description="log F(mid) − (log F(a) + log F(b))/2")


class ProbeReport(LabModel):
    """(p, t) 网格上的 log 凸性探针"""
    variant: str = Field(..., description="泛函变体")
    norm: str = Field(..., description="范数标签")
    alpha: float = Field(..., description="α")
    grid: List[List[float]] = Field(..., description="网格点 (p, t)，按 p 优先顺序")
    values: List[float] = Field(..., description="对应的 F 值")
    midpoint_checks: List[MidpointCheck] = Field(..., description="中点检查")
    worst_residual: float = Field(..., description="最大残差")
    min_residual_margin: float = Field(..., description="min(tol − residual)")
    tol: float = Field(..., description="容差")
    verdict: bool = Field(..., description="所有残差 ≤ tol")


class SequenceReport(LabModel):
    """单调性检查（p ↦ F(p, 1)）"""
    p_grid: List[float] = Field(..., description="p 网格（递增）")
    values: List[float] = Field(..., description="F(p, 1)")
    worst_increase: float = Field(..., description="最大相对增量 F(p_{i+1})/F(p_i) − 1")
    tol: float = Field(..., description="容差")
    verdict: bool = Field(..., description="非增判定")


class LimitProbeReport(LabModel):
    """p → ∞ 极限探针"""
    j: int = Field(..., description="特征值下标（从 1 开始）")
    p_sequence: List[float] = Field(..., description="p 序列")
    values: List[float] = Field(..., description="λ_j^{1/p}(A^p Z* B^p Z A^p)")
    cauchy_tail: float = Field(..., description="后三分之一相邻 |log| 差的最大值")
    differences: Optional[List[float]] = Field(default=None, description="相邻矩阵的相对 Frobenius 差（矩阵极限探针）")


class PowerMeanReport(LabModel):
    """α ↦ ‖A^α‖_{k}^{1/α} 的幂平均序列（α → 0⁺ 趋于几何平均）"""
    k: int = Field(..., description="Ky Fan 阶")
    alphas: List[float] = Field(..., description="α 序列（递增）")
    values: List[float] = Field(..., description="‖A^α‖_{k}^{1/α}")
    geometric_mean: float = Field(..., description="(∏_{j≤k} λ_j)^{1/k}")
    gap: float = Field(..., description="最小 α 处的值与几何平均之差")
    worst_decrease: float = Field(..., description="相邻值的最大相对下降")
    tol: float = Field(..., description="容差")
    verdict: bool = Field(..., description="非减且不低于几何平均")
