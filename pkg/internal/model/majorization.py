"""
优超与不等式判定报告
"""
from enum import Enum
from typing import List, Optional

from pydantic import Field

from internal.model.base import LabModel


class Relation(str, Enum):
    """优超关系"""
    WEAK = "Weak"                     # ≺_w（加法 Ky Fan）
    WEAK_LOG = "WeakLog"              # ≺_wlog
    LOG = "Log"                       # ≺_log
    SUPER_WEAK_LOG = "SuperWeakLog"   # ≺^{wlog}


class MajorizationReport(LabModel):
    """逐 k 间隔的优超判定"""
    relation: Relation = Field(..., description="优超关系")
    k_margins: List[float] = Field(..., description="逐 k 间隔（log 关系为 log 尺度，Weak 为线性）")
    verdict: bool = Field(..., description="判定结果")
    tol: float = Field(..., description="间隔容差")
    abs_tol: Optional[float] = Field(default=None, description="近奇异实例的线性绝对容差")
    x_values: List[float] = Field(..., description="X 的特征值（WeakLog/Log/Weak 降序，SuperWeakLog 升序 ν）")
    y_values: List[float] = Field(..., description="Y 的特征值（排序同上）")
    worst_k: int = Field(..., description="间隔最小的 k（从 1 开始）")
    worst_margin: float = Field(..., description="最小间隔")
    det_margin: Optional[float] = Field(default=None, description="k=n 的间隔（行列式比较）")
    rescued_by_abs_tol: List[int] = Field(default_factory=list, description="仅由线性绝对容差判定通过的 k")


class InequalityReport(LabModel):
    """标量不等式 lhs ≤ rhs 的判定"""
    lhs: float = Field(..., description="左端")
    rhs: float = Field(..., description="右端")
    slack: float = Field(..., description="rhs − lhs")
    log_margin: float = Field(..., description="log rhs − log lhs（两端为正时）")
    verdict: bool = Field(..., description="判定结果")
