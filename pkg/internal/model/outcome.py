"""
检查结果与套件汇总
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import Field

from internal.model.base import LabModel
from internal.model.instance import Instance


class OutcomeStatus(str, Enum):
    """结果状态"""
    PASS = "pass"
    VIOLATION = "violation"
    EXPECTED_COUNTEREXAMPLE = "expected-counterexample"
    MISSING_COUNTEREXAMPLE = "missing-counterexample"
    ERROR = "error"


class CheckOutcome(LabModel):
    """单个实例上的检查结果"""
    check_id: str = Field(..., description="检查 ID")
    seed: int = Field(..., description="实例种子")
    dim: int = Field(..., description="维度")
    verdict: bool = Field(..., description="不等式是否成立")
    status: OutcomeStatus = Field(..., description="结果状态")
    margins: List[float] = Field(..., description="逐 k log 间隔或标量间隔")
    slack: Optional[float] = Field(default=None, description="标量 rhs − lhs")
    relation: Optional[str] = Field(default=None, description="优超关系")
    details: Dict[str, float] = Field(default_factory=dict, description="附加诊断量")
    error: Optional[str] = Field(default=None, description="评估异常信息")
    witness: Optional[Instance] = Field(default=None, description="verdict 为 false 时的完整实例")

    @property
    def worst_margin(self) -> float:
        return min(self.margins) if self.margins else 0.0


class CheckSummary(LabModel):
    """单个检查的汇总"""
    trials: int = Field(..., description="试验数")
    passed: int = Field(..., description="通过数")
    failed: int = Field(..., description="未通过数")
    worst_margin: Optional[float] = Field(default=None, description="最小间隔")
    worst_seed: Optional[int] = Field(default=None, description="最小间隔对应的种子")


class SuiteSummary(LabModel):
    """套件汇总（聚合与顺序无关）"""
    total: int = Field(..., description="结果总数")
    passed: int = Field(..., description="verdict 为 true 的数量")
    failed: int = Field(..., description="verdict 为 false 的数量")
    expected_counterexamples: int = Field(..., description="预期反例数量")
    unexpected_failures: int = Field(..., description="非预期失败数量")
    errors: int = Field(..., description="评估异常数量")
    per_check: Dict[str, CheckSummary] = Field(default_factory=dict, description="逐检查汇总")
