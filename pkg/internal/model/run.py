"""
运行配置与报告
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import Field

from internal.model.base import LabModel
from internal.model.outcome import CheckOutcome
from internal.model.probe import ProbeReport, LimitProbeReport
from internal.model.search import SearchReport


class Command(str, Enum):
    SUITE = "suite"
    PROBE = "probe"
    SEARCH = "search"
    DEMO = "demo"


class ReportFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class RunConfig(LabModel):
    """完整可序列化的运行配置；持久化后重新执行得到相同报告"""
    command: Command = Field(..., description="命令")
    suite_id: Optional[str] = Field(default=None, description="套件 ID")
    check_id: Optional[str] = Field(default=None, description="单个检查 ID")
    objective_id: Optional[str] = Field(default=None, description="搜索目标 ID")
    probe_variant: Optional[str] = Field(default=None, description="探针变体")
    dims: List[int] = Field(default_factory=lambda: [3], description="维度列表")
    trials: int = Field(default=100, description="每个 (检查, 维度) 的试验数")
    seed: int = Field(default=0, description="根种子")
    tol: Optional[float] = Field(default=None, description="log 间隔容差")
    grid: Optional[str] = Field(default=None, description='网格 "p:a,b;t:x,y"')
    alpha: float = Field(default=1.0, description="探针的 α")
    norm: str = Field(default="trace", description="探针的范数标签")
    restarts: int = Field(default=20, description="搜索重启次数")
    steps: int = Field(default=200, description="每次重启的步数")
    profile: Optional[str] = Field(default=None, description="强制谱 profile")
    jobs: int = Field(default=1, description="工作线程数")
    ci: bool = Field(default=False, description="预期反例计为通过")
    out: Optional[str] = Field(default=None, description="输出路径")
    format: ReportFormat = Field(default=ReportFormat.JSON, description="输出格式")


class RunReport(LabModel):
    """报告：{config, artifact_version, outcomes, summary} 及可选的探针/搜索/演示部分"""
    config: RunConfig = Field(..., description="运行配置")
    artifact_version: str = Field(..., description="产物版本")
    outcomes: List[CheckOutcome] = Field(default_factory=list, description="检查结果")
    probe: Optional[ProbeReport] = Field(default=None, description="探针报告")
    limit: Optional[LimitProbeReport] = Field(default=None, description="极限探针报告")
    search: Optional[SearchReport] = Field(default=None, description="搜索报告")
    demo: Optional[Dict[str, Any]] = Field(default=None, description="演示结果")
    summary: Dict[str, Any] = Field(default_factory=dict, description="汇总")
