"""
搜索报告
"""
from typing import List

from pydantic import Field

from internal.model.base import LabModel
from internal.model.instance import Instance


class TrajectoryPoint(LabModel):
    """轨迹上的一点（仅记录改进）"""
    restart: int = Field(..., description="重启序号")
    step: int = Field(..., description="步数（0 为初始实例）")
    margin: float = Field(..., description="当前最优间隔")


class SearchReport(LabModel):
    """爬山搜索结果（自校验）"""
    objective_id: str = Field(..., description="目标 ID")
    best_instance: Instance = Field(..., description="最优实例（完整见证）")
    best_margin: float = Field(..., description="最优间隔（负值表示找到违反）")
    best_restart: int = Field(..., description="最优实例所在的重启")
    trajectory: List[TrajectoryPoint] = Field(..., description="改进轨迹")
    restarts: int = Field(..., description="重启次数")
    steps: int = Field(..., description="每次重启的步数")
    seed: int = Field(..., description="根种子")
    dims: List[int] = Field(..., description="维度")
    verified: bool = Field(..., description="best_margin 与重新评估一致")
