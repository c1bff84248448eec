"""
随机实例模型

实例可由 (seed, generator_id, dim) 重新生成；序列化往返逐位稳定
（复矩阵存为实部/虚部两个嵌套列表）。
"""
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from internal.model.base import LabModel
from pkg.errors import SignatureMismatch


class MatrixPayload(BaseModel):
    """复矩阵的 JSON 表示"""
    re: List[List[float]] = Field(..., description="实部")
    im: List[List[float]] = Field(..., description="虚部")

    @classmethod
    def from_array(cls, arr) -> "MatrixPayload":
        a = np.atleast_2d(np.asarray(arr, dtype=np.complex128))
        return cls(re=[[float(x) for x in row] for row in a.real],
                   im=[[float(x) for x in row] for row in a.imag])

    def to_array(self) -> np.ndarray:
        return np.array(self.re, dtype=float) + 1j * np.array(self.im, dtype=float)


class Instance(LabModel):
    """一个检查所需的全部输入"""
    seed: int = Field(..., description="64 位实例种子")
    generator_id: str = Field(..., description="生成器 / 检查 ID")
    dim: int = Field(..., description="维度 n")
    extra_dim: Optional[int] = Field(default=None, description="第二维度 m（映射定义域、项数等）")
    profile: str = Field(default="well-conditioned", description="谱 profile")
    matrices: Dict[str, MatrixPayload] = Field(default_factory=dict, description="矩阵部件")
    kraus: Dict[str, List[MatrixPayload]] = Field(default_factory=dict, description="Kraus 算子族")
    scalars: Dict[str, float] = Field(default_factory=dict, description="标量部件（p, α, θ …）")
    labels: Dict[str, str] = Field(default_factory=dict, description="字符串部件（范数、测试函数名）")

    # ==================== 构造辅助 ====================

    def with_matrix(self, name: str, arr) -> "Instance":
        self.matrices[name] = MatrixPayload.from_array(arr)
        return self

    def with_kraus(self, name: str, ops) -> "Instance":
        self.kraus[name] = [MatrixPayload.from_array(z) for z in ops]
        return self

    # ==================== 读取 ====================

    def part_names(self) -> set:
        return set(self.matrices) | set(self.kraus) | set(self.scalars) | set(self.labels)

    def matrix(self, name: str) -> np.ndarray:
        if name not in self.matrices:
            raise SignatureMismatch("实例缺少矩阵部件", part=name, check_id=self.generator_id)
        return self.matrices[name].to_array()

    def kraus_ops(self, name: str) -> List[np.ndarray]:
        if name not in self.kraus:
            raise SignatureMismatch("实例缺少 Kraus 部件", part=name, check_id=self.generator_id)
        return [z.to_array() for z in self.kraus[name]]

    def scalar(self, name: str) -> float:
        if name not in self.scalars:
            raise SignatureMismatch("实例缺少标量部件", part=name, check_id=self.generator_id)
        return float(self.scalars[name])

    def label(self, name: str) -> str:
        if name not in self.labels:
            raise SignatureMismatch("实例缺少标签部件", part=name, check_id=self.generator_id)
        return self.labels[name]
