"""
报告模型基类
"""
from pydantic import BaseModel, ConfigDict


class LabModel(BaseModel):
    """所有报告模型的基类（±inf 以 JSON 常量 Infinity 输出）"""
    model_config = ConfigDict(ser_json_inf_nan="constants")
