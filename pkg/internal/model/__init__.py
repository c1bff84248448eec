"""
数据模型包
包含所有 pydantic 报告 / 实例 / 配置模型
"""
from internal.model.base import LabModel
from internal.model.majorization import Relation, MajorizationReport, InequalityReport
from internal.model.probe import MidpointCheck, ProbeReport, SequenceReport, LimitProbeReport, PowerMeanReport
from internal.model.instance import MatrixPayload, Instance
from internal.model.outcome import OutcomeStatus, CheckOutcome, CheckSummary, SuiteSummary
from internal.model.search import TrajectoryPoint, SearchReport
from internal.model.run import Command, ReportFormat, RunConfig, RunReport

__all__ = [
    "LabModel",
    "Relation",
    "MajorizationReport",
    "InequalityReport",
    "MidpointCheck",
    "ProbeReport",
    "SequenceReport",
    "LimitProbeReport",
    "PowerMeanReport",
    "MatrixPayload",
    "Instance",
    "OutcomeStatus",
    "CheckOutcome",
    "CheckSummary",
    "SuiteSummary",
    "TrajectoryPoint",
    "SearchReport",
    "Command",
    "ReportFormat",
    "RunConfig",
    "RunReport",
]
