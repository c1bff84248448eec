"""
运行服务
包含运行分派与报告输出
"""
from .run_service import RunService, run_service
from .report_writer import render_csv, render_json, render_report, report_rows, write_report

__all__ = [
    "RunService",
    "run_service",
    "render_csv",
    "render_json",
    "render_report",
    "report_rows",
    "write_report",
]
