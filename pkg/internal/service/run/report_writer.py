"""
报告输出
JSON 为完整报告（含见证矩阵）；CSV 按报告类型展平为一行一条记录（不含见证）
"""
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from internal.config import config
from internal.model import ReportFormat, RunReport
from log import logger


def render_json(report: RunReport) -> str:
    """确定性 JSON：无时间戳，None 字段省略"""
    indent = int(config.report_config.get("indent", 2))
    return report.model_dump_json(indent=indent, exclude_none=True)


def report_rows(report: RunReport) -> List[Dict]:
    """CSV 行：套件结果 / 探针中点 / 搜索轨迹 / 演示数值"""
    if report.outcomes:
        return [
            {
                "check_id": o.check_id,
                "seed": o.seed,
                "dim": o.dim,
                "status": o.status.value,
                "verdict": o.verdict,
                "worst_margin": o.worst_margin,
                "slack": o.slack,
                "relation": o.relation,
                "margins": ";".join(repr(m) for m in o.margins),
                "error": o.error,
            }
            for o in report.outcomes
        ]
    if report.probe is not None:
        return [c.model_dump() for c in report.probe.midpoint_checks]
    if report.limit is not None:
        return [{"p": p, "value": v} for p, v in zip(report.limit.p_sequence, report.limit.values)]
    if report.search is not None:
        return [point.model_dump() for point in report.search.trajectory]
    if report.demo is not None:
        rows = []
        for group, values in report.demo.items():
            for key, value in values.items():
                rows.append({"group": group, "key": key, "value": value})
        return rows
    return []


def render_csv(report: RunReport) -> str:
    return pd.DataFrame(report_rows(report)).to_csv(index=False)


def render_report(report: RunReport, fmt: ReportFormat = ReportFormat.JSON) -> str:
    if ReportFormat(fmt) == ReportFormat.CSV:
        return render_csv(report)
    return render_json(report)


def write_report(report: RunReport, out: Optional[str], fmt: ReportFormat = ReportFormat.JSON) -> str:
    """
    输出报告（运行结束时一次性写出）

    Args:
        out: 输出路径；None 时只返回文本

    Returns:
        渲染后的文本
    """
    text = render_report(report, fmt)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("💾 报告已写入", path=str(path), format=ReportFormat(fmt).value)
    return text
