"""
标量不等式 lhs ≤ rhs 的判定
"""
import math

from internal.linalg import resolve_tolerance
from internal.model import InequalityReport


def scalar_inequality(lhs: float, rhs: float, tol=None) -> InequalityReport:
    """
    判定 lhs ≤ rhs（相对容差 log_margin·max(1, |lhs|, |rhs|)）

    log_margin = log rhs − log lhs；两端非正时退化为线性间隔。
    """
    tol = resolve_tolerance(tol)
    lhs = float(lhs)
    rhs = float(rhs)
    slack = rhs - lhs
    if lhs > 0.0 and rhs > 0.0:
        log_margin = math.log(rhs) - math.log(lhs)
    elif lhs <= 0.0 and rhs > 0.0:
        log_margin = float("inf")
    elif lhs > 0.0:
        log_margin = float("-inf")
    else:
        log_margin = slack
    scale = max(1.0, abs(lhs), abs(rhs))
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        log_margin=log_margin,
        verdict=slack >= -tol.log_margin * scale,
    )
