"""
检查实现共用的小工具：参数抽样、PSD 读取、报告到 Evaluation 的转换
"""
from typing import Optional

import numpy as np

from internal.config import config
from internal.linalg import Tolerance, hermitian_part
from internal.major import scalar_inequality
from internal.matfun import PsdMatrix, abs_val, psd_power, psd_product
from internal.model import Instance, MajorizationReport
from internal.norms import norm_family
from internal.suites.base_check import Evaluation
from internal.suites.generators import WELL_CONDITIONED


# ==================== 参数抽样 ====================

def sample_p(rng: np.random.Generator) -> float:
    return float(rng.choice(config.suite_config.get("p_values", [1.0, 1.5, 2.0, 3.0])))


def sample_alpha(rng: np.random.Generator) -> float:
    return float(rng.choice(config.suite_config.get("alphas", [0.5, 1.0, 2.0])))


def sample_norm(rng: np.random.Generator, n: int) -> str:
    family = norm_family(n)
    return family[int(rng.integers(len(family)))].label


# ==================== 实例读取 ====================

def psd(instance: Instance, name: str, tol: Tolerance) -> PsdMatrix:
    return PsdMatrix.from_matrix(instance.matrix(name), tol)


def abs_tol_for(instance: Instance, tol: Tolerance) -> Optional[float]:
    """良态实例不启用线性绝对容差"""
    return None if instance.profile == WELL_CONDITIONED else tol.near_singular_abs


def power(A: PsdMatrix, p: float) -> PsdMatrix:
    return psd_power(A, p)


def abs_power(M, p: float, tol: Tolerance) -> PsdMatrix:
    """|M|^p"""
    return psd_power(abs_val(M, tol), p)


def sandwich(A: PsdMatrix, middle, p: float) -> PsdMatrix:
    """A^p · middle · A^p（middle 为 PSD）"""
    Ap = psd_power(A, p)
    return psd_product(Ap, middle, Ap)


def abs_sandwich_power(A: PsdMatrix, middle, p: float, tol: Tolerance) -> PsdMatrix:
    """|A · middle · A|^p（middle 任意方阵）"""
    M = np.asarray(middle.matrix if isinstance(middle, PsdMatrix) else middle, dtype=np.complex128)
    return abs_power(A.matrix @ M @ A.matrix, p, tol)


def psd_sum(*terms) -> PsdMatrix:
    total = sum(np.asarray(t.matrix if isinstance(t, PsdMatrix) else t, dtype=np.complex128) for t in terms)
    return PsdMatrix.from_matrix(hermitian_part(total))


def log_eigs(A: PsdMatrix) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(np.asarray(A.values))


def log_singulars(s) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(np.asarray(s, dtype=float))


# ==================== 转换为 Evaluation ====================

def from_majorization(report: MajorizationReport) -> Evaluation:
    details = {"worst_k": float(report.worst_k)}
    if report.det_margin is not None:
        details["det_margin"] = report.det_margin
    if report.rescued_by_abs_tol:
        details["rescued"] = float(len(report.rescued_by_abs_tol))
    return Evaluation(verdict=report.verdict, margins=list(report.k_margins),
                      relation=report.relation.value, details=details)


def from_scalar(lhs: float, rhs: float, tol: Tolerance, abs_tol: Optional[float] = None) -> Evaluation:
    """
    标量 lhs ≤ rhs

    两端为正时间隔取 log rhs − log lhs，否则取 slack / max(1, |lhs|, |rhs|)。
    """
    report = scalar_inequality(lhs, rhs, tol)
    scale = max(1.0, abs(report.lhs), abs(report.rhs))
    margin = report.log_margin if (report.lhs > 0 and report.rhs > 0) else report.slack / scale
    verdict = report.verdict or (abs_tol is not None and report.slack >= -abs_tol * scale)
    return Evaluation(verdict=verdict, margins=[margin], slack=report.slack,
                      details={"lhs": report.lhs, "rhs": report.rhs})


def from_log_values(log_lhs: float, log_rhs: float, tol: Tolerance, abs_tol: Optional[float] = None) -> Evaluation:
    """log 空间的 lhs ≤ rhs（lhs = 0 时间隔为 +inf）"""
    if log_lhs == float("-inf"):
        margin = float("inf") if log_rhs > float("-inf") else 0.0
    else:
        margin = log_rhs - log_lhs
    lhs = _safe_exp(log_lhs)
    rhs = _safe_exp(log_rhs)
    verdict = margin >= -tol.log_margin
    if not verdict and abs_tol is not None:
        verdict = rhs - lhs >= -abs_tol * max(1.0, lhs, rhs)
    return Evaluation(verdict=verdict, margins=[margin], slack=rhs - lhs,
                      details={"log_lhs": log_lhs, "log_rhs": log_rhs})


def combine(*evaluations: Evaluation, relation: Optional[str] = None) -> Evaluation:
    """多个子判定的合取（间隔依次拼接）"""
    margins = [m for e in evaluations for m in e.margins]
    details = {}
    for e in evaluations:
        details.update(e.details)
    slack = min((e.slack for e in evaluations if e.slack is not None), default=None)
    return Evaluation(verdict=all(e.verdict for e in evaluations), margins=margins, slack=slack,
                      relation=relation, details=details)


def _safe_exp(value: float) -> float:
    if value == float("-inf"):
        return 0.0
    with np.errstate(over="ignore"):
        return float(np.exp(value))
