"""
闭式黄金值：Cartesian 常数的紧性、Golden–Thompson 2×2、行列式 Schur 反例

这些值不依赖随机数，CLI 的 --demo 与测试都直接使用。
"""
from typing import Dict, Optional

import numpy as np

from internal.linalg import resolve_tolerance
from internal.matfun import PsdMatrix
from internal.suites.checks.counterexamples import det_schur_report, det_schur_sides, nilpotent_witness
from internal.suites.checks.exponential_family import gt_sides
from internal.suites.checks.normal_family import cartesian_sides

GT_S = np.diag([1.0, -1.0])
GT_T = np.array([[0.0, 1.0], [1.0, 0.0]])


def tightness_cartesian(p: float, constant: Optional[float] = None, T=None, tol=None) -> float:
    """
    λ_1(|N|^p) / λ_1(c·(|X|^p + |Y|^p))，N = X + iY 为幂零见证，A = I

    c = 2^{p−1} 时比值恰为 1：常数在 k = 1 处取到。

    示例:
        tightness_cartesian(2)                -> 1.0
        tightness_cartesian(2, 2 * 0.99)      -> 1/0.99
    """
    tol = resolve_tolerance(tol)
    N = nilpotent_witness(T)
    lhs, rhs = cartesian_sides(PsdMatrix.identity(N.shape[0]), N, float(p), tol, constant)
    return float(lhs.values[0]) / float(rhs.values[0])


def golden_thompson_2x2() -> Dict[str, float]:
    """S = diag(1, −1)，T = [[0,1],[1,0]]：Tr e^{S+T} = 2cosh√2，Tr e^Se^T = 2cosh²1"""
    lhs, rhs = gt_sides(GT_S, GT_T)
    trace_lhs = float(np.sum(lhs.values))
    trace_rhs = float(np.sum(rhs.values))
    return {
        "lhs": trace_lhs,
        "rhs": trace_rhs,
        "slack": trace_rhs - trace_lhs,
        "closed_form_slack": float(2.0 * np.cosh(1.0) ** 2 - 2.0 * np.cosh(np.sqrt(2.0))),
    }


def det_schur_all_ones() -> Dict[str, float]:
    """A = I，B = 全 1 矩阵：det²(I∘B) = 1 < det(I∘B²) = 4"""
    A = PsdMatrix.identity(2)
    B = PsdMatrix.from_matrix(np.ones((2, 2)))
    lhs, rhs = det_schur_sides(A, B)
    report = det_schur_report(A, B)
    return {
        "det_lhs": float(np.prod(lhs.values)),
        "det_rhs": float(np.prod(rhs.values)),
        "det_margin": float(report.k_margins[-1]),
        "verdict": float(report.verdict),
    }


def demo() -> Dict[str, Dict[str, float]]:
    """--demo 输出的全部闭式结果"""
    return {
        "golden_thompson_2x2": golden_thompson_2x2(),
        "tightness_cartesian": {f"p={p:g}": tightness_cartesian(p) for p in (1.0, 2.0, 3.0)},
        "det_schur_all_ones": det_schur_all_ones(),
    }
