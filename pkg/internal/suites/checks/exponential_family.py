"""
矩阵指数族：Cohen / Thompson / Golden–Thompson / Segal / EMI / Lie 乘积公式
"""
import math

import numpy as np

from internal.linalg import expm, expm_hermitian, hermitian_part, operator_norm
from internal.major import log_majorize
from internal.matfun import PsdMatrix, abs_val, psd_log, psd_product
from internal.model import Instance
from internal.norms import SymmetricNorm, evaluate
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.checks.common import from_majorization, from_scalar, sample_norm
from internal.suites.generators import WELL_CONDITIONED, gen_ginibre, gen_hermitian

# 对称 Lie 乘积公式：n = 2^j，j = 0..LIE_STEPS
LIE_STEPS = 10
# 最终误差上限
LIE_FINAL_ERROR = 1e-4
# 低于该相对阈值的误差视为已收敛（舍入噪声）
_LIE_NOISE = 1e-10

_WELL = (WELL_CONDITIONED,)


def _exp_psd(H) -> PsdMatrix:
    return PsdMatrix.from_matrix(expm_hermitian(hermitian_part(np.asarray(H))))


def gt_sides(S, T):
    """e^{S+T} 与 e^{S/2}e^Te^{S/2}（S, T Hermitian）"""
    half = _exp_psd(0.5 * np.asarray(S))
    return _exp_psd(np.asarray(S) + np.asarray(T)), psd_product(half, _exp_psd(T), half)


# ==================== Cohen / Thompson ====================

def _gen_cohen(rng, inst: Instance):
    inst.with_matrix("Z", 2.0 * gen_ginibre(rng, inst.dim))


def _eval_cohen(inst: Instance, tol) -> Evaluation:
    """|e^Z| ≺_log e^{Re Z}"""
    Z = inst.matrix("Z")
    lhs = abs_val(expm(Z, tol), tol)
    rhs = _exp_psd(hermitian_part(Z))
    return from_majorization(log_majorize(lhs, rhs, tol))


def _gen_thompson(rng, inst: Instance):
    inst.with_matrix("A", gen_ginibre(rng, inst.dim))
    inst.with_matrix("B", gen_ginibre(rng, inst.dim))


def _eval_thompson(inst: Instance, tol) -> Evaluation:
    """|e^{A+B}| ≺_log e^{ReA/2}e^{ReB}e^{ReA/2}"""
    A, B = inst.matrix("A"), inst.matrix("B")
    lhs = abs_val(expm(A + B, tol), tol)
    half = _exp_psd(0.5 * hermitian_part(A))
    rhs = psd_product(half, _exp_psd(hermitian_part(B)), half)
    return from_majorization(log_majorize(lhs, rhs, tol))


# ==================== Hermitian 指数 ====================

def _gen_hermitian_pair(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("S", gen_hermitian(rng, n, scale=2.0))
    inst.with_matrix("T", gen_hermitian(rng, n, scale=2.0))


def _eval_gt_log(inst: Instance, tol) -> Evaluation:
    """e^{S+T} ≺_log e^{S/2}e^Te^{S/2}"""
    lhs, rhs = gt_sides(inst.matrix("S"), inst.matrix("T"))
    return from_majorization(log_majorize(lhs, rhs, tol))


def _eval_segal(inst: Instance, tol) -> Evaluation:
    """‖e^{S+T}‖_∞ ≤ ‖e^{S/2}e^Te^{S/2}‖_∞"""
    lhs, rhs = gt_sides(inst.matrix("S"), inst.matrix("T"))
    return from_scalar(float(lhs.values[0]), float(rhs.values[0]), tol)


def _eval_golden_thompson(inst: Instance, tol) -> Evaluation:
    """Tr e^{S+T} ≤ Tr e^Se^T"""
    lhs, rhs = gt_sides(inst.matrix("S"), inst.matrix("T"))
    return from_scalar(float(np.sum(lhs.values)), float(np.sum(rhs.values)), tol)


def _gen_emi(rng, inst: Instance):
    _gen_hermitian_pair(rng, inst)
    inst.labels["norm"] = sample_norm(rng, inst.dim)


def _eval_emi(inst: Instance, tol) -> Evaluation:
    """‖S−T‖ ≤ ‖log(e^{S/2}e^{−T}e^{S/2})‖"""
    S, T = inst.matrix("S"), inst.matrix("T")
    norm = SymmetricNorm.parse(inst.label("norm"))
    _, inner = gt_sides(S, -T)
    lhs = evaluate(norm, S - T)
    rhs = evaluate(norm, psd_log(inner))
    return from_scalar(lhs, rhs, tol)


# ==================== Lie 乘积公式 ====================

def _gen_lie_trotter(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("H", gen_hermitian(rng, n, scale=0.5))
    inst.with_matrix("K", gen_hermitian(rng, n, scale=0.5))


def lie_trotter_errors(H, K, steps: int = LIE_STEPS):
    """‖(e^{H/2n}e^{K/n}e^{H/2n})^n − e^{H+K}‖_∞，n = 2^j（逐次平方）"""
    H, K = np.asarray(H), np.asarray(K)
    target = expm_hermitian(hermitian_part(H + K))
    errors = []
    for j in range(steps + 1):
        scale = 2.0 ** (-j)
        half = expm_hermitian(hermitian_part(0.5 * scale * H))
        M = half @ expm_hermitian(hermitian_part(K * scale)) @ half
        for _ in range(j):
            M = M @ M
        errors.append(operator_norm(M - target))
    return errors, operator_norm(target)


def _eval_lie_trotter(inst: Instance, tol) -> Evaluation:
    """误差随 n 单调下降且最终低于 LIE_FINAL_ERROR"""
    errors, scale = lie_trotter_errors(inst.matrix("H"), inst.matrix("K"))
    noise = _LIE_NOISE * max(1.0, scale)
    margins = []
    for prev, nxt in zip(errors, errors[1:]):
        if nxt <= noise:
            margins.append(0.0)
        else:
            margins.append(math.log(prev / nxt) if prev > 0 else float("-inf"))
    final = errors[-1]
    margins.append(math.log(LIE_FINAL_ERROR / final) if final > 0 else float("inf"))
    verdict = all(m >= -tol.log_margin for m in margins)
    return Evaluation(verdict=verdict, margins=margins, slack=LIE_FINAL_ERROR - final,
                      details={"final_error": final, "first_error": errors[0]})


# ==================== 注册 ====================

CHECKS = [
    InequalityCheck("cohen_exp", "|e^Z| ≺_log e^{Re Z}",
                    ("Z",), _gen_cohen, _eval_cohen, profiles=_WELL),
    InequalityCheck("thompson_exp", "|e^{A+B}| ≺_log e^{ReA/2}e^{ReB}e^{ReA/2}",
                    ("A", "B"), _gen_thompson, _eval_thompson, profiles=_WELL),
    InequalityCheck("gt_log", "e^{S+T} ≺_log e^{S/2}e^Te^{S/2}, S, T Hermitian",
                    ("S", "T"), _gen_hermitian_pair, _eval_gt_log, profiles=_WELL),
    InequalityCheck("segal", "‖e^{S+T}‖_∞ ≤ ‖e^{S/2}e^Te^{S/2}‖_∞",
                    ("S", "T"), _gen_hermitian_pair, _eval_segal, profiles=_WELL),
    InequalityCheck("golden_thompson", "Tr e^{S+T} ≤ Tr e^Se^T",
                    ("S", "T"), _gen_hermitian_pair, _eval_golden_thompson, profiles=_WELL),
    InequalityCheck("emi", "‖S−T‖ ≤ ‖log(e^{S/2}e^{−T}e^{S/2})‖",
                    ("S", "T", "norm"), _gen_emi, _eval_emi, profiles=_WELL),
    InequalityCheck("lie_trotter_probe", "(e^{H/2n}e^{K/n}e^{H/2n})^n → e^{H+K}, error decays in n",
                    ("H", "K"), _gen_lie_trotter, _eval_lie_trotter, profiles=_WELL),
]
