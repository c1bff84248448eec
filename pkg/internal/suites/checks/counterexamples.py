"""
期望失败的检查：行列式 Schur 反例与 Cartesian 常数的紧性

expects_violation=True：verdict 为 false 才是预期结果。
"""
import numpy as np

from internal.major import super_weak_log_majorize, weak_log_majorize
from internal.matfun import PsdMatrix, psd_power, psd_product
from internal.model import Instance, MajorizationReport
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.checks.common import from_majorization, psd
from internal.suites.checks.normal_family import cartesian_sides
from internal.suites.generators import WELL_CONDITIONED, gen_ginibre, gen_psd

# 常数缩小的比例：c = 2^{p−1}·(1 − CARTESIAN_SHRINK)
CARTESIAN_SHRINK = 0.01


# ==================== 行列式 Schur 反例 ====================

def det_schur_sides(A: PsdMatrix, B: PsdMatrix, p: float = 2.0):
    """(A(I∘B)A)^p 与 A^p(I∘B^p)A^p"""
    diag_b = np.diag(np.diag(B.matrix))
    diag_bp = np.diag(np.diag(psd_power(B, p).matrix))
    Ap = psd_power(A, p)
    return psd_power(psd_product(A, diag_b, A), p), psd_product(Ap, diag_bp, Ap)


def det_schur_report(A: PsdMatrix, B: PsdMatrix, p: float = 2.0, tol=None) -> MajorizationReport:
    """super-weak-log 比较；B 非对角时 k = n 处 det²(I∘B) < det(I∘B²) 使其失败"""
    lhs, rhs = det_schur_sides(A, B, p)
    return super_weak_log_majorize(lhs, rhs, tol)


def _gen_det_schur(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("B", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.scalars["p"] = 2.0


def _eval_det_schur(inst: Instance, tol) -> Evaluation:
    report = det_schur_report(psd(inst, "A", tol), psd(inst, "B", tol), inst.scalar("p"), tol)
    return from_majorization(report)


# ==================== Cartesian 常数 ====================

def nilpotent_witness(T=None) -> np.ndarray:
    """N = [[0, T], [0, 0]]（T 缺省为 1×1 的 1，即 2×2 的两步幂零矩阵）"""
    T = np.atleast_2d(np.asarray([[1.0]] if T is None else T, dtype=np.complex128))
    n = T.shape[0]
    N = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    N[:n, n:] = T
    return N


def _gen_cartesian_constant(rng, inst: Instance):
    inst.with_matrix("T", gen_ginibre(rng, inst.dim))
    inst.scalars["p"] = float(rng.choice([1.0, 1.5, 2.0, 3.0]))


def _eval_cartesian_constant(inst: Instance, tol) -> Evaluation:
    """幂零见证上把 2^{p−1} 换成略小的常数，k = 1 处失败"""
    N = nilpotent_witness(inst.matrix("T"))
    p = inst.scalar("p")
    constant = 2.0 ** (p - 1.0) * (1.0 - CARTESIAN_SHRINK)
    lhs, rhs = cartesian_sides(PsdMatrix.identity(N.shape[0]), N, p, tol, constant)
    result = from_majorization(weak_log_majorize(lhs, rhs, tol))
    result.details["ratio"] = float(lhs.values[0]) / float(rhs.values[0])
    return result


CHECKS = [
    InequalityCheck("det_schur_counterexample", "(A(I∘B)A)^2 ≺^{wlog} A^2(I∘B^2)A^2 fails: det²(I∘B) < det(I∘B²)",
                    ("A", "B", "p"), _gen_det_schur, _eval_det_schur,
                    expects_violation=True, profiles=(WELL_CONDITIONED,), min_dim=2),
    InequalityCheck("cartesian_constant", "2^{p−1}(1−ε) fails on the two-step nilpotent witness",
                    ("T", "p"), _gen_cartesian_constant, _eval_cartesian_constant,
                    expects_violation=True, profiles=(WELL_CONDITIONED,)),
]
