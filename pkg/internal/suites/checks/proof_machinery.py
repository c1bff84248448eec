"""
证明中用到的中间工具：Horn 乘积、压缩步骤、变分行列式、Cauchy–Schwarz、
Ky Fan 支配与复合矩阵交叉校验
"""
import numpy as np

from internal.linalg import svd
from internal.major import weak_log_majorize, weak_log_majorize_by_compound, weak_log_majorize_values
from internal.matfun import abs_val, isometry_det, psd_power, psd_product
from internal.model import Instance
from internal.norms import SymmetricNorm, cauchy_schwarz_check, kyfan_dominance
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.checks.common import (
    abs_tol_for,
    combine,
    from_majorization,
    from_scalar,
    psd,
    sample_norm,
    sample_p,
    sandwich,
)
from internal.suites.generators import (
    WELL_CONDITIONED,
    gen_contraction,
    gen_psd,
    gen_with_singulars,
    haar_unitary,
    spectrum,
)


def _general(rng, inst: Instance) -> np.ndarray:
    return gen_with_singulars(rng, spectrum(rng, inst.dim, inst.profile))


# ==================== Horn ====================

def _gen_horn_product(rng, inst: Instance):
    inst.with_matrix("X", _general(rng, inst))
    inst.with_matrix("Y", _general(rng, inst))


def _eval_horn_product(inst: Instance, tol) -> Evaluation:
    """∏_{j≤k} s_j(XY) ≤ ∏_{j≤k} s_j(X)s_j(Y)"""
    X, Y = inst.matrix("X"), inst.matrix("Y")
    lhs = svd(X @ Y, tol).singulars
    rhs = np.asarray(svd(X, tol).singulars) * np.asarray(svd(Y, tol).singulars)
    return from_majorization(weak_log_majorize_values(lhs, rhs, tol, abs_tol_for(inst, tol)))


def _gen_horn_contraction(rng, inst: Instance):
    inst.with_matrix("X", _general(rng, inst))
    inst.with_matrix("K", gen_contraction(rng, inst.dim, floor=0.0))


def _eval_horn_contraction(inst: Instance, tol) -> Evaluation:
    """K 压缩：|XKX*| ≺_wlog XX*"""
    X, K = inst.matrix("X"), inst.matrix("K")
    Xh = X.conj().T
    lhs = abs_val(X @ K @ Xh, tol)
    rhs = psd_product(X, Xh)
    return from_majorization(weak_log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


# ==================== 变分公式 ====================

def _gen_variational(rng, inst: Instance):
    n = inst.dim
    k = int(rng.integers(1, n + 1))
    inst.with_matrix("A", _general(rng, inst))
    inst.with_matrix("V", haar_unitary(rng, n)[:, :k])
    inst.with_matrix("W", haar_unitary(rng, n)[:, :k])
    inst.scalars["k"] = float(k)


def _eval_variational(inst: Instance, tol) -> Evaluation:
    """|det V*AW| ≤ ∏_{j≤k} s_j(A)，V、W 取前 k 个奇异向量时取等"""
    A = inst.matrix("A")
    k = int(inst.scalar("k"))
    s = svd(A, tol)
    bound = float(np.prod(s.singulars[:k]))
    random_side = from_scalar(isometry_det(A, inst.matrix("V"), inst.matrix("W")), bound, tol,
                              abs_tol_for(inst, tol))
    attained = isometry_det(A, np.asarray(s.left)[:, :k], np.asarray(s.right)[:, :k])
    gap = abs(attained - bound) / max(1.0, bound)
    equality = Evaluation(verdict=gap <= tol.rel, margins=[-gap], details={"attained_gap": gap})
    return combine(random_side, equality)


# ==================== 范数工具 ====================

def _gen_cauchy_schwarz(rng, inst: Instance):
    inst.with_matrix("X", _general(rng, inst))
    inst.with_matrix("Y", _general(rng, inst))
    inst.labels["norm"] = sample_norm(rng, inst.dim)


def _eval_cauchy_schwarz(inst: Instance, tol) -> Evaluation:
    """‖X*Y‖ ≤ ‖X*X‖^{1/2}‖Y*Y‖^{1/2}"""
    norm = SymmetricNorm.parse(inst.label("norm"))
    report = cauchy_schwarz_check(norm, inst.matrix("X"), inst.matrix("Y"), tol)
    return from_scalar(report.lhs, report.rhs, tol, abs_tol_for(inst, tol))


def _gen_kyfan(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, inst.profile).matrix)
    inst.with_matrix("B", gen_psd(rng, n, inst.profile).matrix)
    inst.scalars["p"] = sample_p(rng)


def _eval_kyfan(inst: Instance, tol) -> Evaluation:
    """≺_wlog 推出 ≺_w：(ABA)^p 的 Ky Fan 部分和被 A^pB^pA^p 控制"""
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    p = inst.scalar("p")
    lhs = psd_power(psd_product(A, B, A), p)
    rhs = sandwich(A, psd_power(B, p), p)
    return from_majorization(kyfan_dominance(lhs, rhs, tol))


# ==================== 复合矩阵交叉校验 ====================

def _gen_compound(rng, inst: Instance):
    n = inst.dim
    X = gen_psd(rng, n, WELL_CONDITIONED).matrix
    if rng.uniform() < 0.5:
        Y = X + gen_psd(rng, n, WELL_CONDITIONED).matrix
    else:
        Y = gen_psd(rng, n, WELL_CONDITIONED).matrix
    inst.with_matrix("X", X)
    inst.with_matrix("Y", Y)


def _eval_compound(inst: Instance, tol) -> Evaluation:
    """特征值 log 求和路线与 ‖∧^k·‖_∞ 路线的 ≺_wlog 判定必须一致"""
    X, Y = psd(inst, "X", tol), psd(inst, "Y", tol)
    by_eigen = weak_log_majorize(X, Y, tol)
    by_compound = weak_log_majorize_by_compound(X, Y, tol)
    gap = max(0.0 if a == b else abs(a - b) for a, b in zip(by_eigen.k_margins, by_compound.k_margins))
    return Evaluation(verdict=by_eigen.verdict == by_compound.verdict, margins=[-gap],
                      details={"eigen_verdict": float(by_eigen.verdict),
                               "compound_verdict": float(by_compound.verdict)})


# ==================== 注册 ====================

CHECKS = [
    InequalityCheck("horn_product", "∏_{j≤k} s_j(XY) ≤ ∏_{j≤k} s_j(X)s_j(Y)",
                    ("X", "Y"), _gen_horn_product, _eval_horn_product),
    InequalityCheck("horn_contraction", "|XKX*| ≺_wlog XX*, K contraction",
                    ("X", "K"), _gen_horn_contraction, _eval_horn_contraction),
    InequalityCheck("variational_det", "|det V*AW| ≤ ∏_{j≤k} s_j(A), V, W isometries",
                    ("A", "V", "W", "k"), _gen_variational, _eval_variational),
    InequalityCheck("cauchy_schwarz_norm", "‖X*Y‖ ≤ ‖X*X‖^{1/2}‖Y*Y‖^{1/2}",
                    ("X", "Y", "norm"), _gen_cauchy_schwarz, _eval_cauchy_schwarz),
    InequalityCheck("kyfan_dominance", "(ABA)^p ≺_w A^pB^pA^p (Ky Fan dominance)",
                    ("A", "B", "p"), _gen_kyfan, _eval_kyfan),
    InequalityCheck("compound_oracle", "≺_wlog via sorted eigenvalue logs ≡ via ‖∧^k·‖_∞",
                    ("X", "Y"), _gen_compound, _eval_compound, profiles=(WELL_CONDITIONED,)),
]
