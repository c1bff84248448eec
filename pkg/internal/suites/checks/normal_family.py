"""
正规矩阵与一般矩阵的绝对值型弱 log 优超

|A Φ(N) A|^p ≺_wlog A^p Φ(|N|^p) A^p 及其特例：三角不等式、m 元版本、
Cartesian 分解、对称部分、Schur 积。
"""
import numpy as np

from internal.linalg import hermitian_part
from internal.major import log_majorize, weak_log_majorize
from internal.matfun import PsdMatrix, abs_val, cartesian as cartesian_parts, psd_power, schur_product
from internal.model import Instance
from internal.posmap import KrausMap
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.checks.common import (
    abs_power,
    abs_sandwich_power,
    abs_tol_for,
    from_majorization,
    psd,
    psd_sum,
    sample_p,
    sandwich,
)
from internal.suites.generators import (
    WELL_CONDITIONED,
    gen_ginibre,
    gen_hermitian,
    gen_kraus,
    gen_normal,
    gen_psd,
)


def _weak_log(lhs: PsdMatrix, rhs: PsdMatrix, inst: Instance, tol) -> Evaluation:
    return from_majorization(weak_log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


def _gen_a(rng, inst: Instance):
    inst.with_matrix("A", gen_psd(rng, inst.dim, inst.profile).matrix)
    inst.scalars["p"] = sample_p(rng)


# ==================== 三角不等式 / Araki 正规版 ====================

def _gen_normal_pair(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("X", gen_normal(rng, n, inst.profile))
    inst.with_matrix("Y", gen_normal(rng, n, inst.profile))


def _eval_triangle_normal(inst: Instance, tol) -> Evaluation:
    """|X+Y| ≺_wlog |X|+|Y|"""
    X, Y = inst.matrix("X"), inst.matrix("Y")
    lhs = abs_val(X + Y, tol)
    rhs = psd_sum(abs_val(X, tol), abs_val(Y, tol))
    return _weak_log(lhs, rhs, inst, tol)


def _gen_araki_normal(rng, inst: Instance):
    _gen_a(rng, inst)
    inst.with_matrix("X", gen_normal(rng, inst.dim, inst.profile))


def _eval_araki_normal(inst: Instance, tol) -> Evaluation:
    """|AXA|^p ≺_log A^p|X|^pA^p"""
    A = psd(inst, "A", tol)
    X = inst.matrix("X")
    p = inst.scalar("p")
    lhs = abs_sandwich_power(A, X, p, tol)
    rhs = sandwich(A, abs_power(X, p, tol), p)
    return from_majorization(log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


# ==================== 主定理 ====================

def _gen_main_normal_map(rng, inst: Instance):
    _gen_a(rng, inst)
    n = inst.dim
    m = n + 1
    inst.extra_dim = m
    inst.with_matrix("N", gen_normal(rng, m, inst.profile))
    inst.with_kraus("Phi", gen_kraus(rng, m, n, int(rng.integers(1, n + 2))))


def _eval_main_normal_map(inst: Instance, tol) -> Evaluation:
    """|AΦ(N)A|^p ≺_wlog A^pΦ(|N|^p)A^p，Φ: 𝕄_m → 𝕄_n sub-unital"""
    A = psd(inst, "A", tol)
    N = inst.matrix("N")
    p = inst.scalar("p")
    phi = KrausMap.from_kraus(inst.kraus_ops("Phi"), tol=tol)
    lhs = abs_sandwich_power(A, phi.apply(N), p, tol)
    rhs = sandwich(A, phi.apply_psd(abs_power(N, p, tol)), p)
    result = _weak_log(lhs, rhs, inst, tol)
    result.details["sub_unital"] = float(phi.sub_unital)
    return result


# ==================== m 元 / Cartesian ====================

def _gen_m_normals(rng, inst: Instance):
    _gen_a(rng, inst)
    m = int(rng.integers(2, 4))
    inst.with_kraus("X", [gen_normal(rng, inst.dim, inst.profile) for _ in range(m)])


def _eval_m_normals(inst: Instance, tol) -> Evaluation:
    """|A(ΣX_k)A|^p ≺_wlog m^{p−1}A^p(Σ|X_k|^p)A^p"""
    A = psd(inst, "A", tol)
    X = inst.kraus_ops("X")
    p = inst.scalar("p")
    m = len(X)
    lhs = abs_sandwich_power(A, sum(X), p, tol)
    middle = psd_sum(*[abs_power(Xk, p, tol) for Xk in X])
    rhs = sandwich(A, middle.matrix * m ** (p - 1.0), p)
    return _weak_log(lhs, rhs, inst, tol)


def _gen_t(rng, inst: Instance):
    _gen_a(rng, inst)
    inst.with_matrix("T", gen_ginibre(rng, inst.dim))


def cartesian_sides(A: PsdMatrix, T, p: float, tol, constant: float = None):
    """|ATA|^p 与 c·A^p(|X|^p+|Y|^p)A^p，T = X+iY，c 缺省 2^{p−1}"""
    X, Y = cartesian_parts(T)
    c = 2.0 ** (p - 1.0) if constant is None else constant
    lhs = abs_sandwich_power(A, T, p, tol)
    middle = psd_sum(abs_power(X, p, tol), abs_power(Y, p, tol))
    return lhs, sandwich(A, middle.matrix * c, p)


def _eval_cartesian(inst: Instance, tol) -> Evaluation:
    A = psd(inst, "A", tol)
    lhs, rhs = cartesian_sides(A, inst.matrix("T"), inst.scalar("p"), tol)
    return _weak_log(lhs, rhs, inst, tol)


def _eval_sym_part(inst: Instance, tol) -> Evaluation:
    """|A(T+T*)/2·A|^p ≺_wlog A^p(|T|^p+|T*|^p)/2·A^p"""
    A = psd(inst, "A", tol)
    T = inst.matrix("T")
    p = inst.scalar("p")
    Th = T.conj().T
    lhs = abs_sandwich_power(A, 0.5 * (T + Th), p, tol)
    middle = psd_sum(abs_power(T, p, tol), abs_power(Th, p, tol))
    return _weak_log(lhs, sandwich(A, 0.5 * middle.matrix, p), inst, tol)


# ==================== Schur 积 ====================

def _gen_schur_normals(rng, inst: Instance):
    _gen_a(rng, inst)
    _gen_normal_pair(rng, inst)


def _eval_schur_normals(inst: Instance, tol) -> Evaluation:
    """|A(X∘Y)A|^p ≺_wlog A^p(|X|^p∘|Y|^p)A^p"""
    A = psd(inst, "A", tol)
    X, Y = inst.matrix("X"), inst.matrix("Y")
    p = inst.scalar("p")
    lhs = abs_sandwich_power(A, schur_product(X, Y), p, tol)
    middle = schur_product(abs_power(X, p, tol).matrix, abs_power(Y, p, tol).matrix)
    return _weak_log(lhs, sandwich(A, middle, p), inst, tol)


def _eval_schur_tt(inst: Instance, tol) -> Evaluation:
    """|A(T∘T*)A|^p ≺_wlog A^p(|T|^p∘|T*|^p)A^p"""
    A = psd(inst, "A", tol)
    T = inst.matrix("T")
    p = inst.scalar("p")
    Th = T.conj().T
    lhs = abs_sandwich_power(A, schur_product(T, Th), p, tol)
    middle = schur_product(abs_power(T, p, tol).matrix, abs_power(Th, p, tol).matrix)
    return _weak_log(lhs, sandwich(A, middle, p), inst, tol)


# ==================== 正规乘积交换 ====================

def _gen_normal_product_swap(rng, inst: Instance):
    n = inst.dim
    A = gen_psd(rng, n, WELL_CONDITIONED)
    H = gen_hermitian(rng, n)
    inst.with_matrix("A", A.matrix)
    inst.with_matrix("B", psd_power(A, -1.0).matrix @ H)


def _project_normal_product_swap(parts):
    """B ← A^{−1}·herm(AB)，AB 保持 Hermitian"""
    A = parts["A"]
    parts["B"] = np.linalg.solve(A, hermitian_part(A @ parts["B"]))


def _eval_normal_product_swap(inst: Instance, tol) -> Evaluation:
    """AB 正规时 |AB| ≺_wlog |BA|"""
    A, B = inst.matrix("A"), inst.matrix("B")
    return _weak_log(abs_val(A @ B, tol), abs_val(B @ A, tol), inst, tol)


# ==================== 注册 ====================

CHECKS = [
    InequalityCheck("triangle_normal", "|X+Y| ≺_wlog |X|+|Y|, X, Y normal",
                    ("X", "Y"), _gen_normal_pair, _eval_triangle_normal),
    InequalityCheck("araki_normal", "|AXA|^p ≺_log A^p|X|^pA^p, X normal",
                    ("A", "X", "p"), _gen_araki_normal, _eval_araki_normal),
    InequalityCheck("main_normal_map", "|AΦ(N)A|^p ≺_wlog A^pΦ(|N|^p)A^p, N normal, Φ sub-unital",
                    ("A", "N", "p", "Phi"), _gen_main_normal_map, _eval_main_normal_map),
    InequalityCheck("m_normals", "|A(ΣX_k)A|^p ≺_wlog m^{p−1}A^p(Σ|X_k|^p)A^p, X_k normal",
                    ("A", "X", "p"), _gen_m_normals, _eval_m_normals),
    InequalityCheck("cartesian", "|A(X+iY)A|^p ≺_wlog 2^{p−1}A^p(|X|^p+|Y|^p)A^p",
                    ("A", "T", "p"), _gen_t, _eval_cartesian),
    InequalityCheck("sym_part", "|A(T+T*)/2·A|^p ≺_wlog A^p(|T|^p+|T*|^p)/2·A^p",
                    ("A", "T", "p"), _gen_t, _eval_sym_part),
    InequalityCheck("schur_normals", "|A(X∘Y)A|^p ≺_wlog A^p(|X|^p∘|Y|^p)A^p, X, Y normal",
                    ("A", "X", "Y", "p"), _gen_schur_normals, _eval_schur_normals),
    InequalityCheck("schur_TT", "|A(T∘T*)A|^p ≺_wlog A^p(|T|^p∘|T*|^p)A^p",
                    ("A", "T", "p"), _gen_t, _eval_schur_tt),
    InequalityCheck("normal_product_swap", "|AB| ≺_wlog |BA| when AB is normal",
                    ("A", "B"), _gen_normal_product_swap, _eval_normal_product_swap,
                    profiles=(WELL_CONDITIONED,), project=_project_normal_product_swap),
]
