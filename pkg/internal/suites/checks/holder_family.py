"""
Hölder / Littlewood 型不等式与泛函探针

loewner_heinz / kosaki_holder / littlewood_scalar / littlewood_matrix /
poslin_probe / schur_exponent_exchange / functional_logconvex /
poslin_power_p / kyfan_geometric_limit / monotone_section
"""
import math

import numpy as np
from scipy.special import logsumexp

from internal.functional import (
    ProbeGrid,
    Variant,
    build_spec,
    kyfan_geometric_limit,
    log_evaluate_F,
    monotone_section_check,
    poslin_power_probe,
    probe_logconvexity,
    probe_map_logconvexity,
)
from internal.linalg import hermitian_eigen, hermitian_part, max_abs, svd
from internal.matfun import PsdMatrix, psd_power, psd_product, schur_product
from internal.model import Instance, ProbeReport
from internal.norms import SymmetricNorm
from internal.posmap import KrausMap, kraus_on_commutative, spectral_images
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.checks.common import (
    abs_tol_for,
    combine,
    from_log_values,
    log_eigs,
    log_singulars,
    psd,
    sample_alpha,
    sample_norm,
)
from internal.suites.generators import (
    WELL_CONDITIONED,
    gen_contraction,
    gen_ginibre,
    gen_kraus,
    gen_psd,
    gen_with_singulars,
    spectrum,
)

_WELL = (WELL_CONDITIONED,)
# 联合 log 凸性检查用的小网格（含负 t，只配良态实例）
_JOINT_GRID = "p:0.5,1,1.5;t:-1,0,1"
_POWER_P_LINE = [1.0, 1.5, 2.0, 2.5, 3.0]
_KYFAN_ALPHAS = [0.01, 0.05, 0.1, 0.5, 1.0, 2.0]
_MONOTONE_P = [1.0, 1.5, 2.0, 3.0, 4.0]
# 两条计算路径的一致性阈值（相对）
_AGREEMENT = 1e-9


def _from_probe(report: ProbeReport) -> Evaluation:
    """中点残差取负作为间隔"""
    margins = [-c.residual for c in report.midpoint_checks]
    return Evaluation(verdict=report.verdict, margins=margins,
                      details={"worst_residual": report.worst_residual, "pairs": float(len(margins))})


def _norm_params(rng, inst: Instance):
    inst.scalars["alpha"] = sample_alpha(rng)
    inst.labels["norm"] = sample_norm(rng, inst.dim)


# ==================== Löwner–Heinz ====================

def _gen_loewner_heinz(rng, inst: Instance):
    n = inst.dim
    B = gen_psd(rng, n, inst.profile).matrix
    P = gen_psd(rng, n, WELL_CONDITIONED).matrix
    inst.with_matrix("A", B + P)
    inst.with_matrix("B", B)
    inst.scalars["p"] = float(rng.choice([0.25, 0.5, 0.75]))


def _project_loewner_heinz(parts):
    """A − B 截到 PSD 锥上，保持 A ≥ B"""
    gap = hermitian_eigen(hermitian_part(parts["A"] - parts["B"]))
    parts["A"] = parts["B"] + gap.reconstruct(np.clip(gap.values, 0.0, None))


def _log_top(M: PsdMatrix) -> float:
    top = float(M.values[0])
    return math.log(top) if top > 0 else float("-inf")


def _eval_loewner_heinz(inst: Instance, tol) -> Evaluation:
    """
    A ≥ B ⇒ A^p ≥ B^p（0 < p < 1）

    两条路径：直接看 λ_min(A^p − B^p)；以及 f(t) = ‖A^{−t/2}B^tA^{−t/2}‖_∞
    的 log 凸性给出的 f(p) ≤ f(1)^p f(0)^{1−p} ≤ 1。
    """
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    p = inst.scalar("p")
    Ap = psd_power(A, p)
    gap = hermitian_eigen(hermitian_part(Ap.matrix - psd_power(B, p).matrix), tol)
    scale = max(1.0, float(Ap.values[0]))
    direct_margin = float(gap.values[-1]) / scale
    direct = Evaluation(verdict=direct_margin >= -tol.rel, margins=[direct_margin],
                        details={"min_eigenvalue": float(gap.values[-1])})

    def log_f(t: float) -> float:
        inv_half = psd_power(A, -0.5 * t)
        return _log_top(psd_product(inv_half, psd_power(B, t), inv_half))

    bound = p * log_f(1.0) + (1.0 - p) * log_f(0.0)
    convex_route = from_log_values(log_f(p), bound, tol)
    unit_route = from_log_values(bound, 0.0, tol)
    return combine(direct, convex_route, unit_route)


# ==================== Kosaki–Hölder ====================

def _gen_kosaki(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("X", gen_with_singulars(rng, spectrum(rng, n, inst.profile)))
    inst.with_matrix("Y", gen_with_singulars(rng, spectrum(rng, n, inst.profile)))
    inst.scalars["p"] = float(rng.choice([1.5, 2.0, 3.0]))
    _norm_params(rng, inst)


def _eval_kosaki(inst: Instance, tol) -> Evaluation:
    """‖|XY|^α‖ ≤ ‖|X|^{αp}‖^{1/p}‖|Y|^{αq}‖^{1/q}，1/p + 1/q = 1"""
    X, Y = inst.matrix("X"), inst.matrix("Y")
    p, alpha = inst.scalar("p"), inst.scalar("alpha")
    q = p / (p - 1.0)
    norm = SymmetricNorm.parse(inst.label("norm"))
    log_xy = log_singulars(svd(X @ Y, tol).singulars)
    log_x = log_singulars(svd(X, tol).singulars)
    log_y = log_singulars(svd(Y, tol).singulars)
    lhs = norm.log_of_singulars(alpha * log_xy)
    rhs = norm.log_of_singulars(alpha * p * log_x) / p + norm.log_of_singulars(alpha * q * log_y) / q
    result = from_log_values(lhs, rhs, tol, abs_tol_for(inst, tol))
    result.details["q"] = q
    return result


# ==================== Littlewood ====================

def _gen_littlewood_scalar(rng, inst: Instance):
    m = inst.dim
    inst.with_matrix("a", rng.uniform(0.1, 3.0, m)[None, :])
    inst.with_matrix("w", rng.uniform(0.1, 1.0, m)[None, :])
    inst.scalars["p"] = float(rng.uniform(0.5, 4.0))
    inst.scalars["q"] = float(rng.uniform(0.5, 4.0))
    inst.scalars["theta"] = float(rng.uniform(0.1, 0.9))


def weighted_log_norm(a, w, r: float) -> float:
    """log ‖a‖_r，‖a‖_r = (Σ w_i a_i^r)^{1/r}"""
    a = np.asarray(a, dtype=float)
    w = np.asarray(w, dtype=float)
    return float(logsumexp(np.log(w) + r * np.log(a))) / r


def _eval_littlewood_scalar(inst: Instance, tol) -> Evaluation:
    """
    ‖a‖_{1/(θp+(1−θ)q)} ≤ ‖a‖_{1/p}^θ ‖a‖_{1/q}^{1−θ}

    同时与合同变体 (A = diag(a)，Z = √w 列向量，t = 1，α = 1) 对照。
    """
    a = np.real(inst.matrix("a")).ravel()
    w = np.real(inst.matrix("w")).ravel()
    p, q, theta = inst.scalar("p"), inst.scalar("q"), inst.scalar("theta")
    mix = theta * p + (1.0 - theta) * q
    lhs = weighted_log_norm(a, w, 1.0 / mix)
    rhs = theta * weighted_log_norm(a, w, 1.0 / p) + (1.0 - theta) * weighted_log_norm(a, w, 1.0 / q)
    result = from_log_values(lhs, rhs, tol)

    spec = build_spec(np.diag(a), None, np.sqrt(w)[:, None], 1.0, "operator", Variant.CONGRUENCE, tol=tol)
    via_functional = log_evaluate_F(spec, mix, 1.0)
    gap = abs(via_functional - lhs)
    result.details["congruence_gap"] = gap
    result.verdict = result.verdict and gap <= _AGREEMENT * max(1.0, abs(lhs))
    return result


def _gen_littlewood_matrix(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A1", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("A2", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_kraus("Z", [gen_ginibre(rng, n), gen_ginibre(rng, n)])
    _norm_params(rng, inst)


def _eval_littlewood_matrix(inst: Instance, tol) -> Evaluation:
    """(p, t) ↦ ‖{Σ Z_i*A_i^{t/p}Z_i}^{αp}‖ 联合 log 凸（A = ⊕A_i，Z 纵向堆叠）"""
    A = PsdMatrix.direct_sum([psd(inst, "A1", tol), psd(inst, "A2", tol)])
    Z = np.vstack(inst.kraus_ops("Z"))
    spec = build_spec(A, None, Z, inst.scalar("alpha"), inst.label("norm"), Variant.CONGRUENCE, tol=tol)
    report = probe_logconvexity(spec, ProbeGrid.parse(_JOINT_GRID), tol, jobs=1, verbose=False)
    return _from_probe(report)


# ==================== 正线性映射 ====================

def _gen_poslin(rng, inst: Instance):
    n = inst.dim
    m = n + 1
    inst.extra_dim = m
    inst.with_matrix("A", gen_psd(rng, m, inst.profile).matrix)
    inst.with_kraus("Phi", gen_kraus(rng, m, n, int(rng.integers(1, n + 2))))
    _norm_params(rng, inst)


def _eval_poslin_probe(inst: Instance, tol) -> Evaluation:
    """
    (p, t) ↦ ‖{Φ(A^{t/p})}^{αp}‖ 联合 log 凸

    另外验证交换定义域上的 Kraus 分解在 A^{1/2} 上复现 Φ。
    """
    A = psd(inst, "A", tol)
    phi = KrausMap.from_kraus(inst.kraus_ops("Phi"), tol=tol)
    norm = SymmetricNorm.parse(inst.label("norm"))
    report = probe_map_logconvexity(phi, A, inst.scalar("alpha"), norm, ProbeGrid.parse(_JOINT_GRID), tol)
    result = _from_probe(report)

    commutative = kraus_on_commutative(spectral_images(phi.apply, A), tol)
    root = psd_power(A, 0.5).matrix
    expected = phi.apply(root)
    gap = max_abs(commutative.apply(root) - expected) / max(1.0, max_abs(expected))
    result.details["decomposition_gap"] = gap
    result.verdict = result.verdict and gap <= _AGREEMENT
    return result


def _eval_poslin_power_p(inst: Instance, tol) -> Evaluation:
    """p ↦ ‖Φ(A^{1/p})^α‖^p 的中点 log 凸性"""
    A = psd(inst, "A", tol)
    phi = KrausMap.from_kraus(inst.kraus_ops("Phi"), tol=tol)
    norm = SymmetricNorm.parse(inst.label("norm"))
    return _from_probe(poslin_power_probe(phi, A, inst.scalar("alpha"), norm, _POWER_P_LINE, tol))


# ==================== Schur 积指数交换 ====================

def _gen_schur_exchange(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("B", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    w = float(rng.uniform(0.5, 2.0))
    d_small, d_large = sorted(rng.uniform(0.0, 1.5, 2))
    inst.scalars.update({"p": w + d_large, "q": w - d_large, "r": w + d_small, "s": w - d_small})
    _norm_params(rng, inst)


def _eval_schur_exchange(inst: Instance, tol) -> Evaluation:
    """
    p ≥ r ≥ s ≥ q，p + q = r + s：
    ‖{A^r∘B^s}^α‖·‖{A^s∘B^r}^α‖ ≤ ‖{A^p∘B^q}^α‖·‖{A^q∘B^p}^α‖，和式同理
    """
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    p, q, r, s = (inst.scalar(k) for k in ("p", "q", "r", "s"))
    alpha = inst.scalar("alpha")
    norm = SymmetricNorm.parse(inst.label("norm"))

    def log_n(x: float, y: float) -> float:
        M = PsdMatrix.from_matrix(hermitian_part(schur_product(psd_power(A, x).matrix, psd_power(B, y).matrix)))
        return norm.log_of_singulars(alpha * log_eigs(M))

    inner = (log_n(r, s), log_n(s, r))
    outer = (log_n(p, q), log_n(q, p))
    product = from_log_values(sum(inner), sum(outer), tol)
    total = from_log_values(float(np.logaddexp(*inner)), float(np.logaddexp(*outer)), tol)
    return combine(product, total)


# ==================== 泛函探针 ====================

def _gen_functional(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("B", gen_psd(rng, n, WELL_CONDITIONED).matrix)
    inst.with_matrix("Z", gen_ginibre(rng, n))
    _norm_params(rng, inst)


def _eval_functional_logconvex(inst: Instance, tol) -> Evaluation:
    """(p, t) ↦ ‖|A^{t/p}ZB^{t/p}|^{αp}‖ 在缺省网格上的中点 log 凸性"""
    spec = build_spec(inst.matrix("A"), inst.matrix("B"), inst.matrix("Z"), inst.scalar("alpha"),
                      inst.label("norm"), tol=tol)
    return _from_probe(probe_logconvexity(spec, ProbeGrid.default(), tol, jobs=1, verbose=False))


def _gen_monotone(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, inst.profile).matrix)
    inst.with_matrix("B", gen_psd(rng, n, inst.profile).matrix)
    inst.with_matrix("Z", gen_contraction(rng, n))
    _norm_params(rng, inst)


def _eval_monotone_section(inst: Instance, tol) -> Evaluation:
    """Z 压缩时 p ↦ F(p, 1) 非增"""
    spec = build_spec(inst.matrix("A"), inst.matrix("B"), inst.matrix("Z"), inst.scalar("alpha"),
                      inst.label("norm"), tol=tol)
    report = monotone_section_check(spec, _MONOTONE_P, tol)
    return Evaluation(verdict=report.verdict, margins=[-report.worst_increase],
                      details={"worst_increase": report.worst_increase})


def _gen_kyfan_limit(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, inst.profile).matrix)
    inst.scalars["k"] = float(rng.integers(1, n + 1))


def _eval_kyfan_limit(inst: Instance, tol) -> Evaluation:
    """‖A^α‖_{k}^{1/α}（归一化）随 α 非减，且不低于 (∏_{j≤k} λ_j)^{1/k}"""
    report = kyfan_geometric_limit(psd(inst, "A", tol), int(inst.scalar("k")), _KYFAN_ALPHAS, tol)
    g = report.geometric_mean
    floor = min((v - g) / g for v in report.values) if g > 0 else float("inf")
    return Evaluation(verdict=report.verdict, margins=[-report.worst_decrease, floor],
                      details={"geometric_mean": g, "gap": report.gap})


# ==================== 注册 ====================

CHECKS = [
    InequalityCheck("loewner_heinz", "A ≥ B ≥ 0 ⇒ A^p ≥ B^p, 0 < p < 1",
                    ("A", "B", "p"), _gen_loewner_heinz, _eval_loewner_heinz,
                    project=_project_loewner_heinz),
    InequalityCheck("kosaki_holder", "‖|XY|^α‖ ≤ ‖|X|^{αp}‖^{1/p}‖|Y|^{αq}‖^{1/q}",
                    ("X", "Y", "p", "alpha", "norm"), _gen_kosaki, _eval_kosaki),
    InequalityCheck("littlewood_scalar", "‖a‖_{1/(θp+(1−θ)q)} ≤ ‖a‖_{1/p}^θ‖a‖_{1/q}^{1−θ}",
                    ("a", "w", "p", "q", "theta"), _gen_littlewood_scalar, _eval_littlewood_scalar,
                    profiles=_WELL),
    InequalityCheck("littlewood_matrix", "(p, t) ↦ ‖{ΣZ_i*A_i^{t/p}Z_i}^{αp}‖ jointly log-convex",
                    ("A1", "A2", "Z", "alpha", "norm"), _gen_littlewood_matrix, _eval_littlewood_matrix,
                    profiles=_WELL),
    InequalityCheck("poslin_probe", "(p, t) ↦ ‖{Φ(A^{t/p})}^{αp}‖ jointly log-convex",
                    ("A", "Phi", "alpha", "norm"), _gen_poslin, _eval_poslin_probe, profiles=_WELL),
    InequalityCheck("schur_exponent_exchange", "p ≥ r ≥ s ≥ q, p+q = r+s: Schur product exponent exchange",
                    ("A", "B", "p", "q", "r", "s", "alpha", "norm"), _gen_schur_exchange, _eval_schur_exchange,
                    profiles=_WELL),
    InequalityCheck("functional_logconvex", "(p, t) ↦ ‖|A^{t/p}ZB^{t/p}|^{αp}‖ jointly log-convex",
                    ("A", "B", "Z", "alpha", "norm"), _gen_functional, _eval_functional_logconvex,
                    profiles=_WELL),
    InequalityCheck("poslin_power_p", "p ↦ ‖Φ(A^{1/p})^α‖^p log-convex",
                    ("A", "Phi", "alpha", "norm"), _gen_poslin, _eval_poslin_power_p),
    InequalityCheck("kyfan_geometric_limit", "‖A^α‖_{(k)}^{1/α} ↓ (∏_{j≤k} λ_j)^{1/k} as α → 0⁺",
                    ("A", "k"), _gen_kyfan_limit, _eval_kyfan_limit),
    InequalityCheck("monotone_section", "p ↦ ‖|A^{1/p}ZB^{1/p}|^{αp}‖ nonincreasing, Z contraction",
                    ("A", "B", "Z", "alpha", "norm"), _gen_monotone, _eval_monotone_section),
]
