"""
正算子的 Araki 型不等式

araki / lieb_thirring / cor1_norm / striking / super_expansive /
trace_econvex / trace_econcave / subunital_psd / schur_mask
"""
import numpy as np

from internal.major import log_majorize, super_weak_log_majorize, weak_log_majorize
from internal.matfun import psd_power, psd_product, schur_product
from internal.model import Instance
from internal.norms import SymmetricNorm
from internal.posmap import KrausMap
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.checks.common import (
    abs_tol_for,
    from_log_values,
    from_majorization,
    from_scalar,
    log_eigs,
    psd,
    sample_alpha,
    sample_norm,
    sample_p,
    sandwich,
)
from internal.suites.econvex import CONCAVE, CONVEX, catalog, certify, get_test_function
from internal.suites.generators import (
    WELL_CONDITIONED,
    gen_contraction,
    gen_expansive,
    gen_kraus,
    gen_psd,
)


def _gen_ab(rng, inst: Instance):
    n = inst.dim
    inst.with_matrix("A", gen_psd(rng, n, inst.profile).matrix)
    inst.with_matrix("B", gen_psd(rng, n, inst.profile).matrix)
    inst.scalars["p"] = sample_p(rng)


def _congruence_pair(inst: Instance, tol):
    """(AZ*BZA)^p 与 A^pZ*B^pZA^p"""
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    Z = inst.matrix("Z")
    p = inst.scalar("p")
    Zh = Z.conj().T
    inner = psd_product(A, Zh, B, Z, A)
    Ap = psd_power(A, p)
    return psd_power(inner, p), psd_product(Ap, Zh, psd_power(B, p), Z, Ap), inner


# ==================== araki ====================

def _eval_araki(inst: Instance, tol) -> Evaluation:
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    p = inst.scalar("p")
    lhs = psd_power(psd_product(A, B, A), p)
    rhs = sandwich(A, psd_power(B, p), p)
    return from_majorization(log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


# ==================== lieb_thirring ====================

def _gen_lieb_thirring(rng, inst: Instance):
    _gen_ab(rng, inst)
    inst.scalars["p"] = float(rng.integers(1, 4))


def _eval_lieb_thirring(inst: Instance, tol) -> Evaluation:
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    p = inst.scalar("p")
    lhs = float(np.sum(psd_power(psd_product(A, B, A), p).values))
    rhs = float(np.sum(sandwich(A, psd_power(B, p), p).values))
    return from_scalar(lhs, rhs, tol, abs_tol_for(inst, tol))


# ==================== 压缩 / 扩张权重 ====================

def _gen_contraction_weighted(rng, inst: Instance):
    _gen_ab(rng, inst)
    inst.with_matrix("Z", gen_contraction(rng, inst.dim))


def _gen_expansive_weighted(rng, inst: Instance):
    _gen_ab(rng, inst)
    inst.with_matrix("Z", gen_expansive(rng, inst.dim))


def _gen_contraction_norm(rng, inst: Instance):
    _gen_contraction_weighted(rng, inst)
    inst.scalars["alpha"] = sample_alpha(rng)
    inst.labels["norm"] = sample_norm(rng, inst.dim)


def _eval_contraction_norm(inst: Instance, tol) -> Evaluation:
    """‖(AZ*BZA)^{αp}‖ ≤ ‖(A^pZ*B^pZA^p)^α‖"""
    _, rhs, inner = _congruence_pair(inst, tol)
    p, alpha = inst.scalar("p"), inst.scalar("alpha")
    norm = SymmetricNorm.parse(inst.label("norm"))
    log_lhs = norm.log_of_singulars(alpha * p * log_eigs(inner))
    log_rhs = norm.log_of_singulars(alpha * log_eigs(rhs))
    return from_log_values(log_lhs, log_rhs, tol, abs_tol_for(inst, tol))


def _eval_striking(inst: Instance, tol) -> Evaluation:
    lhs, rhs, _ = _congruence_pair(inst, tol)
    return from_majorization(weak_log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


def _eval_super_expansive(inst: Instance, tol) -> Evaluation:
    lhs, rhs, _ = _congruence_pair(inst, tol)
    return from_majorization(super_weak_log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


# ==================== 迹不等式 ====================

def _gen_trace_econvex(rng, inst: Instance):
    _gen_contraction_weighted(rng, inst)
    funcs = catalog(CONVEX)
    inst.labels["f"] = funcs[int(rng.integers(len(funcs)))].name


def _gen_trace_econcave(rng, inst: Instance):
    _gen_expansive_weighted(rng, inst)
    funcs = catalog(CONCAVE)
    inst.labels["f"] = funcs[int(rng.integers(len(funcs)))].name


def _trace_pair(inst: Instance, tol):
    f = get_test_function(inst.label("f"))
    lhs, rhs, _ = _congruence_pair(inst, tol)
    return f, f.trace(lhs.values), f.trace(rhs.values)


def _eval_trace_econvex(inst: Instance, tol) -> Evaluation:
    """Z 压缩、f e-凸非减：Tr f((AZ*BZA)^p) ≤ Tr f(A^pZ*B^pZA^p)"""
    f, lhs, rhs = _trace_pair(inst, tol)
    result = from_scalar(lhs, rhs, tol, abs_tol_for(inst, tol))
    certified = certify(f)
    result.details["certified"] = float(certified)
    result.verdict = result.verdict and certified
    return result


def _eval_trace_econcave(inst: Instance, tol) -> Evaluation:
    """Z 扩张、g e-凹非减：Tr g((AZ*BZA)^p) ≥ Tr g(A^pZ*B^pZA^p)"""
    g, lhs, rhs = _trace_pair(inst, tol)
    result = from_scalar(rhs, lhs, tol)
    certified = certify(g)
    result.details["certified"] = float(certified)
    result.verdict = result.verdict and certified
    return result


# ==================== 正线性映射 ====================

def _gen_subunital_psd(rng, inst: Instance):
    _gen_ab(rng, inst)
    n = inst.dim
    inst.with_kraus("Phi", gen_kraus(rng, n, n, int(rng.integers(1, n + 2))))


def _eval_subunital_psd(inst: Instance, tol) -> Evaluation:
    """(AΦ(B)A)^p ≺_wlog A^pΦ(B^p)A^p"""
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    p = inst.scalar("p")
    phi = KrausMap.from_kraus(inst.kraus_ops("Phi"), tol=tol)
    lhs = psd_power(psd_product(A, phi.apply_psd(B), A), p)
    rhs = sandwich(A, phi.apply_psd(psd_power(B, p)), p)
    result = from_majorization(weak_log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))
    result.details["sub_unital"] = float(phi.sub_unital)
    return result


def _gen_schur_mask(rng, inst: Instance):
    _gen_ab(rng, inst)
    n = inst.dim
    C0 = gen_psd(rng, n, WELL_CONDITIONED).matrix
    d = np.sqrt(np.real(np.diag(C0)))
    C = C0 / np.outer(d, d) * rng.uniform(0.5, 1.0)
    inst.with_matrix("C", C)


def _eval_schur_mask(inst: Instance, tol) -> Evaluation:
    """diag(C) ≤ 1：(A(C∘B)A)^p ≺_wlog A^p(C∘B^p)A^p"""
    A, B = psd(inst, "A", tol), psd(inst, "B", tol)
    C = inst.matrix("C")
    p = inst.scalar("p")
    lhs = psd_power(psd_product(A, schur_product(C, B.matrix), A), p)
    rhs = sandwich(A, schur_product(C, psd_power(B, p).matrix), p)
    return from_majorization(weak_log_majorize(lhs, rhs, tol, abs_tol_for(inst, tol)))


# ==================== 注册 ====================

CHECKS = [
    InequalityCheck("araki", "(ABA)^p ≺_log A^pB^pA^p, p ≥ 1",
                    ("A", "B", "p"), _gen_ab, _eval_araki),
    InequalityCheck("lieb_thirring", "Tr (ABA)^p ≤ Tr A^pB^pA^p, p integer",
                    ("A", "B", "p"), _gen_lieb_thirring, _eval_lieb_thirring),
    InequalityCheck("cor1_norm", "‖(AZ*BZA)^{αp}‖ ≤ ‖(A^pZ*B^pZA^p)^α‖, Z contraction",
                    ("A", "B", "Z", "p", "alpha", "norm"), _gen_contraction_norm, _eval_contraction_norm),
    InequalityCheck("striking", "(AZ*BZA)^p ≺_wlog A^pZ*B^pZA^p, Z contraction",
                    ("A", "B", "Z", "p"), _gen_contraction_weighted, _eval_striking),
    InequalityCheck("super_expansive", "(AZ*BZA)^p ≺^{wlog} A^pZ*B^pZA^p, Z expansive",
                    ("A", "B", "Z", "p"), _gen_expansive_weighted, _eval_super_expansive),
    InequalityCheck("trace_econvex", "Tr f((AZ*BZA)^p) ≤ Tr f(A^pZ*B^pZA^p), f e-convex nondecreasing",
                    ("A", "B", "Z", "p", "f"), _gen_trace_econvex, _eval_trace_econvex),
    InequalityCheck("trace_econcave", "Tr g((AZ*BZA)^p) ≥ Tr g(A^pZ*B^pZA^p), g e-concave nondecreasing",
                    ("A", "B", "Z", "p", "f"), _gen_trace_econcave, _eval_trace_econcave,
                    profiles=(WELL_CONDITIONED,)),
    InequalityCheck("subunital_psd", "(AΦ(B)A)^p ≺_wlog A^pΦ(B^p)A^p, Φ sub-unital",
                    ("A", "B", "p", "Phi"), _gen_subunital_psd, _eval_subunital_psd),
    InequalityCheck("schur_mask", "(A(C∘B)A)^p ≺_wlog A^p(C∘B^p)A^p, diag(C) ≤ 1",
                    ("A", "B", "C", "p"), _gen_schur_mask, _eval_schur_mask),
]
