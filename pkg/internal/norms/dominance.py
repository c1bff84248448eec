"""
Ky Fan 支配与对称范数的 Cauchy–Schwarz 不等式
"""
import math

from internal.linalg import as_matrix, check_same_dim
from internal.major import scalar_inequality, weak_majorize
from internal.matfun import PsdMatrix
from internal.model import InequalityReport, MajorizationReport
from internal.norms.symmetric_norm import SymmetricNorm, evaluate


def kyfan_dominance(X: PsdMatrix, Y: PsdMatrix, tol=None) -> MajorizationReport:
    """
    Σ_{j≤k} λ_j(X) ≤ Σ_{j≤k} λ_j(Y) + tol，对所有 k（≺_w）

    Ky Fan 范数是极值范数：该关系成立 ⇔ 所有对称范数都满足 ‖X‖ ≤ ‖Y‖。

    示例:
        diag(3,0) vs diag(2,2) -> False（k=1: 3 > 2）
        diag(2,1) vs diag(3,1) -> True
    """
    return weak_majorize(X, Y, tol)


def cauchy_schwarz_check(norm: SymmetricNorm, X, Y, tol=None) -> InequalityReport:
    """
    ‖ |X*Y| ‖ ≤ ‖ |X*X| ‖^{1/2} · ‖ |Y*Y| ‖^{1/2}

    Raises:
        DimMismatch: 维度不一致
    """
    A = as_matrix(X, "X")
    B = as_matrix(Y, "Y")
    check_same_dim(A, B)
    Ah = A.conj().T
    lhs = evaluate(norm, Ah @ B)
    rhs = math.sqrt(evaluate(norm, Ah @ A) * evaluate(norm, B.conj().T @ B))
    return scalar_inequality(lhs, rhs, tol)
