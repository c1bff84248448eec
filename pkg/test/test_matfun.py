"""
测试矩阵函数与构造：PSD 幂（广义逆约定）、极分解、复合矩阵
"""
import sys
import os

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)
os.environ.setdefault("MAJORLAB_LOG_FILE", "0")

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.linalg import polar as scipy_polar

from internal.matfun import (
    PsdMatrix,
    abs_val,
    cartesian,
    compound,
    direct_sum,
    isometry_det,
    null_projection,
    polar,
    psd_log,
    psd_power,
    range_projection,
    schur_product,
    zero_pad,
)
from internal.suites.generators import gen_ginibre, gen_normal, gen_psd, haar_unitary
from pkg.errors import BadDomain, BadOrder, DimMismatch, NotNormal, NotPsd


def test_psd_power_examples():
    A = PsdMatrix.from_matrix(np.diag([4.0, 9.0]))
    assert_allclose(psd_power(A, 0.5).matrix, np.diag([2.0, 3.0]), atol=1e-12)
    singular = PsdMatrix.from_matrix(np.diag([4.0, 0.0]))
    assert_allclose(psd_power(singular, -1.0).matrix, np.diag([0.25, 0.0]), atol=1e-12)


def test_generalized_inverse_convention():
    """A^0 为值域投影，E + F = I"""
    A = gen_psd(7, 3, "rank-deficient")
    assert A.rank == 1
    E = range_projection(A).matrix
    assert_allclose(E @ E, E, atol=1e-12)
    assert_allclose(E + null_projection(A), np.eye(3), atol=1e-12)
    assert_allclose(psd_power(A, 1.0).matrix, A.matrix, atol=1e-12)


def test_power_semigroup():
    A = gen_psd(3, 4)
    assert_allclose(psd_power(psd_power(A, 0.5), 2.0).matrix, A.matrix, atol=1e-12)
    assert_allclose(psd_power(A, 0.3).matrix @ psd_power(A, 0.7).matrix, A.matrix, atol=1e-12)


def test_not_psd():
    with pytest.raises(NotPsd):
        PsdMatrix.from_matrix(np.diag([1.0, -0.1]))


def test_psd_log():
    A = gen_psd(2, 3)
    L = psd_log(A)
    eigs = np.sort(np.linalg.eigvalsh(L))[::-1]
    assert_allclose(eigs, np.log(A.values), atol=1e-12)
    with pytest.raises(BadDomain):
        psd_log(PsdMatrix.from_matrix(np.diag([1.0, 0.0])))


def test_polar_matches_scipy():
    M = gen_ginibre(4, 3)
    U, P = polar(M)
    Us, Ps = scipy_polar(M)
    assert_allclose(U, Us, atol=1e-10)
    assert_allclose(P.matrix, Ps, atol=1e-10)
    assert_allclose(abs_val(M).matrix, Ps, atol=1e-10)


def test_polar_normal():
    N = gen_normal(5, 3)
    normal = polar(N, require_normal=True)
    assert_allclose(normal.phase @ normal.abs.matrix, N, atol=1e-10)
    # U 与 |N| 交换
    assert_allclose(normal.phase @ normal.abs.matrix, normal.abs.matrix @ normal.phase, atol=1e-10)
    with pytest.raises(NotNormal):
        polar(np.array([[0.0, 1.0], [0.0, 0.0]]), require_normal=True)


def test_cartesian_parts_hermitian():
    T = gen_ginibre(8, 3)
    X, Y = cartesian(T)
    assert_allclose(X, X.conj().T)
    assert_allclose(Y, Y.conj().T)
    assert_allclose(X + 1j * Y, T, atol=1e-14)


def test_schur_product_dim_mismatch():
    with pytest.raises(DimMismatch):
        schur_product(np.eye(2), np.eye(3))


def test_compound_diag_and_multiplicative():
    assert_allclose(compound(np.diag([1.0, 2.0, 3.0]), 2), np.diag([2.0, 3.0, 6.0]))
    X, Y = gen_ginibre(1, 4), gen_ginibre(2, 4)
    assert_allclose(compound(X @ Y, 2), compound(X, 2) @ compound(Y, 2), atol=1e-12)
    with pytest.raises(BadOrder):
        compound(np.eye(3), 4)


def test_direct_sum_spectrum():
    A, B = gen_psd(1, 2), gen_psd(2, 3)
    S = PsdMatrix.direct_sum([A, B])
    assert_allclose(S.matrix, direct_sum([A.matrix, B.matrix]), atol=1e-12)
    assert_allclose(S.values, np.sort(np.concatenate([A.values, B.values]))[::-1])


def test_zero_pad():
    Z = np.ones((2, 1))
    padded = zero_pad(Z, 3)
    assert padded.shape == (3, 3)
    assert_allclose(padded[:2, :1], Z)
    with pytest.raises(DimMismatch):
        zero_pad(np.ones((4, 1)), 3)


def test_isometry_det_variational():
    """|det V*AW| ≤ ∏ s_j(A)，取前 k 个奇异向量时相等"""
    A = gen_ginibre(9, 4)
    U, s, Vh = np.linalg.svd(A)
    k = 2
    top = float(np.prod(s[:k]))
    assert isometry_det(A, U[:, :k], Vh.conj().T[:, :k]) == pytest.approx(top, rel=1e-10)
    Q = haar_unitary(10, 4)
    assert isometry_det(A, Q[:, :k], Q[:, :k]) <= top * (1.0 + 1e-12)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ matfun 测试全部完成")
