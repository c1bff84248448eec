"""
测试稠密线性代数内核：Jacobi 特征分解、SVD、矩阵指数、容差策略
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
from scipy.linalg import expm as scipy_expm

from internal.linalg import (
    DEFAULT_TOLERANCE,
    Tolerance,
    as_matrix,
    expm,
    expm_general,
    hermitian_eigen,
    is_hermitian,
    operator_norm,
    orthonormal_completion,
    resolve_tolerance,
    spectral_radius,
    svd,
)
from pkg.errors import DimMismatch, NotHermitian


def _random_hermitian(seed: int, n: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (G + G.conj().T)


def test_tolerance_defaults_and_override():
    """配置默认值，浮点数只替换 log_margin"""
    tol = Tolerance.from_config()
    assert tol.abs_floor == 1e-12
    assert tol.log_margin == 1e-9
    assert resolve_tolerance(None) is DEFAULT_TOLERANCE
    assert resolve_tolerance(1e-6).log_margin == 1e-6
    assert resolve_tolerance(1e-6).rel == DEFAULT_TOLERANCE.rel
    assert resolve_tolerance(tol) is tol


def test_eigen_diagonal_is_sorted():
    eig = hermitian_eigen(np.diag([1.0, 3.0, 2.0]))
    assert_allclose(eig.values, [3.0, 2.0, 1.0])


def test_eigen_matches_lapack():
    """Jacobi 与 numpy.linalg.eigh 的特征值一致"""
    for seed in range(5):
        H = _random_hermitian(seed, 5)
        eig = hermitian_eigen(H)
        assert_allclose(eig.values, np.sort(np.linalg.eigvalsh(H))[::-1], atol=1e-10)
        assert_allclose(eig.reconstruct(), H, atol=1e-10)
        V = np.asarray(eig.vectors)
        assert_allclose(V.conj().T @ V, np.eye(5), atol=1e-10)


def test_eigen_lapack_backend():
    H = _random_hermitian(11, 4)
    jacobi = hermitian_eigen(H, backend="jacobi")
    lapack = hermitian_eigen(H, backend="lapack")
    assert_allclose(jacobi.values, lapack.values, atol=1e-10)


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigen(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_as_matrix_rejects_rectangular():
    with pytest.raises(DimMismatch):
        as_matrix(np.ones((2, 3)))


def test_svd_reconstructs():
    rng = np.random.default_rng(3)
    M = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    s = svd(M)
    assert_allclose(s.singulars, np.linalg.svd(M, compute_uv=False), atol=1e-10)
    assert_allclose(s.reconstruct(), M, atol=1e-10)
    assert_allclose(operator_norm(M), s.singulars[0])


def test_svd_rank_deficient_left_factor_is_unitary():
    """秩亏时左因子经补全仍为酉矩阵"""
    M = np.array([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 0.0]])
    s = svd(M)
    assert_allclose(s.singulars, [2.0, 0.0, 0.0], atol=1e-12)
    U = np.asarray(s.left)
    assert_allclose(U.conj().T @ U, np.eye(3), atol=1e-10)
    assert_allclose(s.reconstruct(), M, atol=1e-10)


def test_orthonormal_completion_keeps_columns():
    v = np.array([[1.0], [1.0], [0.0]]) / np.sqrt(2.0)
    U = orthonormal_completion(v, 3)
    assert_allclose(U[:, 0], v[:, 0])
    assert_allclose(U.conj().T @ U, np.eye(3), atol=1e-12)


def test_expm_closed_form():
    """exp([[0,1],[1,0]]) = [[cosh1, sinh1], [sinh1, cosh1]]"""
    E = expm(np.array([[0.0, 1.0], [1.0, 0.0]]))
    c, s = np.cosh(1.0), np.sinh(1.0)
    assert_allclose(E, [[c, s], [s, c]], atol=1e-12)
    assert_allclose(expm(np.zeros((3, 3))), np.eye(3))


def test_expm_matches_scipy():
    """一般矩阵（含需要缩放的大范数）与 scipy.linalg.expm 一致"""
    rng = np.random.default_rng(5)
    for scale in (0.1, 1.0, 8.0):
        M = scale * (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        ref = scipy_expm(M)
        assert_allclose(expm_general(M), ref, rtol=1e-9, atol=1e-10 * np.max(np.abs(ref)))
    H = _random_hermitian(6, 4)
    assert_allclose(expm(H), scipy_expm(H), rtol=1e-10, atol=1e-12)


def test_spectral_radius():
    assert spectral_radius(np.array([[0.0, 2.0], [0.0, -3.0]])) == pytest.approx(3.0)


def test_is_hermitian():
    H = _random_hermitian(1, 3)
    assert is_hermitian(H)
    assert not is_hermitian(H + np.triu(np.ones((3, 3)), 1))


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ linalg 测试全部完成")
