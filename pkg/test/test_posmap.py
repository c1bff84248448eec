"""
测试正线性映射：Kraus 形式、具体构造、块扩张、交换定义域上的 Kraus 分解
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

from internal.matfun import kron, psd_power, psd_product, schur_product
from internal.posmap import (
    KrausMap,
    block_average,
    block_full_average,
    congruence,
    dilate,
    kraus_on_commutative,
    pinching,
    schur_extraction,
    schur_multiplier,
    spectral_images,
)
from internal.suites.generators import gen_ginibre, gen_kraus, gen_psd, gen_subunital_map
from pkg.errors import DimMismatch, NotPsd, NotSubUnital


def test_rectangular_kraus_shapes():
    """Z_i 为 m×n：Φ 把 𝕄_m 映到 𝕄_n"""
    phi = KrausMap.from_kraus(gen_kraus(1, 3, 2, 2))
    assert (phi.in_dim, phi.out_dim) == (3, 2)
    assert phi.apply(np.eye(3)).shape == (2, 2)
    assert_allclose(phi.apply(np.eye(3)), phi.unit_image(), atol=1e-14)
    with pytest.raises(DimMismatch):
        phi.apply(np.eye(2))


def test_generated_maps_are_sub_unital():
    for seed in range(5):
        phi = gen_subunital_map(seed, 3, 3, 2)
        assert phi.sub_unital
        top = np.max(np.linalg.eigvalsh(phi.unit_image()))
        assert 0.5 - 1e-12 <= top <= 1.0 + 1e-12


def test_pinching_and_schur_multiplier():
    X = gen_ginibre(2, 3)
    assert_allclose(pinching(3).apply(X), np.diag(np.diag(X)), atol=1e-14)
    C = gen_psd(3, 3).matrix
    assert_allclose(schur_multiplier(C).apply(X), schur_product(C, X), atol=1e-12)
    assert schur_multiplier(np.ones((3, 3))).unital
    with pytest.raises(NotPsd):
        schur_multiplier(np.array([[1.0, 2.0], [2.0, 1.0]]))


def test_block_averages():
    S = gen_ginibre(4, 4)
    B, C, D, E = S[:2, :2], S[:2, 2:], S[2:, :2], S[2:, 2:]
    assert_allclose(block_average(2, 2).apply(S), (B + E) / 2, atol=1e-14)
    assert_allclose(block_full_average(2, 2).apply(S), (B + C + D + E) / 2, atol=1e-14)
    assert block_average(2, 2).unital
    assert block_full_average(2, 2).unital


def test_schur_extraction():
    """Φ(X⊗Y) = X∘Y"""
    X, Y = gen_ginibre(5, 3), gen_ginibre(6, 3)
    assert_allclose(schur_extraction(3).apply(kron(X, Y)), schur_product(X, Y), atol=1e-12)


def test_dilation_top_left_block():
    """Ã Z̃* B̃^p Z̃ Ã 的左上块 = A Φ(B^p) A"""
    n, p = 3, 2.0
    A, B = gen_psd(7, n), gen_psd(8, n)
    phi = gen_subunital_map(9, n, n, 2)
    A_t, B_t, Z_t = dilate(phi, A, B)
    assert np.linalg.norm(Z_t, 2) <= 1.0 + 1e-10
    big = psd_product(A_t, Z_t.conj().T, psd_power(B_t, p), Z_t, A_t).matrix
    small = A.matrix @ phi.apply(psd_power(B, p).matrix) @ A.matrix
    assert_allclose(big[:n, :n], small, atol=1e-10)


def test_dilation_requires_sub_unital():
    phi = congruence(2.0 * np.eye(2))
    with pytest.raises(NotSubUnital):
        dilate(phi, gen_psd(1, 2), gen_psd(2, 2))


def test_kraus_on_commutative_reproduces_powers():
    """分解后的 Kraus 和在 A 的所有幂上与原映射一致"""
    A = gen_psd(10, 3)
    phi = gen_subunital_map(11, 3, 2, 2)
    psi = kraus_on_commutative(spectral_images(phi.apply, A))
    for t in (0.5, 1.0, 2.0):
        At = psd_power(A, t).matrix
        assert_allclose(psi.apply(At), phi.apply(At), atol=1e-10)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ posmap 测试全部完成")
