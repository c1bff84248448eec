"""
测试对称范数族与 Ky Fan 支配
"""
import sys
import os

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)
os.environ.setdefault("MAJORLAB_LOG_FILE", "0")

import numpy as np
import pytest

from internal.matfun import PsdMatrix
from internal.norms import SymmetricNorm, cauchy_schwarz_check, evaluate, kyfan_dominance, norm_family
from internal.suites.generators import gen_ginibre
from pkg.errors import BadOrder, ConfigError


def test_kyfan_examples():
    D = np.diag([3.0, 1.0, -2.0])
    assert evaluate(SymmetricNorm.kyfan(2), D) == pytest.approx(5.0)
    assert evaluate(SymmetricNorm.normalized_kyfan(2), D) == pytest.approx(2.5)
    assert evaluate(SymmetricNorm.operator(), D) == pytest.approx(3.0)
    assert evaluate(SymmetricNorm.trace(), D) == pytest.approx(6.0)


def test_schatten_matches_numpy():
    M = gen_ginibre(1, 4)
    s = np.linalg.svd(M, compute_uv=False)
    assert evaluate(SymmetricNorm.schatten(2.0), M) == pytest.approx(np.linalg.norm(M, "fro"), rel=1e-10)
    assert evaluate(SymmetricNorm.schatten(3.0), M) == pytest.approx(float(np.sum(s ** 3) ** (1 / 3)), rel=1e-10)


def test_kyfan_order_too_large():
    with pytest.raises(BadOrder):
        evaluate(SymmetricNorm.kyfan(4), np.eye(3))
    with pytest.raises(BadOrder):
        SymmetricNorm.schatten(0.5)


def test_label_round_trip():
    for norm in norm_family(3):
        assert SymmetricNorm.parse(norm.label) == norm
    with pytest.raises(ConfigError):
        SymmetricNorm.parse("frobenius")


def test_log_space_agrees_with_direct():
    """log 空间求值与直接求值一致，大指数时不上溢"""
    M = gen_ginibre(2, 3)
    s = np.linalg.svd(M, compute_uv=False)
    for norm in norm_family(3):
        assert norm.log_of_singulars(np.log(s)) == pytest.approx(np.log(norm.of_singulars(s)), abs=1e-12)
    huge = SymmetricNorm.trace().log_of_singulars(64.0 * np.log(np.array([1e6, 1.0])))
    assert np.isfinite(huge)
    assert huge == pytest.approx(64.0 * np.log(1e6), rel=1e-12)


def test_kyfan_dominance_examples():
    assert not kyfan_dominance(PsdMatrix.from_matrix(np.diag([3.0, 0.0])),
                               PsdMatrix.from_matrix(np.diag([2.0, 2.0]))).verdict
    assert kyfan_dominance(PsdMatrix.from_matrix(np.diag([2.0, 1.0])),
                           PsdMatrix.from_matrix(np.diag([3.0, 1.0]))).verdict


def test_cauchy_schwarz_holds_for_all_norms():
    X, Y = gen_ginibre(3, 3), gen_ginibre(4, 3)
    for norm in norm_family(3):
        assert cauchy_schwarz_check(norm, X, Y).verdict, norm.label


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ norms 测试全部完成")
