"""
测试优超关系判定与复合矩阵交叉校验
"""
import sys
import os

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)
os.environ.setdefault("MAJORLAB_LOG_FILE", "0")

import math

import numpy as np
import pytest

from internal.major import (
    log_majorize,
    scalar_inequality,
    super_weak_log_majorize,
    weak_log_majorize,
    weak_log_majorize_by_compound,
    weak_log_majorize_values,
)
from internal.matfun import PsdMatrix, psd_power, psd_product
from internal.model import Relation
from internal.suites.generators import gen_psd
from pkg.errors import DimMismatch


def _diag(*values) -> PsdMatrix:
    return PsdMatrix.from_matrix(np.diag(values))


def test_weak_log_examples():
    report = weak_log_majorize(_diag(3.0, 1.0), _diag(4.0, 2.0))
    assert report.verdict
    assert report.relation == Relation.WEAK_LOG
    report = weak_log_majorize(_diag(1.0, 1.0), _diag(2.0, 0.4))
    assert not report.verdict
    assert report.worst_k == 2
    assert report.k_margins[1] == pytest.approx(math.log(0.8))


def test_log_requires_equal_determinant():
    assert log_majorize(_diag(2.0, 2.0), _diag(4.0, 1.0)).verdict
    assert not log_majorize(_diag(2.0, 1.0), _diag(4.0, 1.0)).verdict


def test_zero_counting_rules():
    """Y 先出现零 → −∞；X 先出现零 → +∞；同时为零 → 0"""
    assert weak_log_majorize_values([1.0, 1.0], [2.0, 0.0]).k_margins[1] == float("-inf")
    assert weak_log_majorize_values([1.0, 0.0], [2.0, 1.0]).k_margins[1] == float("inf")
    assert weak_log_majorize_values([1.0, 0.0], [2.0, 0.0]).k_margins[1] == 0.0


def test_abs_tol_rescue():
    """近奇异：log 间隔失败但乘积差在绝对容差内"""
    x, y = [1.0, 1e-9], [1.0, 5e-10]
    assert not weak_log_majorize_values(x, y).verdict
    rescued = weak_log_majorize_values(x, y, abs_tol=1e-8)
    assert rescued.verdict
    assert rescued.rescued_by_abs_tol == [2]


def test_super_weak_log():
    """∏ 最小 k 个特征值：X 更大"""
    assert super_weak_log_majorize(_diag(2.0, 3.0), _diag(1.0, 4.0)).verdict
    assert not super_weak_log_majorize(_diag(1.0, 4.0), _diag(2.0, 3.0)).verdict


def test_dim_mismatch():
    with pytest.raises(DimMismatch):
        weak_log_majorize(_diag(1.0), _diag(1.0, 2.0))


def test_araki_determinant_equality():
    """(ABA)^p 与 A^pB^pA^p 行列式相等"""
    A, B = gen_psd(1, 4), gen_psd(2, 4)
    p = 2.0
    lhs = psd_power(psd_product(A, B, A), p)
    Ap = psd_power(A, p)
    rhs = psd_product(Ap, psd_power(B, p), Ap)
    report = log_majorize(lhs, rhs, 1e-8)
    assert report.verdict
    assert abs(report.det_margin) <= 1e-8


def test_compound_oracle_agrees():
    """排序特征值的 log 路线与 ‖∧^k·‖_∞ 路线给出相同判定"""
    for seed in range(30):
        n = 2 + seed % 4
        X, Y = gen_psd(2 * seed, n), gen_psd(2 * seed + 1, n)
        direct = weak_log_majorize(X, Y)
        via_compound = weak_log_majorize_by_compound(X, Y)
        assert direct.verdict == via_compound.verdict
        np.testing.assert_allclose(direct.k_margins, via_compound.k_margins, atol=1e-9)


def test_compound_oracle_agrees_on_tiny_tails():
    """尾部特征值很小但非零时，两条路线的 k 间隔一致"""
    X, Y = _diag(10.0, 0.01, 5e-9), _diag(10.0, 0.01, 2e-9)
    direct = weak_log_majorize(X, Y)
    via_compound = weak_log_majorize_by_compound(X, Y)
    assert not direct.verdict
    assert via_compound.verdict == direct.verdict
    assert via_compound.k_margins[2] == pytest.approx(math.log(2e-9 / 5e-9), abs=1e-6)
    assert weak_log_majorize_by_compound(Y, X).verdict


@pytest.mark.parametrize("profile", ["near-singular", "rank-deficient"])
def test_compound_oracle_agrees_on_degenerate_profiles(profile):
    for seed in range(20):
        n = 2 + seed % 3
        X, Y = gen_psd(100 + 2 * seed, n, profile), gen_psd(101 + 2 * seed, n, profile)
        direct = weak_log_majorize(X, Y)
        via_compound = weak_log_majorize_by_compound(X, Y)
        assert direct.verdict == via_compound.verdict
        for a, b in zip(direct.k_margins, via_compound.k_margins):
            if math.isinf(a) or a == 0.0:
                assert a == b
            else:
                assert a == pytest.approx(b, abs=1e-6)


def test_inverse_duality():
    """X ≺_wlog Y ⇔ X^{-1} ≺^{wlog} Y^{-1}；行列式相等时 X^{-1} ≺_log Y^{-1}"""
    for seed in range(20):
        n = 2 + seed % 4
        A, B = gen_psd(300 + 2 * seed, n), gen_psd(301 + 2 * seed, n)
        p = 2.0
        X = psd_power(psd_product(A, B, A), p)
        Ap = psd_power(A, p)
        Y = psd_product(Ap, psd_power(B, p), Ap)
        assert log_majorize(X, Y, 1e-8).verdict
        assert log_majorize(psd_power(X, -1.0), psd_power(Y, -1.0), 1e-8).verdict

        forward = weak_log_majorize(A, B)
        dual = super_weak_log_majorize(psd_power(A, -1.0), psd_power(B, -1.0))
        assert forward.verdict == dual.verdict
        np.testing.assert_allclose(forward.k_margins, dual.k_margins, atol=1e-9)


def test_inverse_duality_reverses_order():
    X, Y = _diag(2.0, 2.0), _diag(4.0, 1.0)
    assert log_majorize(X, Y).verdict
    assert log_majorize(psd_power(X, -1.0), psd_power(Y, -1.0)).verdict
    assert not weak_log_majorize(psd_power(Y, -1.0), psd_power(X, -1.0)).verdict


def test_scalar_inequality():
    report = scalar_inequality(1.0, 2.0)
    assert report.verdict
    assert report.log_margin == pytest.approx(math.log(2.0))
    assert not scalar_inequality(2.0, 1.0).verdict
    assert scalar_inequality(1.0, 1.0 - 1e-12).verdict


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ major 测试全部完成")
