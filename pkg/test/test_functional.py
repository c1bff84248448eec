"""
测试核心泛函 F(p, t)、网格解析与各类探针
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
from numpy.testing import assert_allclose

from internal.functional import (
    ProbeGrid,
    Variant,
    build_spec,
    evaluate_F,
    kyfan_geometric_limit,
    limit_probe,
    log_evaluate_F,
    monotone_section_check,
    probe_logconvexity,
    reciprocal_lie_trotter_probe,
)
from internal.matfun import PsdMatrix
from internal.suites.generators import gen_contraction, gen_ginibre, gen_psd
from pkg.errors import BadDomain, BadGrid, NotContraction


def _diag(*values):
    return PsdMatrix.from_matrix(np.diag(values))


# ==================== 求值 ====================

def test_identity_functional_is_one():
    eye = np.eye(3)
    spec = build_spec(eye, eye, eye, 1.0, "operator")
    for p, t in [(1, 1), (2, 0.5), (5, 3)]:
        assert evaluate_F(spec, p, t) == pytest.approx(1.0, abs=1e-12)


def test_diagonal_functional_independent_of_p():
    """A = B = diag(1, 4)，Z = I：F = 16^t"""
    A = np.diag([1.0, 4.0])
    spec = build_spec(A, A, np.eye(2), 1.0, "operator")
    for p in (1.0, 2.0, 7.0):
        for t in (0.5, 1.0, 2.0):
            assert evaluate_F(spec, p, t) == pytest.approx(16.0 ** t, rel=1e-10)


def test_log_space_handles_large_exponents():
    A = np.diag([1.0, 1e3])
    spec = build_spec(A, A, np.eye(2), 64.0, "trace")
    value = log_evaluate_F(spec, 8.0, 1.0)
    assert value == pytest.approx(64.0 * 2.0 * math.log(1e3), rel=1e-10)
    assert math.isinf(evaluate_F(spec, 8.0, 1.0))


def test_variant_domains():
    A = np.diag([1.0, 2.0])
    with pytest.raises(BadDomain):
        log_evaluate_F(build_spec(A, A, np.eye(2), 1.0, "operator", Variant.POWER_P), 1.0, 0.0)
    with pytest.raises(BadDomain):
        log_evaluate_F(build_spec(A, A, np.eye(2), 1.0, "operator", Variant.SECTION_T1), 2.0, 0.5)
    with pytest.raises(BadDomain):
        log_evaluate_F(build_spec(A, A, np.eye(2), 1.0, "operator", Variant.SECTION_P1), 2.0, 1.0)
    with pytest.raises(BadDomain):
        log_evaluate_F(build_spec(A, A, np.eye(2), 1.0, "operator"), 0.0, 1.0)
    with pytest.raises(BadDomain):
        build_spec(A, A, np.eye(2), 1.0, "operator", Variant.FIXED_EXPONENT)


def test_congruence_accepts_rectangular_weight():
    """Z*A^{t/p}Z 的 αp 次幂：Z 为 n×m"""
    A = np.diag([4.0, 1.0])
    Z = np.array([[1.0], [0.0]])
    spec = build_spec(A, None, Z, 1.0, "operator", Variant.CONGRUENCE)
    # Z*A^{t/p}Z = 4^{t/p}，αp 次幂后为 4^t
    assert evaluate_F(spec, 2.0, 1.5) == pytest.approx(8.0, rel=1e-10)


# ==================== 网格 ====================

def test_grid_parse():
    grid = ProbeGrid.parse("p:1,1.5,2;t:0.5,1,1.5")
    assert len(grid.points()) == 9
    assert ProbeGrid.parse("p:1,2,4,8").t_values == (1.0,)
    assert ProbeGrid.parse("t:0.5,1").p_values == (1.0,)
    assert ProbeGrid.parse("p:1,2,3").midpoint_pairs() == [(0, 2, 1)]


@pytest.mark.parametrize("text", ["", "q:1,2", "p:1,a", "p:1,1", "p:1;p:2", "p:1,inf"])
def test_grid_parse_errors(text):
    with pytest.raises(BadGrid):
        ProbeGrid.parse(text)


def test_probe_without_midpoints_raises():
    spec = build_spec(np.eye(2), np.eye(2), np.eye(2), 1.0, "operator")
    with pytest.raises(BadGrid):
        probe_logconvexity(spec, ProbeGrid.parse("p:1,2,4"))


# ==================== log 凸性探针 ====================

@pytest.mark.parametrize("norm", ["operator", "trace", "kyfan:2", "schatten:3"])
def test_two_variable_logconvexity(norm):
    for seed in range(3):
        A, B = gen_psd(100 + seed, 3), gen_psd(200 + seed, 3)
        spec = build_spec(A, B, gen_ginibre(300 + seed, 3), 1.5, norm)
        report = probe_logconvexity(spec, ProbeGrid.default(), jobs=1)
        assert report.verdict, report.worst_residual
        assert len(report.values) == 9


def test_parallel_probe_matches_serial():
    spec = build_spec(gen_psd(1, 3), gen_psd(2, 3), gen_ginibre(3, 3), 1.0, "trace")
    serial = probe_logconvexity(spec, ProbeGrid.default(), jobs=1)
    parallel = probe_logconvexity(spec, ProbeGrid.default(), jobs=4)
    assert serial.model_dump() == parallel.model_dump()


def test_fixed_exponent_breaks_logconvexity():
    """
    固定指数是反例对照：A = B = 0.5·I，Z = I 时
    log F(p, 1) = 2c·log(0.5)/p 关于 p 是凹的；αp 次幂版本则是线性的
    """
    A = 0.5 * np.eye(2)
    grid = ProbeGrid.parse("p:1,2,3")
    fixed = build_spec(A, A, np.eye(2), 1.0, "operator", Variant.FIXED_EXPONENT, exponent=1.0)
    report = probe_logconvexity(fixed, grid)
    assert not report.verdict
    assert report.worst_residual == pytest.approx(-math.log(0.5) / 3.0, rel=1e-9)

    scaled = build_spec(A, A, np.eye(2), 1.0, "operator")
    assert probe_logconvexity(scaled, grid).verdict


# ==================== 单调截面与幂平均 ====================

def test_monotone_section_for_contractions():
    spec = build_spec(np.diag([1.0, 4.0]), np.diag([1.0, 4.0]), np.eye(2), 1.0, "operator")
    report = monotone_section_check(spec, [1.0, 2.0, 4.0])
    assert report.verdict
    assert_allclose(report.values, [16.0, 16.0, 16.0], rtol=1e-10)

    for seed in range(3):
        spec = build_spec(gen_psd(seed, 3), gen_psd(seed + 10, 3), gen_contraction(seed + 20, 3),
                          1.0, "trace")
        assert monotone_section_check(spec, [1.0, 1.5, 2.0, 3.0, 4.0]).verdict


def test_monotone_section_requires_contraction():
    spec = build_spec(np.eye(2), np.eye(2), 2.0 * np.eye(2), 1.0, "operator")
    with pytest.raises(NotContraction):
        monotone_section_check(spec, [1.0, 2.0])


def test_kyfan_power_mean_decreases_to_geometric_mean():
    A = _diag(4.0, 1.0, 0.25)
    report = kyfan_geometric_limit(A, 2, [0.05, 0.5, 1.0, 2.0])
    assert report.verdict
    assert report.geometric_mean == pytest.approx(2.0, rel=1e-12)
    assert report.values[-1] > report.values[0] > report.geometric_mean


# ==================== 极限探针 ====================

def test_limit_probe_commuting_case():
    """A、B 对角且 Z = I 时 λ_j^{1/p} 与 p 无关：λ_j(A²B)"""
    A, B = _diag(2.0, 1.0), _diag(3.0, 1.0)
    top = limit_probe(A, B, np.eye(2), 1, [1, 2, 4, 8])
    assert_allclose(top.values, [12.0] * 4, rtol=1e-9)
    assert top.cauchy_tail < 1e-9
    low = limit_probe(A, B, np.eye(2), 2, [1, 2, 4])
    assert_allclose(low.values, [1.0] * 3, rtol=1e-8)
    with pytest.raises(BadDomain):
        limit_probe(A, B, np.eye(2), 3, [1, 2])


def test_matrix_limit_probe_commuting_case():
    A, B = _diag(2.0, 1.0), _diag(3.0, 1.0)
    report = reciprocal_lie_trotter_probe(A, B, np.eye(2), [1, 2, 4, 8])
    assert len(report.differences) == 3
    assert max(report.differences) < 1e-9
    assert_allclose(report.values, [12.0] * 4, rtol=1e-9)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn) and name not in ("test_two_variable_logconvexity",
                                                                      "test_grid_parse_errors"):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ functional 测试全部完成")
