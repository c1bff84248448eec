"""
测试反例搜索：约束投影、目标注册表、爬山搜索的确定性与自校验
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
from loguru import logger as loguru_logger

from internal.linalg import DEFAULT_TOLERANCE
from internal.model import Instance
from internal.search import (
    PROVED_FLOOR,
    FamilyShape,
    PartShape,
    climb,
    get_objective,
    is_proved,
    list_objective_ids,
    minimize_margin,
)
from internal.suites import InequalityCheck, get_check, run_check
from internal.suites.generators import gen_contraction, gen_kraus, gen_normal, gen_psd
from internal.suites.rng import make_rng
from pkg.errors import BadDomain, UnknownObjective


def _noisy(rng, M, scale=0.3):
    return M + scale * (rng.standard_normal(M.shape) + 1j * rng.standard_normal(M.shape))


# ==================== 投影 ====================

def test_psd_projection_stays_psd_and_bounded():
    A = gen_psd(1, 3).matrix
    shape = PartShape.infer(A, DEFAULT_TOLERANCE)
    assert shape.psd and shape.hermitian
    np.testing.assert_allclose(shape.project(A), A, atol=1e-12)

    rng = make_rng(2)
    for _ in range(10):
        P = shape.project(_noisy(rng, A))
        w = np.linalg.eigvalsh(P)
        assert np.allclose(P, P.conj().T, atol=1e-14)
        assert w[0] >= -1e-12
        assert w[-1] <= shape.spectrum_box[1] + 1e-12


def test_contraction_projection():
    Z = gen_contraction(3, 3)
    shape = PartShape.infer(Z, DEFAULT_TOLERANCE)
    assert shape.contraction and not shape.psd
    np.testing.assert_allclose(shape.project(Z), Z, atol=1e-12)

    rng = make_rng(4)
    for _ in range(10):
        assert np.linalg.norm(shape.project(_noisy(rng, Z)), 2) <= 1.0 + 1e-12


def test_normal_projection():
    N = gen_normal(5, 3)
    shape = PartShape.infer(N, DEFAULT_TOLERANCE)
    assert shape.normal
    rng = make_rng(6)
    P = shape.project(_noisy(rng, N))
    assert np.linalg.norm(P @ P.conj().T - P.conj().T @ P) <= 1e-10 * max(1.0, np.linalg.norm(P) ** 2)


def test_kraus_family_projection_stays_sub_unital():
    ops = gen_kraus(7, 3, 3, 2)
    family = FamilyShape.infer(ops, DEFAULT_TOLERANCE)
    assert family.sub_unital
    rng = make_rng(8)
    moved = family.project([_noisy(rng, Z, 1.0) for Z in ops])
    S = sum(Z.conj().T @ Z for Z in moved)
    assert np.max(np.linalg.eigvalsh(0.5 * (S + S.conj().T))) <= 1.0 + 1e-12


# ==================== 目标 ====================

def test_objective_registry():
    ids = list_objective_ids()
    assert "det_schur" in ids and "lie_trotter_z" in ids and "striking" in ids
    assert get_objective("det_schur").check_id == "det_schur_counterexample"
    assert is_proved("striking")
    assert not is_proved("det_schur")
    assert not is_proved("lie_trotter_z")
    with pytest.raises(UnknownObjective):
        get_objective("no_such_objective")


def test_search_rejects_bad_dims():
    with pytest.raises(BadDomain):
        minimize_margin("det_schur", [1], budget=(1, 1))
    with pytest.raises(BadDomain):
        minimize_margin("det_schur", [], budget=(1, 1))


# ==================== 搜索 ====================

def test_det_schur_search_finds_violation():
    report = minimize_margin("det_schur", [2], budget=(3, 10), seed=0, jobs=1)
    assert report.verified
    assert report.best_margin < 0.0
    assert report.trajectory[0].step == 0

    replay = Instance.model_validate_json(report.best_instance.model_dump_json())
    outcome = run_check("det_schur_counterexample", replay)
    assert not outcome.verdict


def test_proved_objective_stays_above_floor():
    report = minimize_margin("striking", [2], budget=(2, 15), seed=5, jobs=1)
    assert report.verified
    assert report.best_margin >= PROVED_FLOOR


def test_trajectory_only_records_improvements():
    report = minimize_margin("araki", [2, 3], budget=(2, 10), seed=9, jobs=1)
    for restart in range(report.restarts):
        margins = [pt.margin for pt in report.trajectory if pt.restart == restart]
        assert margins == sorted(margins, reverse=True)
        assert len(set(margins)) == len(margins)


def test_search_is_deterministic():
    first = minimize_margin("det_schur", [2, 3], budget=(3, 8), seed=42, jobs=1)
    second = minimize_margin("det_schur", [2, 3], budget=(3, 8), seed=42, jobs=3)
    assert first.model_dump_json() == second.model_dump_json()


def test_restart_without_successful_step_warns():
    araki = get_check("araki")

    def _always_fails(inst, tol):
        raise BadDomain("评估总是失败")

    broken = InequalityCheck("always_fails", araki.anchor, araki.signature, araki.generate, _always_fails)
    messages = []
    handler_id = loguru_logger.add(lambda m: messages.append(m.record["message"]), level="WARNING")
    try:
        result = climb(broken, "always_fails", restart=0, dim=2, steps=3, seed=0, tol=DEFAULT_TOLERANCE)
    finally:
        loguru_logger.remove(handler_id)
    assert result.margin == math.inf
    assert len(result.trajectory) == 1
    assert any("+inf" in m for m in messages)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            print("=" * 80)
            print(f"运行 {name}")
            print("=" * 80)
            fn()
    print("\n✅ search 测试全部完成")
