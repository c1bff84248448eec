"""
随机重启的扰动爬山搜索

每次重启从 (根种子, 目标, 维度, 重启序号) 派生的良态实例出发，按 σ_k = σ_0·decay^k
做逐元素高斯扰动并投影回起始实例的约束集合，只接受使最差间隔下降的步。
重启之间相互独立（可并行）；最优结果取 (间隔, 重启序号) 的字典序最小，
并在 JSON 往返后重新评估以自校验。
"""
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from internal.config import config
from internal.linalg import Tolerance
from internal.model import Instance, MatrixPayload, SearchReport, TrajectoryPoint
from internal.monitor import PerformanceTimer
from internal.search.objectives import get_objective, is_proved
from internal.search.projection import InstanceShape, perturb
from internal.suites import InequalityCheck, check_tolerance, evaluate_instance
from internal.suites.generators import WELL_CONDITIONED
from internal.suites.rng import derive_seed, make_rng
from internal.worker import TrialChannel
from log import logger
from pkg.errors import BadDomain, SearchInconsistent

# 已证明不等式允许的最小间隔
PROVED_FLOOR = -1e-8
# 自校验的相对精度
_VERIFY_TOL = 1e-12


@dataclass
class RestartResult:
    restart: int
    instance: Instance
    margin: float
    trajectory: List[TrajectoryPoint]


def objective_margin(check: InequalityCheck, instance: Instance, tol: Tolerance) -> float:
    """最差间隔；评估失败（越出前提）记为 +inf，该步被拒绝"""
    try:
        evaluation = evaluate_instance(check, instance, tol)
    except Exception as e:
        logger.debug("搜索步评估失败，拒绝", check_id=check.check_id, error=str(e))
        return math.inf
    if not evaluation.margins:
        return 0.0 if evaluation.verdict else -math.inf
    return float(min(evaluation.margins))


def _with_parts(template: Instance, matrices: Dict[str, np.ndarray], kraus: Dict[str, List[np.ndarray]]) -> Instance:
    return template.model_copy(update={
        "matrices": {name: MatrixPayload.from_array(M) for name, M in matrices.items()},
        "kraus": {name: [MatrixPayload.from_array(Z) for Z in ops] for name, ops in kraus.items()},
    })


def climb(check: InequalityCheck, objective_id: str, restart: int, dim: int, steps: int, seed: int,
          tol: Tolerance) -> RestartResult:
    """单次重启"""
    search_cfg = config.search_config
    sigma0 = float(search_cfg.get("sigma0_factor", 0.2))
    decay = float(search_cfg.get("decay", 0.95))

    instance_seed = derive_seed(seed, objective_id, dim, restart)
    best = check.make_instance(instance_seed, dim, WELL_CONDITIONED)
    shape = InstanceShape.infer(best, tol)
    matrices = {name: best.matrix(name) for name in best.matrices}
    kraus = {name: best.kraus_ops(name) for name in best.kraus}
    best_margin = objective_margin(check, best, tol)
    trajectory = [TrajectoryPoint(restart=restart, step=0, margin=best_margin)]

    rng = make_rng(instance_seed, 1)
    for step in range(1, steps + 1):
        scale = sigma0 * decay ** (step - 1)
        cand_matrices, cand_kraus = perturb(rng, matrices, kraus, shape, scale)
        if check.project is not None:
            check.project(cand_matrices)
        candidate = _with_parts(best, cand_matrices, cand_kraus)
        margin = objective_margin(check, candidate, tol)
        if margin < best_margin:
            best, best_margin = candidate, margin
            matrices, kraus = cand_matrices, cand_kraus
            trajectory.append(TrajectoryPoint(restart=restart, step=step, margin=margin))

    if math.isinf(best_margin) and best_margin > 0:
        logger.warning("⚠️ 重启内没有一步评估成功，间隔为 +inf", objective_id=objective_id, restart=restart, dim=dim)
    logger.debug("重启完成", objective_id=objective_id, restart=restart, dim=dim, margin=best_margin)
    return RestartResult(restart=restart, instance=best, margin=best_margin, trajectory=trajectory)


def _verify(check: InequalityCheck, result: RestartResult, tol: Tolerance) -> bool:
    """JSON 往返后重新评估，必须与记录的间隔一致"""
    replay = Instance.model_validate_json(result.instance.model_dump_json())
    margin = objective_margin(check, replay, tol)
    if margin == result.margin:
        return True
    if math.isfinite(margin) and math.isfinite(result.margin):
        return abs(margin - result.margin) <= _VERIFY_TOL * max(1.0, abs(result.margin))
    return False


def minimize_margin(
    objective_id: str,
    dims: Sequence[int],
    budget: Optional[Tuple[int, int]] = None,
    seed: int = 0,
    tol=None,
    jobs: Optional[int] = None,
) -> SearchReport:
    """
    最小化目标的最差 log 间隔

    Args:
        objective_id: 目标 ID（注册表检查 ID、det_schur、lie_trotter_z）
        dims: 维度列表，第 r 次重启使用 dims[r mod len(dims)]
        budget: (重启次数, 每次重启的步数)，缺省取 [search] 配置
        seed: 根种子；相同种子得到相同报告

    Raises:
        UnknownObjective: 目标未注册
        BadDomain: 维度低于目标的最小维度
        SearchInconsistent: 最优实例重新评估的间隔与记录不符
    """
    check = get_objective(objective_id)
    search_cfg = config.search_config
    restarts, steps = budget or (int(search_cfg.get("restarts", 20)), int(search_cfg.get("steps", 200)))
    dims = [int(d) for d in dims]
    if not dims:
        raise BadDomain("搜索至少需要一个维度", objective_id=objective_id)
    for dim in dims:
        if dim < check.min_dim:
            raise BadDomain("维度低于目标的最小维度", objective_id=objective_id, dim=dim, min_dim=check.min_dim)
    tol = check_tolerance(tol)

    logger.info("🔍 开始搜索", objective_id=objective_id, dims=dims, restarts=restarts, steps=steps, seed=seed)
    tasks = [
        (lambda r=r: climb(check, objective_id, r, dims[r % len(dims)], steps, seed, tol))
        for r in range(restarts)
    ]
    with PerformanceTimer("search", objective_id, {"restarts": restarts, "steps": steps}):
        results: List[RestartResult] = TrialChannel(jobs).run(tasks)

    if not results:
        raise BadDomain("搜索至少需要一次重启", objective_id=objective_id)
    best = min(results, key=lambda r: (r.margin, r.restart))
    if not _verify(check, best, tol):
        raise SearchInconsistent("最优实例重新评估的间隔与记录不符", objective_id=objective_id,
                                 restart=best.restart, margin=best.margin)

    if is_proved(objective_id) and best.margin < PROVED_FLOOR:
        logger.warning("⚠️ 已证明的不等式上出现负间隔", objective_id=objective_id, margin=best.margin,
                       seed=best.instance.seed)
    logger.info("✅ 搜索完成", objective_id=objective_id, best_margin=best.margin, best_restart=best.restart)

    trajectory = [point for result in results for point in result.trajectory]
    return SearchReport(
        objective_id=objective_id,
        best_instance=best.instance,
        best_margin=best.margin,
        best_restart=best.restart,
        trajectory=trajectory,
        restarts=restarts,
        steps=steps,
        seed=seed,
        dims=dims,
        verified=True,
    )
