"""
检查执行器

run_check 评估单个实例；run_suite / run_checks 按 (检查, 维度, 试验) 派生种子，
经 TrialChannel 并行执行，结果按任务顺序返回，与调度无关。
"""
from typing import Dict, Iterable, List, Optional, Sequence

from internal.config import config
from internal.linalg import Tolerance, resolve_tolerance
from internal.model import CheckOutcome, CheckSummary, Instance, OutcomeStatus, SuiteSummary
from internal.monitor import PerformanceTimer
from internal.suites.base_check import Evaluation, InequalityCheck
from internal.suites.check_manager import get_check, get_suite
from internal.suites.rng import derive_seed
from internal.worker import TrialChannel
from log import logger
from pkg.errors import BadDomain, SignatureMismatch


def check_tolerance(tol=None) -> Tolerance:
    """
    注册表检查使用的容差

    tol 缺省时 log 间隔取 [suite].log_margin；浮点数替换 log 间隔；Tolerance 原样使用。
    """
    if tol is None:
        return Tolerance.from_config().with_log_margin(config.suite_config.get("log_margin"))
    return resolve_tolerance(tol)


def _check_caps(instance: Instance) -> None:
    """p ≤ max_p，α·p ≤ max_alpha_p"""
    suite_cfg = config.suite_config
    p = instance.scalars.get("p")
    if p is None:
        return
    if p > float(suite_cfg.get("max_p", 8.0)):
        raise BadDomain("p 超过上限", p=p)
    alpha = instance.scalars.get("alpha", 1.0)
    if alpha * p > float(suite_cfg.get("max_alpha_p", 64.0)):
        raise BadDomain("α·p 超过上限", alpha=alpha, p=p)


def _status(check: InequalityCheck, verdict: bool) -> OutcomeStatus:
    if check.expects_violation:
        return OutcomeStatus.MISSING_COUNTEREXAMPLE if verdict else OutcomeStatus.EXPECTED_COUNTEREXAMPLE
    return OutcomeStatus.PASS if verdict else OutcomeStatus.VIOLATION


def evaluate_instance(check: InequalityCheck, instance: Instance, tol: Tolerance) -> Evaluation:
    """签名校验 + 上限校验 + 评估（异常向上抛出，供搜索使用）"""
    missing = check.signature - instance.part_names()
    if missing:
        raise SignatureMismatch("实例缺少检查所需的部件", check_id=check.check_id, missing=sorted(missing))
    _check_caps(instance)
    return check.evaluate(instance, tol)


def run_check(check_id: str, instance: Instance, tol=None) -> CheckOutcome:
    """
    在一个实例上运行检查

    评估中抛出的异常记为 status=error、verdict=false 的结果（带见证），不会丢弃。

    Raises:
        UnknownCheck: 检查未注册
        SignatureMismatch: 实例部件与检查签名不符
    """
    check = get_check(check_id)
    tol = check_tolerance(tol)
    missing = check.signature - instance.part_names()
    if missing:
        raise SignatureMismatch("实例缺少检查所需的部件", check_id=check_id, missing=sorted(missing))

    try:
        evaluation = evaluate_instance(check, instance, tol)
    except Exception as e:
        logger.error("❌ 检查评估异常", exc_info=True, check_id=check_id, seed=instance.seed, dim=instance.dim)
        return CheckOutcome(
            check_id=check_id,
            seed=instance.seed,
            dim=instance.dim,
            verdict=False,
            status=OutcomeStatus.ERROR,
            margins=[],
            error=f"{type(e).__name__}: {e}",
            witness=instance,
        )

    verdict = bool(evaluation.verdict)
    status = _status(check, verdict)
    outcome = CheckOutcome(
        check_id=check_id,
        seed=instance.seed,
        dim=instance.dim,
        verdict=verdict,
        status=status,
        margins=[float(m) for m in evaluation.margins],
        slack=evaluation.slack,
        relation=evaluation.relation,
        details={k: float(v) for k, v in evaluation.details.items()},
        witness=None if verdict else instance,
    )
    if status in (OutcomeStatus.VIOLATION, OutcomeStatus.MISSING_COUNTEREXAMPLE):
        logger.warning("⚠️ 检查未通过", check_id=check_id, seed=instance.seed, dim=instance.dim,
                       status=status.value, worst_margin=outcome.worst_margin)
    else:
        logger.debug("检查完成", check_id=check_id, seed=instance.seed, status=status.value)
    return outcome


# ==================== 套件 ====================

def _trial_task(check: InequalityCheck, seed: int, dim: int, profile: Optional[str], tol: Tolerance):
    def task() -> CheckOutcome:
        instance = check.make_instance(seed, dim, profile)
        return run_check(check.check_id, instance, tol)
    return task


def _run(checks: Sequence[InequalityCheck], label: str, dims: Iterable[int], trials: int, seed: int,
         tol=None, jobs: Optional[int] = None, profile: Optional[str] = None) -> List[CheckOutcome]:
    tol = check_tolerance(tol)
    dims = [int(d) for d in dims]
    tasks = []
    for check in checks:
        for dim in dims:
            if dim < check.min_dim:
                logger.warning("⚠️ 维度低于检查的最小维度，跳过", check_id=check.check_id, dim=dim,
                               min_dim=check.min_dim)
                continue
            for trial in range(int(trials)):
                trial_seed = derive_seed(seed, check.check_id, dim, trial)
                tasks.append(_trial_task(check, trial_seed, dim, profile, tol))

    logger.info("🚀 开始运行", target=label, checks=len(checks), dims=dims, trials=trials, seed=seed,
                tasks=len(tasks))
    with PerformanceTimer("suite", label, {"trials": len(tasks)}):
        outcomes = TrialChannel(jobs).run(tasks)

    summary = summarize(outcomes)
    logger.info("✅ 运行完成", target=label, total=summary.total, passed=summary.passed,
                unexpected_failures=summary.unexpected_failures, errors=summary.errors)
    return outcomes


def run_suite(suite_id: str, dims: Iterable[int], trials: int, seed: int, tol=None,
              jobs: Optional[int] = None, profile: Optional[str] = None) -> List[CheckOutcome]:
    """
    运行一个套件

    给定种子时完全确定；trials=0 返回空列表。

    Raises:
        UnknownSuite: 套件不存在
    """
    return _run(get_suite(suite_id), suite_id, dims, trials, seed, tol, jobs, profile)


def run_checks(check_ids: Sequence[str], dims: Iterable[int], trials: int, seed: int, tol=None,
               jobs: Optional[int] = None, profile: Optional[str] = None) -> List[CheckOutcome]:
    """
    运行指定的检查（--check）

    Raises:
        UnknownCheck: 检查未注册
    """
    checks = [get_check(check_id) for check_id in check_ids]
    return _run(checks, ",".join(check_ids), dims, trials, seed, tol, jobs, profile)


# ==================== 汇总 ====================

def summarize(outcomes: Sequence[CheckOutcome]) -> SuiteSummary:
    """与结果顺序无关的汇总（逐检查最小间隔取 (间隔, 种子) 的字典序最小）"""
    per_check: Dict[str, CheckSummary] = {}
    for outcome in outcomes:
        entry = per_check.get(outcome.check_id) or CheckSummary(trials=0, passed=0, failed=0)
        entry.trials += 1
        if outcome.verdict:
            entry.passed += 1
        else:
            entry.failed += 1
        if outcome.margins:
            candidate = (outcome.worst_margin, outcome.seed)
            if entry.worst_margin is None or candidate < (entry.worst_margin, entry.worst_seed):
                entry.worst_margin, entry.worst_seed = candidate
        per_check[outcome.check_id] = entry

    statuses = [o.status for o in outcomes]
    return SuiteSummary(
        total=len(outcomes),
        passed=sum(1 for o in outcomes if o.verdict),
        failed=sum(1 for o in outcomes if not o.verdict),
        expected_counterexamples=statuses.count(OutcomeStatus.EXPECTED_COUNTEREXAMPLE),
        unexpected_failures=statuses.count(OutcomeStatus.VIOLATION) + statuses.count(OutcomeStatus.MISSING_COUNTEREXAMPLE),
        errors=statuses.count(OutcomeStatus.ERROR),
        per_check=dict(sorted(per_check.items())),
    )
