"""
运行服务
把 RunConfig 分派到套件 / 探针 / 搜索 / 演示，返回 (message, ret, report)

ret 约定：
- 0  全部通过
- -2 存在 verdict 为 false 的结果（报告中带见证）
- -1 配置或用法错误（report 为 None）
"""
from typing import Any, Dict, Optional, Tuple

from internal.config import config
from internal.functional import ProbeGrid, Variant, build_spec, limit_probe, probe_logconvexity
from internal.model import (
    Command,
    LimitProbeReport,
    ProbeReport,
    RunConfig,
    RunReport,
    SearchReport,
    SuiteSummary,
)
from internal.monitor import performance_monitor
from internal.search import PROVED_FLOOR, get_objective, is_proved, minimize_margin
from internal.suites import check_tolerance, demo, run_checks, run_suite, summarize
from internal.suites.generators import WELL_CONDITIONED, gen_ginibre, gen_psd
from internal.suites.rng import make_rng, stable_id
from log import logger
from pkg.constants import ARTIFACT_VERSION
from pkg.errors import MajorLabError

RunResult = Tuple[str, int, Optional[RunReport]]


class RunService:
    """运行服务（单例模式）"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @performance_monitor("run", operation_name="RunService.execute")
    def execute(self, run_config: RunConfig) -> RunResult:
        """
        执行一次运行

        Args:
            run_config: 完整的运行配置（持久化后可重放）

        Returns:
            (message, ret, report)
        """
        handlers = {
            Command.SUITE: self._run_suite,
            Command.PROBE: self._run_probe,
            Command.SEARCH: self._run_search,
            Command.DEMO: self._run_demo,
        }
        try:
            return handlers[run_config.command](run_config)
        except MajorLabError as e:
            logger.error("❌ 运行配置错误", error=e.to_dict())
            return f"运行失败: {e}", -1, None
        except Exception as e:
            logger.error("❌ 运行异常", exc_info=True, command=run_config.command.value)
            return f"运行失败: {e}", -1, None

    # ==================== 套件 / 检查 ====================

    def _run_suite(self, run_config: RunConfig) -> RunResult:
        args = dict(dims=run_config.dims, trials=run_config.trials, seed=run_config.seed,
                    tol=run_config.tol, jobs=run_config.jobs, profile=run_config.profile)
        if run_config.check_id:
            outcomes = run_checks([c.strip() for c in run_config.check_id.split(",") if c.strip()], **args)
        else:
            outcomes = run_suite(run_config.suite_id or "all", **args)

        summary = summarize(outcomes)
        failing = self._failing(summary, run_config.ci)
        report = RunReport(config=run_config, artifact_version=ARTIFACT_VERSION, outcomes=outcomes,
                           summary=summary.model_dump())
        if failing:
            return f"{failing} 个结果未通过", -2, report
        return "全部通过", 0, report

    @staticmethod
    def _failing(summary: SuiteSummary, ci: bool) -> int:
        """--ci 时预期反例（且仅预期反例）计为通过，缺失的预期反例计为失败"""
        if ci:
            return summary.unexpected_failures + summary.errors
        return summary.failed

    # ==================== 探针 ====================

    def _probe_inputs(self, run_config: RunConfig):
        """探针实例：由 (seed, "probe", dim) 确定"""
        n = run_config.dims[0]
        rng = make_rng(run_config.seed, stable_id("probe"), n)
        profile = run_config.profile or WELL_CONDITIONED
        return gen_psd(rng, n, profile), gen_psd(rng, n, profile), gen_ginibre(rng, n)

    @staticmethod
    def _probe_grid(run_config: RunConfig, variant: Variant) -> ProbeGrid:
        if run_config.grid:
            return ProbeGrid.parse(run_config.grid)
        grid = ProbeGrid.default()
        if variant == Variant.SECTION_T1:
            return ProbeGrid(grid.p_values, (1.0,))
        if variant == Variant.SECTION_P1:
            return ProbeGrid((1.0,), grid.t_values)
        return grid

    def _run_probe(self, run_config: RunConfig) -> RunResult:
        variant_name = run_config.probe_variant or Variant.TWO_VAR.value
        A, B, Z = self._probe_inputs(run_config)
        tol = check_tolerance(run_config.tol)

        if variant_name == "limit":
            sequence = config.probe_config.get("limit_sequence", [1, 2, 4, 8, 16, 32, 64])
            limit: LimitProbeReport = limit_probe(A, B, Z, 1, sequence, tol)
            report = RunReport(config=run_config, artifact_version=ARTIFACT_VERSION, limit=limit,
                               summary={"cauchy_tail": limit.cauchy_tail})
            return "极限探针完成（只报告）", 0, report

        variant = Variant(variant_name)
        exponent = run_config.alpha if variant == Variant.FIXED_EXPONENT else None
        spec = build_spec(A, None if variant == Variant.CONGRUENCE else B, Z, run_config.alpha, run_config.norm,
                          variant, exponent=exponent, tol=tol)
        probe: ProbeReport = probe_logconvexity(spec, self._probe_grid(run_config, variant), tol, run_config.jobs)
        report = RunReport(config=run_config, artifact_version=ARTIFACT_VERSION, probe=probe,
                           summary={"verdict": probe.verdict, "worst_residual": probe.worst_residual,
                                    "pairs": len(probe.midpoint_checks)})
        if not probe.verdict:
            return "log 凸性探针未通过", -2, report
        return "log 凸性探针通过", 0, report

    # ==================== 搜索 ====================

    def _run_search(self, run_config: RunConfig) -> RunResult:
        objective_id = run_config.objective_id or "det_schur"
        objective = get_objective(objective_id)
        search: SearchReport = minimize_margin(objective_id, run_config.dims,
                                               (run_config.restarts, run_config.steps),
                                               run_config.seed, run_config.tol, run_config.jobs)
        violation = search.best_margin < PROVED_FLOOR
        summary: Dict[str, Any] = {"best_margin": search.best_margin, "violation": violation,
                                   "proved": is_proved(objective_id)}
        report = RunReport(config=run_config, artifact_version=ARTIFACT_VERSION, search=search, summary=summary)

        if not is_proved(objective_id) and not objective.expects_violation:
            return "开放问题目标，只报告", 0, report
        if run_config.ci and objective.expects_violation:
            if not violation:
                return "未找到预期反例", -2, report
            return "找到预期反例", 0, report
        if violation:
            return "搜索找到违反", -2, report
        return "搜索完成", 0, report

    # ==================== 演示 ====================

    def _run_demo(self, run_config: RunConfig) -> RunResult:
        results = demo()
        report = RunReport(config=run_config, artifact_version=ARTIFACT_VERSION, demo=results,
                           summary={"items": sorted(results)})
        return "演示完成", 0, report


run_service = RunService()
