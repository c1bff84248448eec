"""
命令行入口

    python main.py --check araki --dim 3 --trials 50 --seed 7 --out r.json
    python main.py --suite all --dim 2,3,4 --jobs 4 --ci
    python main.py --probe two_var --grid "p:1,1.5,2;t:0.5,1,1.5" --norm kyfan:2
    python main.py --objective det_schur --dim 2 --restarts 20 --steps 200
    python main.py --demo
    python main.py --list
    python main.py --replay r.json        # 用报告里的 config 重新执行

退出码：0 全部通过；2 存在未通过的 verdict（见证已写入报告）；1 用法 / 配置错误。
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from internal.config import config
from internal.functional import Variant
from internal.model import Command, ReportFormat, RunConfig
from internal.search import list_objective_ids
from internal.service.run import run_service, write_report
from internal.suites import SUITES, list_check_ids
from internal.suites.generators import PROFILES
from log import logger
from pkg.constants import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, MAJORLAB_JOBS, MAJORLAB_SEED
from pkg.errors import ConfigError

PROBE_VARIANTS = [v.value for v in Variant] + ["limit"]

_EXIT_CODES = {0: EXIT_OK, -2: EXIT_VIOLATION, -1: EXIT_USAGE}


class UsageParser(argparse.ArgumentParser):
    """用法错误抛出 ConfigError（退出码 1，而不是 argparse 默认的 2）"""

    def error(self, message: str):
        raise ConfigError(message)


def _int_list(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"不是整数列表: {text}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"维度必须为正整数: {text}")
    return values


def build_parser() -> UsageParser:
    suite_cfg = config.suite_config
    search_cfg = config.search_config
    parser = UsageParser(prog="majorlab", description="矩阵优超不等式的数值实验台")

    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--suite", choices=sorted(SUITES), help="运行一个检查套件")
    target.add_argument("--check", help="运行指定检查（逗号分隔）")
    target.add_argument("--objective", help="反例 / 紧性搜索目标")
    target.add_argument("--probe", choices=PROBE_VARIANTS, help="log 凸性探针变体")
    target.add_argument("--demo", action="store_true", help="输出闭式黄金值")
    target.add_argument("--list", action="store_true", help="列出注册表中的检查 ID")
    target.add_argument("--replay", metavar="REPORT", help="用已有报告中的 config 重新执行")

    parser.add_argument("--dim", type=_int_list, default=list(suite_cfg.get("default_dims", [3])),
                        help="维度（逗号分隔）")
    parser.add_argument("--trials", type=int, default=int(suite_cfg.get("default_trials", 100)))
    parser.add_argument("--seed", type=int, default=MAJORLAB_SEED, help="根种子（缺省取 MAJORLAB_SEED）")
    parser.add_argument("--tol", type=float, default=None, help="log 间隔容差")
    parser.add_argument("--grid", default=None, help='探针网格 "p:a,b,c;t:x,y,z"')
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--norm", default="trace", help="范数标签：operator / trace / schatten:q / kyfan:k / nkyfan:k")
    parser.add_argument("--restarts", type=int, default=int(search_cfg.get("restarts", 20)))
    parser.add_argument("--steps", type=int, default=int(search_cfg.get("steps", 200)))
    parser.add_argument("--profile", choices=PROFILES, default=None, help="强制谱 profile")
    parser.add_argument("--jobs", type=int, default=MAJORLAB_JOBS, help="工作线程数")
    parser.add_argument("--ci", action="store_true", help="预期反例计为通过")
    parser.add_argument("--out", default=None, help="报告输出路径（缺省输出到标准输出）")
    parser.add_argument("--format", choices=[f.value for f in ReportFormat],
                        default=config.report_config.get("format", "json"))
    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    """命令行参数 → RunConfig"""
    if args.replay:
        try:
            payload = json.loads(Path(args.replay).read_text(encoding="utf-8"))
            return RunConfig.model_validate(payload["config"])
        except (OSError, ValueError, KeyError, ValidationError) as e:
            raise ConfigError("无法读取报告中的 config", path=args.replay, error=str(e))

    if args.demo:
        command = Command.DEMO
    elif args.probe:
        command = Command.PROBE
    elif args.objective:
        command = Command.SEARCH
    else:
        command = Command.SUITE
    if args.trials < 0 or args.restarts < 0 or args.steps < 0 or args.jobs < 1:
        raise ConfigError("trials / restarts / steps 不能为负，jobs 至少为 1")
    return RunConfig(
        command=command,
        suite_id=args.suite,
        check_id=args.check,
        objective_id=args.objective,
        probe_variant=args.probe,
        dims=args.dim,
        trials=args.trials,
        seed=args.seed,
        tol=args.tol,
        grid=args.grid,
        alpha=args.alpha,
        norm=args.norm,
        restarts=args.restarts,
        steps=args.steps,
        profile=args.profile,
        jobs=args.jobs,
        ci=args.ci,
        out=args.out,
        format=ReportFormat(args.format),
    )


def _print_registry():
    for check_id in list_check_ids():
        print(check_id)
    extras = [o for o in list_objective_ids() if o not in set(list_check_ids())]
    print("# suites: " + ", ".join(sorted(SUITES)))
    print("# search objectives: every check id, " + ", ".join(extras))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 主函数

    Returns:
        进程退出码（0 / 1 / 2）
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.list:
            _print_registry()
            return EXIT_OK
        run_config = to_run_config(args)
    except ConfigError as e:
        parser.print_usage(sys.stderr)
        print(f"majorlab: error: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    message, ret, report = run_service.execute(run_config)
    if report is None:
        print(f"majorlab: error: {message}", file=sys.stderr)
        return EXIT_USAGE

    text = write_report(report, run_config.out, run_config.format)
    if not run_config.out:
        print(text)
    logger.info("🏁 运行结束", message=message, ret=ret)
    return _EXIT_CODES.get(ret, EXIT_USAGE)
