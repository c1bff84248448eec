"""
全量验收：log 凸性探针、注册表扫描、复合矩阵判据一致性、闭式黄金值、
行列式 Schur 反例搜索、固定指数反例对照、报告确定性、对称 Lie 乘积公式

    python scripts/run_acceptance.py                 # 全量
    python scripts/run_acceptance.py --scale 0.1     # 缩小试验数（冒烟）
"""
import argparse
import os
import sys
import tempfile
import time
from pathlib import Path
from typing import Callable, Dict, List, Tuple

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pandas as pd

from internal.cli import main as cli_main
from internal.functional import ProbeGrid, Variant, build_spec, probe_logconvexity
from internal.major import weak_log_majorize, weak_log_majorize_by_compound
from internal.matfun import psd_power, psd_product
from internal.search import minimize_margin
from internal.suites import golden_thompson_2x2, run_checks, run_suite, summarize, tightness_cartesian
from internal.suites.checks.exponential_family import lie_trotter_errors
from internal.suites.generators import gen_ginibre, gen_hermitian, gen_psd
from internal.suites.rng import make_rng, stable_id
from log import logger

NORM_KINDS = ["operator", "trace", "schatten:{q}", "kyfan:{k}", "nkyfan:{k}"]
ALPHAS = [0.5, 1.0, 2.0]
GRID_5x5 = "p:1,1.5,2,2.5,3;t:0.5,1,1.5,2,2.5"
NEGATIVE_GRID = "p:1,2,3,4,5;t:0.5,1,1.5,2,2.5"
DET_EQUALITY_CHECKS = ["araki", "araki_normal", "cohen_exp", "thompson_exp", "gt_log"]

Result = Tuple[bool, Dict]


def _count(full: int, scale: float) -> int:
    return max(1, int(round(full * scale)))


def _norm_label(rng: np.random.Generator, n: int) -> str:
    kind = NORM_KINDS[int(rng.integers(len(NORM_KINDS)))]
    return kind.format(q=float(rng.choice([1.5, 2.0, 3.0])), k=int(rng.integers(1, n + 1)))


# ==================== 各项验收 ====================

def functional_probe(scale: float, seed: int, jobs: int) -> Result:
    """随机 FunctionalSpec 的 5×5 网格中点残差 ≤ 1e-9，60 秒内"""
    rng = make_rng(seed, stable_id("acceptance-functional"))
    grid = ProbeGrid.parse(GRID_5x5)
    worst = -np.inf
    start = time.perf_counter()
    for _ in range(_count(200, scale)):
        n = int(rng.integers(1, 5))
        spec = build_spec(gen_psd(rng, n), gen_psd(rng, n), gen_ginibre(rng, n),
                          float(rng.choice(ALPHAS)), _norm_label(rng, n), tol=1e-9)
        report = probe_logconvexity(spec, grid, 1e-9, jobs, verbose=False)
        worst = max(worst, report.worst_residual)
    elapsed = time.perf_counter() - start
    return bool(worst <= 1e-9 and elapsed <= 60.0), {"worst_residual": worst, "seconds": elapsed}


def registry_sweep(scale: float, seed: int, jobs: int) -> Result:
    """全部检查在 n = 2..6 上无真实违反；行列式等式 |margin_n| ≤ 1e-8"""
    dims = [2, 3, 4, 5, 6]
    trials = _count(500, scale)
    summary = summarize(run_suite("all", dims, trials, seed, jobs=jobs))

    det_outcomes = run_checks(DET_EQUALITY_CHECKS, dims, trials, seed, jobs=jobs, profile="well-conditioned")
    det_worst = max(abs(o.details.get("det_margin", 0.0)) for o in det_outcomes)
    ok = summary.unexpected_failures == 0 and summary.errors == 0 and det_worst <= 1e-8
    return ok, {"total": summary.total, "unexpected_failures": summary.unexpected_failures,
                "errors": summary.errors, "worst_det_margin": det_worst}


def compound_oracle(scale: float, seed: int, jobs: int) -> Result:
    """特征值 log 判据与复合矩阵算子范数判据的 verdict 完全一致"""
    rng = make_rng(seed, stable_id("acceptance-compound"))
    mismatches = 0
    pairs = _count(500, scale)
    for trial in range(pairs):
        n = int(rng.integers(1, 6))
        A, B = gen_psd(rng, n), gen_psd(rng, n)
        if trial % 2 == 0:
            p = float(rng.choice([1.5, 2.0, 3.0]))
            Ap = psd_power(A, p)
            X, Y = psd_power(psd_product(A, B, A), p), psd_product(Ap, psd_power(B, p), Ap)
        else:
            X, Y = A, B
        if weak_log_majorize(X, Y).verdict != weak_log_majorize_by_compound(X, Y).verdict:
            mismatches += 1
    return mismatches == 0, {"pairs": pairs, "mismatches": mismatches}


def golden_values(scale: float, seed: int, jobs: int) -> Result:
    golden = golden_thompson_2x2()
    gt_error = abs(golden["slack"] - golden["closed_form_slack"])
    ratios = {p: tightness_cartesian(p) for p in (1.0, 2.0, 3.0)}
    ratio_error = max(abs(r - 1.0) for r in ratios.values())
    return bool(gt_error <= 1e-6 and ratio_error <= 1e-10), {"gt_slack": golden["slack"],
                                                            "ratio_error": ratio_error}


def det_schur_search(scale: float, seed: int, jobs: int) -> Result:
    """≥ 95% 的种子在固定预算内找到 log 间隔 ≤ −1e-3 的违反"""
    seeds = _count(100, scale)
    hits = 0
    for s in range(seeds):
        report = minimize_margin("det_schur", [2], budget=(5, 50), seed=seed + s, jobs=jobs)
        hits += report.best_margin <= -1e-3
    return hits >= 0.95 * seeds, {"seeds": seeds, "hits": hits}


def negative_control(scale: float, seed: int, jobs: int) -> Result:
    """固定指数版本至少出现一次 > 1e-6 的中点残差"""
    rng = make_rng(seed, stable_id("acceptance-negative"))
    grid = ProbeGrid.parse(NEGATIVE_GRID)
    worst = -np.inf
    for _ in range(_count(50, scale)):
        n = int(rng.integers(2, 5))
        alpha = float(rng.choice(ALPHAS))
        spec = build_spec(gen_psd(rng, n), gen_psd(rng, n), gen_ginibre(rng, n), alpha, _norm_label(rng, n),
                          Variant.FIXED_EXPONENT, exponent=alpha)
        worst = max(worst, probe_logconvexity(spec, grid, jobs=jobs, verbose=False).worst_residual)
    return bool(worst > 1e-6), {"worst_residual": worst}


def determinism(scale: float, seed: int, jobs: int) -> Result:
    """相同 (config, seed) 两次运行的 JSON 报告逐字节相同"""
    trials = str(_count(50, scale))
    with tempfile.TemporaryDirectory() as tmp:
        paths = [os.path.join(tmp, f"run{i}.json") for i in range(2)]
        for path in paths:
            cli_main(["--suite", "all", "--dim", "2,3", "--trials", trials, "--seed", str(seed),
                      "--jobs", str(jobs), "--out", path])
        first, second = (Path(p).read_bytes() for p in paths)
    return first == second, {"bytes": len(first)}


def lie_product(scale: float, seed: int, jobs: int) -> Result:
    """‖H‖_∞, ‖K‖_∞ ≤ 1：误差随 n 下降，n = 2^10 时低于 1e-4"""
    rng = make_rng(seed, stable_id("acceptance-lie"))
    worst_final = 0.0
    monotone = True
    for _ in range(_count(100, scale)):
        n = int(rng.integers(2, 6))
        errors, _ = lie_trotter_errors(gen_hermitian(rng, n), gen_hermitian(rng, n), 10)
        monotone = monotone and all(b < a for a, b in zip(errors, errors[1:]))
        worst_final = max(worst_final, errors[-1])
    return bool(monotone and worst_final < 1e-4), {"worst_final_error": worst_final}


CRITERIA: List[Tuple[str, Callable[[float, int, int], Result]]] = [
    ("functional_probe", functional_probe),
    ("registry_sweep", registry_sweep),
    ("compound_oracle", compound_oracle),
    ("golden_values", golden_values),
    ("det_schur_search", det_schur_search),
    ("negative_control", negative_control),
    ("determinism", determinism),
    ("lie_product", lie_product),
]


def main() -> int:
    parser = argparse.ArgumentParser(description="majorlab 全量验收")
    parser.add_argument("--scale", type=float, default=1.0, help="试验数缩放比例")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--only", default=None, help="只运行指定验收项（逗号分隔）")
    args = parser.parse_args()

    selected = set(args.only.split(",")) if args.only else None
    rows = []
    for name, criterion in CRITERIA:
        if selected and name not in selected:
            continue
        logger.info("🚀 开始验收", criterion=name, scale=args.scale)
        started = time.perf_counter()
        passed, info = criterion(args.scale, args.seed, args.jobs)
        rows.append({"criterion": name, "passed": passed, "seconds": round(time.perf_counter() - started, 2),
                     **info})
        if passed:
            logger.info("✅ 验收通过", criterion=name, **info)
        else:
            logger.warning("⚠️ 验收未通过", criterion=name, **info)

    frame = pd.DataFrame(rows)
    print(frame.to_string(index=False))
    return 0 if bool(frame["passed"].all()) else 2


if __name__ == "__main__":
    os.chdir(PROJECT_ROOT)
    sys.exit(main())
