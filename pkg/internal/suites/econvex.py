"""
e-凸 / e-凹测试函数目录

h 称为 e-凸（e-凹），若 s ↦ h(e^s) 在实轴上凸（凹）。目录中的每个函数
都在 s ∈ [−span, span] 的等距网格上做二阶差分认证，并检查非减性。
"""
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from internal.config import config
from pkg.errors import ConfigError

CONVEX = "convex"
CONCAVE = "concave"

# 二阶差分判定的相对容差
_CERT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ScalarFunction:
    """
    标量测试函数

    Attributes:
        name: 目录名，如 "power:2"、"log1p_power:1"
        kind: CONVEX / CONCAVE
        fn: 在 [0, ∞)（e-凹函数在 (0, ∞)）上向量化求值
    """
    name: str
    kind: str
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, t) -> np.ndarray:
        return self.fn(np.asarray(t, dtype=float))

    def trace(self, eigenvalues) -> float:
        """Tr f(X)，X 由特征值给出"""
        return float(np.sum(self(eigenvalues)))


def _power(r: float) -> Callable:
    return lambda t: np.power(t, r)


def _log1p_power(a: float) -> Callable:
    return lambda t: np.log1p(np.power(t, a))


def _log_ratio(a: float) -> Callable:
    return lambda t: a * np.log(t) - np.log1p(t)


def _neg_inv_power(r: float) -> Callable:
    return lambda t: -np.power(t, -r)


def _build_catalog() -> Dict[str, ScalarFunction]:
    items = [ScalarFunction(f"power:{r:g}", CONVEX, _power(r)) for r in (0.5, 1.0, 2.0, 3.0)]
    items += [ScalarFunction(f"log1p_power:{a:g}", CONVEX, _log1p_power(a)) for a in (0.5, 1.0, 2.0)]
    items.append(ScalarFunction("exp", CONVEX, np.exp))
    items.append(ScalarFunction("log", CONCAVE, np.log))
    items += [ScalarFunction(f"log_ratio:{a:g}", CONCAVE, _log_ratio(a)) for a in (1.0, 2.0)]
    items += [ScalarFunction(f"neg_inv_power:{r:g}", CONCAVE, _neg_inv_power(r)) for r in (0.5, 1.0)]
    return {f.name: f for f in items}


CATALOG: Dict[str, ScalarFunction] = _build_catalog()


def catalog(kind: str) -> List[ScalarFunction]:
    """某一类的全部测试函数（目录顺序）"""
    return [f for f in CATALOG.values() if f.kind == kind]


def get_test_function(name: str) -> ScalarFunction:
    """
    按名称取测试函数，"power:r" 允许目录外的正指数

    Raises:
        ConfigError: 未知名称
    """
    if name in CATALOG:
        return CATALOG[name]
    head, _, arg = name.partition(":")
    if head == "power" and arg:
        r = float(arg)
        if r > 0:
            return ScalarFunction(f"power:{r:g}", CONVEX, _power(r))
    raise ConfigError("未知的测试函数", name=name)


def certify(func: ScalarFunction, points: int = None, span: float = None) -> bool:
    """
    数值认证 s ↦ h(e^s) 的凸性（凹性）与非减性

    示例:
        certify(CATALOG["log1p_power:1"]) -> True
    """
    suite_cfg = config.suite_config
    points = int(points or suite_cfg.get("econvex_grid_points", 101))
    span = float(span or suite_cfg.get("econvex_grid_span", 6.0))
    s = np.linspace(-span, span, points)
    h = func(np.exp(s))
    scale = np.maximum(1.0, np.abs(h))
    second = h[:-2] - 2.0 * h[1:-1] + h[2:]
    sign = 1.0 if func.kind == CONVEX else -1.0
    curvature_ok = bool(np.all(sign * second >= -_CERT_TOL * scale[1:-1]))
    monotone_ok = bool(np.all(np.diff(h) >= -_CERT_TOL * scale[1:]))
    return curvature_ok and monotone_ok
