"""
共享容差策略

仓库中的所有数值比较都经过同一个 Tolerance 对象，默认值来自
config.toml 的 [tolerance] 段。
"""
from dataclasses import dataclass, replace, fields
from typing import Any, Dict, Optional

import numpy as np

from internal.config import config


@dataclass(frozen=True)
class Tolerance:
    """
    容差策略（不可变）

    Attributes:
        abs_floor: 绝对下限
        rel: 相对容差
        psd_clamp: PSD 构造允许的负特征值（相对 max(1, λ_1)）
        rank_floor: 视为零特征值的阈值（相对 max(1, λ_1)）
        hermitian: Hermitian 判定阈值（相对 max(1, ‖H‖_max)）
        normal: 正规矩阵判定阈值（相对 max(1, ‖N‖_∞²)）
        log_margin: log 间隔容差
        near_singular_abs: 近奇异实例的绝对容差
    """
    abs_floor: float = 1e-12
    rel: float = 1e-9
    psd_clamp: float = 1e-10
    rank_floor: float = 1e-12
    hermitian: float = 1e-12
    normal: float = 1e-10
    log_margin: float = 1e-9
    near_singular_abs: float = 1e-8

    @classmethod
    def from_config(cls, section: Optional[Dict[str, Any]] = None) -> "Tolerance":
        """从 [tolerance] 配置段构造，未知键忽略"""
        section = config.tolerance_config if section is None else section
        known = {f.name for f in fields(cls)}
        return cls(**{k: float(v) for k, v in section.items() if k in known})

    def with_log_margin(self, tol: Optional[float]) -> "Tolerance":
        """返回替换了 log_margin 的副本（tol=None 时返回自身）"""
        if tol is None:
            return self
        return replace(self, log_margin=float(tol))

    def scaled(self, scale: float) -> float:
        """max(abs_floor, rel·|scale|)"""
        return max(self.abs_floor, self.rel * abs(float(scale)))

    def close(self, a: float, b: float) -> bool:
        """标量相对比较"""
        return abs(a - b) <= self.scaled(max(abs(a), abs(b)))

    def matrices_close(self, X: np.ndarray, Y: np.ndarray, atol: Optional[float] = None) -> bool:
        """
        逐元素比较两个矩阵

        Args:
            X, Y: 同形矩阵
            atol: 调用方给出的绝对容差；缺省时按 max|X|, max|Y| 相对缩放
        """
        X = np.asarray(X)
        Y = np.asarray(Y)
        if X.shape != Y.shape:
            return False
        diff = float(np.max(np.abs(X - Y))) if X.size else 0.0
        if atol is None:
            scale = max(float(np.max(np.abs(X))) if X.size else 0.0,
                        float(np.max(np.abs(Y))) if Y.size else 0.0)
            atol = self.scaled(scale)
        return diff <= atol


# 默认策略（模块导入时从配置构造一次）
DEFAULT_TOLERANCE = Tolerance.from_config()


def resolve_tolerance(tol: Optional[Any]) -> Tolerance:
    """
    统一容差入参：None → 默认策略；float → 替换 log_margin；Tolerance → 原样
    """
    if tol is None:
        return DEFAULT_TOLERANCE
    if isinstance(tol, Tolerance):
        return tol
    return DEFAULT_TOLERANCE.with_log_margin(float(tol))
