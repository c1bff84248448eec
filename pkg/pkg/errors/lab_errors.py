"""
majorlab 异常体系

所有数值内核、注册表和运行服务抛出的异常都继承 MajorLabError，
并携带一个 ErrorType，方便 CLI 和报告统一分类。

使用示例：
    from pkg.errors import NotPsd

    raise NotPsd("最小特征值为负", min_eigenvalue=-0.3)
"""
from enum import Enum
from typing import Any, Dict


class ErrorType(Enum):
    """错误类型枚举"""
    NOT_HERMITIAN = "not_hermitian"
    NO_CONVERGENCE = "no_convergence"
    NOT_PSD = "not_psd"
    NOT_NORMAL = "not_normal"
    DIM_MISMATCH = "dim_mismatch"
    BAD_ORDER = "bad_order"
    BAD_DOMAIN = "bad_domain"
    BAD_GRID = "bad_grid"
    NOT_CONTRACTION = "not_contraction"
    NOT_SUB_UNITAL = "not_sub_unital"
    UNKNOWN_CHECK = "unknown_check"
    SIGNATURE_MISMATCH = "signature_mismatch"
    UNKNOWN_SUITE = "unknown_suite"
    UNKNOWN_OBJECTIVE = "unknown_objective"
    CONFIG_ERROR = "config_error"
    SEARCH_INCONSISTENT = "search_inconsistent"


class MajorLabError(Exception):
    """majorlab 基础异常"""

    error_type: ErrorType = ErrorType.CONFIG_ERROR

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        """转换为可序列化的字典（写入报告 / 日志）"""
        return {
            "error_type": self.error_type.value,
            "message": self.message,
            "details": {k: str(v) for k, v in self.details.items()},
        }

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extra = ", ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{self.message} ({extra})"


# ==================== 数值内核 ====================

class NotHermitian(MajorLabError):
    error_type = ErrorType.NOT_HERMITIAN


class NoConvergence(MajorLabError):
    error_type = ErrorType.NO_CONVERGENCE


class NotPsd(MajorLabError):
    error_type = ErrorType.NOT_PSD


class NotNormal(MajorLabError):
    error_type = ErrorType.NOT_NORMAL


class DimMismatch(MajorLabError):
    error_type = ErrorType.DIM_MISMATCH


class BadOrder(MajorLabError):
    error_type = ErrorType.BAD_ORDER


class BadDomain(MajorLabError):
    error_type = ErrorType.BAD_DOMAIN


class BadGrid(MajorLabError):
    error_type = ErrorType.BAD_GRID


class NotContraction(MajorLabError):
    error_type = ErrorType.NOT_CONTRACTION


class NotSubUnital(MajorLabError):
    error_type = ErrorType.NOT_SUB_UNITAL


# ==================== 注册表 / 运行 ====================

class UnknownCheck(MajorLabError):
    error_type = ErrorType.UNKNOWN_CHECK


class SignatureMismatch(MajorLabError):
    error_type = ErrorType.SIGNATURE_MISMATCH


class UnknownSuite(MajorLabError):
    error_type = ErrorType.UNKNOWN_SUITE


class UnknownObjective(MajorLabError):
    error_type = ErrorType.UNKNOWN_OBJECTIVE


class ConfigError(MajorLabError):
    error_type = ErrorType.CONFIG_ERROR


class SearchInconsistent(MajorLabError):
    """搜索报告自校验失败（best_margin 与重新评估的结果不一致）"""
    error_type = ErrorType.SEARCH_INCONSISTENT
