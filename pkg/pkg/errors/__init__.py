"""
异常模块
"""
from .lab_errors import (
    ErrorType,
    MajorLabError,
    NotHermitian,
    NoConvergence,
    NotPsd,
    NotNormal,
    DimMismatch,
    BadOrder,
    BadDomain,
    BadGrid,
    NotContraction,
    NotSubUnital,
    UnknownCheck,
    SignatureMismatch,
    UnknownSuite,
    UnknownObjective,
    ConfigError,
    SearchInconsistent,
)

__all__ = [
    "ErrorType",
    "MajorLabError",
    "NotHermitian",
    "NoConvergence",
    "NotPsd",
    "NotNormal",
    "DimMismatch",
    "BadOrder",
    "BadDomain",
    "BadGrid",
    "NotContraction",
    "NotSubUnital",
    "UnknownCheck",
    "SignatureMismatch",
    "UnknownSuite",
    "UnknownObjective",
    "ConfigError",
    "SearchInconsistent",
]
