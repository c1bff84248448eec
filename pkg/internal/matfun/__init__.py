"""
矩阵函数与构造

PSD 分数幂（广义逆约定）、绝对值、极分解、Cartesian 分解、Schur 积、
直和、Kronecker 积、复合矩阵。
"""
from .psd import (
    PsdMatrix,
    NormalMatrix,
    psd_power,
    range_projection,
    null_projection,
    psd_log,
    abs_val,
    matrix_power_abs,
    polar,
    psd_congruence,
    psd_product,
)
from .constructions import (
    cartesian,
    schur_product,
    direct_sum,
    kron,
    index_sets,
    compound,
    zero_pad,
    isometry_det,
)

__all__ = [
    "PsdMatrix",
    "NormalMatrix",
    "psd_power",
    "range_projection",
    "null_projection",
    "psd_log",
    "abs_val",
    "matrix_power_abs",
    "polar",
    "psd_congruence",
    "psd_product",
    "cartesian",
    "schur_product",
    "direct_sum",
    "kron",
    "index_sets",
    "compound",
    "zero_pad",
    "isometry_det",
]
