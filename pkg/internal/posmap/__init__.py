"""
正线性映射（Kraus 形式）
"""
from .kraus_map import KrausMap
from .constructions import (
    SpectralImage,
    block_average,
    block_full_average,
    congruence,
    dilate,
    kraus_on_commutative,
    pinching,
    schur_extraction,
    schur_multiplier,
    spectral_images,
)

__all__ = [
    "KrausMap",
    "SpectralImage",
    "block_average",
    "block_full_average",
    "congruence",
    "dilate",
    "kraus_on_commutative",
    "pinching",
    "schur_extraction",
    "schur_multiplier",
    "spectral_images",
]
