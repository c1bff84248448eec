"""
扰动后的约束投影

起始实例上成立的结构性质在每一步扰动后被恢复：PSD（谱截到区间内）、Hermitian
（范数上限）、正规、等距、压缩、扩张、PSD 对角上界、正元素，以及 Kraus 族的 sub-unital。
区间取 [search] 配置与起始值的并，起始实例本身总是投影不动点。
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.linalg import schur

from internal.config import config
from internal.linalg import Tolerance, commutator_defect, hermitian_part, is_hermitian, max_abs
from internal.model import Instance

# 性质判定的相对阈值
_SHAPE_TOL = 1e-10

Box = Tuple[float, float]


def _widen(box: Box, low: float, high: float) -> Box:
    return min(box[0], low), max(box[1], high)


@dataclass(frozen=True)
class PartShape:
    """一个矩阵部件在起始实例上具备的结构性质"""
    real: bool = False
    hermitian: bool = False
    psd: bool = False
    normal: bool = False
    isometry: bool = False
    contraction: bool = False
    expansive: bool = False
    diag_bound: bool = False
    positive: bool = False
    # PSD 的谱区间 / 正规矩阵的模长区间
    spectrum_box: Optional[Box] = None
    # 压缩 / 扩张矩阵的奇异值区间
    singular_box: Optional[Box] = None
    norm_cap: float = 0.0
    entry_floor: float = 0.0

    @classmethod
    def infer(cls, M: np.ndarray, tol: Tolerance) -> "PartShape":
        search_cfg = config.search_config
        box = tuple(float(x) for x in search_cfg.get("spectrum_box", [0.5, 2.0]))
        rows, cols = M.shape
        square = rows == cols
        s = np.linalg.svd(M, compute_uv=False)
        top = float(s[0]) if s.size else 0.0
        real = bool(np.all(np.imag(M) == 0.0))
        hermitian = square and is_hermitian(M, tol)

        psd = False
        spectrum_box = None
        if hermitian:
            w = np.linalg.eigvalsh(hermitian_part(M))
            psd = float(w[0]) >= -tol.psd_clamp * max(1.0, float(w[-1]))
            if psd:
                spectrum_box = _widen(box, max(float(w[0]), 0.0), float(w[-1]))

        normal = False
        if square and not hermitian:
            normal = commutator_defect(M) <= tol.normal * max(1.0, top * top)
            if normal:
                moduli = np.abs(np.linalg.eigvals(M))
                spectrum_box = _widen(box, float(moduli.min()), float(moduli.max()))

        isometry = rows >= cols and bool(np.all(np.abs(s - 1.0) <= _SHAPE_TOL))
        contraction = top <= 1.0 + _SHAPE_TOL
        expansive = square and float(s[-1]) >= 1.0 - _SHAPE_TOL
        singular_box = None
        if contraction:
            floor = float(search_cfg.get("contraction_floor", 0.5))
            singular_box = (min(floor, float(s[-1])), 1.0)
        elif expansive:
            ceiling = float(search_cfg.get("expansive_ceiling", 2.0))
            singular_box = (1.0, max(ceiling, top))
        if psd and contraction:
            spectrum_box = (spectrum_box[0], min(spectrum_box[1], 1.0))

        diag_bound = psd and float(np.max(np.real(np.diag(M)))) <= 1.0 + _SHAPE_TOL
        positive = real and not hermitian and bool(np.all(np.real(M) > 0.0))
        return cls(
            real=real,
            hermitian=hermitian,
            psd=psd,
            normal=normal,
            isometry=isometry,
            contraction=contraction,
            expansive=expansive,
            diag_bound=diag_bound,
            positive=positive,
            spectrum_box=spectrum_box,
            singular_box=singular_box,
            norm_cap=top,
            entry_floor=0.5 * float(np.min(np.real(M))) if positive else 0.0,
        )

    def project(self, M: np.ndarray) -> np.ndarray:
        M = np.asarray(M, dtype=np.complex128)
        if self.isometry:
            U, _, Vh = np.linalg.svd(M, full_matrices=False)
            return U @ Vh
        if self.real:
            M = M.real.astype(np.complex128)
        if self.positive:
            return np.maximum(M.real, self.entry_floor).astype(np.complex128)

        if self.psd:
            w, V = np.linalg.eigh(hermitian_part(M))
            w = np.clip(w, *self.spectrum_box)
            M = hermitian_part((V * w) @ V.conj().T)
            if self.diag_bound:
                d = float(np.max(np.real(np.diag(M))))
                if d > 1.0:
                    M = M / d
            return M
        if self.hermitian:
            M = hermitian_part(M)
            top = float(np.linalg.norm(M, 2))
            if top > self.norm_cap > 0.0:
                M = M * (self.norm_cap / top)
            return M
        if self.normal:
            T, Q = schur(M, output="complex")
            eigs = np.diag(T)
            moduli = np.clip(np.abs(eigs), *self.spectrum_box)
            eigs = moduli * np.exp(1j * np.angle(eigs))
            return (Q * eigs) @ Q.conj().T
        if self.singular_box is not None:
            U, s, Vh = np.linalg.svd(M)
            return (U * np.clip(s, *self.singular_box)) @ Vh
        return M


@dataclass(frozen=True)
class FamilyShape:
    """Kraus 族：逐个算子的性质 + 整体 sub-unital"""
    ops: Tuple[PartShape, ...]
    sub_unital: bool

    @classmethod
    def infer(cls, ops: List[np.ndarray], tol: Tolerance) -> "FamilyShape":
        return cls(ops=tuple(PartShape.infer(Z, tol) for Z in ops), sub_unital=_unit_top(ops) <= 1.0 + _SHAPE_TOL)

    def project(self, ops: List[np.ndarray]) -> List[np.ndarray]:
        ops = [shape.project(Z) for shape, Z in zip(self.ops, ops)]
        if self.sub_unital:
            top = _unit_top(ops)
            if top > 1.0:
                ops = [Z / np.sqrt(top) for Z in ops]
        return ops


def _unit_top(ops: List[np.ndarray]) -> float:
    """λ_max(Σ Z_i* Z_i)"""
    if not ops:
        return 0.0
    S = sum(Z.conj().T @ Z for Z in ops)
    return float(np.max(np.linalg.eigvalsh(hermitian_part(S))))


# ==================== 实例级 ====================

@dataclass(frozen=True)
class InstanceShape:
    """起始实例全部矩阵部件的性质"""
    matrices: Dict[str, PartShape]
    kraus: Dict[str, FamilyShape]

    @classmethod
    def infer(cls, instance: Instance, tol: Tolerance) -> "InstanceShape":
        return cls(
            matrices={name: PartShape.infer(instance.matrix(name), tol) for name in instance.matrices},
            kraus={name: FamilyShape.infer(instance.kraus_ops(name), tol) for name in instance.kraus},
        )


def perturb(
    rng: np.random.Generator,
    matrices: Dict[str, np.ndarray],
    kraus: Dict[str, List[np.ndarray]],
    shape: InstanceShape,
    scale: float,
) -> Tuple[Dict[str, np.ndarray], Dict[str, List[np.ndarray]]]:
    """
    逐元素高斯扰动，步长 scale·‖部件‖_max，随后投影

    实部件只扰动实部；键按字典序遍历以保证随机数消耗顺序固定。
    """
    def step(M: np.ndarray, part: PartShape) -> np.ndarray:
        sigma = scale * max(max_abs(M), _SHAPE_TOL)
        return part.project(M + sigma * _complex_noise(rng, M.shape, part.real))

    new_matrices = {name: step(matrices[name], shape.matrices[name]) for name in sorted(matrices)}
    new_kraus = {}
    for name in sorted(kraus):
        family = shape.kraus[name]
        moved = [M + scale * max(max_abs(M), _SHAPE_TOL) * _complex_noise(rng, M.shape, part.real)
                 for M, part in zip(kraus[name], family.ops)]
        new_kraus[name] = family.project(moved)
    return new_matrices, new_kraus


def _complex_noise(rng: np.random.Generator, shape, real: bool) -> np.ndarray:
    noise = rng.standard_normal(shape)
    if real:
        return noise
    return (noise + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
