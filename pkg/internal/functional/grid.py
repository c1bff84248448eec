"""
(p, t) 探针网格

文本格式："p:1,1.5,2;t:0.5,1,1.5"，缺省轴取单点（p=1 或 t=1）。
"""
import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from internal.config import config
from pkg.errors import BadGrid

Point = Tuple[float, float]


@dataclass(frozen=True)
class ProbeGrid:
    """矩形 (p, t) 网格"""
    p_values: Tuple[float, ...]
    t_values: Tuple[float, ...]

    def __post_init__(self):
        p = tuple(float(v) for v in self.p_values)
        t = tuple(float(v) for v in self.t_values)
        if not p or not t:
            raise BadGrid("网格的每个轴至少需要一个点")
        if len(set(p)) != len(p) or len(set(t)) != len(t):
            raise BadGrid("网格轴含重复值", p=p, t=t)
        if not all(math.isfinite(v) for v in p + t):
            raise BadGrid("网格值必须有限", p=p, t=t)
        object.__setattr__(self, "p_values", p)
        object.__setattr__(self, "t_values", t)

    # ==================== 构造 ====================

    @classmethod
    def parse(cls, text: str) -> "ProbeGrid":
        """
        解析网格文本

        示例:
            ProbeGrid.parse("p:1,1.5,2;t:0.5,1,1.5")
            ProbeGrid.parse("p:1,2,4,8")    # t 轴缺省为 [1]

        Raises:
            BadGrid: 格式错误
        """
        axes: Dict[str, List[float]] = {}
        for part in filter(None, (s.strip() for s in text.split(";"))):
            name, sep, values = part.partition(":")
            name = name.strip()
            if not sep or name not in ("p", "t") or name in axes:
                raise BadGrid("无法解析的网格轴", part=part)
            try:
                axes[name] = [float(v) for v in values.split(",") if v.strip()]
            except ValueError:
                raise BadGrid("网格值不是数字", part=part)
        if not axes:
            raise BadGrid("网格为空", text=text)
        return cls(tuple(axes.get("p", [1.0])), tuple(axes.get("t", [1.0])))

    @classmethod
    def default(cls) -> "ProbeGrid":
        return cls.parse(config.probe_config.get("default_grid", "p:1,1.5,2;t:0.5,1,1.5"))

    @classmethod
    def p_line(cls, p_values: Sequence[float], t: float = 1.0) -> "ProbeGrid":
        return cls(tuple(p_values), (t,))

    # ==================== 点与中点对 ====================

    def points(self) -> List[Point]:
        """p 优先顺序的全部网格点"""
        return [(p, t) for p in self.p_values for t in self.t_values]

    def index_of(self, point: Point) -> Optional[int]:
        """按数值查找网格点下标（相对 1e-12）"""
        for index, (p, t) in enumerate(self.points()):
            if _close(p, point[0]) and _close(t, point[1]):
                return index
        return None

    def midpoint_pairs(self) -> List[Tuple[int, int, int]]:
        """
        所有轴对齐或对角方向、且中点也在网格内的点对

        Returns:
            [(a 下标, b 下标, 中点下标)]
        """
        nt = len(self.t_values)
        lattice = [(i, j) for i in range(len(self.p_values)) for j in range(nt)]
        pairs = []
        for (ia, ja), (ib, jb) in itertools.combinations(lattice, 2):
            di, dj = ib - ia, jb - ja
            if not (di == 0 or dj == 0 or abs(di) == abs(dj)):
                continue
            a = (self.p_values[ia], self.t_values[ja])
            b = (self.p_values[ib], self.t_values[jb])
            mid = self.index_of(_midpoint(a, b))
            if mid is not None:
                pairs.append((ia * nt + ja, ib * nt + jb, mid))
        return pairs

    def explicit_pairs(self, pairs: Sequence[Tuple[Point, Point]]) -> List[Tuple[int, int, int]]:
        """
        校验显式给出的点对

        Raises:
            BadGrid: 端点或中点不在网格内
        """
        resolved = []
        for a, b in pairs:
            ia, ib = self.index_of(a), self.index_of(b)
            mid = self.index_of(_midpoint(a, b))
            if ia is None or ib is None:
                raise BadGrid("点对端点不在网格内", a=a, b=b)
            if mid is None:
                raise BadGrid("点对中点不在网格内", a=a, b=b, mid=_midpoint(a, b))
            resolved.append((ia, ib, mid))
        return resolved

    @property
    def label(self) -> str:
        return "p:{};t:{}".format(",".join(f"{v:g}" for v in self.p_values),
                                  ",".join(f"{v:g}" for v in self.t_values))


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


def _midpoint(a: Point, b: Point) -> Point:
    return (0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]))
