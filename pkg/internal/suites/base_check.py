"""
不等式检查基础类
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from internal.linalg import Tolerance
from internal.model import Instance
from internal.suites.generators import PROFILES, WELL_CONDITIONED, sample_profile
from internal.suites.rng import make_rng
from log import logger


@dataclass
class Evaluation:
    """evaluate 的原始结果（由 runner 包装成 CheckOutcome）"""
    verdict: bool
    margins: List[float]
    slack: Optional[float] = None
    relation: Optional[str] = None
    details: Dict[str, float] = field(default_factory=dict)


GenerateFn = Callable[[np.random.Generator, Instance], None]
EvaluateFn = Callable[[Instance, Tolerance], Evaluation]
# 搜索扰动后恢复部件之间的联合约束（就地修改矩阵字典）
ProjectFn = Callable[[Dict[str, np.ndarray]], None]


class InequalityCheck:
    """注册表中的一个检查"""

    def __init__(
        self,
        check_id: str,
        anchor: str,
        signature: Sequence[str],
        generate: GenerateFn,
        evaluate: EvaluateFn,
        expects_violation: bool = False,
        profiles: Tuple[str, ...] = PROFILES,
        min_dim: int = 1,
        project: Optional[ProjectFn] = None,
    ):
        self.check_id = check_id
        self.anchor = anchor
        self.signature = frozenset(signature)
        self.generate = generate
        self.evaluate = evaluate
        self.expects_violation = expects_violation
        self.profiles = tuple(profiles)
        self.min_dim = min_dim
        self.project = project

    def resolve_profile(self, rng: np.random.Generator, profile: Optional[str]) -> str:
        """强制 profile 不在允许范围内时退回 well-conditioned"""
        if profile is None:
            return sample_profile(rng, self.profiles)
        if profile not in self.profiles:
            logger.debug("检查不支持该 profile，改用 well-conditioned", check_id=self.check_id, profile=profile)
            return WELL_CONDITIONED
        return profile

    def make_instance(self, seed: int, dim: int, profile: Optional[str] = None) -> Instance:
        """
        由 (seed, check_id, dim[, profile]) 确定性地生成实例
        """
        rng = make_rng(seed)
        instance = Instance(seed=int(seed), generator_id=self.check_id, dim=int(dim),
                            profile=self.resolve_profile(rng, profile))
        self.generate(rng, instance)
        return instance

    def to_dict(self) -> Dict:
        """转换为字典"""
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "signature": sorted(self.signature),
            "expects_violation": self.expects_violation,
            "profiles": list(self.profiles),
            "min_dim": self.min_dim,
        }
