"""
计数器式随机数：Philox 位生成器 + SeedSequence

每个试验的种子由 (根种子, crc32(check_id), dim, trial) 派生，
与线程调度顺序无关。
"""
import zlib
from typing import Union

import numpy as np

RngLike = Union[int, np.integer, np.random.Generator]


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """由种子（及可选的子流编号）构造 Generator(Philox)"""
    seq = np.random.SeedSequence(int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(seq))


def as_rng(rng_or_seed: RngLike) -> np.random.Generator:
    if isinstance(rng_or_seed, np.random.Generator):
        return rng_or_seed
    return make_rng(int(rng_or_seed))


def stable_id(name: str) -> int:
    """字符串的稳定 32 位编号"""
    return zlib.crc32(name.encode("utf-8"))


def derive_seed(root_seed: int, check_id: str, dim: int, trial: int) -> int:
    """
    派生 64 位试验种子

    示例:
        derive_seed(7, "araki", 3, 0) 每次调用都返回同一个值
    """
    seq = np.random.SeedSequence(int(root_seed), spawn_key=(stable_id(check_id), int(dim), int(trial)))
    return int(seq.generate_state(1, dtype=np.uint64)[0])
