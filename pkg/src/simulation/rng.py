"""
GdmaLab 分块随机数

每个 (主种子, 信噪比点, 块号) 对应一条独立的 Philox 计数器流，
块的结果与在哪个进程上算无关。
"""

import math

import numpy as np

# 毫分贝加偏移，保证 -1000 dB 以上的点键非负
POINT_KEY_OFFSET = 10**6
INFINITE_POINT_KEY = 2**32 - 1


def point_key(ebn0_db: float) -> int:
    """
    Example:
        >>> point_key(2.5)
        1002500
    """
    if math.isinf(ebn0_db) and ebn0_db > 0:
        return INFINITE_POINT_KEY
    key = int(round(ebn0_db * 1000)) + POINT_KEY_OFFSET
    if key < 0:
        raise ValueError(f"Eb/N0 out of range: {ebn0_db} dB")
    return key


def block_seed(master_seed: int, ebn0_db: float, block: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(master_seed), point_key(ebn0_db), int(block)])


def block_generator(master_seed: int, ebn0_db: float, block: int) -> np.random.Generator:
    """第 block 块的随机数发生器"""
    return np.random.Generator(np.random.Philox(block_seed(master_seed, ebn0_db, block)))
