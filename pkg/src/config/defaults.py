"""
默认配置

simulate 子命令的扁平配置键及桌面规模的默认值。
论文规模（每点 5000 万比特）可通过 min_bits / max_bits 配出。
"""

DEFAULT_CONFIG = {
    # 链路
    "transform": "ffft",  # ffft, ffht, identity
    "p": 2,
    "m": 4,
    "poly": None,  # 最高次在前，None 用默认本原多项式
    "q": 3,  # FFHT 的 GI(q)
    "n_users": 15,
    "code": "auto",
    "symbol_duration": 1.0,
    "energy_convention": "information_bit",  # information_bit, channel_symbol
    # 扫描
    "modes": ["FS", "CC"],
    "modulations": ["bpsk"],
    "ebn0_points_db": [0.0, 2.0, 4.0, 6.0, 8.0, 10.0],
    # 停止条件
    "min_bits": 1_000_000,
    "min_errors": 200,
    "max_bits": 10_000_000,
    "strict_budget": False,
    # 执行
    "frames_per_block": 256,
    "master_seed": 0,
    "workers": 1,
}
