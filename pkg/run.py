#!/usr/bin/env python3
"""
GdmaLab 启动脚本

Galois 分多址实验室：有限域变换复用、陪集压缩、机会转码与误码率仿真。

Usage:
    python run.py [--lang LANG] [--debug] [--log-dir DIR] COMMAND ...

Examples:
    python run.py cosets --n 15 --p 2
    python run.py hparam --code B --modulation qpsk
    python run.py frame --mode CC --users 1,0,1,1,0,0,0,1,0,0,1,1,0,1,0
    python run.py simulate -c config/simulation.yaml -o results/ber.csv
"""

import sys
from pathlib import Path

# 项目根目录加入路径，以 src 包方式导入
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.main import main

if __name__ == "__main__":
    main()
