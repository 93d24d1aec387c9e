"""
GdmaLab 测试配置

把项目根目录加入路径以支持 from src.xxx 导入，并提供共享 fixture。
"""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))


@pytest.fixture(scope="session")
def gf16():
    """GF(16)，x^4 + x + 1"""
    from src.fields.extension import ExtensionField

    return ExtensionField(2, 4, (1, 0, 0, 1, 1))


@pytest.fixture(scope="session")
def gf8():
    from src.fields.extension import ExtensionField

    return ExtensionField(2, 3)


@pytest.fixture(scope="session")
def gf9():
    """GF(9)，x^2 + 2x + 2"""
    from src.fields.extension import ExtensionField

    return ExtensionField(3, 2, (1, 2, 2))


@pytest.fixture(scope="session")
def gi3():
    from src.fields.gaussian import GaussianField

    return GaussianField(3)


@pytest.fixture(scope="session")
def fourier15(gf16):
    """GF(16) 上长度 15 的 FFFT，核 α"""
    from src.transforms.fourier import fourier_transform

    return fourier_transform(gf16)


@pytest.fixture(scope="session")
def cas8(gi3):
    from src.transforms.hartley import CasKernel

    return CasKernel(gi3, n=8)


@pytest.fixture(scope="session")
def hartley8(cas8):
    from src.transforms.hartley import hartley_transform

    return hartley_transform(cas8)


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def cc_link():
    """15-GDMA / FFFT / CC / BPSK"""
    from src.link import GdmaLink, LinkConfig

    return GdmaLink(LinkConfig(n_users=15, mode="CC"))


@pytest.fixture(scope="session")
def fs_link():
    """15-GDMA / FFFT / FS / BPSK"""
    from src.link import GdmaLink, LinkConfig

    return GdmaLink(LinkConfig(n_users=15, mode="FS"))


@pytest.fixture(scope="session")
def hartley_link():
    """8-GDMA / FFHT over GI(3) / CC / QPSK"""
    from src.link import GdmaLink, LinkConfig

    return GdmaLink(
        LinkConfig(transform="ffht", q=3, n_users=8, mode="CC", modulation="qpsk")
    )


@pytest.fixture
def event_bus():
    """新的事件总线实例"""
    from src.core.events import EventBus

    return EventBus()


@pytest.fixture
def config_validator():
    from src.config.validator import ConfigValidator

    return ConfigValidator(strict=True)


@pytest.fixture
def sample_config():
    """桌面规模以下的扁平仿真配置"""
    from src.config.defaults import DEFAULT_CONFIG

    config = dict(DEFAULT_CONFIG)
    config.update(
        {
            "modes": ["FS", "CC"],
            "modulations": ["bpsk"],
            "ebn0_points_db": [2.0, 6.0],
            "min_bits": 5000,
            "min_errors": 20,
            "max_bits": 60000,
            "frames_per_block": 64,
            "master_seed": 7,
        }
    )
    return config


@pytest.fixture
def config_file(tmp_path, sample_config):
    import yaml

    path = tmp_path / "simulation.yaml"
    path.write_text(yaml.safe_dump(sample_config), encoding="utf-8")
    return path


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 百万比特级的统计测试")
