"""
GDMA 链路模块

链路配置、mux/demux 流水线与帧错误联合界。
"""

from .bounds import frame_error_bound
from .link_config import EnergyConvention, LinkConfig, SpectrumMode, TransformKind
from .pipeline import BatchResult, DemuxResult, FrameTrace, GdmaLink

__all__ = [
    "LinkConfig",
    "TransformKind",
    "SpectrumMode",
    "EnergyConvention",
    "GdmaLink",
    "FrameTrace",
    "DemuxResult",
    "BatchResult",
    "frame_error_bound",
]
