"""
频谱模块

分圆陪集压缩、香农界与链路预算、有效频谱码分析。
"""

from .bounds import (
    BoundReport,
    check_bound,
    link_budget,
    minimum_snr,
    rate_within_capacity,
    shannon_bound,
)
from .code_analysis import (
    SpectralCodeReport,
    ValidSpectra,
    enumerate_valid_spectra,
    spectral_code_analysis,
)
from .cyclotomic import (
    CompressedSpectrum,
    CosetPartition,
    compress,
    compress_batch,
    conjugacy_holds,
    cosets,
    expand,
    expand_batch,
    find_conjugacy_rule,
    format_cosets,
    format_gamma,
    gamma_cc,
)

__all__ = [
    "CosetPartition",
    "CompressedSpectrum",
    "cosets",
    "gamma_cc",
    "compress",
    "expand",
    "compress_batch",
    "expand_batch",
    "conjugacy_holds",
    "find_conjugacy_rule",
    "format_cosets",
    "format_gamma",
    "BoundReport",
    "shannon_bound",
    "minimum_snr",
    "check_bound",
    "link_budget",
    "rate_within_capacity",
    "SpectralCodeReport",
    "ValidSpectra",
    "enumerate_valid_spectra",
    "spectral_code_analysis",
]
