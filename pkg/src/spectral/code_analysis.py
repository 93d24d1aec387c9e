"""
GdmaLab 有效频谱码分析

GF(p) 上全部输入的频谱构成长度 N 的多电平分组码，这里穷举并给出
码字数、线性与最小距离。
"""

from dataclasses import dataclass
from typing import Optional, Set, Union

import numpy as np

from ..exceptions import EnumerationTooLargeError
from ..fields.base import TableField
from ..fields.extension import ExtensionField
from ..transforms.fourier import fourier_transform
from ..transforms.linear import FieldTransform
from ..utils.logging import get_logger

logger = get_logger(__name__)

ENUMERATION_LIMIT = 2**16
# 超过该码字数时线性检查改为抽样
EXHAUSTIVE_PAIR_LIMIT = 1024
PAIR_SAMPLE_SIZE = 4096


@dataclass(frozen=True, eq=False)
class SpectralCodeReport:
    """
    码分析结果

    Attributes:
        size: 不同码字数
        linear: 在 GF(p) 上是否封闭
        linear_check: "exhaustive" 或 "sampled"
        min_distance: 最小汉明距离
        witness_input: 达到最小重量的输入
        witness_spectrum: 对应码字
    """

    length: int
    ground_order: int
    size: int
    linear: bool
    linear_check: str
    min_distance: int
    witness_input: Optional[np.ndarray] = None
    witness_spectrum: Optional[np.ndarray] = None

    @property
    def parameters(self) -> str:
        """(N, size, d)"""
        return f"({self.length}, {self.size}, {self.min_distance})"


@dataclass(frozen=True, eq=False)
class ValidSpectra:
    """穷举结果：inputs[i] 的频谱是 spectra[i]"""

    inputs: np.ndarray
    spectra: np.ndarray
    field: TableField
    ground_order: int

    def __len__(self) -> int:
        return int(self.spectra.shape[0])


def enumerate_valid_spectra(
    source: Union[FieldTransform, ExtensionField],
    n: Optional[int] = None,
    limit: int = ENUMERATION_LIMIT,
) -> ValidSpectra:
    """
    穷举 GF(p)^N 全部输入的频谱

    Args:
        source: 变换，或扩域（此时用长度 n 的 FFFT，n 默认 p^m - 1）
        n: 块长
        limit: p^N 上限

    Raises:
        EnumerationTooLargeError: p^N 超过 limit
    """
    if isinstance(source, ExtensionField):
        kernel = None if n is None else source.element_of_order(n).value
        transform = fourier_transform(source, kernel)
    else:
        transform = source

    p, length = transform.ground_order, transform.length
    size = p**length
    if size > limit:
        raise EnumerationTooLargeError(size, limit)

    inputs = np.indices((p,) * length).reshape(length, -1).T.astype(np.int64)
    spectra = transform.forward(inputs)
    logger.debug(f"Enumerated {size} spectra over {transform.field!r}, N={length}")
    return ValidSpectra(inputs, np.atleast_2d(spectra), transform.field, p)


def _row_keys(rows: np.ndarray) -> Set[bytes]:
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    return {row.tobytes() for row in rows}


def _closed_under_combination(code: ValidSpectra, keys: Set[bytes]) -> tuple:
    """检查 a + c·b 是否仍在码中"""
    field, spectra = code.field, code.spectra
    count = spectra.shape[0]
    if count <= EXHAUSTIVE_PAIR_LIMIT:
        left = np.repeat(np.arange(count), count)
        right = np.tile(np.arange(count), count)
        mode = "exhaustive"
    else:
        rng = np.random.default_rng(0)
        left = rng.integers(0, count, PAIR_SAMPLE_SIZE)
        right = rng.integers(0, count, PAIR_SAMPLE_SIZE)
        mode = "sampled"

    for scalar in range(1, code.ground_order):
        scaled = field.mul_table[spectra[right], scalar]
        combined = field.add_table[spectra[left], scaled]
        if any(key not in keys for key in _row_keys(combined)):
            return False, mode
    return True, mode


def spectral_code_analysis(code: ValidSpectra) -> SpectralCodeReport:
    """
    码字数、线性与最小距离

    线性码的最小距离取非零码字的最小重量；否则做两两比较。
    """
    spectra = code.spectra
    keys = _row_keys(spectra)
    size = len(keys)
    linear, mode = _closed_under_combination(code, keys)

    weights = np.count_nonzero(spectra, axis=1)
    nonzero = np.nonzero(weights)[0]
    witness = None
    if linear and nonzero.size:
        witness = int(nonzero[np.argmin(weights[nonzero])])
        distance = int(weights[witness])
    else:
        unique = np.unique(spectra, axis=0)
        distance = code.spectra.shape[1]
        for i in range(unique.shape[0] - 1):
            diffs = np.count_nonzero(unique[i + 1 :] != unique[i], axis=1)
            distance = min(distance, int(diffs.min()))
        if nonzero.size:
            witness = int(nonzero[np.argmin(weights[nonzero])])

    report = SpectralCodeReport(
        length=spectra.shape[1],
        ground_order=code.ground_order,
        size=size,
        linear=linear,
        linear_check=mode,
        min_distance=distance,
        witness_input=None if witness is None else code.inputs[witness],
        witness_spectrum=None if witness is None else spectra[witness],
    )
    logger.info(
        f"Spectral code {report.parameters}: linear={linear} ({mode}), d={distance}"
    )
    return report
