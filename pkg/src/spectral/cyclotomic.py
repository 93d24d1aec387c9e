"""
GdmaLab 分圆陪集与频谱压缩

GF(p) 信号的频谱沿陪集满足 V_{mk mod N} = V_k^p（m 为陪集乘子），
因此只需传输每个陪集的首元（最小成员）。
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ..exceptions import InvalidSpectrumError, LengthMismatchError, NonCoprimeLengthError
from ..fields.base import TableField
from ..transforms.linear import FieldTransform
from ..transforms.signals import Spectrum
from ..utils.logging import get_logger

logger = get_logger(__name__)

# 穷举验证共轭规则的输入空间上限
EXHAUSTIVE_RULE_LIMIT = 65536
RULE_SAMPLE_SIZE = 4096
RULE_SAMPLE_SEED = 0


@dataclass(frozen=True)
class CosetPartition:
    """
    {0..N-1} 在 k -> m·k mod N 下的轨道划分

    Attributes:
        n: 块长 N
        p: 特征
        multiplier: 轨道乘子 m（FFFT 为 p，FFHT 可能为 -p mod N）
        cosets: 按首元排序的陪集，成员按生成顺序排列
    """

    n: int
    p: int
    multiplier: int
    cosets: Tuple[Tuple[int, ...], ...]

    @property
    def leaders(self) -> Tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    @property
    def nu(self) -> int:
        return len(self.cosets)

    @property
    def gamma_cc(self) -> Fraction:
        return Fraction(self.n, self.nu)

    @property
    def power(self) -> int:
        """沿轨道一步对应的 Frobenius 幂次"""
        return self.p

    def coset_of(self, k: int) -> Tuple[int, ...]:
        return self.cosets[self._membership[k % self.n][0]]

    @cached_property
    def _membership(self) -> Dict[int, Tuple[int, int]]:
        """位置 -> (陪集序号, 轨道步数)"""
        return {
            k: (index, step)
            for index, coset in enumerate(self.cosets)
            for step, k in enumerate(coset)
        }

    @cached_property
    def expansion_plan(self) -> Tuple[np.ndarray, np.ndarray]:
        """每个位置的 (首元序号, 轨道步数)"""
        source = np.empty(self.n, dtype=np.int64)
        steps = np.empty(self.n, dtype=np.int64)
        for k, (index, step) in self._membership.items():
            source[k] = index
            steps[k] = step
        return source, steps


def cosets(n: int, p: int, multiplier: Optional[int] = None) -> CosetPartition:
    """
    计算分圆陪集

    Args:
        n: 块长 N
        p: 特征
        multiplier: 轨道乘子，默认 p

    Returns:
        CosetPartition，首元为最小成员，陪集按首元排序

    Raises:
        NonCoprimeLengthError: gcd(N, p) != 1

    Example:
        >>> [c for c in cosets(15, 2).cosets]
        [(0,), (1, 2, 4, 8), (3, 6, 12, 9), (5, 10), (7, 14, 13, 11)]
    """
    if n < 1 or gcd(n, p) != 1:
        raise NonCoprimeLengthError(n, p)
    m = (p if multiplier is None else multiplier) % n

    seen = set()
    orbits: List[Tuple[int, ...]] = []
    for start in range(n):
        if start in seen:
            continue
        orbit = [start]
        k = (start * m) % n
        while k != start:
            orbit.append(k)
            k = (k * m) % n
        seen.update(orbit)
        orbits.append(tuple(orbit))

    return CosetPartition(n=n, p=p, multiplier=m, cosets=tuple(orbits))


def gamma_cc(partition: CosetPartition) -> Fraction:
    """紧致因子 N / ν（精确有理数）"""
    return partition.gamma_cc


def _frobenius_table(field: TableField, p: int, step: int) -> np.ndarray:
    """x -> x^(p^step)"""
    group = field.order - 1
    exponent = pow(p, step, group) if group > 1 else 0
    # x^0 会把 0 映射为 1，用 x^group 代替
    return field.power_table(exponent if exponent else group)


@dataclass(frozen=True, eq=False)
class CompressedSpectrum:
    """首元取值 + 可还原完整频谱的划分"""

    leader_values: np.ndarray
    partition: CosetPartition
    field: TableField
    kernel: object = None

    def __post_init__(self):
        values = np.array(self.leader_values, dtype=np.int64).reshape(-1)
        values.setflags(write=False)
        object.__setattr__(self, "leader_values", values)
        if values.size != self.partition.nu:
            raise LengthMismatchError(self.partition.nu, int(values.size), "leaders")

    def __len__(self) -> int:
        return int(self.leader_values.size)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CompressedSpectrum)
            and other.partition == self.partition
            and np.array_equal(other.leader_values, self.leader_values)
        )


def compress_batch(spectra: np.ndarray, partition: CosetPartition) -> np.ndarray:
    """(B, N) -> (B, ν)，只读取首元位置"""
    spectra = np.asarray(spectra)
    if spectra.shape[-1] != partition.n:
        raise LengthMismatchError(partition.n, spectra.shape[-1], "spectrum")
    return spectra[..., list(partition.leaders)]


def expand_batch(
    field: TableField, leaders: np.ndarray, partition: CosetPartition
) -> np.ndarray:
    """(B, ν) -> (B, N)，沿轨道施加 Frobenius 幂"""
    leaders = np.asarray(leaders)
    if leaders.shape[-1] != partition.nu:
        raise LengthMismatchError(partition.nu, leaders.shape[-1], "leaders")
    source, steps = partition.expansion_plan
    gathered = leaders[..., source]
    out = np.empty(gathered.shape, dtype=np.int32)
    for step in np.unique(steps):
        columns = steps == step
        table = _frobenius_table(field, partition.power, int(step))
        out[..., columns] = table[gathered[..., columns]]
    return out


def conjugacy_holds(
    field: TableField, spectra: np.ndarray, partition: CosetPartition
) -> np.ndarray:
    """逐行判断频谱是否满足该划分的共轭约束"""
    spectra = np.atleast_2d(np.asarray(spectra))
    rebuilt = expand_batch(field, compress_batch(spectra, partition), partition)
    return np.all(rebuilt == spectra, axis=-1)


def compress(
    spectrum: Spectrum, partition: CosetPartition, strict: bool = False
) -> CompressedSpectrum:
    """
    保留陪集首元

    Args:
        spectrum: 完整频谱
        partition: 陪集划分
        strict: 为 True 时先校验共轭约束

    Raises:
        LengthMismatchError: 长度不符
        InvalidSpectrumError: strict 模式下约束不成立
    """
    if spectrum.length != partition.n:
        raise LengthMismatchError(partition.n, spectrum.length, "spectrum")
    if strict:
        rebuilt = expand_batch(
            spectrum.field, compress_batch(spectrum.values, partition), partition
        )
        bad = np.nonzero(rebuilt != spectrum.values)[0]
        if bad.size:
            raise InvalidSpectrumError(int(bad[0]), "conjugacy constraint violated")
    return CompressedSpectrum(
        compress_batch(spectrum.values, partition),
        partition,
        spectrum.field,
        spectrum.kernel,
    )


def expand(compressed: CompressedSpectrum) -> Spectrum:
    """由首元还原完整频谱"""
    values = expand_batch(compressed.field, compressed.leader_values, compressed.partition)
    return Spectrum(values, compressed.field, compressed.kernel)


def _rule_inputs(p: int, n: int) -> np.ndarray:
    if p**n <= EXHAUSTIVE_RULE_LIMIT:
        grid = np.indices((p,) * n).reshape(n, -1).T
        return grid.astype(np.int64)
    rng = np.random.default_rng(RULE_SAMPLE_SEED)
    return rng.integers(0, p, size=(RULE_SAMPLE_SIZE, n))


def find_conjugacy_rule(transform: FieldTransform) -> Optional[CosetPartition]:
    """
    为变换寻找成立的陪集规则

    依次尝试乘子 p 与 -p；p^N 不超过 EXHAUSTIVE_RULE_LIMIT 时穷举输入，
    否则用固定种子抽样。

    Returns:
        验证通过的划分；都不成立时返回 None
    """
    n, p = transform.length, transform.ground_order
    if gcd(n, p) != 1:
        return None
    inputs = _rule_inputs(p, n)
    spectra = transform.forward(inputs)

    candidates = []
    for multiplier in (p % n, (-p) % n):
        if multiplier not in candidates:
            candidates.append(multiplier)

    for multiplier in candidates:
        partition = cosets(n, p, multiplier)
        if bool(np.all(conjugacy_holds(transform.field, spectra, partition))):
            logger.debug(
                f"{transform.kind} N={n}: conjugacy rule k -> {multiplier}k holds "
                f"(nu={partition.nu})"
            )
            return partition

    logger.warning(f"{transform.kind} N={n}: no conjugacy rule holds")
    return None


def format_gamma(gamma: Union[Fraction, int]) -> str:
    gamma = Fraction(gamma)
    if gamma.denominator == 1:
        return str(gamma.numerator)
    return f"{float(gamma):g}"


def format_cosets(partition: CosetPartition) -> str:
    """
    陪集列表文本

    Example:
        C0 = (0)
        C1 = (1, 2, 4, 8)
        ...
        nu = 5
        gamma_cc = 15/5 = 3
    """
    lines = [
        f"C{coset[0]} = ({', '.join(str(k) for k in coset)})" for coset in partition.cosets
    ]
    lines.append(f"nu = {partition.nu}")
    lines.append(
        f"gamma_cc = {partition.n}/{partition.nu} = {format_gamma(partition.gamma_cc)}"
    )
    return "\n".join(lines)

