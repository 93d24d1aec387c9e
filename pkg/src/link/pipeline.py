"""
GdmaLab N-GDMA 帧流水线

mux:   变换 -> (CC: 取陪集首元) -> 转码 -> 调制
demux: 解调 -> 逆转码 -> (CC: 共轭展开) -> 逆变换 -> 基域判决

批量接口一次处理 (B, N) 个用户符号，变长码的比特以拼接数组加逐帧长度表示。
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ..exceptions import (
    ConfigInvalidError,
    ElementOutOfRangeError,
    FrameLengthMismatchError,
    LengthMismatchError,
    ModemError,
    TranscoderError,
)
from ..fields.extension import ExtensionField
from ..fields.gaussian import GaussianField
from ..modem.channel import awgn, db_to_linear, noise_density
from ..modem.constellations import get_constellation
from ..modem.modulation import as_bit_array, demap, map_bits
from ..modem.theory import theoretical_ser
from ..spectral.cyclotomic import (
    CosetPartition,
    compress_batch,
    cosets,
    expand_batch,
    find_conjugacy_rule,
)
from ..transcoder.codes import OpportunisticCode, code_for_field
from ..transcoder.rates import average_rate, h_param
from ..transcoder.stream import bits_to_symbols, symbols_to_bits
from ..transforms.fourier import fourier_transform
from ..transforms.hartley import CasKernel, hartley_transform
from ..transforms.linear import FieldTransform, IdentityTransform
from ..transforms.signals import Spectrum
from ..utils.logging import LoggerMixin
from .bounds import frame_error_bound
from .link_config import EnergyConvention, LinkConfig, SpectrumMode, TransformKind


@dataclass(frozen=True)
class BatchResult:
    """
    一批帧的计数，可结合地合并

    Attributes:
        user_bit_errors: 各用户的比特错误数
        undecodable: 无法译码的伽罗瓦符号数
        out_of_subfield: 逆变换后不在 GF(p) 中而判为 0 的分量数
    """

    frames: int = 0
    symbols: int = 0
    symbol_errors: int = 0
    bits: int = 0
    bit_errors: int = 0
    frame_errors: int = 0
    channel_symbols: int = 0
    channel_bits: int = 0
    channel_bit_errors: int = 0
    undecodable: int = 0
    out_of_subfield: int = 0
    user_bit_errors: tuple = field(default_factory=tuple)

    def combine(self, other: "BatchResult") -> "BatchResult":
        if not self.user_bit_errors:
            users = other.user_bit_errors
        elif not other.user_bit_errors:
            users = self.user_bit_errors
        else:
            users = tuple(a + b for a, b in zip(self.user_bit_errors, other.user_bit_errors))
        return BatchResult(
            frames=self.frames + other.frames,
            symbols=self.symbols + other.symbols,
            symbol_errors=self.symbol_errors + other.symbol_errors,
            bits=self.bits + other.bits,
            bit_errors=self.bit_errors + other.bit_errors,
            frame_errors=self.frame_errors + other.frame_errors,
            channel_symbols=self.channel_symbols + other.channel_symbols,
            channel_bits=self.channel_bits + other.channel_bits,
            channel_bit_errors=self.channel_bit_errors + other.channel_bit_errors,
            undecodable=self.undecodable + other.undecodable,
            out_of_subfield=self.out_of_subfield + other.out_of_subfield,
            user_bit_errors=users,
        )


@dataclass(frozen=True, eq=False)
class DemuxResult:
    """单帧解复用的中间结果"""

    received_symbols: np.ndarray
    spectrum: np.ndarray
    recovered: np.ndarray
    decided: np.ndarray
    undecodable: int
    out_of_subfield: int


@dataclass(frozen=True, eq=False)
class FrameTrace:
    """单帧各级记录"""

    user_symbols_in: np.ndarray
    spectrum: Spectrum
    transmitted_symbols: np.ndarray
    transmitted_bits: np.ndarray
    pad_bits: int
    channel_bits_received: np.ndarray
    received_symbols: np.ndarray
    spectrum_recovered: np.ndarray
    user_symbols_out: np.ndarray
    spectrum_errors: int
    bit_errors: int
    undecodable: int
    out_of_subfield: int
    user_errors: int

    @property
    def error_free(self) -> bool:
        return self.user_errors == 0


@dataclass(frozen=True, eq=False)
class _Modulated:
    flat_bits: np.ndarray
    lengths: np.ndarray
    padded_bits: np.ndarray
    padded_starts: np.ndarray
    data_positions: np.ndarray


class GdmaLink(LoggerMixin):
    """
    N-GDMA 链路

    构造时建好域、变换、陪集划分、码表与星座，之后只做纯计算。

    Example:
        >>> link = GdmaLink(LinkConfig(n_users=15, mode="CC"))
        >>> link.mux([1] * 15).size
        20
    """

    def __init__(self, config: LinkConfig):
        config.validate()
        self.config = config
        self.field, self.transform = self._build_transform()
        self.partition = self._build_partition()
        self.code = self._build_code()
        try:
            self.constellation = get_constellation(config.modulation)
        except ModemError as e:
            raise ConfigInvalidError(str(e), modulation=config.modulation) from e

        try:
            self.rate = average_rate(self.code).r
        except TranscoderError as e:
            raise ConfigInvalidError(str(e), code=self.code.name) from e
        self.h = h_param(self.rate, self.constellation.size)
        popcount = [bin(i).count("1") for i in range(1 << self.bits_per_user_symbol)]
        self._popcount = np.array(popcount, dtype=np.int64)
        self.logger.debug(
            f"Link ready: {config.describe()}, code={self.code.name}, "
            f"n_tx={self.tx_symbols_per_frame}, h={self.h:.3f}"
        )

    # ===== 构造 =====

    def _build_transform(self):
        cfg = self.config
        n = cfg.n_users
        if cfg.transform is TransformKind.FFHT:
            gi = GaussianField(cfg.q)
            return gi, hartley_transform(CasKernel(gi, n=n))
        if cfg.transform is TransformKind.IDENTITY:
            gf2 = ExtensionField(2, 1)
            return gf2, IdentityTransform(gf2, n)
        gf = ExtensionField(cfg.p, cfg.m, cfg.poly)
        return gf, fourier_transform(gf, gf.element_of_order(n).value)

    def _build_partition(self) -> Optional[CosetPartition]:
        if self.config.mode is SpectrumMode.FS:
            return None
        if self.config.transform is TransformKind.FFFT:
            return cosets(self.transform.length, self.transform.ground_order)
        partition = find_conjugacy_rule(self.transform)
        if partition is None:
            raise ConfigInvalidError(
                "no conjugacy rule holds for this kernel", n_users=self.config.n_users
            )
        return partition

    def _build_code(self) -> OpportunisticCode:
        try:
            code = code_for_field(self.field, self.config.code)
        except TranscoderError as e:
            raise ConfigInvalidError(str(e), code=self.config.code) from e
        if not code.instantaneous:
            raise ConfigInvalidError("code must be prefix-free for streaming", code=code.name)
        return code

    # ===== 参数 =====

    @property
    def n_users(self) -> int:
        return self.transform.length

    @property
    def ground_order(self) -> int:
        return self.transform.ground_order

    @property
    def tx_symbols_per_frame(self) -> int:
        """每帧传输的伽罗瓦符号数：FS 为 N，CC 为 ν"""
        return self.partition.nu if self.partition is not None else self.n_users

    @property
    def gamma_cc(self) -> Fraction:
        return Fraction(self.n_users, self.tx_symbols_per_frame)

    @property
    def bits_per_user_symbol(self) -> int:
        """用户符号按 ⌈log₂p⌉ 位二进制标签计比特"""
        return max(1, math.ceil(math.log2(self.ground_order)))

    @property
    def info_bits_per_frame(self) -> float:
        return self.n_users * math.log2(self.ground_order)

    @property
    def nominal_channel_bits(self) -> float:
        """每帧平均信道比特数（定长码为精确值）"""
        return self.tx_symbols_per_frame * self.rate

    @property
    def nominal_channel_symbols(self) -> float:
        return self.nominal_channel_bits / self.constellation.bits_per_symbol

    def esn0(self, ebn0_db: float) -> float:
        """由 Eb/N0（dB）求 Es/N0（线性），唯一的换算点"""
        ebn0 = db_to_linear(ebn0_db)
        if self.config.energy_convention is EnergyConvention.CHANNEL_SYMBOL:
            return ebn0 * self.constellation.bits_per_symbol
        return ebn0 * self.info_bits_per_frame / self.nominal_channel_symbols

    def n0(self, ebn0_db: float) -> float:
        return noise_density(self.esn0(ebn0_db))

    def fer_bound(self, ebn0_db: float) -> float:
        """该点的帧错误联合界"""
        pe1 = theoretical_ser(self.constellation, self.esn0(ebn0_db))
        return frame_error_bound(self.tx_symbols_per_frame, self.h, pe1)

    # ===== 批量流水线 =====

    def random_users(self, frames: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.ground_order, size=(frames, self.n_users))

    def encode_spectra(self, users: np.ndarray):
        """(B, N) -> (spectra, 传输符号)"""
        spectra = self.transform.forward(users)
        if self.partition is not None:
            return spectra, compress_batch(spectra, self.partition)
        return spectra, spectra

    def decode_spectra(self, received: np.ndarray):
        """传输符号 -> (完整频谱, 逆变换结果, 判决)"""
        if self.partition is not None:
            spectra = expand_batch(self.field, received, self.partition)
        else:
            spectra = received
        recovered = self.transform.inverse(spectra)
        decided = np.where(recovered >= self.ground_order, 0, recovered)
        return spectra, recovered, decided

    def _modulate(self, tx_symbols: np.ndarray) -> _Modulated:
        """逐帧补零到 log₂M 的整数倍"""
        flat, lengths = symbols_to_bits(self.code, tx_symbols)
        k = self.constellation.bits_per_symbol
        totals = lengths + (-lengths) % k
        padded_starts = np.concatenate([[0], np.cumsum(totals)[:-1]]).astype(np.int64)
        starts = np.concatenate([[0], np.cumsum(lengths)[:-1]]).astype(np.int64)
        frame_of_bit = np.repeat(np.arange(lengths.size), lengths)
        positions = padded_starts[frame_of_bit] + (np.arange(flat.size) - starts[frame_of_bit])
        padded = np.zeros(int(totals.sum()), dtype=np.uint8)
        padded[positions] = flat
        return _Modulated(flat, lengths, padded, padded_starts, positions)

    def _receive(self, rx_bits: np.ndarray, starts, lengths):
        symbols, undecodable = bits_to_symbols(
            self.code, rx_bits, starts, lengths, self.tx_symbols_per_frame
        )
        return symbols, undecodable

    def transmit_batch(
        self, users: np.ndarray, ebn0_db: float, rng: np.random.Generator
    ) -> BatchResult:
        """
        经 AWGN 传输一批帧并统计错误

        Args:
            users: (B, N) 用户符号
            ebn0_db: Eb/N0（dB），inf 表示无噪声
            rng: 随机数发生器
        """
        users = np.atleast_2d(np.asarray(users, dtype=np.int64))
        _, tx = self.encode_spectra(users)
        frame = self._modulate(tx)
        k = self.constellation.bits_per_symbol

        samples = map_bits(self.constellation, frame.padded_bits.reshape(-1, k))
        received = awgn(samples, self.n0(ebn0_db), rng)
        rx_bits = demap(self.constellation, received).reshape(-1)

        rx_symbols, undecodable = self._receive(rx_bits, frame.padded_starts, frame.lengths)
        _, recovered, decided = self.decode_spectra(rx_symbols)

        wrong = decided != users
        if self.bits_per_user_symbol == 1:
            bit_errors = wrong.astype(np.int64)
        else:
            bit_errors = self._popcount[np.bitwise_xor(decided, users)]
        channel_errors = int(np.count_nonzero(rx_bits[frame.data_positions] != frame.flat_bits))

        return BatchResult(
            frames=users.shape[0],
            symbols=int(users.size),
            symbol_errors=int(wrong.sum()),
            bits=int(users.size) * self.bits_per_user_symbol,
            bit_errors=int(bit_errors.sum()),
            frame_errors=int(np.any(wrong, axis=1).sum()),
            channel_symbols=int(samples.size),
            channel_bits=int(frame.flat_bits.size),
            channel_bit_errors=channel_errors,
            undecodable=int(undecodable.sum()),
            out_of_subfield=int(np.count_nonzero(recovered >= self.ground_order)),
            user_bit_errors=tuple(int(x) for x in bit_errors.sum(axis=0)),
        )

    # ===== 单帧接口 =====

    def _check_users(self, v: Sequence[int]) -> np.ndarray:
        values = np.asarray(v, dtype=np.int64).reshape(-1)
        if values.size != self.n_users:
            raise LengthMismatchError(self.n_users, int(values.size), "users")
        bad = values[(values < 0) | (values >= self.ground_order)]
        if bad.size:
            raise ElementOutOfRangeError(int(bad[0]), self.ground_order)
        return values

    def _frame_length_range(self):
        n_tx = self.tx_symbols_per_frame
        slack = self.constellation.bits_per_symbol - 1
        return n_tx * self.code.min_length, n_tx * self.code.max_length + slack

    def mux(self, v: Sequence[int]) -> np.ndarray:
        """
        单帧复用，返回调制前的比特

        FS 帧携带 N 个伽罗瓦符号，CC 帧携带 ν 个。
        """
        users = self._check_users(v)[None, :]
        _, tx = self.encode_spectra(users)
        bits, _ = symbols_to_bits(self.code, tx)
        return bits

    def decode_frame(self, bits) -> DemuxResult:
        """
        单帧解复用并保留中间结果

        Raises:
            FrameLengthMismatchError: 比特数与配置不符
        """
        array = as_bit_array(bits)
        low, high = self._frame_length_range()
        if not low <= array.size <= high:
            raise FrameLengthMismatchError(f"{low}..{high}", int(array.size))

        symbols, undecodable = self._receive(array, np.array([0]), np.array([array.size]))
        spectra, recovered, decided = self.decode_spectra(symbols)
        count = int(undecodable[0])
        if count:
            self.logger.warning(f"{count} undecodable symbol(s) in frame, decided as 0")
        return DemuxResult(
            received_symbols=symbols[0],
            spectrum=spectra[0],
            recovered=recovered[0],
            decided=decided[0],
            undecodable=count,
            out_of_subfield=int(np.count_nonzero(recovered[0] >= self.ground_order)),
        )

    def demux(self, bits) -> np.ndarray:
        """单帧解复用，返回 N 个基域判决"""
        return self.decode_frame(bits).decided

    def trace_frame(
        self,
        v: Sequence[int],
        ebn0_db: float = math.inf,
        rng: Optional[np.random.Generator] = None,
        seed: Optional[int] = None,
    ) -> FrameTrace:
        """带噪声跑一帧并记录每一级"""
        users = self._check_users(v)
        rng = rng if rng is not None else np.random.default_rng(seed)

        spectra, tx = self.encode_spectra(users[None, :])
        frame = self._modulate(tx)
        k = self.constellation.bits_per_symbol
        samples = map_bits(self.constellation, frame.padded_bits.reshape(-1, k))
        rx_bits = demap(self.constellation, awgn(samples, self.n0(ebn0_db), rng)).reshape(-1)

        rx_symbols, undecodable = self._receive(rx_bits, frame.padded_starts, frame.lengths)
        full, recovered, decided = self.decode_spectra(rx_symbols)

        return FrameTrace(
            user_symbols_in=users,
            spectrum=Spectrum(spectra[0], self.field, self.transform.kernel),
            transmitted_symbols=tx[0],
            transmitted_bits=frame.flat_bits,
            pad_bits=int(frame.padded_bits.size - frame.flat_bits.size),
            channel_bits_received=rx_bits,
            received_symbols=rx_symbols[0],
            spectrum_recovered=full[0],
            user_symbols_out=decided[0],
            spectrum_errors=int(np.count_nonzero(full[0] != spectra[0])),
            bit_errors=int(np.count_nonzero(rx_bits[frame.data_positions] != frame.flat_bits)),
            undecodable=int(undecodable[0]),
            out_of_subfield=int(np.count_nonzero(recovered[0] >= self.ground_order)),
            user_errors=int(np.count_nonzero(decided[0] != users)),
        )
