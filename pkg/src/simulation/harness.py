"""
GdmaLab 蒙特卡洛误码率仿真

每个信噪比点按块推进：第 b 块使用 (master_seed, 点, b) 对应的独立随机流，
按块号顺序合并计数，在第一个同时满足 min_bits 与 min_errors 的块处停止。
多进程时一次计算一波块，结果与进程数无关。
"""

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional

from ..core.events import EventBus, EventType
from ..exceptions import BudgetExhaustedError, GdmaLabError
from ..link.link_config import LinkConfig
from ..link.pipeline import BatchResult, GdmaLink
from ..utils.logging import LoggerMixin
from .records import BerRecord
from .rng import block_generator
from .spec import SimulationSpec
from .statistics import confidence_interval

# 进程内的链路实例，由进程池 initializer 建立
_worker_link: Optional[GdmaLink] = None


def _init_worker(link_config: dict) -> None:
    global _worker_link
    _worker_link = GdmaLink(LinkConfig.from_dict(link_config))


def simulate_block(
    link: GdmaLink, master_seed: int, ebn0_db: float, block: int, frames: int
) -> BatchResult:
    """用第 block 块的随机流仿真 frames 帧"""
    rng = block_generator(master_seed, ebn0_db, block)
    users = link.random_users(frames, rng)
    return link.transmit_batch(users, ebn0_db, rng)


def _simulate_block_in_worker(args) -> BatchResult:
    return simulate_block(_worker_link, *args)


class MonteCarloHarness(LoggerMixin):
    """
    误码率扫描器

    Example:
        >>> spec = SimulationSpec(ebn0_points_db=(0.0, 4.0))
        >>> with MonteCarloHarness(spec) as harness:
        ...     records = harness.sweep()
    """

    def __init__(self, spec: SimulationSpec, event_bus: Optional[EventBus] = None):
        spec.validate()
        self.spec = spec
        self.event_bus = event_bus or EventBus()
        self._executor: Optional[ProcessPoolExecutor] = None
        self._executor_config: Optional[LinkConfig] = None

    def __enter__(self) -> "MonteCarloHarness":
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()

    def close(self):
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
            self._executor_config = None

    # ===== 分块执行 =====

    def _pool_for(self, config: LinkConfig) -> ProcessPoolExecutor:
        if self._executor is None or self._executor_config != config:
            self.close()
            self._executor = ProcessPoolExecutor(
                max_workers=self.spec.workers,
                initializer=_init_worker,
                initargs=(config.to_dict(),),
            )
            self._executor_config = config
        return self._executor

    def _blocks(self, link: GdmaLink, ebn0_db: float) -> Iterator[BatchResult]:
        """按块号顺序无限产出块结果"""
        spec = self.spec
        frames = spec.frames_per_block
        block = 0
        if spec.workers == 1:
            while True:
                yield simulate_block(link, spec.master_seed, ebn0_db, block, frames)
                block += 1

        pool = self._pool_for(link.config)
        while True:
            wave = [
                (spec.master_seed, ebn0_db, b, frames)
                for b in range(block, block + spec.workers)
            ]
            yield from pool.map(_simulate_block_in_worker, wave)
            block += spec.workers

    # ===== 单点 =====

    def run_point(self, ebn0_db: float, link_config: Optional[LinkConfig] = None) -> BerRecord:
        """
        仿真一个信噪比点

        Args:
            ebn0_db: Eb/N0（dB），inf 表示无噪声
            link_config: 链路配置，默认取规格中的第一个组合

        Raises:
            BudgetExhaustedError: strict 模式下达到 max_bits 仍未收集到 min_errors
        """
        config = link_config or next(self.spec.link_configs())
        link = GdmaLink(config)
        return self._run_point(link, ebn0_db)

    def _run_point(self, link: GdmaLink, ebn0_db: float) -> BerRecord:
        stop = self.spec.stop
        cfg = link.config
        noiseless = link.n0(ebn0_db) == 0.0
        self.event_bus.emit(
            EventType.POINT_STARTED,
            source="harness",
            mode=cfg.mode.value,
            modulation=cfg.modulation,
            ebn0_db=ebn0_db,
        )

        total = BatchResult()
        exhausted = False
        try:
            for index, result in enumerate(self._blocks(link, ebn0_db)):
                total = total.combine(result)
                self.event_bus.emit(
                    EventType.BLOCK_MERGED,
                    block=index,
                    bits=total.bits,
                    bit_errors=total.bit_errors,
                )
                self.logger.debug(
                    f"block {index} @ {ebn0_db} dB: {total.bit_errors}/{total.bits} bit errors"
                )
                if stop.satisfied(total.bits, total.bit_errors):
                    break
                # 无噪声时错误数不会增长
                if noiseless and total.bits >= stop.min_bits:
                    break
                if stop.exhausted(total.bits):
                    exhausted = True
                    break
        except GdmaLabError as e:
            self.event_bus.emit(EventType.ERROR_OCCURRED, error=str(e), ebn0_db=ebn0_db)
            raise

        record = self._record(link, ebn0_db, total, exhausted)
        if exhausted:
            self.logger.warning(
                f"Budget exhausted at {ebn0_db} dB ({cfg.mode.value}, {cfg.modulation}): "
                f"{total.bit_errors}/{stop.min_errors} errors in {total.bits} bits"
            )
            self.event_bus.emit(EventType.BUDGET_EXHAUSTED, record=record)
            if stop.strict:
                raise BudgetExhaustedError(ebn0_db, total.bits, total.bit_errors, stop.min_errors)

        self.logger.info(
            f"{cfg.mode.value}/{cfg.modulation} @ {ebn0_db} dB: "
            f"ber={record.ber:.3e} ({record.bit_errors}/{record.bits_observed})"
        )
        self.event_bus.emit(EventType.POINT_FINISHED, record=record)
        return record

    def _record(self, link: GdmaLink, ebn0_db: float, total: BatchResult, exhausted: bool):
        cfg = link.config
        low, high = confidence_interval(total.bit_errors, max(total.bits, 1))
        fer_bound = link.fer_bound(ebn0_db) if math.isfinite(ebn0_db) else 0.0
        return BerRecord(
            mode=cfg.mode.value,
            modulation=link.constellation.name,
            transform=cfg.transform.value,
            n_users=cfg.n_users,
            ebn0_db=ebn0_db,
            bits_observed=total.bits,
            bit_errors=total.bit_errors,
            symbols_observed=total.symbols,
            symbol_errors=total.symbol_errors,
            frames=total.frames,
            frame_errors=total.frame_errors,
            ci_low=low,
            ci_high=high,
            seed=self.spec.master_seed,
            budget_exhausted=exhausted,
            fer_bound=fer_bound,
            undecodable=total.undecodable,
            out_of_subfield=total.out_of_subfield,
            user_bit_errors=total.user_bit_errors,
        )

    # ===== 扫描 =====

    def sweep(self) -> List[BerRecord]:
        """对每个 (mode, modulation, Eb/N0) 组合各产出一条记录"""
        configs = list(self.spec.link_configs())
        points = self.spec.ebn0_points_db
        self.event_bus.emit(
            EventType.SWEEP_STARTED,
            source="harness",
            combinations=len(configs),
            points=len(points),
        )
        records = []
        try:
            for cfg in configs:
                link = GdmaLink(cfg)
                for ebn0_db in points:
                    records.append(self._run_point(link, ebn0_db))
        finally:
            self.close()
        self.event_bus.emit(EventType.SWEEP_FINISHED, records=len(records))
        return records


def run_point(spec: SimulationSpec, ebn0_db: float) -> BerRecord:
    """便捷函数：仿真规格中第一个组合的一个点"""
    with MonteCarloHarness(spec) as harness:
        return harness.run_point(ebn0_db)


def sweep(spec: SimulationSpec, event_bus: Optional[EventBus] = None) -> List[BerRecord]:
    """便捷函数：完整扫描"""
    with MonteCarloHarness(spec, event_bus) as harness:
        return harness.sweep()
