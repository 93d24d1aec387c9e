"""
GdmaLab 事件系统

仿真进度的发布-订阅总线：harness 发布，CLI 订阅进度日志。
处理器抛出的异常不会中断仿真。
"""

import threading
import time
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Any, Callable, Dict, List, Optional


class EventType(Enum):
    """事件类型枚举"""

    SWEEP_STARTED = auto()
    POINT_STARTED = auto()  # 开始一个 (mode, modulation, Eb/N0) 点
    BLOCK_MERGED = auto()  # 合并了一个帧块
    POINT_FINISHED = auto()
    BUDGET_EXHAUSTED = auto()  # 达到 max_bits 仍未满足停止条件
    SWEEP_FINISHED = auto()
    ERROR_OCCURRED = auto()


@dataclass
class Event:
    """事件数据类"""

    type: EventType
    data: Dict[str, Any] = field(default_factory=dict)
    timestamp: float = field(default_factory=time.time)
    source: Optional[str] = None

    def get(self, key: str, default: Any = None) -> Any:
        return self.data.get(key, default)

    def __getitem__(self, key: str) -> Any:
        return self.data[key]

    def __contains__(self, key: str) -> bool:
        return key in self.data


EventHandler = Callable[[Event], None]


class EventBus:
    """
    事件总线

    支持优先级、一次性订阅和有限长度的事件历史。

    Example:
        >>> bus = EventBus()
        >>> bus.subscribe(EventType.POINT_FINISHED, lambda e: print(e["ber"]))
        >>> bus.emit(EventType.POINT_FINISHED, ber=1e-3)
    """

    def __init__(self, history_size: int = 100):
        self._subscribers: Dict[EventType, List[tuple]] = {}
        self._once_subscribers: Dict[EventType, List[tuple]] = {}
        self._lock = threading.RLock()
        self._event_history: List[Event] = []
        self._history_size = history_size
        self._enabled = True

    def subscribe(
        self,
        event_type: EventType,
        handler: EventHandler,
        priority: int = 0,
    ) -> Callable:
        """
        订阅事件

        Args:
            event_type: 事件类型
            handler: 事件处理器
            priority: 优先级（数字越大越先执行）

        Returns:
            取消订阅的函数
        """
        with self._lock:
            entries = self._subscribers.setdefault(event_type, [])
            entries.append((priority, handler))
            entries.sort(key=lambda x: -x[0])

        return lambda: self._remove(self._subscribers, event_type, handler)

    def subscribe_once(
        self,
        event_type: EventType,
        handler: EventHandler,
        priority: int = 0,
    ) -> Callable:
        """订阅一次，触发后自动取消"""
        with self._lock:
            entries = self._once_subscribers.setdefault(event_type, [])
            entries.append((priority, handler))
            entries.sort(key=lambda x: -x[0])

        return lambda: self._remove(self._once_subscribers, event_type, handler)

    def _remove(self, table: Dict[EventType, List[tuple]], event_type, handler):
        with self._lock:
            if event_type in table:
                table[event_type] = [(p, h) for p, h in table[event_type] if h != handler]

    def publish(self, event: Event) -> bool:
        """
        同步发布事件

        Returns:
            是否至少有一个处理器被调用
        """
        if not self._enabled:
            return False

        with self._lock:
            self._event_history.append(event)
            if len(self._event_history) > self._history_size:
                self._event_history = self._event_history[-self._history_size :]

            handlers = list(self._subscribers.get(event.type, []))
            handlers.extend(self._once_subscribers.pop(event.type, []))

        handlers.sort(key=lambda x: -x[0])
        for _, handler in handlers:
            try:
                handler(event)
            except Exception as e:
                self._handle_error(event, handler, e)

        return bool(handlers)

    def emit(self, event_type: EventType, source: Optional[str] = None, **data) -> bool:
        """便捷方法：构造并发布事件"""
        return self.publish(Event(type=event_type, data=data, source=source))

    def _handle_error(self, event: Event, handler: EventHandler, error: Exception):
        # 错误事件直接分发，不走 publish，避免递归
        if event.type is EventType.ERROR_OCCURRED:
            return
        error_event = Event(
            type=EventType.ERROR_OCCURRED,
            data={
                "original_event": event,
                "handler": str(handler),
                "error": str(error),
                "error_type": type(error).__name__,
            },
        )
        with self._lock:
            handlers = list(self._subscribers.get(EventType.ERROR_OCCURRED, []))
        for _, h in handlers:
            try:
                h(error_event)
            except Exception:
                pass

    def get_history(self, event_type: Optional[EventType] = None, limit: int = 10) -> List[Event]:
        """
        获取事件历史

        Returns:
            事件列表（最新的在前）
        """
        with self._lock:
            history = self._event_history.copy()
        if event_type:
            history = [e for e in history if e.type == event_type]
        return list(reversed(history[-limit:]))

    def clear_history(self):
        with self._lock:
            self._event_history.clear()

    def clear_subscribers(self, event_type: Optional[EventType] = None):
        with self._lock:
            if event_type:
                self._subscribers.pop(event_type, None)
                self._once_subscribers.pop(event_type, None)
            else:
                self._subscribers.clear()
                self._once_subscribers.clear()

    def get_subscriber_count(self, event_type: Optional[EventType] = None) -> int:
        with self._lock:
            if event_type:
                return len(self._subscribers.get(event_type, [])) + len(
                    self._once_subscribers.get(event_type, [])
                )
            return sum(len(h) for h in self._subscribers.values()) + sum(
                len(h) for h in self._once_subscribers.values()
            )

    def enable(self):
        self._enabled = True

    def disable(self):
        self._enabled = False

    @property
    def enabled(self) -> bool:
        return self._enabled


# 全局事件总线实例
_global_bus: Optional[EventBus] = None


def get_event_bus() -> EventBus:
    """获取全局事件总线实例"""
    global _global_bus
    if _global_bus is None:
        _global_bus = EventBus()
    return _global_bus


def subscribe(event_type: EventType, handler: EventHandler, priority: int = 0) -> Callable:
    """便捷函数：订阅全局事件总线"""
    return get_event_bus().subscribe(event_type, handler, priority)


def emit(event_type: EventType, **data) -> bool:
    """便捷函数：发布事件到全局事件总线"""
    return get_event_bus().emit(event_type, **data)


def on(event_type: EventType, priority: int = 0):
    """
    事件处理器装饰器

    Example:
        >>> @on(EventType.BUDGET_EXHAUSTED)
        ... def warn(event: Event):
        ...     print(event["ebn0_db"])
    """

    def decorator(func: EventHandler) -> EventHandler:
        get_event_bus().subscribe(event_type, func, priority)
        return func

    return decorator
