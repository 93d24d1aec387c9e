"""
核心模块

仿真进度事件总线。
"""

from .events import Event, EventBus, EventType, get_event_bus

__all__ = [
    "Event",
    "EventBus",
    "EventType",
    "get_event_bus",
]
