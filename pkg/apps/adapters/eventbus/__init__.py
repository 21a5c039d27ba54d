from apps.adapters.eventbus.in_process import InProcessEventBus

__all__ = ["InProcessEventBus"]
