from apps.adapters.logging.jsonl_logger import JsonlEventLogger

__all__ = ["JsonlEventLogger"]
