"""Utility modules for fcgenus."""

from .logging_config import setup_logging, performance_monitor, error_tracker

__all__ = ['setup_logging', 'performance_monitor', 'error_tracker']
