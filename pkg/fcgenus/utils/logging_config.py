"""
Logging configuration for fcgenus.

This module provides the centralized logging setup with:
- Structured JSON records
- Optional rotating log file
- Execution-time monitoring of pipeline stages
- Error tracking with context
"""

import functools
import logging
import logging.handlers
import time
import traceback
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional

from pythonjsonlogger import jsonlogger

ROOT_LOGGER_NAME = "fcgenus"
COMPONENTS = ["graph", "matching", "solver", "oracles", "generators", "cli", "performance", "errors"]


class CustomJsonFormatter(jsonlogger.JsonFormatter):
    """JSON formatter adding timestamp, level and source location."""

    def add_fields(self, log_record: Dict[str, Any], record: logging.LogRecord, message_dict: Dict[str, Any]) -> None:
        super().add_fields(log_record, record, message_dict)

        log_record["timestamp"] = datetime.now(timezone.utc).isoformat()
        log_record["level"] = record.levelname

        log_record["filename"] = record.filename
        log_record["function"] = record.funcName
        log_record["line"] = record.lineno

        log_record["process"] = record.process
        log_record["thread_name"] = record.threadName


class PerformanceMonitor:
    """Monitor and log execution time of pipeline stages."""

    def __init__(self):
        self.logger = logging.getLogger(f"{ROOT_LOGGER_NAME}.performance")

    def log_execution_time(self, func):
        """Decorator to log function execution time."""

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            result = func(*args, **kwargs)
            execution_time = time.perf_counter() - start_time

            self.logger.debug(
                "Function execution time",
                extra={
                    "function_name": func.__name__,
                    "execution_time": execution_time,
                    "metric_type": "execution_time",
                },
            )
            return result

        return wrapper

    def log_batch_processing(self, batch_size: int, processing_time: float, context: str):
        """Log batch processing metrics."""
        self.logger.info(
            "Batch processing",
            extra={
                "batch_size": batch_size,
                "processing_time": processing_time,
                "items_per_second": batch_size / processing_time if processing_time > 0 else None,
                "context": context,
                "metric_type": "batch_processing",
            },
        )


class ErrorTracker:
    """Track and log errors with context."""

    def __init__(self):
        self.logger = logging.getLogger(f"{ROOT_LOGGER_NAME}.errors")

    def log_error(
        self,
        error: Exception,
        context: Optional[Dict[str, Any]] = None,
        stack_trace: bool = True,
    ):
        """Log an error with context."""
        error_data = {
            "error_type": error.__class__.__name__,
            "error_message": str(error),
            "context": context or {},
        }

        if stack_trace:
            error_data["stack_trace"] = traceback.format_exc()
            self.logger.error("Error occurred", extra=error_data)
        else:
            self.logger.warning("Domain error", extra=error_data)

    def handle_exception(self, context: Optional[Dict[str, Any]] = None):
        """Decorator for exception logging; the exception is always re-raised."""
        # Imported lazily: errors lives in the backend, utils must not depend on it at import.
        from fcgenus.backend.errors import GenusError

        def decorator(func):
            @functools.wraps(func)
            def wrapper(*args, **kwargs):
                try:
                    return func(*args, **kwargs)
                except GenusError as e:
                    error_context = dict(context or {})
                    error_context.update({"function": func.__name__, **e.context})
                    self.log_error(e, error_context, stack_trace=False)
                    raise
                except Exception as e:
                    error_context = dict(context or {})
                    error_context.update({"function": func.__name__})
                    self.log_error(e, error_context)
                    raise

            return wrapper

        return decorator


def setup_logging(
    log_level: str = "WARNING",
    log_file: str = "fcgenus.log",
    max_bytes: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5,
    enable_console: bool = True,
    enable_file: bool = False,
    log_dir: str = "logs",
) -> None:
    """
    Setup application-wide logging configuration.

    Args:
        log_level: Logging level
        log_file: Log file name inside log_dir
        max_bytes: Maximum size of log file before rotation
        backup_count: Number of backup files to keep
        enable_console: Whether to log JSON records to stderr
        enable_file: Whether to write the rotating log file
        log_dir: Directory for the log file
    """
    formatter = CustomJsonFormatter("%(timestamp)s %(level)s %(name)s %(message)s")

    root_logger = logging.getLogger(ROOT_LOGGER_NAME)
    root_logger.setLevel(log_level)
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
        handler.close()

    log_path = None
    if enable_file:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        log_path = Path(log_dir) / log_file
        file_handler = logging.handlers.RotatingFileHandler(
            log_path,
            maxBytes=max_bytes,
            backupCount=backup_count,
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    if enable_console:
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

    for component in COMPONENTS:
        logging.getLogger(f"{ROOT_LOGGER_NAME}.{component}").setLevel(log_level)

    root_logger.debug(
        "Logging system initialized",
        extra={
            "log_level": log_level,
            "log_file": str(log_path) if log_path else None,
            "console_enabled": enable_console,
        },
    )


performance_monitor = PerformanceMonitor()

error_tracker = ErrorTracker()
