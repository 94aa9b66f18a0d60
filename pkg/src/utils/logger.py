"""
Centralized Logging
===================

This module provides the logging infrastructure for netgroups. It centralizes
all diagnostic output so that long-running extractions and pipelines leave a
readable trail, while keeping stdout free for command results.

Key Features:
-------------
- One-shot Setup: `setup_logging` configures the root logger with a console
  handler (stderr) and an optional detailed file handler.
- Configuration Echo: `log_config` records an effective configuration as a
  one-line summary plus a DEBUG-level JSON dump.
- Stage Instrumentation: `log_timed` decorates long operations (loading,
  extraction, pipeline runs) with start/finish messages, status and duration.
- Contextual Logging: Specialized formatting including timestamps, module
  origin, and line numbers.
"""

import json
import logging
import sys
import time
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, Optional

DEFAULT_LOG_FORMAT = (
    '%(asctime)s - %(name)s - %(levelname)s - '
    '[%(filename)s:%(lineno)d] - %(message)s'
)


def setup_logging(
    console_level: int = logging.INFO,
    log_file: Optional[Path] = None,
    file_level: int = logging.DEBUG,
    log_format: Optional[str] = None,
) -> Optional[Path]:
    """
    Initialize application-wide logging.

    Configs include:
    - Root Logger: Set to DEBUG so handlers decide what is shown.
    - Console Handler: Human-readable messages on stderr at `console_level`.
    - File Handler: Optional detailed log at `file_level`, overwritten per run.

    Args:
        console_level: Granularity for terminal output.
        log_file: Optional path of a persistent log file.
        file_level: Granularity for the log file.
        log_format: Optional custom formatting string.

    Returns:
        The log file path, or None when logging to the console only.
    """
    formatter = logging.Formatter(log_format or DEFAULT_LOG_FORMAT, datefmt='%Y-%m-%d %H:%M:%S')

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)  # Capture everything, handlers will filter

    # Remove existing handlers to avoid duplicates on repeated setup
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file is not None:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, mode='w', encoding='utf-8')
        file_handler.setLevel(file_level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)
        logging.info(f"netgroups started - log file: {log_file}")

    return log_file


def shutdown_logging():
    """
    Flush and detach all handlers.
    Should be called before application exit.
    """
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        try:
            handler.flush()
        except Exception:
            pass
        root_logger.removeHandler(handler)
        handler.close()


def log_config(config_name: str, config_data: Dict[str, Any], logger: Optional[logging.Logger] = None):
    """
    Log configuration settings.

    Args:
        config_name: Name of the configuration being logged
        config_data: Dictionary of configuration settings
        logger: Optional logger instance (uses this module's logger if not provided)
    """
    if logger is None:
        logger = logging.getLogger(__name__)

    summary = ", ".join(f"{k}={v}" for k, v in config_data.items() if not isinstance(v, dict))
    logger.info(f"Configuration: {config_name} ({summary})")
    logger.debug(f"{config_name} details: {json.dumps(config_data, indent=2, sort_keys=True, default=str)}")


def log_timed(func: Optional[Callable] = None, *, stage: str = "STAGE"):
    """
    Decorator for timing long-running operations.

    Wraps a function to automatically log:
    1. The entry point.
    2. The execution status (SUCCESS/FAILED) upon completion.
    3. Total duration in seconds.
    4. Full stack traces for any unhandled exceptions (at DEBUG level;
       callers decide how loudly to report the failure).

    Args:
        func: The function to be instrumented.
        stage: Context label for the log entry (e.g., 'EXTRACT').
    """
    def decorator(f: Callable) -> Callable:
        @wraps(f)
        def wrapper(*args, **kwargs):
            logger = logging.getLogger(f.__module__)
            logger.debug(f"[{stage}] {f.__name__} started")

            start_time = time.perf_counter()
            error_occurred = False

            try:
                return f(*args, **kwargs)
            except Exception as e:
                error_occurred = True
                logger.debug(f"[{stage}] {f.__name__} failed: {type(e).__name__}: {e}", exc_info=True)
                raise
            finally:
                elapsed = time.perf_counter() - start_time
                status = "FAILED" if error_occurred else "SUCCESS"
                logger.info(f"[{stage}] {f.__name__} completed - Status: {status}, Duration: {elapsed:.3f}s")

        return wrapper

    # Handle both @log_timed and @log_timed(stage="...")
    if func is None:
        return decorator
    return decorator(func)
