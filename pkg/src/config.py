"""Structured logging and environment access for emd-lab.

Every log record becomes one JSON line on stderr. Reports own stdout, so a
run can be piped straight into a file or `jq` whatever the log level.
"""

import json
import logging
import os
import sys
import time
from collections.abc import Iterable, Mapping
from datetime import datetime, timezone
from typing import Any

UTC = timezone.utc

# Environment variable names
ENV_LOG_LEVEL = "EMD_LAB_LOG_LEVEL"
ENV_CONFIG_PATH = "EMD_LAB_CONFIG"
ENV_WORKERS = "EMD_LAB_WORKERS"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Attributes every LogRecord carries; anything else arrived through extra=
_RECORD_ATTRIBUTES = frozenset(
    vars(logging.LogRecord("", logging.INFO, "", 0, "", None, None))
) | {"message", "asctime", "taskName"}


class StructuredFormatter(logging.Formatter):
    """One JSON object per record: timestamp, level, logger, message and extras."""

    def format(self, record: logging.LogRecord) -> str:
        entry: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, tz=UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key, value in record.__dict__.items():
            if key not in _RECORD_ATTRIBUTES and key not in entry:
                entry[key] = value
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, ensure_ascii=False, default=str)


class OperationLogger:
    """Times named operations (a CLI command, a suite) and logs their outcome."""

    COMPONENT = "operation_tracker"

    def __init__(self, logger: logging.Logger):
        self.logger = logger
        self._started: dict[str, float] = {}
        self._context: dict[str, dict[str, Any]] = {}

    def _elapsed_ms(self, operation: str) -> int:
        started = self._started.get(operation)
        if started is None:
            return 0
        return int((time.perf_counter() - started) * 1000)

    def start_operation(self, operation: str, **context: Any) -> None:
        self._started[operation] = time.perf_counter()
        self._context[operation] = context
        self.logger.info(
            "Starting operation: %s",
            operation,
            extra={"operation": operation, "component": self.COMPONENT, **context},
        )

    def complete_operation(
        self, operation: str, success: bool = True, **metrics: Any
    ) -> None:
        """Log the outcome; metrics are merged over the start context."""
        duration_ms = self._elapsed_ms(operation)
        self._started.pop(operation, None)
        merged = {**self._context.pop(operation, {}), **metrics}
        self.logger.log(
            logging.INFO if success else logging.ERROR,
            "Operation %s: %s",
            "completed" if success else "failed",
            operation,
            extra={
                "operation": operation,
                "duration_ms": duration_ms,
                "metrics": merged,
                "component": self.COMPONENT,
                "success": success,
            },
        )

    def log_error(self, operation: str, error: Exception, **context: Any) -> None:
        self.logger.error(
            "Operation failed: %s - %s",
            operation,
            error,
            extra={
                "operation": operation,
                "duration_ms": self._elapsed_ms(operation),
                "error_code": type(error).__name__,
                "component": self.COMPONENT,
                **context,
            },
            exc_info=error,
        )


class SystemLogger:
    """Process-wide counters for solved instances, search effort and check verdicts."""

    def __init__(self, name: str = "emd-lab"):
        self.logger = logging.getLogger(name)
        self.operation_logger = OperationLogger(self.logger)
        self._started = time.perf_counter()
        self.system_metrics: dict[str, int] = {
            "instances_solved": 0,
            "combinations_examined": 0,
            "checks_match": 0,
            "checks_mismatch": 0,
            "checks_out_of_domain": 0,
            "checks_budget_exceeded": 0,
            "operations_failed": 0,
        }

    def log_system_start(self, **context: Any) -> None:
        self.logger.info(
            "System starting up",
            extra={"operation": "system_startup", "component": "system", "metrics": context},
        )

    def log_system_termination(self, success: bool = True) -> None:
        """Log the counters collected over the whole run."""
        self.logger.info(
            "System terminating - %s",
            "success" if success else "failure",
            extra={
                "operation": "system_termination",
                "duration_ms": int((time.perf_counter() - self._started) * 1000),
                "metrics": dict(self.system_metrics),
                "component": "system",
                "success": success,
            },
        )

    def increment_metric(self, metric: str, value: int = 1) -> None:
        """Add to a known counter; unknown names are ignored."""
        if metric in self.system_metrics:
            self.system_metrics[metric] += value

    def record_search_effort(self, combinations: Iterable[int]) -> None:
        """Count one solved instance and the combinations its searches examined."""
        self.increment_metric("instances_solved")
        self.increment_metric("combinations_examined", sum(combinations))

    def record_check_summary(self, summary: Mapping[str, int]) -> None:
        """Fold a report summary into the checks_* counters."""
        for status, count in summary.items():
            self.increment_metric(f"checks_{status}", count)

    def get_operation_logger(self) -> OperationLogger:
        return self.operation_logger


def setup_logging(level: str | None = None) -> SystemLogger:
    """Route every logger through one JSON handler on stderr.

    Args:
        level: DEBUG, INFO, WARNING or ERROR. Falls back to EMD_LAB_LOG_LEVEL,
            then INFO. An unrecognised name also falls back to INFO.

    Returns:
        SystemLogger for the run
    """
    requested = (level or os.getenv(ENV_LOG_LEVEL) or "INFO").upper()
    log_level = requested if requested in LOG_LEVELS else "INFO"

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(StructuredFormatter())
    root_logger.addHandler(handler)

    if requested != log_level:
        root_logger.warning("Unknown log level %r, using %s", requested, log_level)
    return SystemLogger()


def get_env_var(name: str, default: str | None = None, required: bool = False) -> str:
    """Read an environment variable.

    Args:
        name: Variable name
        default: Value when unset
        required: Raise instead of returning an empty string

    Returns:
        The value, the default, or "" when neither is set

    Raises:
        ValueError: If required and not set
    """
    value = os.getenv(name, default)
    if required and not value:
        raise ValueError(f"Required environment variable {name} is not set")
    return value or ""
