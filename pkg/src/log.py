"""Logging helpers and the line-delimited solve event log.

Library modules obtain loggers through `get_logger(__name__)` and never print.
Solve progress is reported with `emit(logger, event, **fields)`; the records
are only rendered when `enable_event_log()` attached a handler (``--verbose``).
"""

from __future__ import annotations

import json
import logging
import sys
from typing import IO, Any

LOGGER_NAME = "wcm"


def get_logger(name: str) -> logging.Logger:
    """Return a child of the package logger."""
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


class JsonLinesFormatter(logging.Formatter):
    """Render each record as one JSON object per line."""

    def format(self, record: logging.LogRecord) -> str:
        event = getattr(record, "event", None)
        payload: dict[str, Any] = {"event": event or "message", "level": record.levelname.lower()}
        if event is None:
            payload["message"] = record.getMessage()
        payload.update(getattr(record, "fields", {}))
        return json.dumps(payload, default=str)


def enable_event_log(stream: IO[str] | None = None, level: int = logging.INFO) -> logging.Handler:
    """Attach a JSON-lines handler to the package logger.

    Args:
        stream: Destination stream. Defaults to stderr.
        level: Minimum level to emit.

    Returns:
        The installed handler (pass it to `disable_event_log` to detach).
    """
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(JsonLinesFormatter())
    root = logging.getLogger(LOGGER_NAME)
    root.addHandler(handler)
    root.setLevel(level)
    return handler


def disable_event_log(handler: logging.Handler) -> None:
    """Detach a handler installed by `enable_event_log`."""
    root = logging.getLogger(LOGGER_NAME)
    root.removeHandler(handler)
    if not root.handlers:
        root.setLevel(logging.NOTSET)


def emit(logger: logging.Logger, event: str, **fields: Any) -> None:
    """Emit a structured solve event."""
    if logger.isEnabledFor(logging.INFO):
        logger.info(event, extra={"event": event, "fields": fields})
