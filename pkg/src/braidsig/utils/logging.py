"""Logging for braidsig.

Everything goes to stderr: stdout carries the JSON/CSV results of the
command line and the JSON-RPC stream of the stdio server.
"""

import logging

import structlog
from rich.console import Console
from rich.logging import RichHandler
from structlog.processors import CallsiteParameter, CallsiteParameterAdder

from ..config import get_settings


def _processors(debug: bool) -> list:
    renderer = structlog.dev.ConsoleRenderer() if debug else structlog.processors.JSONRenderer()
    return [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        # enumeration workers log from their own processes
        CallsiteParameterAdder({CallsiteParameter.PROCESS}),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
        renderer,
    ]


def setup_logging(log_level: str | None = None) -> None:
    """Configure structlog over a rich stderr handler.

    Args:
        log_level: Overrides ``LOG_LEVEL`` when given (``--log-level``)
    """
    settings = get_settings()
    level = getattr(logging, (log_level or settings.log_level).upper())

    structlog.configure(
        processors=_processors(settings.debug),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[
            RichHandler(
                console=Console(stderr=True),
                rich_tracebacks=True,
                show_path=False,
            )
        ],
        force=True,
    )

    logging.getLogger("braidsig").setLevel(level)
    # the MCP SDK is chatty at INFO; only surface it when debugging
    logging.getLogger("mcp").setLevel(logging.DEBUG if settings.debug else logging.WARNING)


def init_worker_logging(log_level: int) -> None:
    """Pool initializer: workers inherit the parent's level, not their own defaults."""
    setup_logging(logging.getLevelName(log_level))
