"""MCP server exposing braid invariants and signature-bound procedures."""

import structlog
from mcp.server.fastmcp import FastMCP

from ..config import get_settings
from ..tools import register_tools
from ..utils.exceptions import ConfigurationError
from ..utils.logging import setup_logging

logger = structlog.get_logger(__name__)

TRANSPORTS = ("stdio", "streamable-http", "sse")

INSTRUCTIONS = (
    "Braid words are whitespace-separated letters a<k> (positive) or A<k> "
    "(inverse), 1 <= k < strands, or signed integers. Signatures, Seifert "
    "matrices and bound procedures need positive words; rationals are "
    'returned as "p/q" strings.'
)


def create_mcp_server() -> FastMCP:
    """Build a FastMCP server with the braid and bound tools registered."""
    settings = get_settings()
    setup_logging()

    mcp = FastMCP(
        name="braidsig",
        instructions=INSTRUCTIONS,
        host=settings.server_host,
        port=settings.server_port,
        stateless_http=True,
    )
    register_tools(mcp)

    logger.info("MCP server created", host=settings.server_host, port=settings.server_port)
    return mcp


def run_server(transport: str = "streamable-http") -> None:
    """Serve until interrupted.

    Raises:
        ConfigurationError: If ``transport`` is not one FastMCP supports
    """
    if transport not in TRANSPORTS:
        raise ConfigurationError(
            f"Unknown transport {transport!r}; expected one of {', '.join(TRANSPORTS)}"
        )
    mcp = create_mcp_server()

    try:
        logger.info("Serving braid tools", transport=transport)
        mcp.run(transport=transport)
    except KeyboardInterrupt:
        logger.info("Server shutdown requested")
    except Exception as e:
        logger.error("Server error", transport=transport, error=str(e), exc_info=True)
        raise
    finally:
        logger.info("Server stopped")
