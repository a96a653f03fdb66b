"""MCP tools for the braidsig server."""

from .bounds import register_bound_tools
from .braids import register_braid_tools

__all__ = ["register_tools"]


def register_tools(mcp_server) -> None:
    """Register all available tools with the MCP server."""
    register_braid_tools(mcp_server)
    register_bound_tools(mcp_server)
