"""Test package for Macro-Man MCP Server."""
