#!/usr/bin/env python3
"""Run braidsig without installing it.

``python main.py`` serves the MCP tools over streamable HTTP;
``python main.py --stdio`` serves them over stdio.
"""

import sys
from pathlib import Path

# Add src to Python path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))

from braidsig.cli import run

if __name__ == "__main__":
    sys.exit(run(["serve", *sys.argv[1:]]))
