#!/usr/bin/env python3
"""stdio entry point for MCP clients that launch braidsig as a subprocess.

stdout is reserved for JSON-RPC; failures are reported on stderr.
"""

import sys
from pathlib import Path

# Add src to Python path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))

from braidsig.core.server import run_server
from braidsig.utils.exceptions import BraidsigError


def main() -> int:
    try:
        run_server("stdio")
    except BraidsigError as e:
        print(f"braidsig: {e.error_code}: {e.message}", file=sys.stderr)
        return 2
    except Exception as e:
        print(f"braidsig server failed: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
