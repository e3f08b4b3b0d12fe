#!/usr/bin/env python3
"""Run script for the Schreier/Baernstein command-line tool."""

import sys
from pathlib import Path

ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT))

from cli.commands import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
