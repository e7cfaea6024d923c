#!/usr/bin/env python3
"""
Command-line wrapper for the amspec package.

Runs the CLI from a source checkout without installing the package.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

from amspec.cli.cli import main

if __name__ == "__main__":
    sys.exit(main())
