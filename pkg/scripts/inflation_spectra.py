#!/usr/bin/env python3
"""Launcher: puts the shared layer and the repository root on sys.path and runs the CLI."""
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path[:0] = [os.path.join(ROOT, "layers", "python"), ROOT]

from src.cli.app import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
