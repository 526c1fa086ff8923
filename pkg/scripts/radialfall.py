#!/usr/bin/env python3
"""Launcher for the radialfall command-line interface.

Usage examples:
  python scripts/radialfall.py collapse --body earth
  python scripts/radialfall.py trajectory --r0 1 --mu 1 --samples 2 --floor 0.5 --format csv
"""

from __future__ import annotations

import pathlib
import sys

# Ensure repo root is on sys.path when running the script directly
REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.cli.app import main  # noqa: E402


if __name__ == "__main__":
    raise SystemExit(main())
