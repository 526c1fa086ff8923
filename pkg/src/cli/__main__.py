"""Allow ``python -m src.cli``."""

from src.cli.app import main

if __name__ == "__main__":
    raise SystemExit(main())
