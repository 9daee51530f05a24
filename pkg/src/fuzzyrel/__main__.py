# src/fuzzyrel/__main__.py
# `python -m fuzzyrel ...` runs the same front door as the console script.
from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
