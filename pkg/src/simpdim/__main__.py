"""Main entry point for the simpdim package."""

import sys

from simpdim.cli import main

if __name__ == "__main__":
    sys.exit(main())
