#!/usr/bin/env python3
"""Run the acceptance battery from a checkout; forwards extra CLI flags.

    python3 scripts/run_acceptance.py [--extended]
"""

import sys

from skeinkit.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["acceptance", "run"] + sys.argv[1:]))
