#!/usr/bin/env python3
"""Print the unoriented meridian eigenvalue table with the distinctness scan.

    python3 scripts/eigen_table.py [MAX_SIZE]
"""

import sys

from skeinkit.cli import main

if __name__ == "__main__":
    size = sys.argv[1] if len(sys.argv) > 1 else "8"
    raise SystemExit(main(["eigen", "table", "--max-size", size, "--check-distinct"]))
