"""Write a theorem-b report for every presentation file in a directory.

    python scripts/run_examples.py data --out reports
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from qbx import cli


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("directory", type=Path)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    args = ap.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for path in sorted(args.directory.glob("*.json")):
        start = time.perf_counter()
        code = cli.main(["theorem-b", str(path), "--json", "--out", str(args.out / path.name)])
        print("%-24s exit %d  %.2fs" % (path.name, code, time.perf_counter() - start))
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
