"""Graded dimensions of the dual for the flip and the named examples,
next to the binomial row they should match when a skew order exists.

    python scripts/dual_dimensions.py --max-flip 6
"""

from __future__ import annotations

import argparse
import time

from qbx.corpus import flip, larger_examples, named_examples
from qbx.koszul import check_frobenius, koszul_dual, exterior_dims
from qbx.presentation import check_axioms
from qbx.rewriting import find_skew_order


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-flip", type=int, default=6)
    args = ap.parse_args(argv)

    cases = dict(named_examples())
    cases.update(larger_examples())
    cases.update({"flip-%d" % n: flip(n) for n in range(1, args.max_flip + 1)})
    for label, p in cases.items():
        ax = check_axioms(p)
        if not (ax.binomial.ok and ax.single_occurrence.ok):
            print("%-22s n=%d  skipped (%s)" % (label, p.n, ax.single_occurrence.witness or ax.binomial.witness))
            continue
        start = time.perf_counter()
        fv = check_frobenius(koszul_dual(p))
        skew = bool(find_skew_order(p))
        print("%-22s n=%d  skew=%-5s dims=%s binomial=%s frobenius=%s  %.2fs" % (
            label, p.n, skew, list(fv.dims.dims), exterior_dims(p.n), fv.holds, time.perf_counter() - start))
    return 0


if __name__ == "__main__":
    main()
