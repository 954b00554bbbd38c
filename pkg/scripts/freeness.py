"""Single-trace limit constants for the S_N and GL(N, 2) families."""

import sys

from orblab.structure import builtin_seed, freeness_report

seed = builtin_seed(sys.argv[1] if len(sys.argv) > 1 else "heis:2")
for kind in ("S", "GL"):
    print(freeness_report(kind, seed).summary())
