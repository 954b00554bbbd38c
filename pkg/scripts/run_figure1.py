"""Regenerate the desk-scale b_n columns for the E8^3 seed.

    python scripts/run_figure1.py --gl-N 4 --nmax 4 --out figure1.csv
"""

import argparse
import csv
import sys

from orblab.cli import S_COLUMN_NOTE, figure1_data


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seed", default="e8cubed")
    p.add_argument("--gl-N", type=int, default=4)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--out")
    args = p.parse_args()

    rows = figure1_data(args.seed, args.nmax, args.gl_N, args.q)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    fh.write(f"# {S_COLUMN_NOTE}\n")
    w = csv.DictWriter(fh, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
