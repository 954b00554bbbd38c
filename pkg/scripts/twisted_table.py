"""Lightest twisted sector of GL(N, q) versus (q-1) N c / 32."""

import argparse
from fractions import Fraction

from orblab.twisted import orbifold_limit_report


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--Nmax", type=int, default=5)
    p.add_argument("--c", type=Fraction, default=Fraction(24))
    args = p.parse_args()

    rep = orbifold_limit_report("GL", args.c, range(2, args.Nmax + 1), q=args.q)
    print("N  min_rho  bound")
    for N, rho, bound in rep.rows:
        print(f"{N}  {rho}  {bound}")
    print(rep.verdict)


if __name__ == "__main__":
    main()
