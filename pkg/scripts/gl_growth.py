"""f_n and b_n for GL(N, q) against the subset-orbit bounds, plus log b_n / n^2.

    python scripts/gl_growth.py --Nmax 5 --nmax 4 --seed series:1,1,1
"""

import argparse

from orblab.cli import resolve_seed
from orblab.groups import build_group
from orblab.orbits import bn_table, fn_table, gl_fn_bounds, growth_exponent


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--Nmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--seed", default="e8cubed")
    args = p.parse_args()

    a, _ = resolve_seed(args.seed, args.nmax)
    print("N  n  f_n  lower  upper  b_n")
    last_b = None
    for N in range(1, args.Nmax + 1):
        G = build_group("GL", N, args.q)
        f = fn_table(G, args.nmax).counts()
        f += [0] * (args.nmax + 1 - len(f))  # fewer points than n
        b = bn_table(G, a, args.nmax).counts()
        for n in range(1, args.nmax + 1):
            bd = gl_fn_bounds(n, args.q)
            flag = "" if N < n or bd.lower <= f[n] <= bd.upper else "  <- outside bounds"
            print(f"{N}  {n}  {f[n]}  {bd.lower}  {bd.upper}  {b[n]}{flag}")
        last_b = b
    print("\nlog b_n / n^2 at N =", args.Nmax)
    for est in growth_exponent(last_b):
        print(f"  n={est.n}  alpha={float(est.alpha):.4f}")


if __name__ == "__main__":
    main()
