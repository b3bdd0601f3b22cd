#!/usr/bin/env python3
"""Generate data/fixtures.txt: high-precision Bessel zeros for the residual tables.

Every table cell whose zero lies beyond the in-process series range (nu*z > 200)
gets a true_zero row plus a scaled_value row holding the complementary scaled
function at that zero (scaled J' at a J zero, scaled J at a J' zero).
Values come from mpmath, which is independent of the C++ library.
"""
import argparse
import sys

import mpmath as mp

NUS = (1, 5, 10, 100, 1000)
MS = (1, 5, 10, 100, 1000)
X_BESSEL = 200
# Extra Y-family sample, used by the unit tests only.
EXTRA_Y = ((10, 3),)


def scaled_jprime(nu, x):
    z = x / nu
    d = (nu / x) * mp.besselj(nu, x) - mp.besselj(nu + 1, x)
    return mp.sqrt(mp.pi * nu / 2) * z * d / mp.root(z * z - 1, 4)


def scaled_j(nu, x):
    z = x / nu
    return mp.sqrt(mp.pi * nu / 2) * mp.root(z * z - 1, 4) * mp.besselj(nu, x)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=60)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    mp.mp.dps = args.digits + 30
    out = sys.stdout if args.out == "-" else open(args.out, "w")

    print("# Bessel zero fixtures generated by tools/gen_fixtures.py", file=out)
    print("# source: mpmath %s besseljzero/besselyzero at %d working digits" % (mp.__version__, mp.mp.dps), file=out)
    print("# format: family nu m true_zero|scaled_value digits value", file=out)
    fmt = lambda v: mp.nstr(v, args.digits, min_fixed=1, max_fixed=0)
    for fam, deriv in (("j", 0), ("jprime", 1)):
        for nu in NUS:
            for m in MS:
                x = mp.besseljzero(nu, m, derivative=deriv)
                if x <= X_BESSEL:
                    continue
                s = scaled_jprime(nu, x) if deriv == 0 else scaled_j(nu, x)
                print("%s %d %d true_zero %d %s" % (fam, nu, m, args.digits, fmt(x)), file=out)
                print("%s %d %d scaled_value %d %s" % (fam, nu, m, args.digits, fmt(s)), file=out)
                out.flush()
    for nu, m in EXTRA_Y:
        y = mp.besselyzero(nu, m)
        print("y %d %d true_zero %d %s" % (nu, m, args.digits, fmt(y)), file=out)


if __name__ == "__main__":
    main()
