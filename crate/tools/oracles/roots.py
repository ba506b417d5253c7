"""Independent bisection oracle for the roots of p*sin(pi*x) + x*cos(pi*x) = 0.

Runs plain interval bisection in 50-digit arithmetic on [j-1/2, j]; shares no
code with the Rust solver. Prints values frozen into crates/core/tests.
"""
from mpmath import mp, mpf, sin, cos, pi

mp.dps = 50


def f(p, x):
    return p * sin(pi * x) + x * cos(pi * x)


def bisect(p, j):
    lo, hi = mpf(j) - mpf(1) / 2, mpf(j)
    flo = f(p, lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        fm = f(p, mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


for p in (mpf(1), mpf(2), mpf("0.5"), mpf(10)):
    roots = [bisect(p, j) for j in range(1, 11)]
    print(f"p = {p}")
    for j, r in enumerate(roots, 1):
        w = (p * p + r * r) / (p * (p + 1 / pi) + r * r)
        print(f"  j={j:2d} lambda={mp.nstr(r, 20)} w={mp.nstr(w, 20)}")
