#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ test suites.

Everything here is evaluated with mpmath at 50 significant digits directly
from the closed-form definitions, independently of the C++ code paths.
Brute-force scans (grid / root bracketing) are used where the C++ side uses
a closed form.
"""
from fractions import Fraction as F

import mpmath as mp

mp.mp.dps = 50


def g(x, base=2):
    return mp.log(1 + mp.mpf(x)) / (2 * mp.log(base))


def jam_obj(h1, h2, p1, p2):
    h1, h2, p1, p2 = map(mp.mpf, (h1, h2, p1, p2))
    return g(p1 / (1 + p2)) - g(h1 * p1 / (1 + h2 * p2))


def golden_section_max(f, lo, hi, iters=300):
    lo, hi = mp.mpf(lo), mp.mpf(hi)
    r = (mp.sqrt(5) - 1) / 2
    a, b = hi - r * (hi - lo), lo + r * (hi - lo)
    for _ in range(iters):
        if f(a) < f(b):
            lo = a
        else:
            hi = b
        a, b = hi - r * (hi - lo), lo + r * (hi - lo)
    return (lo + hi) / 2


def show(label, v):
    print(f"{label:45s} {mp.nstr(v, 17)}")


# channel: standardize with exact rationals
hM, hW, sM, sW, Pt = (F(4), F(1)), (F(1), F(2)), F(2), F(1), (F(5), F(10))
print("standardize h      ", [hW[k] * sM / (hM[k] * sW) for k in range(2)])
print("standardize p_max  ", [hM[k] * Pt[k] / sM for k in range(2)])

# g
show("g(10) bits", g(10))
show("g(20) bits", g(20))
show("g(1/3) bits", g(mp.mpf(1) / 3))
show("g(1.5) bits", g(1.5))
show("g(2.5) bits", g(2.5))

# phi, exact
print("phi_{1} h=(.5,.5) P=(1,1)", F(1) - F(1, 2) / (1 + F(1, 2)))
print("phi_{12} h=(2,2) P=(1,1)", F(2) - F(4))

# region
h = (mp.mpf("0.1"), mp.mpf("0.2"))
show("b1 h=(.1,.2) P=(10,10)", g(10) - g(h[0] * 10 / (1 + h[1] * 10)))
show("b2", g(10) - g(h[1] * 10 / (1 + h[0] * 10)))
show("b12", g(20) - g(h[0] * 10 + h[1] * 10))
show("K=1 b1 h=.5 P=3", g(3) - g(1.5))

# rho, exact
print("rho h=(.1,.2) P=(10,10)", (1 + F(1, 10) * 10 + F(2, 10) * 10) / 21)
print("rho h=(.5,1.4) P=(3,5)", (1 + F(1, 2) * 3 + F(14, 10) * 5) / 9)
print("rho h=(.5,1.4) P=(3,0)", (1 + F(1, 2) * 3) / 4)

# max sum rate by exhaustive enumeration of all box corners (the optimum of a
# linear-fractional objective over a box sits on a corner)
def best_corner(hs, pm):
    best = None
    K = len(hs)
    for mask in range(1 << K):
        P = [pm[k] if mask >> k & 1 else 0 for k in range(K)]
        r = g(sum(P)) - g(sum(mp.mpf(hs[k]) * P[k] for k in range(K)))
        if best is None or r > best[0]:
            best = (r, P)
    return best

r, P = best_corner(("0.1", "0.2"), (10, 10))
show(f"maxsum h=(.1,.2) P*={P}", r)
r, P = best_corner(("0.1", "0.15"), (10, 10))
show(f"maxsum h=(.1,.15) P*={P}", r)
show("sum_rate h=(2,2) P=(1,1)", g(2) - g(4))

# jamming
show("jam obj h=(.4,1.4) (10,0)", jam_obj("0.4", "1.4", 10, 0))
for (h1, h2, p1, p2max) in (("0.4", "1.4", 10, 10), ("1.2", "1.4", 10, 20)):
    f = lambda x: jam_obj(h1, h2, p1, x)
    x = golden_section_max(f, 0, p2max)
    show(f"jam argmax p2 h=({h1},{h2}) p1={p1}", x)
    show(f"jam max rate", f(x))
    H1, H2 = mp.mpf(h1), mp.mpf(h2)
    D = H1 * H2 * ((H2 - 1) + (H2 - H1) * p1) * (H2 - 1)
    show("  D", D)
    show("  p(1) closed form", (-H2 * (1 - H1) + mp.sqrt(D)) / (H2 * (H2 - H1)))
show("jam obj h=(1.2,1.4) (10,3)", jam_obj("1.2", "1.4", 10, 3))
show("jam obj h=(.4,1.4) (10,.2)", jam_obj("0.4", "1.4", 10, "0.2"))
show("jam obj h=(.4,1.4) (10,.4)", jam_obj("0.4", "1.4", 10, "0.4"))
show("jam obj h=(.4,1.4) (10,.5)", jam_obj("0.4", "1.4", 10, "0.5"))
