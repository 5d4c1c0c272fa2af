#!/usr/bin/env python3
"""Regenerate crates/core/tests/common/reference.rs from mpmath (50 digits)."""
import random
import mpmath as mp

mp.mp.dps = 50
rng = random.Random(20140607)
out = []


def f(v):
    return repr(float(v))


def table(name, cols, rows):
    out.append(f"pub const {name}: &[[f64; {cols}]] = &[")
    for r in rows:
        out.append("    [" + ", ".join(f(v) for v in r) + "],")
    out.append("];\n")


# ln Gamma: [x, lnGamma(x)]
xs = [mp.mpf(10) ** mp.mpf(rng.uniform(-3, 4)) for _ in range(60)]
xs += [mp.mpf(v) for v in ("0.5", "0.9", "0.97", "1.03", "1.1", "1.6", "1.9", "1.999", "2.001", "2.2", "2.5", "3.5", "10.5", "170.5")]
table("LN_GAMMA", 2, [(x, mp.loggamma(x)) for x in xs])

# incomplete gamma: [s, x, P(s,x), Q(s,x), ln lower, ln upper]
rows = []
for _ in range(200):
    s = mp.mpf(rng.uniform(0.5, 200)) if rng.random() < 0.7 else mp.mpf(rng.uniform(0.5, 5))
    x = mp.mpf(rng.uniform(0, 10 * float(s))) if rng.random() < 0.5 else mp.mpf(rng.uniform(0, 2 * float(s) + 2))
    lo = mp.gammainc(s, 0, x)
    up = mp.gammainc(s, x, mp.inf)
    g = mp.gamma(s)
    rows.append((s, x, lo / g, up / g, mp.log(lo) if lo > 0 else mp.mpf("-inf"), mp.log(up)))
out.append("// [s, x, P, Q, ln lower, ln upper]")
table("INC_GAMMA", 6, rows)

# scaled Bessel I: [nu, x, exp(-x) I_nu(x)]
rows = []
for nu in ["-0.5", "-0.25", "0", "0.3", "0.5", "1", "1.5", "2.5", "3.7", "4.5", "8.5", "12", "17.5", "29.5"]:
    for x in ["1e-8", "1e-3", "0.5", "1", "1.999", "2", "3", "7.5", "10", "35", "50", "200", "700", "5000", "1e5"]:
        nu_, x_ = mp.mpf(nu), mp.mpf(x)
        rows.append((nu_, x_, mp.exp(-x_) * mp.besseli(nu_, x_)))
table("BESSEL_I_SCALED", 3, rows)

# Gaussian Q on [0, 6]
table("GAUSS_Q", 2, [(mp.mpf(k) / 10, mp.erfc(mp.mpf(k) / 10 / mp.sqrt(2)) / 2) for k in range(61)])

# 2F1 with z <= 0: [a, b, c, z, value]
rows = []
for _ in range(40):
    m = rng.randint(1, 8)
    xi = rng.randint(1, 16)
    z = -mp.mpf(10) ** mp.mpf(rng.uniform(-3, 3))
    rows.append((xi, m + xi, xi + 1, z, mp.hyp2f1(xi, m + xi, xi + 1, z)))
for a, b, c, z in [(0.7, 1.3, 2.1, -0.4), (2.5, 1.5, 3.2, -3.0), (1.0, 1.0, 2.0, -0.9), (0.5, 2.0, 1.5, -20.0)]:
    rows.append((a, b, c, z, mp.hyp2f1(a, b, c, z)))
table("HYP2F1", 5, rows)

print("// @generated by tools/gen_reference.py; do not edit by hand.")
print("// High-precision (mpmath, 50 digits) reference values.\n")
print("\n".join(out))
