#!/usr/bin/env python3
"""Independent oracle for the C++ kernel tests.

Builds the two-time Hamiltonian pair in sympy from scratch (no shared code
with the C++ implementation) and evaluates reference quantities exactly.
Frozen outputs land in expected.json; the C++ tests assert those strings.
"""

import json
import random
from fractions import Fraction

import sympy as sp

q1, p1, q2, p2, t, s = sp.symbols("q1 p1 q2 p2 t s")
k0, k1, kinf, th1, th2 = sp.symbols("k0 k1 kinf th1 th2")

kappa = sp.Rational(1, 4) * ((k0 + k1 + th1 + th2 - 1) ** 2 - kinf**2)


def half(q, p, tt, ss):
    pre = -(q * (q - 1) * (q - tt) * (q - ss)) / (t * (t - 1) * (t - s))
    brace = (
        p**2
        + kappa / (q * (q - 1))
        - ((th1 - 1) / (q - tt) + th2 / (q - ss) + k0 / q + k1 / (q - 1)) * p
    )
    return pre, brace


def hamiltonian_one():
    pre1, brace1 = half(q1, p1, t, s)
    pre2, brace2 = half(q2, p2, t, s)
    return (
        pre1 * (q2 - t) / (q1 - q2) * brace1
        + pre2 * (q1 - t) / (q2 - q1) * brace2
    )


H1 = hamiltonian_one()
swap = {q1: q2, q2: q1, p1: p2, p2: p1, t: s, s: t, th1: th2, th2: th1}
H2 = H1.subs(swap, simultaneous=True)

point = {
    q1: sp.Rational(1, 2),
    p1: sp.Rational(2, 3),
    q2: sp.Integer(3),
    p2: sp.Rational(-1, 5),
    t: sp.Rational(1, 7),
    s: sp.Integer(4),
    k0: sp.Rational(1, 3),
    k1: sp.Integer(-2),
    kinf: sp.Rational(5, 2),
    th1: sp.Rational(7, 5),
    th2: sp.Rational(-1, 2),
}

out = {
    "point": {str(v): str(r) for v, r in point.items()},
    "H1_at_point": str(sp.nsimplify(H1.subs(point))),
    "H2_at_point": str(sp.nsimplify(H2.subs(point))),
    "dH1_dp1_at_point": str(sp.diff(H1, p1).subs(point)),
    "dH1_dq1_at_point": str(sp.diff(H1, q1).subs(point)),
    "kappa_at_point": str(kappa.subs(point)),
}


def bracket(f, g):
    return (
        sp.diff(f, q1) * sp.diff(g, p1)
        - sp.diff(f, p1) * sp.diff(g, q1)
        + sp.diff(f, q2) * sp.diff(g, p2)
        - sp.diff(f, p2) * sp.diff(g, q2)
    )


# Which sign makes E = dH1/ds - dH2/dt + sign*{H1,H2} a function of (t,s) only?
# Spot-check the four phase gradients at random rational points.
rng = random.Random(20240817)


def random_point():
    def r():
        return sp.Rational(rng.randint(-40, 40), rng.randint(1, 17))

    while True:
        pt = {v: r() for v in (q1, p1, q2, p2, t, s, k0, k1, kinf, th1, th2)}
        bad = (
            pt[q1] == pt[q2]
            or pt[t] in (0, 1)
            or pt[s] in (0, 1)
            or pt[t] == pt[s]
            or pt[q1] in (0, 1, pt[t], pt[s])
            or pt[q2] in (0, 1, pt[t], pt[s])
        )
        if not bad:
            return pt


E_base = sp.diff(H1, s) - sp.diff(H2, t)
PB = bracket(H1, H2)
signs = {}
for label, sgn in (("plus", 1), ("minus", -1)):
    E = E_base + sgn * PB
    grads = [sp.diff(E, v) for v in (q1, p1, q2, p2)]
    ok = True
    for _ in range(3):
        pt = random_point()
        vals = [g.subs(pt) for g in grads]
        if any(v != 0 for v in vals):
            ok = False
            break
    signs[label] = ok
out["compatibility_sign"] = signs

with open("expected.json", "w") as fh:
    json.dump(out, fh, indent=1)
print(json.dumps(out, indent=1))
