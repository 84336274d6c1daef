#!/usr/bin/env python3
"""Independent count of critical points for the twisted cubic seen by the two
explicit cameras in tests/data/two_view_example.json.

The image in the chart x0 = 1 of each P^2 is
  view 1: ((t + 3t^3) / (1 + 2t^3), (t^2 + 5t^3) / (1 + 2t^3))
  view 2: ((t + 11t^3) / (1 + 7t^3), (t^2 + 13t^3) / (1 + 7t^3))
and the critical points of the squared distance to a data point are the
roots of the numerator of its derivative, with poles cancelled by sympy.
The count is the number of distinct complex roots.
"""

import sys

import sympy as sp

t = sp.symbols("t")


def views():
    return [
        ((t + 3 * t**3) / (1 + 2 * t**3), (t**2 + 5 * t**3) / (1 + 2 * t**3)),
        ((t + 11 * t**3) / (1 + 7 * t**3), (t**2 + 13 * t**3) / (1 + 7 * t**3)),
    ]


def count(u):
    dist = sum((x - ux) ** 2 for view, uv in zip(views(), u) for x, ux in zip(view, uv))
    num, _ = sp.fraction(sp.cancel(sp.together(sp.diff(dist, t))))
    poly = sp.Poly(num, t)
    return sp.Poly(sp.quo(poly, sp.gcd(poly, poly.diff(t))), t).degree()


def main():
    data = [
        [(sp.Rational(1, 2), sp.Rational(-3)), (sp.Rational(7, 5), sp.Rational(2, 9))],
        [(sp.Rational(-4, 3), sp.Rational(5, 7)), (sp.Rational(3), sp.Rational(-1, 8))],
        [(sp.Rational(2), sp.Rational(9, 4)), (sp.Rational(-6, 11), sp.Rational(1, 3))],
    ]
    counts = [count(u) for u in data]
    print("critical point counts:", counts)
    if counts != [16, 16, 16]:
        print("expected 16 for every data point")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
