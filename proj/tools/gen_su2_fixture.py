#!/usr/bin/env python3
"""Writes data/su2_tables.json: the su(2) reference tables in the scalar grammar (p = q^(1/2))."""
import json
import pathlib
import sys

import sympy as sp

p = sp.symbols("p", positive=True)
q = p**2
lam = q - 1 / q


def qn(m, base):
    return (base ** (2 * m) - 1) / (base**2 - 1)


def qi(m):
    return qn(m, 1 / q)


def qq(m):
    return qn(m, q)


def poly_str(expr):
    poly = sp.Poly(sp.expand(expr), p)
    terms = []
    for (e,), c in sorted(poly.terms(), key=lambda t: -t[0][0]):
        c = sp.Rational(c)
        if e == 0:
            t = str(c)
        else:
            mono = "p" if e == 1 else f"p^{e}"
            t = mono if c == 1 else "-" + mono if c == -1 else f"{c}*{mono}"
        terms.append(t if not terms or t.startswith("-") else "+" + t)
    return "".join(terms) or "0"


def s(expr):
    num, den = sp.fraction(sp.cancel(sp.together(sp.sympify(expr))))
    if den == 1:
        return poly_str(num)
    return f"({poly_str(num)})/({poly_str(den)})"


def m(rows, factor=1):
    return [[s(factor * x) for x in row] for row in rows]


two = qi(2)
pattern = [[0, q, 0], [1 / q, 0, 0], [0, 0, q / two]]

tables = {
    "root_order": 2,
    "basis": ["chi_+", "chi_-", "chi_3"],
    "fundamental": {
        "H": m([[-1, 0], [0, 1]]),
        "X+": m([[0, 0], [-1, 0]]),
        "X-": m([[0, -1], [0, 0]]),
    },
    "R": m([[q, 0, 0, 0], [0, 1, 0, 0], [0, lam, 1, 0], [0, 0, 0, q]], q ** sp.Rational(-1, 2)),
    "fn": {
        "chi_0": m([[1, 0], [0, 1]], -lam * qq(sp.Rational(1, 2)) * qi(sp.Rational(3, 2))),
        "chi_3": m([[-1, 0], [0, 1 / q**2]], 1 / two),
        "chi_+": m([[0, 0], [-1 / q, 0]]),
        "chi_-": m([[0, -1 / q], [0, 0]]),
        "u": m([[1, 0], [0, q**2]], q ** sp.Rational(-5, 2)),
        "eta00": s(q ** sp.Rational(-1, 2) * two * qq(sp.Rational(1, 2)) ** 2 * qi(sp.Rational(3, 2)) ** 2),
        "eta": m(pattern, q ** sp.Rational(-7, 2)),
        "index": s(q ** sp.Rational(-9, 2) / two),
        "casimir": m([[1, 0], [0, 1]], qi(3) / (qq(2) * two)),
    },
    "canonical": m(pattern, q + 1 / q),
    "ad": {
        "chi_0": m([[1, 0, 0], [0, 1, 0], [0, 0, 1]], -lam * two),
        "chi_3": m([[1 / q, 0, 0], [0, -q, 0], [0, 0, -lam]]),
        "chi_+": m([[0, 0, -q * two], [0, 0, 0], [0, 1 / q, 0]]),
        "chi_-": m([[0, 0, 0], [0, 0, two / q], [-1 / q, 0, 0]]),
        "u": m([[1 / q**2, 0, 0], [0, 1 / q**6, 0], [0, 0, 1 / q**4]]),
        "eta00": s(lam**2 * two**2 * qi(3) / q**2),
        "eta": m(pattern, qi(4) / q**3),
        "index": s(qi(4) / (q**4 * two)),
        "casimir": m([[1, 0, 0], [0, 1, 0], [0, 0, 1]], qi(4) / two),
    },
    # X ad Y = sum c Z, over {chi_0, chi_+, chi_-, chi_3}
    "adj_basis": [
        {"x": x, "y": y, "z": z, "c": s(c)}
        for (x, y, z, c) in [
            ("chi_0", "chi_+", "chi_+", -lam * two),
            ("chi_0", "chi_-", "chi_-", -lam * two),
            ("chi_0", "chi_3", "chi_3", -lam * two),
            ("chi_3", "chi_3", "chi_3", -lam),
            ("chi_+", "chi_-", "chi_3", two / q),
            ("chi_-", "chi_+", "chi_3", -two / q),
            ("chi_3", "chi_+", "chi_+", 1 / q),
            ("chi_3", "chi_-", "chi_-", -q),
            ("chi_+", "chi_3", "chi_+", -q),
            ("chi_-", "chi_3", "chi_-", 1 / q),
        ]
    ],
    # metric in the basis {chi_-, s chi_3, chi_+} with s^2 = [2]_{1/q}/q, up to scale
    "so_q2_3": {"s_squared": s(two / q), "metric": m([[0, 0, 1 / q], [0, 1, 0], [q, 0, 0]])},
    # spin-j central values: rho_j(chi_0) = mu I, rho_j(Q') = casimir I
    "spin_j": {
        label: {
            "mu": s(-lam * qq(j) * qi(j + 1)),
            "casimir": s(qq(2 * j) * qi(2 * (j + 1)) / (qq(2) * two)),
        }
        for label, j in [("1/2", sp.Rational(1, 2)), ("1", sp.Integer(1))]
    },
    "classical": {"fn": {"index": "1/2", "casimir": "3/4"}, "ad": {"index": "2", "casimir": "2"}},
}

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "su2_tables.json")
out.write_text(json.dumps(tables, indent=1) + "\n")
