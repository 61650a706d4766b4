#!/usr/bin/env python3
"""Regenerate the bundled newform fixtures under data/fixtures/.

Requires cypari2 (PARI/GP >= 2.15 with the modular forms package):

    pip install cypari2
    python3 scripts/gen_fixtures.py data/fixtures

Each fixture stores c(1)..c(M) as coordinate vectors in the power basis of
the stated field polynomial.  The coefficients come from mfeigenbasis; the
field polynomial is either PARI's own defining polynomial or the minimal
polynomial of c(2) when that gives a nicer presentation.
"""
import json
import sys
from fractions import Fraction

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9)

M = 200

# (level, orbit index in mfeigenbasis, label, use minimal polynomial of c(2)?)
TARGETS = [
    (11, 0, "11.2.a.a", False),
    (23, 0, "23.2.a.a", True),
    (97, 0, "97.2.a.a", False),
]


def coords_in_basis(coeff, poly, var, n):
    """Coordinates of a PARI polmod (or integer) in the power basis of poly."""
    lifted = pari.lift(coeff)
    out = []
    for i in range(n):
        c = pari.polcoef(lifted, i, var) if n > 1 else lifted
        out.append(Fraction(int(pari.numerator(c)), int(pari.denominator(c))))
    return out


def solve_row(rows, target):
    """Solve w * rows = target over Q (rows is an invertible n x n matrix)."""
    n = len(rows)
    aug = [[rows[j][i] for j in range(n)] + [target[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def fmt(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def build(level, idx, label, rebase):
    mf = pari(f"mfinit([{level},2],0)")
    forms = pari.mfeigenbasis(mf)
    f = forms[idx]
    poly = pari.mffields(mf)[idx]
    coeffs = pari.mfcoefs(f, M)  # index 0 is c(0)
    n = int(pari.poldegree(poly))
    y = pari("y")
    if n == 1:
        field = [0, 1]
        an = [[fmt(Fraction(int(c)))] for c in list(coeffs)[1:]]
        return field, an, "x"
    if rebase:
        # Present the field as Q[x]/(minpoly of c(2)) with x = c(2).
        c2 = coeffs[2]
        mp = pari.minpoly(c2)
        field = [int(pari.polcoef(mp, i)) for i in range(n + 1)]
        power = pari.Mod(1, poly)
        rows = []
        for _ in range(n):
            rows.append(coords_in_basis(power, poly, y, n))
            power = power * c2
        an = [[fmt(q) for q in solve_row(rows, coords_in_basis(c, poly, y, n))]
              for c in list(coeffs)[1:]]
        return field, an, "x = c(2)"
    field = [int(pari.polcoef(poly, i, y)) for i in range(n + 1)]
    an = [[fmt(q) for q in coords_in_basis(c, poly, y, n)] for c in list(coeffs)[1:]]
    return field, an, "x = PARI's generator y"


def main(outdir):
    for level, idx, label, rebase in TARGETS:
        field, an, gen = build(level, idx, label, rebase)
        doc = {
            "label": label,
            "level": level,
            "weight": 2,
            "field_poly": field,
            "an": an,
            "provenance": (
                f"Newform orbit {label} (weight 2, trivial character). Coefficients "
                f"c(1)..c({M}) computed with PARI/GP mfinit/mfeigenbasis through cypari2 "
                "2.2; "
                f"power basis generator: {gen}. Regenerate with scripts/gen_fixtures.py."
            ),
        }
        path = f"{outdir}/newform_{level}.json"
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        print("wrote", path, "degree", len(field) - 1)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures")
