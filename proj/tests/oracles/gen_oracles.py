#!/usr/bin/env python3
"""Regenerates oracles.json with sympy.

Values are computed from textbook formulas (Rodrigues, sympy's Quaternion,
plain matrix inversion, Taylor expansion), never by calling the C++ code.
The JSON is committed; rerun only when adding cases.
"""
import json
import pathlib

import sympy as sp
from sympy.algebras.quaternion import Quaternion

e = sp.Symbol("e", positive=True)


def series(expr, trunc):
    """Truncated expansion in e as [[exp, coeff], ...] plus trunc."""
    s = sp.series(expr, e, 0, trunc).removeO()
    poly = sp.Poly(sp.expand(s), e)
    terms = sorted(((m[0], c) for m, c in poly.terms() if c != 0), key=lambda t: t[0])
    return {"terms": [[str(k), str(sp.nsimplify(c))] for k, c in terms], "trunc": str(trunc)}


def matrix(m, trunc):
    return {"rows": m.rows, "cols": m.cols, "entries": [series(x, trunc) for x in m]}


def rodrigues(t, axis):
    # tan(theta/2) = t
    k = sp.Matrix([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    s, one_minus_c = 2 * t / (1 + t**2), 2 * t**2 / (1 + t**2)
    return sp.eye(3) + s * k + one_minus_c * k * k


def quad(x, d):
    a, b = sp.nsimplify(x).as_independent(sp.sqrt(d))
    return {"a": str(a), "b": str(sp.simplify(b / sp.sqrt(d))), "d": d}


def gauss_matrix(m):
    return [[str(sp.re(x)), str(sp.im(x))] for x in m]


def bracket(a, b):
    return a * b - b * a


def so3_root():
    L1 = sp.Matrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    L2 = sp.Matrix([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    L3 = sp.Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    E = L1 - sp.I * L2
    lam = sp.simplify((bracket(L3, E))[0, 2] / E[0, 2])  # alpha(L3)
    sigma = lambda x: -x.H
    U = sp.I * E - sp.I * sigma(E)
    V = E + sigma(E)
    W = bracket(U, V)
    alpha_val = sp.simplify(lam * (bracket(E, sigma(E))[1, 0] / L3[1, 0]))  # [E, sigma E] is a multiple of L3
    # [W, U] = lambda V fixes the rescaling c^2 = 1/lambda
    k = next(i for i, x in enumerate(V) if x != 0)
    lam_wu = sp.simplify(bracket(W, U)[k] / V[k])
    c = 1 / sp.sqrt(lam_wu)
    return {
        "E": gauss_matrix(E),
        "alpha_H": [str(sp.re(lam)), str(sp.im(lam))],
        "U": gauss_matrix(U),
        "V": gauss_matrix(V),
        "W": gauss_matrix(W),
        "negativity_value": str(alpha_val),
        "lambda": str(lam_wu),
        "c": str(c),
        "triple": {"H": gauss_matrix(c**2 * W), "U": gauss_matrix(c * U), "V": gauss_matrix(c * V)},
    }


def main():
    out = {}
    r2 = sp.sqrt(2)
    out["scalar"] = {
        "inv_1_plus_sqrt2": quad(sp.radsimp(1 / (1 + r2)), 2),
        "sign_3_minus_2sqrt2": int(sp.sign(3 - 2 * r2)),
        "sign_1_minus_sqrt2": int(sp.sign(1 - r2)),
    }
    out["series"] = {
        "inv_1_plus_e_trunc4": series(1 / (1 + e), 4),
        "inv_1_plus_e_trunc8": series(1 / (1 + e), 8),
        "sqrt_1_plus_e_trunc3": series(sp.sqrt(1 + e), 3),
        "sqrt_1_plus_e_trunc8": series(sp.sqrt(1 + e), 8),
        "inv_diag_00_trunc8": series((sp.diag(1 + e, 1).inv())[0, 0], 8),
    }
    z = (0, 0, 1)
    tilted = (sp.Rational(3, 5), sp.Rational(4, 5), 0)
    X = sp.Matrix([[0, e], [-e, 0]])
    out["matrix"] = {
        "rho_e_z": matrix(rodrigues(e, z), 8),
        "rho_e2_tilted": matrix(rodrigues(e**2, tilted), 8),
        "rho_half_z": matrix(rodrigues(sp.Rational(1, 2), z), 8),
        "cayley_2x2": matrix((sp.eye(2) + X) * (sp.eye(2) - X).inv(), 8),
    }
    quats = {
        "k": (0, 0, 0, 1),
        "half": (sp.Rational(1, 2),) * 4,
        "rational": (0, sp.Rational(3, 5), sp.Rational(4, 5), 0),
        "mixed": (sp.Rational(1, 3), sp.Rational(2, 3), sp.Rational(2, 3), 0),
    }
    out["spin_pi"] = {
        name: {"q": [str(c) for c in q], "matrix": [str(x) for x in Quaternion(*q).to_rotation_matrix()]}
        for name, q in quats.items()
    }
    out["lie"] = {"so3": so3_root()}
    path = pathlib.Path(__file__).with_name("oracles.json")
    path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
