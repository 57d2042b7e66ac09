#!/usr/bin/env python3
"""Writes the demo configs in configs/ with reference values computed in
50-digit arithmetic directly from the closed-form expressions.

Run from the repository root:  python3 tools/make_goldens.py
"""
import json
import pathlib

import mpmath as mp

mp.mp.dps = 50


def f(x):
    return float(x)


def exp_morse(a, b, alpha, beta, levels):
    a, b, alpha, beta = map(mp.mpf, (a, b, alpha, beta))
    offset = 4 * alpha * (alpha + beta + 1) + 2 * beta + 1
    return {
        "energy": [f(-b * b) for _ in levels],
        "v0": [f((a - n) ** 2 + offset) for n in levels],
    }


def rational(a, b, alpha, beta, kappa):
    a, b, alpha, beta, kappa = map(mp.mpf, (a, b, alpha, beta, kappa))
    bp2 = b * b - 2 * (2 * alpha * (alpha + beta + 1) + beta + 1) * kappa ** 2
    c = b * (2 * a + 1) + (beta + 1) * kappa
    delta = 2 * mp.sqrt(bp2 + kappa ** 2)
    return bp2, c, delta, kappa


def eps(n, c, delta, kappa):
    ratio = (2 * c - ((2 * n + 1) * delta + 2 * (n * n + n + 1) * kappa)) / (delta + (2 * n + 1) * kappa)
    return -ratio ** 2 / 4


def rational_morse(a, b, alpha, beta, kappa, levels):
    bp2, c, delta, k = rational(a, b, alpha, beta, kappa)
    mu = ((2 * c - k) / (delta + k) - 1) / 2
    return {
        "energy": [f(eps(n, c, delta, k)) for n in levels],
        "mu_ground": f(mu),
        "b_prime_squared": f(bp2),
    }


def pdm_coulomb(a, b, alpha, beta, kappa, levels):
    _, c, delta, k = rational(a, b, alpha, beta, kappa)
    z = c / 2 - k / 4
    ls, lams = [], []
    for n in levels:
        l = (2 * c - (2 * (n + 1) * delta + (2 * n * n + 4 * n + 3) * k)) / (2 * (delta + (2 * n + 1) * k))
        lam = -((2 * z - (n * n + (l + 1) * (2 * n + 1)) * k) / (2 * (n + l + 1))) ** 2
        ls.append(f(l))
        lams.append(f(lam))
    return {"z_charge": [f(z) for _ in levels], "l": ls, "lambda": lams}


DEMOS = {
    "exp_morse.json": dict(model="exp-morse", A=2.5, B=1.0, alpha=0.3, beta=-0.2, levels=[0, 1, 2]),
    "rational_morse.json": dict(model="rational-morse", A=2.0, B=1.0, alpha=0.0, beta=0.0, kappa=0.1, levels=[0, 1]),
    "pdm_coulomb.json": dict(model="pdm-coulomb", A=2.0, B=1.0, alpha=0.0, beta=0.0, kappa=0.1, levels=[0, 1]),
    "hydrogen_limit.json": dict(model="pdm-coulomb", A=1.5, B=1.0, alpha=0.0, beta=0.0, kappa=1e-7, levels=[0]),
}


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "configs"
    out.mkdir(exist_ok=True)
    for name, cfg in DEMOS.items():
        args = (cfg["A"], cfg["B"], cfg["alpha"], cfg["beta"])
        if cfg["model"] == "exp-morse":
            expected = exp_morse(*args, cfg["levels"])
        elif cfg["model"] == "rational-morse":
            expected = rational_morse(*args, cfg["kappa"], cfg["levels"])
        else:
            expected = pdm_coulomb(*args, cfg["kappa"], cfg["levels"])
        doc = dict(cfg, expected=expected)
        (out / name).write_text(json.dumps(doc, indent=2) + "\n")
        print("wrote", out / name)


if __name__ == "__main__":
    main()
