#!/usr/bin/env python3
"""Freeze reference values for the C++ tests.

Everything here is computed with mpmath at 40 digits, independently of the
library: series are summed term by term, integrals by mpmath.quad, and
polylogarithms by mpmath.polylog. Output: oracle_values.hpp next to this file.

    python3 tests/oracles/generate.py
"""

from pathlib import Path

from mpmath import mp, mpf, log, pi, zeta, catalan, euler, polylog, quad, digamma, fsum

mp.dps = 40

OUT = Path(__file__).with_name("oracle_values.hpp")


def li2(x):
    return polylog(2, x)


def li3(x):
    return polylog(3, x)


def skew_list(n_max):
    """H_0^-, ..., H_n_max^- exactly (as mpf at 40 digits)."""
    out = [mpf(0)]
    s = mpf(0)
    for k in range(1, n_max + 1):
        s += mpf((-1) ** (k - 1)) / k
        out.append(s)
    return out


N_SERIES = 3000
SKEW = skew_list(N_SERIES + 2)
L2 = log(2)


def series_sum(coef, t, shift=0, n_terms=N_SERIES):
    t = mpf(t)
    return t**shift * fsum(coef(n) * t**n for n in range(n_terms))


SERIES = {
    "GF_SKEW": (lambda n: SKEW[n], 0),
    "GF_CENTERED": (lambda n: SKEW[n] - L2, 0),
    "SKEW_OVER_N": (lambda n: SKEW[n] / n if n else mpf(0), 0),
    "CENTERED_OVER_N": (lambda n: (SKEW[n] - L2) / n if n else mpf(0), 0),
    "CENTERED_SHIFT": (lambda n: (SKEW[n] - L2) / (n + 1), 1),
    "SKEW_SQ": (lambda n: SKEW[n] ** 2, 0),
    "CENTERED_SQ": (lambda n: (SKEW[n] - L2) ** 2, 0),
    "CENTERED_SQ_SHIFT": (lambda n: (SKEW[n] - L2) ** 2 / (n + 1), 1),
    "SKEW_OVER_NSQ": (lambda n: SKEW[n] / (n + 1) ** 2 if n else mpf(0), 1),
}


def skew_mu(n, mu):
    mu = mpf(mu)
    return fsum((-mu) ** (k - 1) / k for k in range(1, n + 1))


def mu_series(kind, mu, x, n_terms=1500):
    mu, x = mpf(mu), mpf(x)
    total = mpf(0)
    inner = mpf(0)
    h = mpf(0)
    for n in range(1, n_terms):
        h += (-mu) ** (n - 1) / n
        sign = (-1) ** (n - 1)
        if kind == "MU_LEWIN":
            total += sign * mu * h * x ** (n + 1) / (n + 1)
        elif kind == "MU_DILOG":
            total += sign * mu * h * x**n / n
        else:
            inner += h / n
            total += sign * mu * inner * x**n / n
    return total


def ramanujan_odd(x, n_terms=1500):
    x = mpf(x)
    total, odd = mpf(0), mpf(0)
    for j in range(1, n_terms):
        m = 2 * j - 1
        odd += mpf(1) / m
        total += 2 * odd * x**m / m
    return total


def J(x):
    return quad(lambda t: li2(t) / (1 - t), [0, x])


def eq17_series(x):
    # sum (H_n^- - log 2)^2 x^(n+1)/(n+1), summed directly.
    coef, shift = SERIES["CENTERED_SQ_SHIFT"]
    return series_sum(coef, x, shift)


def fmt(v):
    return mp.nstr(mpf(v), 25, min_fixed=-5, max_fixed=5)


def emit_table(lines, name, rows, fields):
    lines.append(f"inline constexpr {fields} {name}[] = {{")
    for row in rows:
        lines.append("    {" + ", ".join(fmt(v) for v in row) + "},")
    lines.append("};")
    lines.append("")


def main():
    lines = [
        "// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.",
        "#ifndef SKEWLOG_TESTS_ORACLE_VALUES_HPP",
        "#define SKEWLOG_TESTS_ORACLE_VALUES_HPP",
        "",
        "namespace oracle {",
        "",
        "struct P1 {",
        "    double x;",
        "    double value;",
        "};",
        "",
        "struct P2 {",
        "    double mu;",
        "    double x;",
        "    double value;",
        "};",
        "",
    ]

    consts = {
        "log2": L2,
        "pi": pi,
        "pi_sq_over_6": pi**2 / 6,
        "pi_sq_over_12": pi**2 / 12,
        "zeta3": zeta(3),
        "catalan": catalan,
        "euler_gamma": euler,
        "li2_half": li2(mpf("0.5")),
        "li3_half": li3(mpf("0.5")),
        "li2_minus1": li2(-1),
        "li3_minus1": li3(-1),
    }
    for k, v in consts.items():
        lines.append(f"inline constexpr double {k} = {fmt(v)};")
    lines.append("")

    # Endpoint and integral constants, each from its closed formula.
    z3 = zeta(3)
    endpoint = {
        "eq4": mpf(-0.5),
        "eq9": pi**2 / 12 - L2**2 / 2,
        "eq10": pi**2 / 12 + L2**2 / 2,
        "eq15": pi**2 / 24,
        "eq16": L2,
        "eq18": mpf(3) / 2 * z3 - pi**2 / 6 * L2 - L2**3 / 3,
        "eq19": pi**2 / 12 * L2 - mpf(3) / 4 * z3 - L2**3 / 3,
        "eq31": mpf(7) / 8 * L2**2 + pi / 8 * L2 - catalan / 2 - pi**2 / 48,
        "eq32": pi**2 / 12 * L2 + L2**3 / 3 - z3 / 2,
        "j_minus1": pi**2 / 12 * L2 - z3 / 4,
    }
    for k, v in endpoint.items():
        lines.append(f"inline constexpr double {k} = {fmt(v)};")
    lines.append("")

    pts = [-1, -0.99, -0.9, -0.75, -0.6, -0.5, -0.3, -0.1, 0.1, 0.25, 0.3, 0.5, 0.6, 0.75, 0.9, 0.99, 1]
    emit_table(lines, "li2", [(x, li2(mpf(x))) for x in pts], "P1")
    emit_table(lines, "li3", [(x, li3(mpf(x))) for x in pts], "P1")
    real_pts = [-18, -3, -1.5, -1.01]
    emit_table(lines, "li2_real", [(x, li2(mpf(x)).real) for x in real_pts], "P1")
    emit_table(lines, "li3_real", [(x, li3(mpf(x)).real) for x in real_pts], "P1")

    series_pts = [-0.9, -0.5, -0.1, 0.1, 0.5, 0.9]
    for tag, (coef, shift) in SERIES.items():
        emit_table(lines, "series_" + tag.lower(), [(t, series_sum(coef, t, shift)) for t in series_pts], "P1")

    mu_pts = [(-0.8, -0.9), (-0.3, -0.4), (0.2, 0.3), (0.5, 0.4), (0.7, 0.8), (1.0, -0.9), (1.0, 0.8)]
    for kind in ("MU_LEWIN", "MU_DILOG", "MU_TRILOG"):
        emit_table(lines, "series_" + kind.lower(), [(m, x, mu_series(kind, m, x)) for m, x in mu_pts], "P2")
    emit_table(lines, "series_ramanujan_odd", [(x, ramanujan_odd(x)) for x in [-0.6, -0.2, 0.3, 0.6, 0.9]], "P1")

    # Closed forms written out independently of the library.
    eq24 = [(m, x, li2((1 + mpf(m)) * x / (1 + mpf(x))) - li2(mpf(x) / (1 + mpf(x))))
            for m, x in mu_pts]
    emit_table(lines, "closed_eq24", [(m, x, v.real) for m, x, v in eq24], "P2")
    eq28 = [(m, x, li3((1 + mpf(m)) * x / (1 + mpf(x))) - li3(mpf(x) / (1 + mpf(x))))
            for m, x in mu_pts]
    emit_table(lines, "closed_eq28", [(m, x, v.real) for m, x, v in eq28], "P2")

    j_pts = [-1, -0.9, -0.5, -0.25, 0, 0.25, 0.3, 0.5, 0.7, 0.9, 0.95]
    emit_table(lines, "int_li2_over_1mt", [(x, J(mpf(x))) for x in j_pts], "P1")
    eq17_pts = [-0.9, -0.5, 0.3, 0.6, 0.9]
    emit_table(lines, "eq17", [(x, eq17_series(x)) for x in eq17_pts], "P1")

    # g(z) and G(z) by 2-D mpmath quadrature at a few interior points.
    mp.dps = 20
    g_pts = [-0.99, -0.5, 0, 0.5, 0.9]
    g_rows = [(z, quad(lambda x, y: 1 / ((1 - x * y * z) * (1 + x) * (1 + y)), [0, 1], [0, 1])) for z in g_pts]
    G_pts = [-0.9, -0.5, 0.5, 0.9]
    G_rows = [(z, quad(lambda x, y: -log(1 - x * y * z) / (x * y * (1 + x) * (1 + y)), [0, 1], [0, 1]))
              for z in G_pts]
    mp.dps = 40
    emit_table(lines, "double_integral_g", g_rows, "P1")
    emit_table(lines, "double_integral_bigG", G_rows, "P1")

    emit_table(lines, "digamma_half_diff",
               [(n, digamma(mpf(n + 1) / 2) - digamma(mpf(n) / 2)) for n in [1, 2, 3, 4, 5, 10, 11, 100, 1001]], "P1")
    emit_table(lines, "skew_harmonic_mu",
               [(m, n, skew_mu(n, m)) for m, n in [(0.5, 2), (0.5, 10), (-0.7, 7), (0.9, 50), (-1.0, 20)]], "P2")

    lines.append("} // namespace oracle")
    lines.append("")
    lines.append("#endif")
    OUT.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
