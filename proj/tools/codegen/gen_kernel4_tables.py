#!/usr/bin/env python3
"""Generate include/holmc/detail/kernel4_tables.hpp.

Derives the fourth-order one-step transition symbolically by integrating the
three splitting stages exactly, then writes every scalar coefficient in the
form

    c(gamma, eta) = gamma^p * F(x),   x = gamma * eta,
    F(x) = P0(x) + P1(x) e^{-x} + P2(x) e^{-2x},

together with the Taylor coefficients of F at x = 0. The C++ side evaluates
the series below a switch point and the closed form above it.

Usage: gen_kernel4_tables.py OUT_HEADER
"""
import sys
import time
from fractions import Fraction

import mpmath as mp
import sympy as sp

t, s, u, g, h = sp.symbols("t s u gamma eta", positive=True)
x, z = sp.symbols("x z", positive=True)
a, b, lam = sp.symbols("a b lambda")
th, v1, v2, v3 = sp.symbols("theta v1 v2 v3")
M0, M1, M2, M3 = sp.symbols("M0 M1 M2 M3")

N_SERIES = 48
X_SWITCH = 1.5

# A quantity is (deterministic part d(t), noise kernel K(t, s)); the noise
# contribution is int_0^t K(t, s) dB_s.


def integ(q):
    d, k = q
    dd = sp.integrate(d.subs(t, u), (u, 0, t))
    kk = sp.integrate(k.subs(t, u), (u, s, t))
    return sp.expand(dd), sp.expand(kk)


def conv(q):
    d, k = q
    dd = sp.integrate(sp.exp(-g * (t - u)) * d.subs(t, u), (u, 0, t))
    kk = sp.integrate(sp.exp(-g * (t - u)) * k.subs(t, u), (u, s, t))
    return sp.expand(sp.simplify(dd)), sp.expand(sp.simplify(kk))


def add(*qs):
    return sp.expand(sum(q[0] for q in qs)), sp.expand(sum(q[1] for q in qs))


def sc(c, q):
    return sp.expand(c * q[0]), sp.expand(c * q[1])


def const(c):
    return sp.sympify(c), sp.Integer(0)


def run(gradfun, with_noise):
    noise = (sp.Integer(0), sp.sqrt(2 * g) * sp.exp(-g * (t - s))) if with_noise else const(0)
    th1 = add(const(th), sc(t, const(v1)))
    v2_1 = add(const(v2), sc(g * t, const(v3 - v1)))
    v3_1 = add(const(v3 * sp.exp(-g * t)), sc(-g, conv(v2_1)), noise)

    def stage(thp, v2p, v3p):
        grad = gradfun(thp)
        w1 = add(const(v1), sc(-1, integ(grad)), sc(g, integ(v2p)))
        w0 = add(const(th), integ(w1))
        w2 = add(const(v2), sc(-g, integ(w1)), sc(g, integ(v3p)))
        w3 = add(const(v3 * sp.exp(-g * t)), sc(-g, conv(w2)), noise)
        return w0, w1, w2, w3

    st2 = stage(th1, v2_1, v3_1)
    st3 = stage(st2[0], st2[2], st2[3])
    return [(sp.expand(q[0].subs(t, h)), sp.expand(q[1].subs(t, h))) for q in st3]


def normalize_exp(expr):
    expr = expr.replace(sp.exp, lambda arg: sp.exp(sp.expand(arg)))
    return sp.expand(sp.powsimp(sp.expand(expr), combine="exp"))


def to_form(expr, var_time, var_scaled):
    """Write expr(gamma, var_time) as gamma^p * sum_k P_k(y) e^{-k y}, y = gamma*var_time."""
    expr = normalize_exp(sp.expand(expr).subs(var_time, var_scaled / g))
    if expr == 0:
        return None
    p_set = set()
    polys = {}
    for term in sp.Add.make_args(expr):
        coeff = sp.Integer(1)
        gp = 0
        yp = 0
        ek = 0
        for f in sp.Mul.make_args(term):
            base, ex = f.as_base_exp()
            if f.is_number:
                coeff *= f
            elif base == g:
                gp += int(ex)
            elif base == var_scaled:
                yp += int(ex)
            elif isinstance(f, sp.exp):
                arg = sp.expand(f.args[0])
                k = sp.Rational(-arg / var_scaled)
                assert k.q == 1, f
                ek += int(k)
            else:
                raise ValueError(f"unexpected factor {f} in {term}")
        p_set.add(gp)
        polys.setdefault(ek, {})
        polys[ek][yp] = polys[ek].get(yp, 0) + sp.Rational(coeff)
    assert len(p_set) == 1, (p_set, expr)
    assert set(polys) <= {0, 1, 2}, polys.keys()
    return p_set.pop(), polys


def taylor(polys, n):
    """Exact Taylor coefficients of sum_k P_k(y) e^{-k y} up to y^{n-1}."""
    out = [Fraction(0)] * n
    for k, poly in polys.items():
        # e^{-k y} = sum_m (-k)^m y^m / m!
        em = [Fraction((-k) ** m, sp.factorial(m)) for m in range(n)]
        for j, c in poly.items():
            c = Fraction(int(c.p), int(c.q))
            for m in range(n - j):
                out[j + m] += c * em[m]
    return out


def check(polys, ser, label):
    """Compare double evaluation of series and closed form against mpmath."""
    mp.mp.dps = 60
    worst = 0.0
    for yv in (1e-3, 0.1, 0.7, X_SWITCH * 0.999, X_SWITCH, 2.5, 6.0):
        exact = mp.mpf(0)
        for k, poly in polys.items():
            exact += sum(mp.mpf(int(c.p)) / int(c.q) * mp.mpf(yv) ** j for j, c in poly.items()) * mp.e ** (-k * mp.mpf(yv))
        if exact == 0:
            continue
        if yv < X_SWITCH:
            acc = 0.0
            for c in reversed(ser):
                acc = acc * yv + float(c)
        else:
            acc = 0.0
            import math
            for k, poly in polys.items():
                deg = max(poly)
                pv = 0.0
                for j in range(deg, -1, -1):
                    pv = pv * yv + float(poly.get(j, 0))
                acc += pv * math.exp(-k * yv)
        rel = abs((mp.mpf(acc) - exact) / exact)
        worst = max(worst, float(rel))
    if worst > 1e-11:
        print(f"warning: {label} worst relative error {worst:.2e}", file=sys.stderr)
    return worst


def emit_coef(label, form):
    if form is None:
        return f"    /* {label} */ zero_coef()"
    p, polys = form
    ser = taylor(polys, N_SERIES)
    check(polys, ser, label)
    lead = next((i for i, c in enumerate(ser) if c != 0), N_SERIES)

    def arr(poly):
        if not poly:
            return "{}"
        deg = max(poly)
        return "{" + ", ".join(repr(float(poly.get(j, 0))) for j in range(deg + 1)) + "}"

    series = "{" + ", ".join(repr(float(c)) for c in ser) + "}"
    return (
        f"    /* {label} */ Coef{{{p}, {lead}, {series},\n"
        f"      {arr(polys.get(0, {}))}, {arr(polys.get(1, {}))}, {arr(polys.get(2, {}))}}}"
    )


def main():
    out_path = sys.argv[1]
    t0 = time.time()
    quad = run(lambda q: add(sc(a, q), const(-b)), with_noise=True)
    print(f"quadratic stages derived in {time.time() - t0:.1f}s", file=sys.stderr)
    dt = M0 + M1 * t + M2 * t**2 / 2 + M3 * t**3 / 6
    logi = run(lambda q: add(sc(lam, q), const(dt)), with_noise=False)
    print(f"logistic stages derived in {time.time() - t0:.1f}s", file=sys.stderr)

    entries = []

    # mu: zero-potential transition matrix.
    mu_rows = []
    for i in range(4):
        d0 = quad[i][0].subs({a: 0, b: 0})
        for j, var in enumerate((th, v1, v2, v3)):
            mu_rows.append(emit_coef(f"mu{i}{j}", to_form(d0.coeff(var), h, x)))
    entries.append(("kMu", 16, mu_rows))

    # sigma via Ito isometry of the exact kernels.
    kers = [sp.expand(quad[i][1] / sp.sqrt(2 * g)) for i in range(4)]
    sig_rows = []
    for i in range(4):
        for j in range(4):
            ii, jj = min(i, j), max(i, j)
            expr = 2 * g * sp.integrate(sp.expand(kers[ii] * kers[jj]), (s, 0, h))
            sig_rows.append(emit_coef(f"sigma{i}{j}", to_form(expr, h, x)))
    entries.append(("kSigma", 16, sig_rows))

    # Noise kernels K_i(eta, s) / sqrt(2 gamma) as functions of u = eta - s.
    ker_rows = []
    for i in range(4):
        kk = normalize_exp(kers[i].subs(s, h - u))
        ker_rows.append(emit_coef(f"kernel{i}", to_form(kk, u, z)))
    entries.append(("kKernel", 4, ker_rows))

    # Quadratic mean: m_i = sum_k A^k (c_theta theta + ... + c_b b).
    q_rows = []
    for i in range(4):
        d0 = sp.expand(quad[i][0])
        for vi, var in enumerate((th, v1, v2, v3, b)):
            cv = sp.expand(d0.coeff(var))
            if var == b:
                cv = sp.expand(-cv)  # stored against -b so the gradient is A theta - b
            for k in range(3):
                ck = sp.expand(cv.coeff(a, k)) if k > 0 else sp.expand(cv.subs(a, 0))
                q_rows.append(emit_coef(f"quad m{i} {var} a^{k}", to_form(ck, h, x)))
    entries.append(("kQuad", 60, q_rows))

    # Logistic mean: coefficients split by powers of lambda.
    l_rows = []
    for i in range(4):
        d0 = sp.expand(logi[i][0])
        for vi, var in enumerate((th, v1, v2, v3, M0, M1, M2, M3)):
            cv = sp.expand(d0.coeff(var))
            for k in range(3):
                ck = sp.expand(cv.coeff(lam, k)) if k > 0 else sp.expand(cv.subs(lam, 0))
                l_rows.append(emit_coef(f"logistic m{i} {var} lambda^{k}", to_form(ck, h, x)))
    entries.append(("kLogistic", 96, l_rows))

    lines = [
        "// Generated by tools/codegen/gen_kernel4_tables.py. Do not edit.",
        "// Each entry is gamma^p * F(x), x = gamma*eta (u = eta - s for kernels),",
        "// F = P0(x) + P1(x) e^{-x} + P2(x) e^{-2x}, with Taylor coefficients of F.",
        "#pragma once",
        "",
        "#include <array>",
        "",
        "#include \"holmc/detail/coef.hpp\"",
        "",
        "namespace holmc::detail {",
        "",
        f"inline constexpr double kSeriesSwitch = {X_SWITCH};",
        "",
    ]
    for name, n, rows in entries:
        assert len(rows) == n, (name, len(rows))
        lines.append(f"inline const std::array<Coef, {n}> {name} = {{{{")
        lines.append(",\n".join(rows))
        lines.append("}};")
        lines.append("")
    lines.append("}  // namespace holmc::detail")
    with open(out_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {out_path} in {time.time() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
