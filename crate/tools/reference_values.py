#!/usr/bin/env python3
"""Regenerate the high-precision reference constants frozen into the test suite.

Run with:  python3 tools/reference_values.py

Requires mpmath. Output is meant to be pasted into the Rust sources by hand;
every constant in the tests carries a comment naming the block here that
produced it.
"""

import mpmath as mp

mp.mp.dps = 80


def ml_series(alpha, beta, z, dps):
    """Series summation; alpha = p/10 exploits the integer Gamma-argument
    lattice so only ten gamma evaluations are needed at high precision."""
    p10 = int(round(alpha * 10))
    assert abs(alpha * 10 - p10) < 1e-12, "tenths-lattice alpha expected"
    b10 = int(round(beta * 10))
    assert abs(beta * 10 - b10) < 1e-12
    with mp.workdps(dps):
        z = mp.mpf(z)
        z10 = z ** 10
        total = mp.mpf(0)
        for j in range(10):
            a0 = mp.mpf(p10 * j + b10) / 10  # Gamma argument at k = 0
            t = z ** j / mp.gamma(a0)
            k = 0
            while True:
                total += t
                t *= z10
                for i in range(p10):
                    t /= a0 + p10 * k + i
                k += 1
                if abs(t) < mp.mpf(10) ** (-dps - 10) and k > 2:
                    break
        return +total


def ml_asymptotic(alpha, beta, z):
    """-sum z^-k / gamma(beta - alpha k); exact to working precision for
    |z|^(1/alpha) >> dps*ln(10).

    The Gamma arguments are tracked as exact rationals: floating-point
    arguments that merely land near a pole produce spuriously tiny terms
    that derail smallest-term truncation, so pole coefficients must vanish
    exactly. Truncation uses the smooth envelope gamma(1-arg)/pi of the
    oscillating coefficient 1/|gamma(arg)|.
    """
    from fractions import Fraction

    a = Fraction(int(round(float(alpha) * 10)), 10)
    b = Fraction(int(round(float(beta) * 10)), 10)
    z = mp.mpf(z)
    s = mp.mpf(0)
    prev_env = mp.inf
    for k in range(1, 400):
        argq = b - a * k
        env = abs(z) ** (-k) * mp.gamma(1 - mp.mpf(argq.numerator) / argq.denominator) / mp.pi
        if env >= prev_env:
            break
        if not (argq.denominator == 1 and argq <= 0):
            arg = mp.mpf(argq.numerator) / argq.denominator
            s += -z ** (-k) * mp.rgamma(arg)
        prev_env = env
        if env < abs(s) * mp.mpf(10) ** (-mp.mp.dps):
            break
    return s


def ml(alpha, beta, z):
    """Mittag-Leffler E_{alpha,beta}(z) for z <= 0.

    The series needs ~0.44*|z|^(1/alpha) guard digits against cancellation;
    beyond that the algebraic asymptotic expansion is exact to 80 digits.
    """
    alpha, z = mp.mpf(alpha), mp.mpf(z)
    if z == 0:
        return 1 / mp.gamma(beta)
    m = abs(z) ** (1 / alpha)
    if m < 1000:
        return ml_series(alpha, beta, z, 100 + int(0.45 * float(m)))
    return ml_asymptotic(alpha, beta, z)


def emit(name, value, dps=30):
    print(f"{name} = {mp.nstr(value, dps)}")


print("# gamma reference values (specfun tests)")
for x in ["-4.5", "-3.2", "-0.5", "0.1", "0.5", "1.5", "3.7", "7.0", "10.3",
          "24.9", "37.5", "49.5"]:
    emit(f"gamma({x})", mp.gamma(mp.mpf(x)), 22)

print()
print("# reciprocal gamma at tenths, 64 digits (exact ML series path)")
for j in range(1, 10):
    emit(f"1/gamma({j}/10)", 1 / mp.gamma(mp.mpf(j) / 10), 64)

print()
print("# Mittag-Leffler reference values (ml oracle tests), 25 digits")
for a in ["0.3", "0.5", "0.6", "0.7", "0.9"]:
    af = mp.mpf(a)
    for x in ["0.25", "1", "3", "8", "30", "100", "10000"]:
        xf = mp.mpf(x)
        emit(f"E[{a},{a}](-{x})", ml(af, af, -xf), 25)
        emit(f"E[{a},1](-{x})", ml(af, 1, -xf), 25)

print()
print("# assorted derived example values")
emit("sqrt(pi)", mp.sqrt(mp.pi), 22)
emit("1/gamma(0.5)", 1 / mp.gamma(mp.mpf("0.5")), 22)
emit("e*erfc(1)", mp.e * mp.erfc(1), 22)
emit("gamma(1.5)", mp.gamma(mp.mpf("1.5")), 22)
emit("1/gamma(1.5)", 1 / mp.gamma(mp.mpf("1.5")), 22)
emit("1/gamma(2/3)", 1 / mp.gamma(mp.mpf(2) / 3), 22)
emit("gamma(1.6)", mp.gamma(mp.mpf("1.6")), 22)
emit("1/gamma(1.6)", 1 / mp.gamma(mp.mpf("1.6")), 22)
# c0 = (c / gamma(1-alpha))^(1/(1+alpha)) at alpha=0.5, c=1
emit("c0(a=0.5,c=1)", (1 / mp.gamma(mp.mpf("0.5"))) ** (mp.mpf(2) / 3), 22)
# extinction survival example: 1 - exp(-gamma(1.5))
emit("1-exp(-gamma(1.5))", 1 - mp.exp(-mp.gamma(mp.mpf("1.5"))), 22)
# levy density example: 0.75/gamma(0.5)
emit("0.75/gamma(0.5)", mp.mpf("0.75") / mp.gamma(mp.mpf("0.5")), 22)
# jump tail example
emit("2^-1.5", mp.mpf(2) ** mp.mpf("-1.5"), 22)
emit("sqrt(2)-1", mp.sqrt(2) - 1, 22)

print()
print("# subcritical asymptote ratio r(t) = E/(1-E) * y * gamma(1-a),")
print("# y = (b/c) t^a, E = E[a,1](-y); used to pin the slow-regime grid")
for a in ["0.3", "0.5", "0.7", "0.9"]:
    af = mp.mpf(a)
    for b in ["0.5", "2"]:
        for c in ["0.5", "1", "2"]:
            bf, cf = mp.mpf(b), mp.mpf(c)
            row = []
            for t in ["1e3", "1e4", "1e5"]:
                y = bf / cf * mp.mpf(t) ** af
                e = ml(af, 1, -y)
                r = e / (1 - e) * y * mp.gamma(1 - af)
                row.append(mp.nstr(r, 8))
            print(f"ratio a={a} b={b} c={c}: t=1e3,1e4,1e5 -> {row}")

print()
print("# progeny asymptote deviation d = a*c*(l/b)^a / b at l=1e-6")
for a in ["0.3", "0.5", "0.7", "0.9"]:
    af = mp.mpf(a)
    for b in ["0.5", "1", "2"]:
        for c in ["0.5", "1", "2"]:
            bf, cf = mp.mpf(b), mp.mpf(c)
            lam = mp.mpf("1e-6")
            # exact: psi solves b*psi + c*psi^(1+a) = lam
            psi = mp.findroot(lambda p: bf * p + cf * p ** (1 + af) - lam,
                              lam / bf)
            v = cf * psi ** af
            ref = cf * (lam / bf) ** af
            print(f"dev a={a} b={b} c={c}: V/ref-1 = {mp.nstr(v / ref - 1, 6)}")
