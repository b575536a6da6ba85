"""Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

Expands Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) about p = 1/2 in
high precision and forms

  C0 = Psi
  C1 = -Psi'''/(96 pi^2)
  C2 = Psi''/(64 pi^2) + Psi^(6)/(18432 pi^4)
  C3 = -Psi'/(64 pi^2) - Psi^(5)/(3840 pi^4) - Psi^(9)/(5308416 pi^6)
  C4 = Psi/(128 pi^2) + 19 Psi^(4)/(24576 pi^4) + 11 Psi^(8)/(5898240 pi^6)
       + Psi^(12)/(2038431744 pi^8)

as polynomials in z = p - 1/2. Output is the Rust table in src/coefficients.rs.
"""
import mpmath

mpmath.mp.dps = 120
ORDER = 90
pi = mpmath.pi


def series_cos(scale, shift, order):
    # cos(scale * z^2 + shift) in powers of z
    out = [mpmath.mpf(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        c = scale ** k / mpmath.factorial(k)
        # d^k/dw^k cos(w + shift) at w = 0 is cos(shift + k pi/2)
        out[2 * k] = c * mpmath.cos(shift + k * pi / 2)
    return out


num = series_cos(2 * pi, -5 * pi / 8, ORDER)
# cos(2 pi (1/2 + z)) = -cos(2 pi z)
den = [mpmath.mpf(0)] * (ORDER + 1)
for k in range(0, ORDER // 2 + 1):
    den[2 * k] = -((-1) ** k) * (2 * pi) ** (2 * k) / mpmath.factorial(2 * k)

psi = [mpmath.mpf(0)] * (ORDER + 1)
for n in range(ORDER + 1):
    acc = num[n] - sum(psi[k] * den[n - k] for k in range(n))
    psi[n] = acc / den[0]


def deriv(coeffs, j):
    return [coeffs[n] * mpmath.ff(n, j) for n in range(j, len(coeffs))] + [mpmath.mpf(0)] * j


def combo(terms):
    out = [mpmath.mpf(0)] * (ORDER + 1)
    for weight, j in terms:
        d = deriv(psi, j)
        for n in range(ORDER + 1):
            out[n] += weight * d[n]
    return out


tables = [
    combo([(1, 0)]),
    combo([(-1 / (96 * pi**2), 3)]),
    combo([(1 / (64 * pi**2), 2), (1 / (18432 * pi**4), 6)]),
    combo([(-1 / (64 * pi**2), 1), (-1 / (3840 * pi**4), 5), (-1 / (5308416 * pi**6), 9)]),
    combo([(1 / (128 * pi**2), 0), (19 / (24576 * pi**4), 4), (11 / (5898240 * pi**6), 8),
           (1 / (2038431744 * pi**8), 12)]),
]

print("// Generated by scripts/rs_coefficients.py; do not edit.")
print("// Taylor coefficients in z = p - 1/2 of the Riemann-Siegel terms C0..C4.")
print()
for k, t in enumerate(tables):
    # keep terms that can matter for |z| <= 1/2
    last = max(n for n in range(ORDER + 1) if abs(t[n]) * mpmath.mpf(2) ** (-n) > mpmath.mpf(10) ** -22)
    vals = [mpmath.nstr(t[n], 20, min_fixed=-1, max_fixed=1) for n in range(last + 1)]
    print(f"pub(crate) const C{k}: [f64; {last + 1}] = [")
    for v in vals:
        print(f"    {v},")
    print("];")
    print()
