#!/usr/bin/env python3
"""High-precision reference values frozen into tests/unit/oracle_values.hpp.

Every value is computed with mpmath at 60 digits by a route independent of
the C++ code: Bessel and Laguerre functions from mpmath, norms and
coefficients by adaptive quadrature, heat kernels by the angular Bessel
series summed to |k| <= 300.

    python3 tools/oracles.py > tests/unit/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 60


def laguerre(a, n, x):
    return mp.laguerre(n, a, x)


def pkm(ak, m, u):
    return laguerre(ak, m, u) / mp.binomial(m + ak, m)


def radial(alpha, b0, k, m, r):
    ak = abs(k + alpha)
    u = b0 * r * r / 2
    return r**ak * mp.exp(-u / 2) * pkm(ak, m, u)


def mode_norm_sq(alpha, b0, k, m):
    f = lambda r: radial(alpha, b0, k, m, r) ** 2 * r
    return 2 * mp.pi * mp.quad(f, [0, 1, 3, 6, 12, mp.inf])


def psi(a, m, u):
    return u ** (a / 2) * mp.exp(-u / 2) * mp.sqrt(mp.factorial(m) / mp.gamma(m + a + 1)) * laguerre(a, m, u)


def heat_series(alpha, b0, t, r1, th1, r2, th2):
    tau = t * b0
    z = b0 * r1 * r2 / (2 * mp.sinh(tau))
    pre = b0 / (4 * mp.pi * mp.sinh(tau)) * mp.exp(-b0 * (r1**2 + r2**2) * mp.coth(tau) / 4)
    s = 0
    for k in range(-300, 301):
        s += mp.expj(k * (th1 - th2)) * mp.besseli(abs(k + alpha), z) * mp.exp(-(k + alpha) * tau)
    return pre * s


def gauss_coeff(alpha, b0, m):
    # <e^{-r^2}, V~_{0,m}>: radial integrand, k = 0 only
    a = abs(alpha)
    f = lambda r: mp.exp(-r * r) * mp.sqrt(b0 / (2 * mp.pi)) * psi(a, m, b0 * r * r / 2) * r
    return 2 * mp.pi * mp.quad(f, [0, 1, 3, 8, mp.inf])


def sup_mode(alpha, b0, k, m):
    ak = abs(k + alpha)
    g = lambda u: abs(mp.sqrt(b0 / (2 * mp.pi)) * psi(ak, m, u))
    # coarse scan, then golden refinement on the best bracket
    us = [mp.mpf(i) / 50 for i in range(1, 2500)]
    vals = [g(u) for u in us]
    i = max(range(len(vals)), key=lambda j: vals[j])
    lo, hi = us[max(i - 1, 0)], us[min(i + 1, len(us) - 1)]
    return mp.findroot(lambda u: mp.diff(g, u), (lo, hi), solver="anderson"), g


def emit(name, v):
    print(f"inline constexpr double {name} = {mp.nstr(v, 20, min_fixed=-5, max_fixed=5)};")


def emit_c(name, v):
    print(f"inline constexpr double {name}_re = {mp.nstr(mp.re(v), 20, min_fixed=-5, max_fixed=5)};")
    print(f"inline constexpr double {name}_im = {mp.nstr(mp.im(v), 20, min_fixed=-5, max_fixed=5)};")


print("// Generated by tools/oracles.py (mpmath, 60 digits). Do not edit.")
print("#pragma once\n")
print("namespace oracle {\n")
emit("kBesselI_0p3_2p5", mp.besseli(mp.mpf("0.3"), mp.mpf("2.5")))
emit("kBesselI_0p5_1", mp.besseli(mp.mpf("0.5"), 1))
emit("kBesselI_2p7_0p01", mp.besseli(mp.mpf("2.7"), mp.mpf("0.01")))
emit("kBesselI_7p25_3", mp.besseli(mp.mpf("7.25"), 3))
emit("kBesselIScaled_10p5_35", mp.besseli(mp.mpf("10.5"), 35) * mp.exp(-35))
emit("kBesselIScaled_0_100", mp.besseli(0, 100) * mp.exp(-100))
emit("kBesselIScaled_40_45", mp.besseli(40, 45) * mp.exp(-45))
emit("kLaguerre_0p3_7_4p4", laguerre(mp.mpf("0.3"), 7, mp.mpf("4.4")))
emit("kLaguerre_2p5_12_30", laguerre(mp.mpf("2.5"), 12, 30))
emit("kPkm_0p7_4_2p1", pkm(mp.mpf("0.7"), 4, mp.mpf("2.1")))
emit("kModeNormSq_0p3_1_2_3", mode_norm_sq(mp.mpf("0.3"), 1, 2, 3))
emit("kModeNormSq_0p5_2_0_0", mode_norm_sq(mp.mpf("0.5"), 2, 0, 0))
v = radial(mp.mpf("0.3"), 1, 1, 2, mp.mpf("1.7")) * mp.expj(mp.mpf("2.1"))
emit_c("kEigenfunction_0p3_1_k1_m2", v)
emit_c("kEigenfunctionNormalized_0p3_1_k1_m2", v / mp.sqrt(mode_norm_sq(mp.mpf("0.3"), 1, 1, 2)))
for m in range(4):
    emit(f"kGaussCoeff_m{m}", gauss_coeff(mp.mpf("0.5"), 1, m))
emit_c("kHeat_a0p5_t0p5_diag", heat_series(mp.mpf("0.5"), 1, mp.mpf("0.5"), 1, 0, 1, 0))
emit_c("kHeat_a0p5_t0p25", heat_series(mp.mpf("0.5"), 1, mp.mpf("0.25"), 1, mp.mpf("0.3"), mp.mpf("0.5"), 2))
emit_c("kHeat_a0p1_b2_t0p05", heat_series(mp.mpf("0.1"), 2, mp.mpf("0.05"), mp.mpf("2.5"), mp.pi, mp.mpf("0.2"), 0))
emit_c("kHeat_a0p9_b0p5_t1", heat_series(mp.mpf("0.9"), mp.mpf("0.5"), 1, 1, 5, mp.mpf("2.5"), 0))
emit_c("kHeat_a0p5_t0p7_opposite", heat_series(mp.mpf("0.5"), 1, mp.mpf("0.7"), mp.mpf("1.2"), mp.pi, mp.mpf("0.9"), 0))
emit_c("kHeat_a0_t0p5_quarter", heat_series(0, 1, mp.mpf("0.5"), 1, 0, 1, mp.pi / 2))
u, g = sup_mode(mp.mpf("0.5"), 1, 0, 0)
emit("kSupMode_0p5_k0_m0", g(u))
u, g = sup_mode(mp.mpf("0.5"), 1, 1, 2)
emit("kSupMode_0p5_k1_m2", g(u))
print("\n} // namespace oracle")
