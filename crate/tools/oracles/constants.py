"""Independent mpmath oracles for constants frozen into the Rust test suites.

Nothing here shares code with the Rust crates. Kernels are written directly
from their definitions in 30-digit arithmetic; cancellation-prone
denominators use expm1.
"""
from mpmath import (mp, mpf, pi, e1, exp, expm1, log, quad, inf, nsum, digamma,
                    euler, sinh, gamma, zeta, sqrt, cos, cosh, loggamma, re)

mp.dps = 30


def b0(p):
    return pi * p / (pi * p + 1)


def kernel_x(p, x):
    """K(x/2pi) = 1/(sigma(t) e^{2 pi t} - 1) with t = x/2pi."""
    nu = 2 * pi * p
    return (nu - x) / ((nu + x) * expm1(x) + 2 * x)


def zeta_p2_closed(p):
    u = 1 / (pi * p)
    return pi**2 / 6 * (1 + 3 * u * (1 + u)) / (1 + u)**2


def c2_integral(p):
    B = b0(p)
    return quad(lambda x: kernel_x(p, x) - B * exp(-x) / x, [0, 1, 2 * pi * p, inf])


def xi(s):
    return s * (s - 1) / 2 * pi**(-s / 2) * gamma(s / 2) * zeta(s)


def big_xi(t):
    return re(xi(mpf(1) / 2 + 1j * t))


def tau(x):
    return (digamma(1 + x / 2) - digamma((1 + x) / 2)) / 2 + digamma(x + mpf(1) / 2) \
        - 1 / (2 * x) - log(x)


def omega(x):
    return 2 * digamma(2 * x) + digamma(x / 2) + mpf(3) / (2 * x) - 3 * log(x) - log(2)


print("zeta_p(2) closed form")
for p in ("0.25", "1", "4"):
    print(f"  p={p}: {mp.nstr(zeta_p2_closed(mpf(p)), 25)}")

print("second Euler constant: integral form and defining limit (= integral - B0 log B0)")
for p in ("0.25", "1", "4"):
    p = mpf(p)
    integral = c2_integral(p)
    B = b0(p)
    print(f"  p={mp.nstr(p, 4)}: integral={mp.nstr(integral, 20)} limit={mp.nstr(integral - B * log(B), 20)}")

print("p -> 0 theta relation at a = 1 (a-side)")
theta0 = quad(lambda x: x * exp(-x * x) * (-1 / (exp(2 * pi * x) + 1)
                                           + 1 / (2 * sinh(pi * x)) - 1 / (2 * pi * x)),
              [0, 1, inf])
print(f"  {mp.nstr(theta0, 25)}")

print("p -> 0 Hardy relation at a = 1 (a-side)")
hardy0 = quad(lambda x: exp(-x * x) * (tau(x) + 1 / (2 * x)), [0, 1, inf])
print(f"  {mp.nstr(hardy0, 25)}")

print("digamma-series inequalities")
s1 = nsum(lambda n: omega(2 * n), [1, inf])
s2 = nsum(lambda n: omega(n / 2), [1, inf])
print(f"  sum1={mp.nstr(s1, 20)} bound1={mp.nstr((log(32 * pi**3) - 3 * euler) / 4, 20)}")
print(f"  sum2={mp.nstr(s2, 20)} bound2={mp.nstr(log(pi**3 / 2) - 3 * euler, 20)}")

print("classical F(0): spectral integral of |Gamma((-1+it)/4)|^2 Xi(t/2)^2/(1+t^2)")
mp.dps = 20
f_inf = quad(lambda t: exp(2 * re(loggamma((-1 + 1j * t) / 4))) * big_xi(t / 2)**2 / (1 + t * t),
             [0, 10, 20, 40, 60])
print(f"  {mp.nstr(f_inf, 16)}")

print("second Euler constant at p = 1 straight from the defining limit")
mp.dps = 20
p = mpf(1)
nu = 2 * pi * p
B = b0(p)


def bracket(k):
    return quad(lambda x: exp(-x) * ((k * nu - x) / (k * nu + x))**k, [0, k * nu, inf])


partial = [mpf(0)]
for k in range(1, 801):
    partial.append(partial[-1] + bracket(k) / k)
# S(n) - B0 log n = C + a/n + b/n^2 + ...; three-level Richardson on n = 100..800
level = [partial[n] - B * log(n) for n in (100, 200, 400, 800)]
for order in (1, 2, 3):
    level = [(2**order * level[i + 1] - level[i]) / (2**order - 1) for i in range(len(level) - 1)]
print(f"  limit={mp.nstr(level[0], 14)}")
