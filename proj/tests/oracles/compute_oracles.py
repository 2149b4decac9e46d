"""High-precision reference values frozen into the C++ test suites.

Run with `python3 tests/oracles/compute_oracles.py`. Every value is computed
from the defining integral or sum with mpmath, independently of the library.
"""
import mpmath as mp

mp.mp.dps = 40


def n_theta_q_beta(theta, q):
    # int_0^inf s^{a-1} (1 + s^2)^{-q/2} ds = B(a/2, (q-a)/2) / 2 with a = q(1-theta)
    a = q * (1 - theta)
    return (mp.beta(a / 2, (q - a) / 2) / 2) ** (-1 / q)


def sine_sq(j, xi):
    c = j * mp.pi
    trig = mp.cos(xi / 2) ** 2 if j % 2 else mp.sin(xi / 2) ** 2
    return 4 * j * j * mp.pi * trig / (c * c - xi * xi) ** 2


def sine_hs_norm(j, s, periods=200):
    # Body over [0, X] on unit panels, X a multiple of 2*pi. Beyond X the
    # integrand is h(xi) (1 +/- cos xi); the mean part is integrated directly
    # and the oscillatory part expanded by parts (terms shrink like X^-2).
    c = j * mp.pi
    f = lambda xi: (1 + xi * xi) ** s * sine_sq(j, xi)
    h = lambda xi: 2 * j * j * mp.pi * (1 + xi * xi) ** s / (xi * xi - c * c) ** 2
    x = 2 * periods * mp.pi
    body = mp.quad(f, mp.linspace(0, x, 2 * periods + 1))
    mean = mp.quad(h, [x, 10 * x, 100 * x, mp.inf])
    osc = -mp.diff(h, x, 1) + mp.diff(h, x, 3) - mp.diff(h, x, 5)
    return mp.sqrt(2 * (body + mean + (osc if j % 2 else -osc)))


def bump(t):
    """C-infinity cutoff: 1 on |t|<=1/2, 0 on |t|>=1."""
    t = abs(t)
    if t <= 0.5:
        return mp.mpf(1)
    if t >= 1:
        return mp.mpf(0)
    x = 2 - 2 * t
    f = lambda y: mp.e ** (-1 / y) if y > 0 else mp.mpf(0)
    return f(x) / (f(x) + f(1 - x))


def bump_energy(k):
    g = lambda t: mp.diff(bump, t, k) ** 2
    return 2 * mp.quad(g, [0.5, 0.75, 1]) + (1 if k == 0 else 0)


if __name__ == "__main__":
    print("N(0.3,2) closed", mp.sqrt(2 / mp.pi * mp.sin(0.3 * mp.pi)))
    print("N(0.3,2) beta  ", n_theta_q_beta(mp.mpf("0.3"), 2))
    for th, q in [(0.25, 1), (0.5, 1), (0.7, 3), (0.4, 1.5), (0.5, 4)]:
        print(f"N({th},{q}) beta", n_theta_q_beta(mp.mpf(th), mp.mpf(q)))
    a, q, A, B = mp.mpf("0.4"), 2, 2, 3
    print("beta(0.4,2,2,3)", mp.quad(lambda t: t ** a / (A + B * t * t) ** (q / 2), [0, 1, mp.inf]))
    print("sine_sq(1,0)", sine_sq(1, mp.mpf(0)), 4 / mp.pi ** 3)
    print("limit at j*pi", 1 / (4 * mp.pi))
    for j in (1, 2):
        for s in ("0.5", "0.01", "0.99", "0.25"):
            print(f"hs_norm j={j} s={s}", sine_hs_norm(j, mp.mpf(s)))
    for k in range(3):
        print(f"bump energy E{k}", bump_energy(k))
