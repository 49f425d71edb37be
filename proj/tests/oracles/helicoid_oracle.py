"""High-precision reference values for the helicoid family.

Prints the numbers frozen into the unit and acceptance tests.  Uses mpmath on the
defining integrand; for c < 0 the cancelling form is rationalised and the half
line is mapped to (0, pi/2) so the slowly decaying tail is integrated exactly.
"""
import mpmath as mp

mp.mp.dps = 30


def c_of(mu):
    return (1 + 2 * mu) / (1 - 2 * mu)


def integrand(y, mu):
    c = c_of(mu)
    q = 4 + c * c * y * y
    if c < 0:
        # 1 + c sqrt(4+y^2)/sqrt(q) == 4(1-c^2) / (q + |c| sqrt(q (4+y^2)))... times 1/2
        return 2 * (1 - c * c) / (q + abs(c) * mp.sqrt(q * (4 + y * y)))
    return (1 + c * mp.sqrt(4 + y * y) / mp.sqrt(q)) / 2


def g(x, mu):
    return mp.quad(lambda y: integrand(y, mu), mp.linspace(0, x, 5))


def t(mu):
    return abs(mp.quad(lambda a: integrand(mp.tan(a), mu) / mp.cos(a) ** 2, [0, mp.pi / 4, mp.pi / 2]))


def f(v, mu):
    return mp.findroot(lambda x: g(x, mu) - v, mp.mpf(v) * (1 - 2 * mu))


def axis_distance(mu):
    # along the axis v = g(x), f = x and nu = 2 / sqrt((2v - x)^2 + 4)
    sgn = 1 if mu < -0.5 else -1

    def ig(a):
        x = sgn * mp.tan(a)
        return abs(integrand(x, mu)) * 2 / mp.sqrt((2 * g(x, mu) - x) ** 2 + 4) / mp.cos(a) ** 2

    return mp.quad(ig, [0, mp.pi / 4, mp.pi / 2])


if __name__ == "__main__":
    for mu in [0.6, 1, 2, 3, 5, 10, -0.6, -1, -2, -3, -5, -10]:
        print("t_mu", mu, mp.nstr(t(mp.mpf(mu)), 17))
    for mu, v in [(0.25, 1.0), (-0.25, 1.0), (3, 0.3), (-3, 0.3), (1, 0.5), (-1, 0.5)]:
        print("f", mu, v, mp.nstr(f(mp.mpf(v), mp.mpf(mu)), 17))
    for mu in [3, -3, 1, -1]:
        print("axis_distance", mu, mp.nstr(axis_distance(mp.mpf(mu)), 15))
