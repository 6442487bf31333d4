"""Arbitrary-precision reference values for the bound and model tests.

Evaluates every closed form unrearranged, at 50 digits, independently of the
library's rearranged formulas. Output is frozen into tests/test_bounds.cpp and the model tests.
"""
from mpmath import mp, mpf, sqrt, asinh, tanh, cosh, sinh, findroot, atan2, cos, sin, matrix

mp.dps = 50


def norm2(v):
    return sum(c * c for c in v)


def sub(a, b):
    return [p - q for p, q in zip(a, b)]


def dist(a, b):
    return sqrt(norm2(sub(a, b)))


def rho_ball(x, y):
    return 2 * asinh(dist(x, y) / sqrt((1 - norm2(x)) * (1 - norm2(y))))


def rho_half(x, y):
    return 2 * asinh(dist(x, y) / (2 * sqrt(x[-1] * y[-1])))


def plane_coords(x, y):
    """Coordinates of x, y in an orthonormal basis of span{x, y}."""
    nx = sqrt(norm2(x))
    e1 = [c / nx for c in x]
    t = sum(p * q for p, q in zip(y, e1))
    r = [p - t * q for p, q in zip(y, e1)]
    nr = sqrt(norm2(r))
    return [nx, mpf(0)], [t, nr]


def carrier(x, y):
    """Center a and radius r with 2 a.x = 1 + |x|^2 and 2 a.y = 1 + |y|^2."""
    m = matrix([[2 * x[0], 2 * x[1]], [2 * y[0], 2 * y[1]]])
    rhs = matrix([1 + norm2(x), 1 + norm2(y)])
    a = mp.lu_solve(m, rhs)
    a = [a[0], a[1]]
    return a, sqrt(norm2(a) - 1)


def ball_entries(x, y):
    d = dist(x, y)
    nx, ny = sqrt(norm2(x)), sqrt(norm2(y))
    cx, cy = 1 - nx**2, 1 - ny**2
    p = nx * ny
    q = sqrt(1 + p * p)
    return {
        "b1": d / sqrt(1 + (nx**4 + ny**4) / 2 - nx**2 - ny**2),
        "b2": d / (1 + p + sqrt(cx * cy)),
        "b2'": d / 2,
        "b3": d / (2 - ((nx - ny) / 2) ** 2),
        "b4": d / (2 - (nx - ny) ** 2 / 2),
        "b4'": d / (2 - (nx - ny) ** 2 / (2 * (1 - p))),
        "b5": d / (1 + p + q - (nx**2 + ny**2) / (2 * q)),
        "b6": d / (2 + 2 * p - (nx + ny) ** 2 / (2 * (1 + p))),
        "b7": d / sqrt(d * d + 4 * sqrt(cx * cy)),
    }


def midpoint_disk(x, y):
    zx, zy = mp.mpc(*x), mp.mpc(*y)
    t = (zy - zx) / (1 - mp.conj(zx) * zy)
    m = t / (1 + sqrt(1 - abs(t) ** 2))
    z = (m + zx) / (1 + mp.conj(zx) * m)
    return [z.real, z.imag]


def chord_entries(x, y):
    if len(x) == 3:
        x, y = plane_coords(x, y)
    a, r = carrier(x, y)
    d = dist(x, y)
    delta = d / 2
    inner = sqrt(1 + r * r) * sqrt(r * r - delta * delta) - r * r
    # smallest ball through x, y orthogonal to the carrier: center w on the
    # perpendicular bisector with |w-a|^2 = r^2 + |w-x|^2
    mid = [(p + q) / 2 for p, q in zip(x, y)]
    nrm = [-(y[1] - x[1]), y[0] - x[0]]
    # |mid + t n - a|^2 - |mid + t n - x|^2 = r^2 is linear in t
    f = lambda t: norm2(sub([mid[0] + t * nrm[0], mid[1] + t * nrm[1]], a)) - norm2(
        sub([mid[0] + t * nrm[0], mid[1] + t * nrm[1]], x)) - r * r
    f0, f1 = f(mpf(0)), f(mpf(1))
    t = -f0 / (f1 - f0)
    w = [mid[0] + t * nrm[0], mid[1] + t * nrm[1]]
    k = 4 - 4 * norm2(w) + d * d
    z = midpoint_disk(x, y)
    u = norm2(z)
    return {
        "carrier_radius": r,
        "chord": 2 * asinh(delta / inner),
        "symmetric-chord": delta / sqrt(inner),
        "circumscribed": (k - sqrt(k * k - 16 * d * d)) / (4 * d),
        "midpoint": (u - 1 + sqrt(1 + u * u - u * (2 - d * d))) / (d * u),
    }


def half_entries(x, y):
    d = dist(x, y)
    xn, yn = x[-1], y[-1]
    h = sqrt(norm2(sub(x[:-1], y[:-1])))
    s = xn + yn
    lead = s / (2 * sqrt(xn * yn))
    return {
        "h1": 1 + d * d / (xn**2 + yn**2),
        "h2": 1 + 2 * h * h / s**2,
        "h3": lead * sqrt(1 - 4 * xn * yn / (s * s + h * h)),
        "h3'": lead * sqrt(1 - s * s / (s * s + h * h)),
    }


def half_midpoint_2d(x, y):
    """Point on the carrier equidistant from x and y, found by root search."""
    if x[0] == y[0]:
        return [x[0], sqrt(x[1] * y[1])]
    c = (norm2(y) - norm2(x)) / (2 * (y[0] - x[0]))
    R = sqrt((x[0] - c) ** 2 + x[1] ** 2)
    ax, ay = atan2(x[1], x[0] - c), atan2(y[1], y[0] - c)
    p = lambda t: [c + R * cos(t), R * sin(t)]
    t = findroot(lambda t: rho_half(x, p(t)) - rho_half(p(t), y), (ax + ay) / 2)
    return p(t)


def fmt(v):
    return mp.nstr(v, 17, min_fixed=-30, max_fixed=30)


BALL = {
    "axis": ([mpf("0.5"), mpf(0)], [mpf(0), mpf(0)]),
    "generic": ([mpf("0.3"), mpf("0.4")], [mpf("-0.2"), mpf("0.6")]),
    "wide": ([mpf("0.9"), mpf("0.1")], [mpf("0.2"), mpf("-0.7")]),
    "symmetric": ([mpf("0.5"), mpf(0)], [mpf(0), mpf("0.5")]),
    "space": ([mpf("0.3"), mpf("-0.2"), mpf("0.5")], [mpf("-0.4"), mpf("0.1"), mpf("0.2")]),
}
HALF = {
    "vertical": ([mpf(0), mpf(1)], [mpf(0), mpf(2)]),
    "level": ([mpf(-1), mpf(1)], [mpf(1), mpf(1)]),
    "generic": ([mpf("0.3"), mpf("0.5")], [mpf("1.7"), mpf("2.2")]),
    "space": ([mpf("0.1"), mpf("0.2"), mpf("0.3")], [mpf("-0.5"), mpf("0.4"), mpf("1.1")]),
}

if __name__ == "__main__":
    for name, (x, y) in BALL.items():
        rho = rho_ball(x, y)
        print(f"ball {name}: rho {fmt(rho)} sinh_half {fmt(sinh(rho / 2))} tanh_quarter {fmt(tanh(rho / 4))} "
              f"tanh_half {fmt(tanh(rho / 2))}")
        for k, v in ball_entries(x, y).items():
            print(f"  {k} {fmt(v)}")
        if name != "axis":
            for k, v in chord_entries(x, y).items():
                print(f"  {k} {fmt(v)}")
        if len(x) == 2:
            z = midpoint_disk(x, y)
            print(f"  midpoint {fmt(z[0])} {fmt(z[1])}")
    for name, (x, y) in HALF.items():
        rho = rho_half(x, y)
        print(f"half {name}: rho {fmt(rho)} cosh {fmt(cosh(rho))} sinh_half {fmt(sinh(rho / 2))}")
        for k, v in half_entries(x, y).items():
            print(f"  {k} {fmt(v)}")
        if len(x) == 2:
            z = half_midpoint_2d(x, y)
            print(f"  midpoint {fmt(z[0])} {fmt(z[1])}")
    print("golden rho_ball((0.5,0),(0,0.5))", fmt(rho_ball([mpf("0.5"), 0], [0, mpf("0.5")])))
