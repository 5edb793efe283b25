"""Independent high-precision evaluation of the frozen values used by the unit tests.

Works from the defining formulas only (no shared code with the C++ library).
Run: python3 tests/oracle/derived_values.py
"""

import mpmath as mp

mp.mp.dps = 40


def show(name, value):
    if isinstance(value, (list, tuple)):
        print(name, "=", ", ".join(mp.nstr(v, 17) for v in value))
    else:
        print(name, "=", mp.nstr(value, 17))


def cabs(z):
    return mp.sqrt(mp.re(z) ** 2 + mp.im(z) ** 2)


# Interpolation maps on the level-one set and on the filled model.
def shrink(t, m):
    return (1 - t) * (1 - m) * (m * m - 1) + 1


def tilde(own, other):
    return (1 + other * other - own * own) / 2 * (own * own - 1) + 1


def forced_z(a, b):
    return 2 * mp.conj(a * b) / (1 - cabs(a) ** 2 - cabs(b) ** 2)


def astar(t, x):
    y = 1 - x
    return shrink(t, x) * x, shrink(t, y) * y


show("astar(0, 0.6)", astar(mp.mpf(0), mp.mpf("0.6")))
show("astar(0.5, 0.3)", astar(mp.mpf("0.5"), mp.mpf("0.3")))

# Cubic for (A, B) = (0.3, 0.6): the root in (0, 1) and the matching t.
A, B = mp.mpf("0.3"), mp.mpf("0.6")
x = mp.findroot(lambda s: 2 * s**3 + (B - A - 3) * s**2 + (2 * A - 1) * s + (1 - B), mp.mpf("0.5"))
t = 1 - (A - x) / ((1 - x) * (x * x - 1) * x)
show("cubic root x(0.3, 0.6)", x)
show("cubic t(0.3, 0.6)", t)
show("forward check", astar(t, x))


def cstar(x, y):
    return tilde(x, y) * x, tilde(y, x) * y


show("cstar(0.3, 0.4)", cstar(mp.mpf("0.3"), mp.mpf("0.4")))
J = [[mp.diff(lambda u, v: cstar(u, v)[i], (mp.mpf("0.3"), mp.mpf("0.4")), tuple(1 if k == j else 0 for k in range(2)))
      for j in range(2)] for i in range(2)]
show("D(0.3, 0.4) row 0", J[0])
show("D(0.3, 0.4) row 1", J[1])

# Radial level map.
p = (mp.mpc("0.3", "0.1"), mp.mpc("-0.2", "0.4"))
L = mp.mpf(2)
h = cabs(p[0]) ** 2 + cabs(p[1]) ** 2
c = mp.sqrt(L / (1 - (1 - L) * h))
q = (c * p[0], c * p[1])
show("d_2(p).x", [mp.re(q[0]), mp.im(q[0])])
show("d_2(p).y", [mp.re(q[1]), mp.im(q[1])])
theta = mp.expjpi(mp.mpf("0.3") / mp.pi)
lv = lambda z: 2 * z[0] * theta * z[1] / (1 - cabs(z[0]) ** 2 - cabs(z[1]) ** 2)
show("level(p)", [mp.re(lv(p)), mp.im(lv(p))])
show("level(d_2 p)", [mp.re(lv(q)), mp.im(lv(q))])

# i' on the level-one set over g = 0.5 e^{0.3 i}, at r = 0.4, phi = 0.7.
g = mp.mpf("0.5") * mp.exp(1j * mp.mpf("0.3"))
th = g / cabs(g)
r, phi = mp.mpf("0.4"), mp.mpf("0.7")
x = r * mp.exp(1j * phi)
y = (1 - r) * mp.exp(-1j * phi) * mp.conj(th)
print("level-one residual", mp.nstr(cabs(2 * x * th * y - (1 - cabs(x) ** 2 - cabs(y) ** 2)), 5))
a = shrink(cabs(g), cabs(x)) * x
b = shrink(cabs(g), cabs(y)) * y
z = forced_z(a, b)
show("i'.z", [mp.re(z), mp.im(z)])
show("i'.x", [mp.re(a), mp.im(a)])
show("i'.y", [mp.re(b), mp.im(b)])

# i'' at x = 0.3 e^{0.2 i}, y = 0.25 e^{-1.1 i}.
x = mp.mpf("0.3") * mp.exp(1j * mp.mpf("0.2"))
y = mp.mpf("0.25") * mp.exp(-1j * mp.mpf("1.1"))
cc = tilde(cabs(x), cabs(y)) * x
dd = tilde(cabs(y), cabs(x)) * y
z = forced_z(cc, dd)
show("i''.z", [mp.re(z), mp.im(z)])
show("i''.x", [mp.re(cc), mp.im(cc)])
show("i''.y", [mp.re(dd), mp.im(dd)])

# Ramp: the quintic on [e1, e2] with value, slope and curvature matched to t and 1.
e1, e2 = mp.mpf("0.25"), mp.mpf("0.75")
rows, rhs = [], []
for s, val, d1, d2 in ((e1, e1, 1, 0), (e2, 1, 0, 0)):
    rows.append([s**k for k in range(6)]); rhs.append(val)
    rows.append([k * s ** (k - 1) if k else 0 for k in range(6)]); rhs.append(d1)
    rows.append([k * (k - 1) * s ** (k - 2) if k > 1 else 0 for k in range(6)]); rhs.append(d2)
coef = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
ramp = lambda s: sum(coef[k] * s**k for k in range(6))
show("ramp(0.4)", ramp(mp.mpf("0.4")))
show("ramp(0.5)", ramp(mp.mpf("0.5")))
show("ramp'(0.5)", mp.diff(ramp, mp.mpf("0.5")))

# Jacobian of v = (Re, Im)(2xy - 1 + |x|^2 + |y|^2) at (0.5 e^{0.7 i}, 0.5 e^{-0.7 i}).
def v(x1, x2, y1, y2):
    w = 2 * mp.mpc(x1, x2) * mp.mpc(y1, y2) - 1 + x1**2 + x2**2 + y1**2 + y2**2
    return [mp.re(w), mp.im(w)]


pt = [mp.mpf("0.5") * mp.cos(mp.mpf("0.7")), mp.mpf("0.5") * mp.sin(mp.mpf("0.7")),
      mp.mpf("0.5") * mp.cos(mp.mpf("0.7")), -mp.mpf("0.5") * mp.sin(mp.mpf("0.7"))]
Jv = mp.matrix(2, 4)
for i in range(2):
    for j in range(4):
        Jv[i, j] = mp.diff(lambda *c: v(*c)[i], pt, tuple(1 if k == j else 0 for k in range(4)))
show("sigma(jac_v) at r = 1/2", list(mp.svd_r(Jv, compute_uv=False)))

# Line integral of <Delta, D Delta> from (0.1, 0.2) to (0.5, 0.3), D the Jacobian of (c*, d*).
p1, p2 = (mp.mpf("0.1"), mp.mpf("0.2")), (mp.mpf("0.5"), mp.mpf("0.3"))
delta = (p2[0] - p1[0], p2[1] - p1[1])


def integrand(s):
    u, w = p1[0] + s * delta[0], p1[1] + s * delta[1]
    total = 0
    for i in range(2):
        for j in range(2):
            dij = mp.diff(lambda a, b: cstar(a, b)[i], (u, w), tuple(1 if k == j else 0 for k in range(2)))
            total += delta[i] * dij * delta[j]
    return total


show("line integral (0.1, 0.2) -> (0.5, 0.3)", mp.quad(integrand, [0, 1]))
