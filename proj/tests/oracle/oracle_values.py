"""High-precision oracle for the frozen expected values in the C++ tests.

Uses mpmath's complete elliptic integral (not the AGM path used by the
library) and mpmath's own root finders / maximizers.
"""
from mpmath import mp, mpf, sqrt, atanh, log, pi, ellipk, acosh, cosh, sinh, tanh, e, acos, findroot, cos, sin, asinh

mp.dps = 40


def arth(x):
    return atanh(x)


def mu(r):
    rp = sqrt(1 - r * r)
    return pi / 2 * ellipk(rp**2) / ellipk(r**2)


def mu_inv(y):
    lo, hi = mpf(10) ** -30, 1 - mpf(10) ** -30
    for _ in range(200):
        mid = (lo + hi) / 2
        if mu(mid) > y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def phi(K, r):
    return mu_inv(mu(r) / K)


def A(K):
    return 2 * arth(phi(K, tanh(mpf(1) / 2)))


def f_c(c, r):
    rp = sqrt(1 - r * r)
    return (1 - (c * rp) ** 2) / (r * arth(c * r))


def golden_max(f, a, b, it=300):
    g = (sqrt(5) - 1) / 2
    c, d = b - g * (b - a), a + g * (b - a)
    for _ in range(it):
        if f(c) > f(d):
            b = d
        else:
            a = c
        c, d = b - g * (b - a), a + g * (b - a)
    x = (a + b) / 2
    return x, f(x)


def h_p(p, r):
    return 1 + p * (1 - r * r) * arth(r) / r - (1 + r * r) * arth(r) / r


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 17)}")


s2 = sqrt(2) / 2
show("rho_halfplane(i,1+i)", acosh(mpf(3) / 2))
show("rho_halfplane(i,2i)", acosh(mpf(5) / 4))
show("2 arth 0.3", 2 * arth(mpf("0.3")))
show("arth(0.8*s2)", arth(mpf("0.8") * s2))
show("F_0.8(s2)", arth(mpf("0.8") * s2) ** 2)
show("F_1(s2)", arth(s2) ** 2)
show("f1(0.5)", mpf("0.5") / arth(mpf("0.5")))
show("h(s2)", sqrt(2) / log(sqrt(2) + 1))
show("C", 1 - log(sqrt(2) + 1) / sqrt(2))
show("G_0.5 sup", arth(2 * sqrt(2) * mpf("0.5") / mpf("2.25")))
show("arth(2sqrt2/3)", arth(2 * sqrt(2) / 3))
show("(2log(s2+1))^2", (2 * log(sqrt(2) + 1)) ** 2)
show("4log(s2+1)", 4 * log(sqrt(2) + 1))
show("geodesic b", (1 + mpf("0.25")) / (2 * mpf("0.5") * cos(pi / 4)))
show("geodesic r", sqrt(((1 + mpf("0.25")) / (2 * mpf("0.5") * cos(pi / 4))) ** 2 - 1))
show("mu(0.3)", mu(mpf("0.3")))
show("mu(0.1)", mu(mpf("0.1")))
show("mu(0.3)mu(r')", mu(mpf("0.3")) * mu(sqrt(1 - mpf("0.09"))))
show("phi2(1/sqrt2)", phi(2, 1 / sqrt(2)))
show("2sqrt r/(1+r) at 1/sqrt2", 2 * sqrt(1 / sqrt(2)) / (1 + 1 / sqrt(2)))
for K in [1, 1.5, 2, 5]:
    show(f"A({K})", A(mpf(K)))
u = acosh(e) * tanh(acosh(e))
v = log(2 * (1 + sqrt(1 - 1 / e**2)))
show("u", u)
show("v", v)
for K in [1.5, 2, 5]:
    show(f"log ch(K arch e) K={K}", log(cosh(K * acosh(e))))

# sum-bound case data
for L in [mpf("0.5"), mpf("0.85"), mpf("0.95"), mpf(1)]:
    if L < 1:
        m = sqrt((2 - L * L) * (3 * L * L - 2)) if 3 * L * L > 2 else None
        if m is not None:
            r0 = sqrt((1 - m / L**2) / 2)
            r0p = sqrt(1 - r0**2)
            show(f"L={L} r0", r0)
            show(f"L={L} acos r0", acos(r0))
            show(f"L={L} acos r0'", acos(r0p))
            show(f"L={L} upper23", arth(L * (r0 + r0p) / (1 + L * L * r0 * r0p)))
        show(f"L={L} arth L", arth(L))
        show(f"L={L} bisector", arth(2 * sqrt(2) * L / (2 + L * L)))
    # independent grid max over theta
    G = lambda th: arth(L * cos(th)) + arth(L * sin(th))
    if L < 1:
        x, val = golden_max(G, mpf("0.0001"), pi / 4)
        show(f"L={L} golden max G on (0,pi/4)", val)
        show(f"L={L} argmax", x)

# beardon at L=0.8, theta=pi/4
d = arth(mpf("0.8") * s2)
show("sh^2 d (L=.8)", sinh(d) ** 2)
show("phi (L=.8)", acos(sinh(d) ** 2))

# ideal quasiconformal constants
r1 = 2 * sqrt(e) / (e + 1)
r1p = sqrt(1 - r1**2)
M1 = (e - 1) * (log(sqrt(e) + 1) - log(sqrt(e) - 1)) / sqrt(e)
show("r1", r1)
show("r1'", r1p)
show("arth r1'", arth(r1p))
show("M1", M1)
show("f1(r1')/f1(r1)", f_c(1, r1p) / f_c(1, r1))
show("4 arth r1 arth r1'", 4 * arth(r1) * arth(r1p))
root = findroot(lambda r: 2 * f_c(1, r) - f_c(1, sqrt(1 - r * r)), mpf("0.95")).real
show("r1(2) root", root)
T = lambda x, K: arth(x) * arth(sqrt(1 - x * x)) ** (1 / K)
show("ideal K=2 bound", A(2) ** 2 * max(2 ** (1 + mpf(1) / 2) * T(root, 2), (2 * log(sqrt(2) + 1)) ** 2))
show("ideal K=2 2^{1.5}T", 2 ** (mpf(3) / 2) * T(root, 2))

# quasiconformal product bound, L = 0.9, K = 2
L = mpf("0.9")
th1 = tanh(1)
rL = th1 / L
ML = f_c(L, sqrt(1 - rL**2)) / f_c(L, rL)
show("th1", th1)
show("rL(0.9)", rL)
show("ML(0.9)", ML)
rLK = findroot(lambda r: 2 * f_c(L, r) - f_c(L, sqrt(1 - r * r)), (rL, 1 - mpf("1e-20")), solver="anderson")
show("rLK(K=2,L=.9)", rLK)
TL = lambda x, K: arth(L * x) * arth(L * sqrt(1 - x * x)) ** (1 / K)
B = max(TL(rLK, 2), arth(s2 * L) ** (mpf(2) / 2))
show("qc bound K=2 L=.9", A(2) ** 2 * B)
show("  T(rLK)", TL(rLK, 2))
show("  bisector^(2/K)", arth(s2 * L) ** 1)
show("product bound L=.9", arth(s2 * L) ** 2)
show("product bound L=.5", arth(s2 * mpf("0.5")) ** 2)

# C(p) = sup h_p
for p in [mpf(-2) - mpf("1e-6"), mpf(-3), mpf(-10)]:
    x, val = golden_max(lambda r: h_p(p, r), mpf("1e-12"), 1 - mpf("1e-12"), 400)
    show(f"C({mp.nstr(p, 8)})", val)
    show(f"  argmax", x)

# Holder mean of arth r, arth r' at p = 0.2
def Hp(p, a, b):
    return ((a**p + b**p) / 2) ** (1 / p)
f02 = lambda r: Hp(mpf("0.2"), arth(r), arth(sqrt(1 - r * r)))
best = min((f02(mpf(i) / 2000), i) for i in range(1, 1414))
show("p=0.2 min over grid", best[0])
show("   at r", mpf(best[1]) / 2000)
show("arth(s2)", arth(s2))
show("p=0.2 at r=0.01", f02(mpf("0.01")))
