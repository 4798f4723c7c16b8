"""Independent high-precision oracle for the frozen values in the C++ tests.

Everything here is computed from first principles with mpmath: eigenvalues
from the characteristic polynomial, orthovalues as eigenvalues of J^-1 A,
maximal amplification by brute-force maximisation of ||expm(A t) v|| over
unit v and t. Nothing here uses the radial/tangential closed forms, so the
numbers can be used to check them.

Run: python3 tests/oracles/derive_expected.py
"""
import mpmath as mp

mp.mp.dps = 40


def char_roots(a):
    tr = a[0][0] + a[1][1]
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    disc = tr * tr / 4 - det
    s = mp.sqrt(disc)
    return tr / 2 + s, tr / 2 - s


def sym_max_eig(a):
    h = mp.matrix([[a[0][0], (a[0][1] + a[1][0]) / 2],
                   [(a[0][1] + a[1][0]) / 2, a[1][1]]])
    ev = mp.eigsy(h)[0]
    return max(ev)


def ortho_values(a):
    # J^-1 = [[0,1],[-1,0]]
    b = [[a[1][0], a[1][1]], [-a[0][0], -a[0][1]]]
    return char_roots(b)


def amplification_bruteforce(a, n_theta=720, n_t=400, t_end=6):
    m = mp.matrix(a)
    best = (mp.mpf(0), None, None)
    mp.mp.dps = 20
    for i in range(n_theta):
        th = mp.pi * i / n_theta
        v = mp.matrix([mp.cos(th), mp.sin(th)])
        for j in range(1, n_t):
            t = mp.mpf(t_end) * j / n_t
            x = mp.expm(m * t) * v
            r = mp.sqrt(x[0] ** 2 + x[1] ** 2)
            if r > best[0]:
                best = (r, th, t)
    mp.mp.dps = 40
    return best


def refine_amplification(a, th0, t0, width_th, width_t):
    m = mp.matrix(a)

    def f(th, t):
        v = mp.matrix([mp.cos(th), mp.sin(th)])
        x = mp.expm(m * t) * v
        return -mp.sqrt(x[0] ** 2 + x[1] ** 2)

    # coordinate-wise golden section, a few sweeps
    th, t = th0, t0
    for _ in range(6):
        th = golden(lambda s: f(s, t), th - width_th, th + width_th)
        t = golden(lambda s: f(th, s), t - width_t, t + width_t)
        width_th /= 4
        width_t /= 4
    return -f(th, t), th, t


def golden(g, lo, hi, iters=80):
    phi = (mp.sqrt(5) - 1) / 2
    a, b = mp.mpf(lo), mp.mpf(hi)
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    for _ in range(iters):
        if g(c) < g(d):
            b = d
        else:
            a = c
        c = b - phi * (b - a)
        d = a + phi * (b - a)
    return (a + b) / 2


def show(name, v):
    print(f"{name} = {mp.nstr(v, 17)}")


if __name__ == "__main__":
    A1 = [[-1, -8], [0, -3]]
    A_saddle = [[-2, 1], [2, 1]]
    A3 = [[mp.mpf('0.7'), -4], [4, mp.mpf('-4.7')]]
    A_std = [[-1, -5], [0, -3]]

    show("A1 theta_R", (mp.atan2(-8, 2) / 2) % mp.pi)
    show("A1 p", mp.sqrt(17))
    show("A1 reactivity (sym part)", sym_max_eig(A1))
    show("A1 ortho mu1", ortho_values(A1)[0])
    show("A1 ortho mu2", ortho_values(A1)[1])
    # delta_R from the orthovector angle: zero of R found by root search on
    # x^T A x = 0, i.e. a11 c^2 + (a12+a21) c s + a22 s^2 = 0.
    def quad_form(a, th):
        c, s = mp.cos(th), mp.sin(th)
        return a[0][0] * c * c + (a[0][1] + a[1][0]) * c * s + a[1][1] * s * s
    th_r = (mp.atan2(-8, 2) / 2) % mp.pi
    z = mp.findroot(lambda th: quad_form(A1, th), th_r - 0.5)
    show("A1 delta_R (root of x^T A x)", abs(th_r - z))
    show("saddle lambda1", char_roots(A_saddle)[0])
    show("saddle lambda2", char_roots(A_saddle)[1])
    show("A3 ortho mu1", ortho_values(A3)[0])
    show("A3 ortho mu2", ortho_values(A3)[1])
    tr = A3[0][0] + A3[1][1]
    det = A3[0][0] * A3[1][1] - A3[0][1] * A3[1][0]
    show("A3 eigen imag", mp.sqrt(det - tr * tr / 4))
    show("A3 angular period", 2 * mp.pi / mp.sqrt(det - tr * tr / 4))

    for name, a in (("A1", A1), ("Astd", A_std), ("A3", A3)):
        r, th, t = amplification_bruteforce(a, n_theta=180, n_t=300, t_end=4)
        r, th, t = refine_amplification(a, th, t, mp.pi / 180, mp.mpf(4) / 300)
        show(f"{name} rho_max (brute force expm)", r)
        show(f"{name} t_max", t)
        show(f"{name} theta_entry", th % mp.pi)
