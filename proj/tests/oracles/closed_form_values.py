"""High-precision reference values frozen into the C++ unit tests.

Independent of the C++ implementation: evaluates the decay amplitude with
mpmath at 40 digits straight from its cosh/sinh definition, and integrates
the memory-kernel equation as a linear ODE system (the Lorentzian kernel is
an exponential, so the convolution is carried by one auxiliary variable).
"""
import mpmath as mp

mp.mp.dps = 40


def omega(lam, delta, gamma=1):
    a = mp.mpc(lam, -delta)
    return mp.sqrt(a * a - 2 * gamma * lam)


def amplitude(lam, delta, t, gamma=1):
    a = mp.mpc(lam, -delta)
    om = omega(lam, delta, gamma)
    return mp.exp(-a * t / 2) * (mp.cosh(om * t / 2) + a / om * mp.sinh(om * t / 2))


def amplitude_ode(lam, delta, t_end, gamma=1):
    # c' = -y, y(t) = int_0^t f(t-s) c(s) ds  =>  y' = f(0) c - a y
    a = mp.mpc(lam, -delta)
    f0 = gamma * lam / 2
    sol = mp.odefun(lambda t, v: [-v[1], f0 * v[0] - a * v[1]], 0, [mp.mpc(1), mp.mpc(0)])
    return sol(t_end)[0]


def h(x):
    return -x * mp.log(x, 2) - (1 - x) * mp.log(1 - x, 2)


if __name__ == "__main__":
    print("h(0.11)               =", mp.nstr(h(mp.mpf("0.11")), 17))
    print("Omega(10,0)           =", mp.nstr(omega(10, 0), 17))
    print("Omega(0.1,0)          =", mp.nstr(omega(mp.mpf("0.1"), 0), 17))
    g = amplitude(10, 0, 1)
    print("G(10,0,1)             =", mp.nstr(g, 17))
    print("G(10,0,1) via ODE     =", mp.nstr(amplitude_ode(10, 0, 1), 17))
    print("sqrt(1-|G|^2)         =", mp.nstr(mp.sqrt(1 - abs(g) ** 2), 17))
    print("G(2,0,1) (Omega=0)    =", mp.nstr(2 * mp.exp(-1), 17))
    print("G(10,5,2)             =", mp.nstr(amplitude(10, 5, 2), 17))
    print("G(0.1,10,7.5)         =", mp.nstr(amplitude(mp.mpf("0.1"), 10, mp.mpf("7.5")), 17))
    print("G(0.1,10,7.5) via ODE =", mp.nstr(amplitude_ode(mp.mpf("0.1"), 10, mp.mpf("7.5")), 17))
    print("f(0.1) lam=10         =", mp.nstr(5 * mp.exp(-1), 17))
    print("Gamma_inf(10,0)       =", mp.nstr(20 / (omega(10, 0) + 10), 17))
    lam = mp.mpf("0.1")
    t0 = mp.findroot(lambda t: mp.re(amplitude(lam, 0, t)), 8.2)
    print("first zero lam=0.1    =", mp.nstr(t0, 17))
    t1 = mp.findroot(lambda t: mp.re(amplitude(lam, 0, t)), 22.6)
    print("second zero lam=0.1   =", mp.nstr(t1, 17))
    print("|G(10,0,10)|^2        =", mp.nstr(abs(amplitude(10, 0, 10)) ** 2, 17))
