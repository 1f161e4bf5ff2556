"""Independent oracles for the frozen expected values used by the unit tests.

Uses mpmath (arbitrary precision hypergeometric / exponential integral) and
plain Monte Carlo, never the C++ implementation. Run:

    python3 tests/oracles/golden_values.py
"""
import mpmath as mp
import numpy as np

mp.mp.dps = 30
K = 75


def theta(t):
    return mp.mpf(2) ** (mp.mpf(K) / t) - 1


def cov(th, d):
    return mp.hyp2f1(1, -d, 1 - d, -th)


def cov_half(th):
    s = mp.sqrt(th)
    return 1 + s * mp.atan(s)


def kernel_half(th):
    s = mp.sqrt(th)
    return mp.atan(s) / s


def quad(f, a, b, pts=()):
    nodes = sorted(set([a, b] + [p for p in pts if a < p < b]))
    return mp.quad(f, nodes)


def rateless_alpha4(N):
    """delta = 1/2 closed forms only."""
    Pc = lambda t: 1 - 1 / cov_half(theta(t))
    ps = 1 / cov_half(theta(N))
    ET = quad(Pc, 0, N, [1, 5, 20])
    mu = quad(lambda t: 1 - kernel_half(theta(t)), 0, N, [1, 5, 20])
    Sb = lambda t: 1 - 1 / cov_half(theta(t) * min(1, mu / t))
    ETb = quad(Sb, 0, N, [1, 5, 20, mu])
    omega = lambda t: quad(Sb, 0, t, [min(t, mu)]) / t
    omega_N = ETb / N
    Ps = lambda t: 1 - 1 / cov_half(omega(t) * theta(t))
    Pa = lambda t: 1 - 1 / cov_half(omega_N * theta(t))
    ps_thin = 1 / cov_half(theta(N) * omega_N)
    return dict(ps=ps, ET=ET, rate_ci=K * ps / ET, mu=mu, ETb=ETb, omega_N=omega_N,
                omega_60=omega(60), Ps_60=Ps(60), Pa_60=Pa(60), ps_thin=ps_thin,
                Pc_100_N300=1 - 1 / cov_half(theta(100)))


def fpc_monte_carlo(tau, beta, lam, alpha, N, n_z=20000, n_inner=20000, seed=7):
    """Direct sampling of (z, x, y) for the FPC triple integral."""
    rng = np.random.default_rng(seed)
    d = 2.0 / alpha
    th = 2.0 ** (K / N) - 1
    Z = np.pi * lam / beta ** d
    pA = 1 - np.exp(-Z)
    # z ~ Exp(1) truncated to [0, Z]: ps = pA * E[exp(-z J)]
    uz = rng.uniform(size=n_z)
    z = -np.log(1 - uz * pA)
    vals = np.empty(n_z)
    for j in range(n_z):
        u = rng.uniform(size=n_inner)
        x = th * u ** (1 / (1 - d))
        w = -np.log(1 - rng.uniform(size=n_inner) * pA)
        y = w / z[j]
        J = d * th / (1 - d) * pA * np.mean(1.0 / (x + y ** (-tau / d)))
        vals[j] = np.exp(-z[j] * J)
    est = pA * vals.mean()
    se = pA * vals.std(ddof=1) / np.sqrt(n_z)
    return est, se


def fpc_nested_scipy(tau, beta, lam, alpha, N):
    """Nested scipy quadrature of the same triple integral (second route)."""
    from scipy.integrate import quad as squad
    d = 2.0 / alpha
    th = 2.0 ** (K / N) - 1
    Z = np.pi * lam / beta ** d

    def J(z):
        def h(u):
            x = th * u ** (1 / (1 - d))
            return squad(lambda w: np.exp(-w) / (x + (w / z) ** (-tau / d)), 0, Z,
                         epsabs=1e-11, epsrel=1e-10, limit=200)[0]
        return d * th / (1 - d) * squad(h, 0, 1, epsabs=1e-11, epsrel=1e-10, limit=200)[0]

    return squad(lambda z: np.exp(-z * J(z)) * np.exp(-z), 0, Z, epsabs=1e-10, epsrel=1e-9, limit=200)[0]


def main():
    r = rateless_alpha4(100)
    print("alpha=4 N=100:")
    for k, v in r.items():
        print(f"  {k} = {mp.nstr(v, 17)}")
    r3 = rateless_alpha4(300)
    print("alpha=4 N=300:", {k: mp.nstr(v, 12) for k, v in r3.items() if k in ("rate_ci", "ps_thin")})

    d3 = mp.mpf(2) / 3
    print("ps_ci(alpha=3,N=75) = 1/2F1(theta=1) =", mp.nstr(1 / cov(1, d3), 17))
    # pathloss thresholding, beta=1.55 lambda=1 alpha=3 N=200
    th = theta(200)
    H = cov(th, d3) - 1
    Ft = 1 - mp.exp(-mp.pi / mp.mpf("1.55") ** d3)
    ps = (1 - mp.exp(-mp.pi * (1 + H * Ft) / mp.mpf("1.55") ** d3)) / (1 + H * Ft)
    print("ps_pathloss_threshold(beta=1.55,alpha=3,N=200) =", mp.nstr(ps, 17))
    # fading thresholding beta=0.1 alpha=4 N=100
    b = mp.mpf("0.1")
    th = theta(100)
    F = lambda x: mp.e ** b / (mp.e ** b - 1 + cov(x, mp.mpf(1) / 2))
    ps = F(th) + F(th / b) * (mp.e ** (-b) - F(th))
    print("ps_fading_threshold(beta=0.1,alpha=4,N=100) =", mp.nstr(ps, 17))
    # fading TCI beta=0 theta=1 alpha=4, and beta=0.1 N=100
    for beta_, th_ in ((mp.mpf(0), mp.mpf(1)), (mp.mpf("0.1"), theta(100))):
        dd = mp.mpf(1) / 2
        G = th_ ** dd * mp.quad(lambda y: dd * y ** (-dd) * mp.e ** y * mp.e1(beta_ + y), [0, th_])
        print(f"ps_fading_tci(beta={beta_},theta={mp.nstr(th_, 10)},alpha=4) =",
              mp.nstr(mp.e ** (-beta_) / (1 + G), 17))
    print("E1(1) =", mp.nstr(mp.e1(1), 17))
    est, se = fpc_monte_carlo(1.0, 1.55, 1.0, 4.0, 100)
    print(f"ps_fpc MC (tau=1,beta=1.55,alpha=4,N=100) = {est:.6f} +- {se:.6f}")
    print("ps_fpc nested (tau=1,beta=1.55,alpha=4,N=100) =", repr(fpc_nested_scipy(1.0, 1.55, 1.0, 4.0, 100)))
    est, se = fpc_monte_carlo(0.5, 1.55, 1.0, 3.0, 100)
    print(f"ps_fpc MC (tau=0.5,beta=1.55,alpha=3,N=100) = {est:.6f} +- {se:.6f}")
    print("ps_fpc nested (tau=0.5,beta=1.55,alpha=3,N=100) =", repr(fpc_nested_scipy(0.5, 1.55, 1.0, 3.0, 100)))


if __name__ == "__main__":
    main()
