"""Independent high-precision evaluation of the channel bounds and max-min roots.

Prints the constants frozen in tests/unit/*.cpp. Uses mpmath only; shares no code
with the C++ library.
"""

from itertools import combinations

import mpmath as mp

mp.mp.dps = 40


def C(x):
    return mp.log(1 + x, 2) / 2


def subsets(K):
    for r in range(1, K + 1):
        for s in combinations(range(K), r):
            yield s


def b_relay(P, Pr, Nr, Nd, g, S):
    Sc = [k for k in range(len(P)) if k not in S]
    ups = 1 - sum(g[k] for k in Sc)
    ps = sum(P[k] for k in S)
    if abs(ups) < mp.mpf("1e-30"):
        return C(ps / Nr)
    coh = sum(mp.sqrt(g[k] * P[k]) for k in S) ** 2
    return C(ps / Nr - coh / (Nr * ups))


def b_dest(P, Pr, Nr, Nd, g, S):
    Sc = [k for k in range(len(P)) if k not in S]
    ups = 1 - sum(g[k] for k in Sc)
    ps = sum(P[k] for k in S)
    cross = 2 * sum(mp.sqrt(g[k] * P[k] * Pr) for k in S)
    return C((ps + ups * Pr + cross) / Nd)


def i_relay(P, Pr, Nr, Nd, a, b, S):
    return C(sum(a[k] * P[k] for k in S) / Nr)


def i_dest(P, Pr, Nr, Nd, a, b, S):
    Sc = [k for k in range(len(P)) if k not in S]
    ps = sum(P[k] for k in S)
    rel = (1 - sum(b[k] for k in Sc)) * Pr
    cross = 2 * sum(mp.sqrt((1 - a[k]) * b[k] * P[k] * Pr) for k in S)
    return C((ps + rel + cross) / Nd)


def maxmin(P, Pr, Nr, Nd):
    # Maximize min(B_rK, B_dK) over x = sum sqrt(lambda gamma) in [0, 1]; the optimum
    # direction is gamma proportional to lambda, which reaches every x.
    Pm = max(P)
    lam = [p / Pm for p in P]
    L = sum(lam)

    def rates(x):
        g = [x * x * l / (L * L) for l in lam]
        K = tuple(range(len(P)))
        return b_relay(P, Pr, Nr, Nd, g, K), b_dest(P, Pr, Nr, Nd, g, K)

    r0, d0 = rates(mp.mpf(0))
    if r0 <= d0:
        return "Bottleneck", mp.mpf(0), r0
    x = mp.findroot(lambda x: rates(x)[0] - rates(x)[1], (mp.mpf(0), mp.sqrt(L)), solver="anderson")
    return "Equalized", x, rates(x)[0]


def show(name, v):
    print(f"{name} = {mp.nstr(v, 17)}")


if __name__ == "__main__":
    P, Pr, Nr, Nd = [mp.mpf(6), mp.mpf(4)], mp.mpf(4), mp.mpf(1), mp.mpf(2)
    g = [mp.mpf("0.1"), mp.mpf("0.05")]
    a, b = [mp.mpf("0.9"), mp.mpf("0.8")], [mp.mpf("0.6"), mp.mpf("0.3")]
    print("# Example 1 bounds, gamma=(0.1,0.05), alpha=(0.9,0.8), beta=(0.6,0.3)")
    for S in subsets(2):
        tag = "".join(str(k + 1) for k in S)
        show(f"B_r{tag}", b_relay(P, Pr, Nr, Nd, g, S))
        show(f"B_d{tag}", b_dest(P, Pr, Nr, Nd, g, S))
        show(f"I_r{tag}", i_relay(P, Pr, Nr, Nd, a, b, S))
        show(f"I_d{tag}", i_dest(P, Pr, Nr, Nd, a, b, S))

    P3, Pr3, Nr3, Nd3 = [mp.mpf(2), mp.mpf("0.5"), mp.mpf(1)], mp.mpf(3), mp.mpf("0.5"), mp.mpf("1.75")
    g3 = [mp.mpf("0.2"), mp.mpf("0.1"), mp.mpf("0.3")]
    print("# K=3 bounds, P=(2,0.5,1) P_r=3 N_r=0.5 N_d=1.75 gamma=(0.2,0.1,0.3)")
    for S in subsets(3):
        tag = "".join(str(k + 1) for k in S)
        show(f"B_r{tag}", b_relay(P3, Pr3, Nr3, Nd3, g3, S))
        show(f"B_d{tag}", b_dest(P3, Pr3, Nr3, Nd3, g3, S))

    print("# max-min roots (x = r) and sum rates")
    cases = {
        "example1": ([6, 4], 4, 1, 2),
        "example2": ([6, "0.4"], 4, 1, 2),
        "bottleneck": ([1, 1], 100, 1, 2),
        "k3": ([2, "0.5", 1], 3, "0.5", "1.75"),
        "k4_bottleneck": ([1, 2, 3, 4], 6, 1, "1.5"),
        "k4": ([1, 2, 3, 4], 6, 1, 4),
        "k5_symmetric": ([2, 2, 2, 2, 2], 5, 1, 3),
    }
    for name, (p, pr, nr, nd) in cases.items():
        regime, x, R = maxmin([mp.mpf(v) for v in p], mp.mpf(pr), mp.mpf(nr), mp.mpf(nd))
        print(f"{name}: regime={regime}")
        show("  root", x)
        show("  c", x * x)
        show("  R", R)
