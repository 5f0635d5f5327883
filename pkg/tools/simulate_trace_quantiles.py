#!/usr/bin/env python3
"""Regenerate the frozen quantile tables used for Johansen trace / max-eigenvalue
p-values.

The asymptotic null distributions are simulated by discretizing the Brownian
functionals (Johansen 1995, ch. 15): with W an m-dimensional standard Brownian
motion approximated by T normalized partial sums,

    A = sum_t F[t-1] dW[t]',   B = (1/T) sum_t F[t-1] F[t-1]',
    M = A' B^{-1} A,
    trace = tr(M),   max-eigenvalue = lambda_max(M),

where F is the lagged path itself for the no-deterministic case, and for the
unrestricted-constant case the demeaned path with the last component replaced
by a demeaned linear trend (the constant generates a trend in the data).

Quantiles on a fixed probability grid are then blended with the published
MacKinnon-Haug-Michelis (1999) 90/95/99% critical values (the exact values,
free of simulation noise) and written as a Python module.

Usage:  python tools/simulate_trace_quantiles.py [reps] [T] > new_tables.py
"""

import sys

import numpy as np

SEED = 987654321
PROBS = [0.005, 0.01, 0.025, 0.05, 0.10, 0.20, 0.30, 0.40, 0.50,
         0.60, 0.70, 0.80, 0.90, 0.95, 0.975, 0.99, 0.995, 0.999, 0.9999]
MAX_DIM = 12

# MacKinnon-Haug-Michelis (1999) asymptotic critical values (90/95/99%),
# as tabulated by LeSage's spatial-econometrics toolbox.
TRACE_CRIT = {
    "none": [
        (2.9762, 4.1296, 6.9406), (10.4741, 12.3212, 16.3640),
        (21.7781, 24.2761, 29.5147), (37.0339, 40.1749, 46.5716),
        (56.2839, 60.0627, 67.6367), (79.5329, 83.9383, 92.7136),
        (106.7351, 111.7797, 121.7375), (137.9954, 143.6691, 154.7977),
        (173.2292, 179.5199, 191.8122), (212.4721, 219.4051, 232.8291),
        (255.6732, 263.2603, 277.9962), (302.9054, 311.1288, 326.9716),
    ],
    "constant": [
        (2.7055, 3.8415, 6.6349), (13.4294, 15.4943, 19.9349),
        (27.0669, 29.7961, 35.4628), (44.4929, 47.8545, 54.6815),
        (65.8202, 69.8189, 77.8202), (91.1090, 95.7542, 104.9637),
        (120.3673, 125.6185, 135.9825), (153.6341, 159.5290, 171.0905),
        (190.8714, 197.3772, 210.0366), (232.1030, 239.2468, 253.2526),
        (277.3740, 285.1402, 300.2821), (326.5354, 334.9795, 351.2150),
    ],
}
MAX_CRIT = {
    "none": [
        (2.9762, 4.1296, 6.9406), (9.4748, 11.2246, 15.0923),
        (15.7175, 17.7961, 22.2519), (21.8370, 24.1592, 29.0609),
        (27.9160, 30.4428, 35.7359), (33.9271, 36.6301, 42.2333),
        (39.9085, 42.7679, 48.6606), (45.8930, 48.8795, 55.0335),
        (51.8528, 54.9629, 61.3449), (57.7954, 61.0404, 67.6415),
        (63.7248, 67.0756, 73.8856), (69.6513, 73.0946, 80.0937),
    ],
    "constant": [
        (2.7055, 3.8415, 6.6349), (12.2971, 14.2639, 18.5200),
        (18.8928, 21.1314, 25.8650), (25.1236, 27.5858, 32.7172),
        (31.2379, 33.8777, 39.3693), (37.2786, 40.0763, 45.8662),
        (43.2947, 46.2299, 52.3069), (49.2855, 52.3622, 58.6634),
        (55.2412, 58.4332, 64.9960), (61.2041, 64.5040, 71.2525),
        (67.1307, 70.5392, 77.4877), (73.0563, 76.5734, 83.7105),
    ],
}
_ANCHOR_PROBS = (0.90, 0.95, 0.99)


def simulate_dimension(m, reps, steps, rng, batch=400):
    """Trace and max statistics for both deterministic cases, one dimension."""
    out = {case: {"trace": [], "max": []} for case in ("none", "constant")}
    trend = (np.arange(steps) / steps)
    done = 0
    while done < reps:
        b = min(batch, reps - done)
        dw = rng.standard_normal((b, steps, m)) / np.sqrt(steps)
        w = np.cumsum(dw, axis=1)
        wlag = np.concatenate([np.zeros((b, 1, m)), w[:, :-1, :]], axis=1)

        for case in ("none", "constant"):
            if case == "none":
                f = wlag
            else:
                f = wlag.copy()
                f[:, :, m - 1] = trend
                f -= f.mean(axis=1, keepdims=True)
            a = np.einsum("btj,btk->bjk", f, dw)
            bmat = np.einsum("btj,btk->bjk", f, f) / steps
            x = np.linalg.solve(bmat, a)
            mmat = np.matmul(np.transpose(a, (0, 2, 1)), x)
            out[case]["trace"].append(np.trace(mmat, axis1=1, axis2=2))
            sym = 0.5 * (mmat + np.transpose(mmat, (0, 2, 1)))
            out[case]["max"].append(np.linalg.eigvalsh(sym)[:, -1])
        done += b
    return {
        case: {kind: np.concatenate(vals) for kind, vals in kinds.items()}
        for case, kinds in out.items()
    }


def blended_quantiles(samples, case, kind, m):
    """Simulated quantiles with the published 90/95/99 values patched in."""
    q = np.quantile(samples, PROBS)
    crit = (TRACE_CRIT if kind == "trace" else MAX_CRIT)[case][m - 1]
    for p, published in zip(_ANCHOR_PROBS, crit):
        idx = PROBS.index(p)
        drift = q[idx] - published
        print(f"# m={m:2d} {case:8s} {kind:5s} p={p}: sim {q[idx]:9.4f} "
              f"published {published:9.4f} drift {drift:+.3f}", file=sys.stderr)
        q[idx] = published
    return np.maximum.accumulate(q)


def main():
    reps = int(sys.argv[1]) if len(sys.argv) > 1 else 200_000
    steps = int(sys.argv[2]) if len(sys.argv) > 2 else 1000
    rng = np.random.Generator(np.random.PCG64(SEED))

    tables = {"trace": {"none": {}, "constant": {}},
              "max": {"none": {}, "constant": {}}}
    for m in range(1, MAX_DIM + 1):
        print(f"# simulating dimension {m} ({reps} reps x {steps} steps)",
              file=sys.stderr)
        sims = simulate_dimension(m, reps, steps, rng)
        for case in ("none", "constant"):
            for kind in ("trace", "max"):
                q = blended_quantiles(sims[case][kind], case, kind, m)
                tables[kind][case][m] = q

    print('"""Asymptotic quantiles of the Johansen trace and max-eigenvalue')
    print("statistics, simulated once (see tools/simulate_trace_quantiles.py)")
    print('with the published 90/95/99% points patched in exactly."""')
    print()
    print(f"# generated by tools/simulate_trace_quantiles.py: "
          f"seed={SEED}, reps={reps}, steps={steps}")
    print()
    print(f"PROBS = {PROBS!r}")
    print()
    for kind in ("trace", "max"):
        name = "TRACE_QUANTILES" if kind == "trace" else "MAX_QUANTILES"
        print(f"{name} = {{")
        for case in ("none", "constant"):
            print(f'    "{case}": {{')
            for m in range(1, MAX_DIM + 1):
                vals = ", ".join(f"{v:.4f}" for v in tables[kind][case][m])
                print(f"        {m}: ({vals}),")
            print("    },")
        print("}")
        print()


if __name__ == "__main__":
    main()
