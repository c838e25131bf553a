"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the Jacobi eigensolver on random Hermitian matrices and the Albert
Jordan product, checks that both backends agree, and prints a table.
"""
import argparse
import timeit

import numpy as np

from jordan_gleason import _kernels
from jordan_gleason.octonion import MUL_INDEX, MUL_SIGN, STRUCTURE


def _hermitian(n, rng):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g + g.conj().T


def _time(fn, repeat):
    fn()  # warm-up (includes JIT compilation)
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    names = _kernels.backends()
    if "numba" not in names:
        print("numba is not installed; only the numpy backend is available")

    rows = []
    for n in (3, 5, 8, 16):
        a = _hermitian(n, rng)
        times = {b: _time(lambda b=b: _kernels.jacobi_eigh(a, backend=b), args.repeat) for b in names}
        ws = [_kernels.jacobi_eigh(a, backend=b)[0] for b in names]
        gap = max(float(np.max(np.abs(w - ws[0]))) for w in ws)
        rows.append((f"jacobi n={n}", times, gap))

    x = rng.standard_normal(27).astype(np.complex128)
    y = rng.standard_normal(27).astype(np.complex128)
    times = {b: _time(lambda b=b: _kernels.albert_jordan(x, y, STRUCTURE, MUL_SIGN, MUL_INDEX, backend=b),
                      args.repeat * 10) for b in names}
    outs = [_kernels.albert_jordan(x, y, STRUCTURE, MUL_SIGN, MUL_INDEX, backend=b) for b in names]
    rows.append(("albert product", times, max(float(np.max(np.abs(o - outs[0]))) for o in outs)))

    header = f"{'kernel':<16}" + "".join(f"{b + ' (us)':>14}" for b in names) + f"{'speedup':>10}{'max diff':>12}"
    print(header)
    for label, t, gap in rows:
        speed = t["numpy"] / t["numba"] if "numba" in t else 1.0
        print(f"{label:<16}" + "".join(f"{t[b] * 1e6:>14.1f}" for b in names) + f"{speed:>10.1f}{gap:>12.1e}")


if __name__ == "__main__":
    main()
