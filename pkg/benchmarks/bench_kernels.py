"""Time the compiled and pure-Python form kernels side by side.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import sys
import time

from kpq import _pykernels

try:
    from kpq import _ckernels
except ImportError:
    _ckernels = None


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _small_form(disc):
    """Least non-principal (a, b, c) of discriminant disc with a > 1."""
    a = 2
    while True:
        for b in range(disc % 2, a + 1, 2):
            if (b * b - disc) % (4 * a) == 0:
                return a, b, (b * b - disc) // (4 * a)
        a += 1


def _compose_loop(mod, disc, steps):
    f = mod.reduce_form(*_small_form(disc))
    g = f
    for _ in range(steps):
        g = mod.compose_forms(*g, *f)
    return g


def cases():
    for disc in (-40003, -3999999, -39999999):
        yield f"count_reduced_forms({disc})", lambda m, d=disc: m.count_reduced_forms(d)
    for disc in (-2164, -19704, -3999999):
        yield f"compose x20000 ({disc})", lambda m, d=disc: _compose_loop(m, d, 20000)
    yield "form_order(3, 2, 5457, 100000)", lambda m: m.form_order(3, 2, 5457, 100000)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is timed", file=sys.stderr)
    print(f"{'kernel':<42}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases():
        tp, rp = _best(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<42}{tp:>12.4f}{'-':>12}{'-':>10}")
            continue
        tc, rc = _best(lambda: fn(_ckernels), args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}: {rp} != {rc}")
        print(f"{name:<42}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
