"""Time each hot kernel under the numba and numpy backends.

    python benchmarks/bench_kernels.py [--repeat 20]

Each kernel is called once before timing so numba compilation is excluded.
"""

import argparse
import time

import numpy as np

from fedsgc import _kernels as K


def cases(rng):
    x = rng.random((50, 10, 12, 12))
    w = rng.normal(size=(20, 10, 5, 5))
    dout = rng.normal(size=(50, 20, 8, 8))
    img = rng.random((50, 10, 24, 24))
    pooled, arg = K.NUMPY_KERNELS.maxpool2_forward(img)
    n = 100_000
    flat = [rng.normal(size=n) for _ in range(4)]
    mask = rng.random(n) < 0.2
    cw = rng.normal(size=(10, n))
    cm = rng.random((10, n)) < 0.2
    n_c = np.full(10, 600.0)
    return {
        "conv2d_forward": lambda k: k.conv2d_forward(x, w, np.zeros(20)),
        "conv2d_backward": lambda k: k.conv2d_backward(x, w, dout),
        "maxpool2_forward": lambda k: k.maxpool2_forward(img),
        "maxpool2_backward": lambda k: k.maxpool2_backward(np.ones_like(pooled), arg, img.shape),
        "adam_update": lambda k: k.adam_update(flat[0], flat[1], flat[2], np.abs(flat[3]), mask,
                                               1e-3, 0.9, 0.999, 1e-8, 5),
        "sparse_weighted_average": lambda k: k.sparse_weighted_average(flat[0], mask, cw, cm, n_c, 54000.0),
    }


def time_call(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args(argv)
    backends = [K.NUMPY_KERNELS] + ([K.NUMBA_KERNELS] if K.NUMBA_KERNELS is not None else [])
    table = cases(np.random.default_rng(0))
    print(f"{'kernel':<26}" + "".join(f"{b.name + ' ms':>12}" for b in backends) + f"{'speedup':>10}")
    for name, call in table.items():
        ms = [1000 * time_call(lambda b=b: call(b), args.repeat) for b in backends]
        speed = f"{ms[0] / ms[1]:>9.2f}x" if len(ms) == 2 else ""
        print(f"{name:<26}" + "".join(f"{t:>12.3f}" for t in ms) + speed)
    if K.NUMBA_KERNELS is None:
        print("numba not installed; only the numpy path was timed")


if __name__ == "__main__":
    main()
