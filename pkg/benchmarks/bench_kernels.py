"""Compare the compiled and pure-Python subset-construction kernels.

    python3 benchmarks/bench_kernels.py [--max-n 14] [--repeat 3]

Times the fused determinize+minimize kernel on the all-final witness family
(whose minimal DFA has 2^n states) and on random NFAs.
"""

import argparse
import random
import sys
import time

from nfakit import _pykernels, kernels
from nfakit.families import witness_all_final
from nfakit.sampling import random_nfa


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--random", type=int, default=200, help="number of random 8-state NFAs")
    args = ap.parse_args(argv)

    ck = kernels._ckernels
    if ck is None:
        print("compiled kernels unavailable; build with `python3 setup.py build_ext --inplace`")
        return 1

    print(f"{'case':<22}{'sc':>8}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for n in range(8, args.max_n + 1, 2):
        m = witness_all_final(n)
        call = (m.k, m.flat_delta(), m.initial_mask, m.final_mask)
        sc_py = _pykernels.state_complexity(*call)
        sc_c = ck.state_complexity(*call)
        assert sc_py == sc_c == 1 << n
        t_py = best_of(lambda: _pykernels.state_complexity(*call), args.repeat)
        t_c = best_of(lambda: ck.state_complexity(*call), args.repeat)
        print(f"{'all-final n=' + str(n):<22}{sc_c:>8}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")

    rng = random.Random(1)
    batch = [random_nfa(rng, 8, 2) for _ in range(args.random)]
    calls = [(m.k, m.flat_delta(), m.initial_mask, m.final_mask) for m in batch]
    assert [_pykernels.state_complexity(*c) for c in calls] == [ck.state_complexity(*c) for c in calls]
    t_py = best_of(lambda: [_pykernels.state_complexity(*c) for c in calls], args.repeat)
    t_c = best_of(lambda: [ck.state_complexity(*c) for c in calls], args.repeat)
    print(f"{f'{args.random} random n=8':<22}{'-':>8}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
