"""Time compute_annihilator on random free presentations.

    python scripts/bench_annihilator.py [--n 50] [--dim 4] [--deg 3] [--seed 0]
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from presentations import random_presentation  # noqa: E402

from skeinfill.annihilator import compute_annihilator  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--dim", type=int, default=4)
    ap.add_argument("--deg", type=int, default=3)
    ap.add_argument("--density", type=float, default=0.6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    times = []
    for i in range(args.n):
        pres = random_presentation(rng, args.dim, args.deg, args.density)
        target = rng.randrange(pres.dim)
        t0 = time.perf_counter()
        ann = compute_annihilator(pres, target)
        times.append(time.perf_counter() - t0)
        print(f"{i:3d}  d={pres.dim}  degree={ann.peripheral.degree}  {times[-1]:.3f}s")
    times.sort()
    print(f"total {sum(times):.2f}s  median {times[len(times) // 2]:.3f}s  max {times[-1]:.3f}s")


if __name__ == "__main__":
    main()
