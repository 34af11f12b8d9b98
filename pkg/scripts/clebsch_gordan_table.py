"""Highest weights of L(n) acting on the Verma module M(q^m) of the Heisenberg double."""

import argparse
import time
from dataclasses import dataclass

from hopfdoubles.rep import clebsch_gordan, format_decomposition


@dataclass
class CGGrid:
    nmax: int = 5
    mmax: int = 5
    trunc: int | None = None


def run(cfg: CGGrid):
    bad = 0
    for n in range(cfg.nmax + 1):
        for m in range(cfg.mmax + 1):
            t0 = time.perf_counter()
            ws = clebsch_gordan(n, m, cfg.trunc)
            ok = ws == [m + n - 2 * k for k in range(n + 1)]
            bad += not ok
            print(f"L({n}) x M({m}) = {format_decomposition(ws):40} {'ok' if ok else 'MISMATCH'}"
                  f"  {time.perf_counter() - t0:.2f}s")
    return bad == 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--mmax", type=int, default=5)
    p.add_argument("--trunc", type=int, default=None)
    a = p.parse_args()
    raise SystemExit(0 if run(CGGrid(a.nmax, a.mmax, a.trunc)) else 1)
