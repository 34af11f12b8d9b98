"""Gram ranks of the pairing of rank-two Nichols algebras, degree by degree.

The radical dimension is the number of free words minus the rank; the rank
should match the Kostant partition count of the degree.
"""

import argparse
import itertools
from dataclasses import dataclass

from hopfdoubles.cartan import B2, SL3
from hopfdoubles.linalg import rank
from hopfdoubles.pairing import GradedPair

DATUMS = {"sl3": SL3, "b2": B2}


@dataclass
class SerreScan:
    datum: str = "sl3"
    total: int = 5


def run(cfg: SerreScan):
    pair = GradedPair.from_cartan(DATUMS[cfg.datum])
    print(f"{'degree':>8} {'words':>6} {'rank':>5} {'radical':>8}")
    for deg in itertools.product(range(cfg.total + 1), repeat=2):
        if not 0 < sum(deg) <= cfg.total:
            continue
        G = pair.gram_matrix(deg)
        r = rank(G) if G and G[0] else 0
        nw = len(pair.words_b(deg))
        print(f"{str(deg):>8} {nw:>6} {r:>5} {nw - r:>8}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("datum", nargs="?", default="sl3", choices=sorted(DATUMS))
    p.add_argument("--total", type=int, default=5)
    a = p.parse_args()
    run(SerreScan(a.datum, a.total))
