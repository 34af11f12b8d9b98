"""Composition law of transgressed cocycles on all small groups, in both transport modes."""

import argparse
from dataclasses import dataclass

from hopfdoubles.hopf import cyclic_cocycle, cyclic_group, named_group
from hopfdoubles.twist import transgress


@dataclass
class TransgressionRun:
    max_order: int = 6
    modes: tuple = ("adjoint", "regular")


def cocycles(max_order):
    for n in range(1, max_order + 1):
        G = cyclic_group(n)
        for s in range(n):
            yield f"C{n}", f"s={s}", G, cyclic_cocycle(n, s, G)
    C2 = cyclic_group(2)
    w = cyclic_cocycle(2, 1, C2)
    if max_order >= 4:
        V = named_group("C2xC2")
        hom = [0 if lab in ("1", "t") else 1 for lab in V.labels]
        yield "C2xC2", "pullback via s", V, w.pullback(V, hom)
    if max_order >= 6:
        S3 = named_group("S3")
        sign = [0 if lab in ("1", "(123)", "(132)") else 1 for lab in S3.labels]
        yield "S3", "sign pullback", S3, w.pullback(S3, sign)


def run(cfg: TransgressionRun):
    print(f"{'group':7} {'cocycle':16} " + " ".join(f"{m:>9}" for m in cfg.modes))
    for gname, wname, G, w in cocycles(cfg.max_order):
        cells = []
        for mode in cfg.modes:
            rep = transgress(G, w, mode).composition_report()
            cells.append("pass" if rep.ok else "FAIL")
        print(f"{gname:7} {wname:16} " + " ".join(f"{c:>9}" for c in cells))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=TransgressionRun.max_order)
    run(TransgressionRun(max_order=p.parse_args().max_order))
