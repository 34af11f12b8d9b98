"""Sweep the Heisenberg-as-twist comparison over example pairs and degrees."""

import argparse
import time
from dataclasses import dataclass, field

from hopfdoubles.doubles import twist_pair
from hopfdoubles.twist import verify_heis_is_twist


@dataclass
class TwistSweep:
    examples: list = field(default_factory=lambda: ["drin-group(C2)", "drin-group(S3)", "weyl(1)",
                                                    "weyl(2)", "dq-sl2", "super-sym(1)", "super-ext(1)"])
    maxdeg: int = 4


def run(cfg: TwistSweep):
    print(f"{'example':20} {'deg':>3} {'ok':>5} {'sec':>7}")
    ok = True
    for name in cfg.examples:
        drin, heis = twist_pair(name)
        for d in range(1, cfg.maxdeg + 1):
            t0 = time.perf_counter()
            rep = verify_heis_is_twist(drin, heis, d)
            ok &= rep.ok
            print(f"{name:20} {d:>3} {str(rep.ok):>5} {time.perf_counter() - t0:7.2f}")
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--maxdeg", type=int, default=TwistSweep.maxdeg)
    p.add_argument("examples", nargs="*")
    a = p.parse_args()
    cfg = TwistSweep(maxdeg=a.maxdeg)
    if a.examples:
        cfg.examples = a.examples
    raise SystemExit(0 if run(cfg) else 1)
