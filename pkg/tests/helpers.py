"""Shared fixtures: small groups with their 3-cocycles."""

from hopfdoubles.hopf import cyclic_cocycle, cyclic_group, named_group


def small_group_cocycles():
    """Every group of order <= 6 with the cocycles we can write down.

    Cyclic groups get the whole cyclic family; C2xC2 and S3 get pullbacks of
    the nontrivial C2 cocycle along their surjections onto C2.
    """
    out = []
    for n in range(1, 7):
        G = cyclic_group(n)
        out.extend((G, cyclic_cocycle(n, s, G)) for s in range(n))
    C2 = cyclic_group(2)
    w = cyclic_cocycle(2, 1, C2)
    V = named_group("C2xC2")
    for gens in ({"s"}, {"t"}, {"s", "t"}):
        hom = [sum(1 for ch in lab if ch in gens) % 2 if lab != "1" else 0 for lab in V.labels]
        out.append((V, w.pullback(V, hom)))
    S3 = named_group("S3")
    sign = [0 if lab in ("1", "(123)", "(132)") else 1 for lab in S3.labels]
    out.append((S3, w.pullback(S3, sign)))
    return out
