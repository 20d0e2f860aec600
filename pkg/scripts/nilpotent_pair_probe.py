"""Search for post-Lie structures on (g, h) with g nilpotent and compare
completeness with nilpotency of the right multiplications.

Each L_{e_i} is taken from a sparse ansatz: zero or c*D for one basis
derivation D of h and c in the coefficient set.  Every candidate is checked
against the axioms; g is the bracket forced by the first axiom.  The script
collects evidence only; a disagreement would be printed as a counterexample.
"""
from __future__ import annotations

import argparse
import itertools
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from postlie.catalog import catalog_algebras
from postlie.lie import derivation_basis, nilpotency_class
from postlie.matrix import PolyMatrix
from postlie.structures import (PlasStructure, bracket_from_product, complete_2step, left_complete,
                                right_complete, verify_plas)


@dataclass
class Config:
    algebra: str = "h3"
    coefficients: tuple[Fraction, ...] = (Fraction(1), Fraction(-1))
    sample: int | None = None  # None: exhaustive
    seed: int = 0
    show: int = 3


def candidates(cfg: Config, h):
    basis = derivation_basis(h)
    choices = [PolyMatrix.zeros(h.ctx, h.dim)] + [b.scale(c) for b in basis for c in cfg.coefficients]
    if cfg.sample is None:
        yield from itertools.product(choices, repeat=h.dim)
        return
    rng = random.Random(cfg.seed)
    for _ in range(cfg.sample):
        yield tuple(rng.choice(choices) for _ in range(h.dim))


def probe(cfg: Config) -> dict:
    h = catalog_algebras()[cfg.algebra]
    cls = nilpotency_class(h)
    if cls is None or cls > 2:
        raise SystemExit(f"{cfg.algebra} must be abelian or 2-step nilpotent")
    tally = Counter()
    disagreements = []
    tried = 0
    for left in candidates(cfg, h):
        tried += 1
        g = bracket_from_product(h, left)
        p = PlasStructure.from_left(g, h, list(left))
        if not verify_plas(p).ok or nilpotency_class(g) is None:
            continue
        complete, r_nil = complete_2step(p), right_complete(p)
        tally[(complete, r_nil, left_complete(p))] += 1
        if complete != r_nil:
            disagreements.append([m.to_strings() for m in left])
    return {"tried": tried, "tally": tally, "disagreements": disagreements}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--algebra", default="h3")
    ap.add_argument("--coeff", action="append", type=Fraction, help="coefficient set (repeatable)")
    ap.add_argument("--sample", type=int, help="random candidates instead of the full enumeration")
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args(argv)
    cfg = Config(algebra=a.algebra, sample=a.sample, seed=a.seed)
    if a.coeff:
        cfg.coefficients = tuple(a.coeff)
    t0 = time.perf_counter()
    res = probe(cfg)
    found = sum(res["tally"].values())
    print(f"h = {cfg.algebra}: {res['tried']} candidates, {found} structures with nilpotent g "
          f"({time.perf_counter() - t0:.1f}s)")
    print("complete  R nilpotent  L nilpotent  count")
    for (c, r, l), n in sorted(res["tally"].items(), reverse=True):
        print(f"{str(c):<9} {str(r):<12} {str(l):<12} {n}")
    if res["disagreements"]:
        print(f"{len(res['disagreements'])} structures where completeness and R-nilpotency differ:")
        for left in res["disagreements"][:cfg.show]:
            print("  L_e =", left)
    else:
        print("completeness and R-nilpotency agree on every structure found")
    return 0


if __name__ == "__main__":
    sys.exit(main())
