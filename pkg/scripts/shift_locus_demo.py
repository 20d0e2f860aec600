"""For each catalog row, the rational c making R_y - c*ad_y nilpotent for all y.

A complete row over a 2-step h always contains 1/2; when R_y is itself
nilpotent the whole line usually qualifies.  Over an abelian h the ad term
vanishes, so the locus is either every c or none.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from postlie.catalog import load_catalog, row_params
from postlie.structures import ALL, induce_plas, shift_nilpotency_locus


@dataclass
class Config:
    rows: tuple[str, ...] = ()
    mirrored: bool = False


def fmt(values) -> str:
    if values == ALL:
        return "every c"
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}" if values else "none"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--row", action="append", default=[])
    ap.add_argument("--mirrored", action="store_true", help="report c for R_y + c*ad_y instead")
    a = ap.parse_args(argv)
    cfg = Config(tuple(a.row), a.mirrored)
    rows = [r for r in load_catalog() if not cfg.rows or r.id in cfg.rows]
    sign = "+" if cfg.mirrored else "-"
    print(f"{'row':<22} {'h':<6} c with R_y {sign} c*ad_y nilpotent")
    for row in rows:
        vals = row_params(row)
        p = induce_plas(row.embedding.instantiate(vals))
        locus = shift_nilpotency_locus(p)
        values = locus.mirrored() if cfg.mirrored else locus.values
        print(f"{row.id:<22} {row.h_name:<6} {fmt(values)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
