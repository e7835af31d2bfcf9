"""Band count for the bundled hexagon relation at slope -1/2.

    python scripts/hexagon_band.py [--svg hexagon.svg]

Prints the band data and the 11 spanning classes, optionally the diagram.
"""

import argparse
import json
import time
from pathlib import Path

from skeinfill.coeff import QA
from skeinfill.documents import relation_from_doc
from skeinfill.filling import FillingSlope, analyze_filling
from skeinfill.lattice import count_classes
from skeinfill.svg import render_band_svg

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--slope", default="-1/2")
    ap.add_argument("--svg", type=Path)
    args = ap.parse_args()

    R = relation_from_doc(json.loads((ROOT / "data" / "hexagon_relation.json").read_text()), QA)
    s = FillingSlope.parse(args.slope)
    t0 = time.perf_counter()
    rep = analyze_filling([R], s, ["f"])
    dt = time.perf_counter() - t0
    if rep.excluded:
        print(f"slope {s} is excluded: {[str(x) for x in rep.excluded_slopes]}")
        return
    g = rep.generators[0]
    print(f"polygon     {list(R.polygon.vertices)}")
    print(f"slope       {s}  lambda={g.band.lam}  eps={g.band.eps}  M={g.band.M}")
    print(f"classes     {g.classes}")
    print(f"bound       {rep.total_bound}  (count_classes(M) = {count_classes(g.band.M)})  {dt * 1000:.1f} ms")
    if args.svg:
        args.svg.write_text(render_band_svg(R.polygon, g.band, g.classes, f"slope {s}"), encoding="utf-8")
        print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
