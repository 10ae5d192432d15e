"""Write one SVG per non-identity involution class for each planar type.

    python scripts/render_figures.py --radius 5 --out figures
"""

import argparse
from pathlib import Path

from alcove_orbits.cartan import build_datum
from alcove_orbits.involutions import classify
from alcove_orbits.svg import render_svg

PLANAR = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--radius", type=int, default=5)
    p.add_argument("--out", type=Path, default=Path("figures"))
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for t, n in PLANAR:
        datum = build_datum(t, n)
        for c in classify(datum):
            if c.is_identity:
                continue
            path = args.out / f"{t}{n}_class{c.index}_R{args.radius}.svg"
            path.write_text(render_svg(datum, args.radius, c.index))
            print(path)


if __name__ == "__main__":
    main()
