#!/usr/bin/env python3
"""Render the lifted slalom curve of a word (or of a pure braid's cross-ratio
curve) to an SVG file, with the lattice dots and piece labels."""

import argparse

from slalom.braids import braid_to_strands, cross_ratio_curve, parse_braid
from slalom.covering import BASE_LIFT_POINT, lift_path, slalom_decompose, word_to_curve
from slalom.svg import render_lift_scene
from slalom.words import parse_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", help="free-group word, e.g. 'a2^-1 a1^2 a2^-3'")
    src.add_argument("--braid", help="pure braid word, e.g. 's1^2 s2^-2'")
    ap.add_argument("--out", required=True)
    ap.add_argument("--samples", type=int, default=128)
    ap.add_argument("--scale", type=float, default=40.0)
    args = ap.parse_args()

    if args.word is not None:
        curve = word_to_curve(parse_word(args.word), args.samples)
    else:
        curve = cross_ratio_curve(braid_to_strands(parse_braid(args.braid)))
    if curve.is_constant:
        raise SystemExit("trivial curve, nothing to draw")
    lifted = lift_path(curve, BASE_LIFT_POINT)
    pieces = slalom_decompose(lifted).pieces
    with open(args.out, "w") as fh:
        fh.write(render_lift_scene(lifted, pieces, curve=curve, scale=args.scale))
    print(f"wrote {args.out}: {len(pieces)} pieces, lift endpoint {lifted.end:.6f}")


if __name__ == "__main__":
    main()
