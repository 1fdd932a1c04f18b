"""Regenerate the packaged fixture diagrams and their catalog.

Every fixture is built from exact polygon or braid-closure geometry, so the
winding data is realizable by construction.  Run from the repository root:

    python tools/make_fixtures.py
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from sikh.diagram import permute_crossings
from sikh.verify.polygons import PUNCTURE_Y, axis_puncture, braid_closure, polygon_diagram

OUT = Path(__file__).resolve().parent.parent / "src" / "sikh" / "data" / "fixtures"
Y = PUNCTURE_Y


def braid(word, m, punctures=(), **meta):
    meta.setdefault("provenance", f"closure of braid word {list(word)} on {m} strands, "
                                  f"punctures at {[(str(x), str(y)) for x, y in punctures]}")
    return braid_closure(word, m, punctures, **meta)


def square(r, z=0):
    return [(r, -r, z), (r, r, z), (-r, r, z), (-r, -r, z)]


WHITEHEAD = [(2, 7, 2), (2, 3, -2), (-6, 3, 0), (-6, -6, 0), (6, -6, 0), (6, 4, 0),
             (-2, 4, 0), (-2, 6, 0), (8, 6, 0), (8, -8, 0), (-8, -8, 0), (-8, 7, 0)]


def fixtures():
    """name -> (diagram, embedded_knot flag)."""
    f = {}
    # plain disk
    f["unknot"] = (braid([], 1, comment="crossing-free unknot"), True)
    f["unknot_kink_pos"] = (braid([1], 2, comment="unknot with one positive kink"), True)
    f["unknot_kink_neg"] = (braid([-1], 2, comment="unknot with one negative kink"), True)
    f["unknot_two_kinks"] = (braid([1, 2], 3, comment="unknot with two kinks"), True)
    f["trefoil"] = (braid([1, 1, 1], 2, comment="right-handed trefoil"), False)
    f["trefoil_mirror"] = (braid([-1, -1, -1], 2, comment="left-handed trefoil"), False)
    f["hopf"] = (braid([1, 1], 2, comment="positive Hopf link"), False)
    f["unlink2"] = (braid([], 2, comment="two-component unlink"), False)
    f["unlink2_r2"] = (braid([1, -1], 2, comment="two-component unlink after a second Reidemeister move"), False)
    f["r3_left"] = (braid([1, 2, 1], 3, comment="three-strand closure, left side of a third Reidemeister move"), False)
    f["r3_right"] = (braid([2, 1, 2], 3, comment="three-strand closure, right side of a third Reidemeister move"),
                     False)
    # annulus
    ax1, ax2, ax3 = axis_puncture(1), axis_puncture(2), axis_puncture(3)
    f["annular_unknot"] = (braid([], 1, [ax1], comment="essential circle around the puncture"), True)
    f["annular_unknot_kink_pos"] = (braid([1], 2, [(7, Y)], comment="essential circle with a positive kink"), True)
    f["annular_unknot_kink_neg"] = (braid([-1], 2, [(7, Y)], comment="essential circle with a negative kink"), True)
    f["annular_contractible"] = (braid([], 1, [(-1, Y)], comment="contractible circle beside the puncture"), True)
    f["annular_contractible_kink"] = (braid([1], 2, [(-1, Y)], comment="contractible circle with a kink"), True)
    f["annular_hopf"] = (braid([1, 1], 2, [ax2], comment="Hopf link, both components around the puncture"), False)
    f["annular_cable"] = (braid([1], 2, [ax2], comment="knot winding twice around the puncture"), False)
    f["annular_unlink2"] = (braid([], 2, [ax2], comment="two parallel essential circles"), False)
    f["annular_unlink2_r2"] = (braid([1, -1], 2, [ax2], comment="two essential circles after a second "
                                                                "Reidemeister move"), False)
    f["annular_r3_left"] = (braid([1, 2, 1], 3, [ax3], comment="annular closure, left side of a third "
                                                               "Reidemeister move"), False)
    f["annular_r3_right"] = (braid([2, 1, 2], 3, [ax3], comment="annular closure, right side of a third "
                                                                "Reidemeister move"), False)
    f["annular_conj_left"] = (braid([1, 1, -2], 3, [ax3], comment="annular closure of a braid"), False)
    f["annular_conj_right"] = (braid([-2, 1, 1], 3, [ax3], comment="annular closure of a conjugate braid"), False)
    p = (Fraction(1, 2), Fraction(1, 2))
    f["whitehead_clasp"] = (polygon_diagram(
        [WHITEHEAD], [p], comment="clasped annular knot (Whitehead pattern); winding number zero",
        provenance="polygon " + json.dumps(WHITEHEAD) + ", puncture (1/2, 1/2)"), False)
    unclasped = [(x, y, 1 if z else 0) for x, y, z in WHITEHEAD]
    f["whitehead_unclasped"] = (polygon_diagram(
        [unclasped], [p], comment="the Whitehead pattern with its clasp undone: a contractible unknot",
        provenance="polygon " + json.dumps(unclasped) + ", puncture (1/2, 1/2)"), True)
    kp = [(3, 0, -2), (7, 0, 2), (7, 2, -2), (3, 2, 2)]
    f["parallel_clasp"] = (polygon_diagram(
        [square(4), square(6), kp], [(Fraction(1, 2), Fraction(1, 3))],
        comment="annular link: two parallel essential circles and a contractible circle "
                "clasping both of them alternately",
        provenance="polygons: squares |x|,|y|<=4 and <=6 at z=0 and "
                   "the quadrilateral " + json.dumps(kp) + "; puncture (1/2, 1/3)"), False)
    # twice-punctured disk
    f["two_puncture_circle"] = (braid([], 1, [(1, Y), (3, Y)], comment="embedded circle around both punctures"),
                                True)
    f["two_puncture_circle_kink"] = (braid([1], 2, [(1, Y), (7, Y)],
                                           comment="embedded circle around both punctures, with a kink"), True)
    f["two_puncture_single"] = (braid([], 1, [(3, Y), (-1, Y)], comment="embedded circle around one of two "
                                                                         "punctures"), True)
    bowtie = [(-4, -2, 1), (4, 2, 1), (4, -2, 0), (-4, 2, 0)]
    f["figure_eight_curve"] = (polygon_diagram(
        [bowtie], [(Fraction(-5, 2), Fraction(1, 2)), (Fraction(5, 2), Fraction(1, 2))],
        comment="figure-eight shaped curve, one puncture in each lobe; its homology class (1,-1) "
                "is not that of an embedded curve",
        provenance="polygon " + json.dumps(bowtie) + ", punctures (-5/2, 1/2) and (5/2, 1/2)"), False)
    two = [(1, Y), axis_puncture(2)]
    f["two_puncture_unlink2"] = (braid([], 2, two, comment="nested essential circles"), False)
    f["two_puncture_unlink2_r2"] = (braid([1, -1], 2, two, comment="nested essential circles after a second "
                                                                   "Reidemeister move"), False)
    f["two_puncture_r3_left"] = (braid([1, 2, 1], 3, [ax3, (3, Y)], comment="left side of a third Reidemeister "
                                                                            "move on the twice-punctured disk"),
                                 False)
    f["two_puncture_r3_right"] = (braid([2, 1, 2], 3, [ax3, (3, Y)], comment="right side of a third Reidemeister "
                                                                             "move on the twice-punctured disk"),
                                  False)
    # crossing reorderings
    for base, order in (("trefoil", (2, 0, 1)), ("parallel_clasp", (3, 1, 0, 2)), ("two_puncture_r3_left", (1, 2, 0))):
        d, emb = f[base]
        meta = dict(d.meta)
        meta["comment"] = f"{base} with crossings listed in the order {list(order)}"
        out = permute_crossings(d, order)
        f[base + "_reordered"] = (type(out)(out.punctures, out.edges, out.crossings, out.components, meta), emb)
    return f


PAIRS = [
    ("R1", "unknot", "unknot_kink_pos"),
    ("R1", "unknot", "unknot_kink_neg"),
    ("R1", "unknot", "unknot_two_kinks"),
    ("R1", "annular_unknot", "annular_unknot_kink_pos"),
    ("R1", "annular_unknot", "annular_unknot_kink_neg"),
    ("R1", "annular_contractible", "annular_contractible_kink"),
    ("R1", "two_puncture_circle", "two_puncture_circle_kink"),
    ("R2", "unlink2", "unlink2_r2"),
    ("R2", "annular_unlink2", "annular_unlink2_r2"),
    ("R2", "two_puncture_unlink2", "two_puncture_unlink2_r2"),
    ("R3", "r3_left", "r3_right"),
    ("R3", "annular_r3_left", "annular_r3_right"),
    ("R3", "two_puncture_r3_left", "two_puncture_r3_right"),
    ("reorder", "trefoil", "trefoil_reordered"),
    ("reorder", "parallel_clasp", "parallel_clasp_reordered"),
    ("reorder", "two_puncture_r3_left", "two_puncture_r3_left_reordered"),
    ("conjugation", "annular_conj_left", "annular_conj_right"),
]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.skd"):
        old.unlink()
    catalog = {"fixtures": {}, "pairs": []}
    for name, (d, embedded) in fixtures().items():
        (OUT / f"{name}.skd").write_text(d.dumps() + "\n", encoding="utf-8")
        catalog["fixtures"][name] = {"file": f"{name}.skd", "punctures": d.punctures,
                                     "crossings": d.k, "components": len(d.components),
                                     "embedded_knot": embedded}
    for move, left, right in PAIRS:
        catalog["pairs"].append({"move": move, "left": left, "right": right})
    (OUT / "catalog.json").write_text(json.dumps(catalog, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(catalog['fixtures'])} fixtures and {len(PAIRS)} pairs to {OUT}")


if __name__ == "__main__":
    main()
