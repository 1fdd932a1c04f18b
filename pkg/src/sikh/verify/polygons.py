"""Exact projection of polygonal links to diagram documents.

Used to author fixtures and to draw random test diagrams.  A link is a list of
closed polygons with integer or rational vertices ``(x, y, z)``; projection is
onto the ``xy``-plane, and the strand with larger interpolated ``z`` passes
over.  Winding data comes from horizontal rays ``{(x, py) : x > px}`` from
each puncture.  All arithmetic uses ``Fraction``.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction
from typing import Sequence, Tuple

from ..diagram import Diagram, from_dict


class DegenerateProjection(ValueError):
    """The projection is not in general position (or a puncture sits badly)."""


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _frac(p):
    return tuple(Fraction(x) for x in p)


def diagram_dict(components: Sequence[Sequence[Tuple]], punctures: Sequence[Tuple] = (), **meta) -> dict:
    comps = [[_frac(p) for p in comp] for comp in components]
    punct = [_frac(p) for p in punctures]
    segs = []  # (component, index, P, Q)
    for ci, comp in enumerate(comps):
        if len(comp) < 3:
            raise DegenerateProjection(f"component {ci} needs at least three vertices")
        for i, p in enumerate(comp):
            segs.append((ci, i, p, comp[(i + 1) % len(comp)]))
    pts = [(p[0], p[1]) for comp in comps for p in comp]
    if len(set(pts)) != len(pts):
        raise DegenerateProjection("two vertices project to the same point")

    def adjacent(s, t):
        if s[0] != t[0]:
            return False
        m = len(comps[s[0]])
        return (s[1] - t[1]) % m in (1, m - 1)

    crossings = []  # [point, (seg a, t), (seg b, u), over index 0/1]
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            s, t = segs[a], segs[b]
            P, Q, R, S = s[2], s[3], t[2], t[3]
            d1, d2 = _sub(Q, P), _sub(S, R)
            den = _cross(d1, d2)
            rp = _sub(R, P)
            if den == 0:
                if _cross(rp, d1) == 0:
                    # collinear: overlapping unless the projections are disjoint
                    L = d1[0] * d1[0] + d1[1] * d1[1]
                    t0 = Fraction(rp[0] * d1[0] + rp[1] * d1[1], L)
                    sp = _sub(S, P)
                    t1 = Fraction(sp[0] * d1[0] + sp[1] * d1[1], L)
                    lo, hi = min(t0, t1), max(t0, t1)
                    if adjacent(s, t):
                        if max(lo, 0) < min(hi, 1):
                            raise DegenerateProjection("adjacent segments fold back")
                    elif hi >= 0 and lo <= 1:
                        raise DegenerateProjection("collinear overlapping segments")
                continue
            tt = Fraction(_cross(rp, d2), den)
            uu = Fraction(_cross(rp, d1), den)
            if adjacent(s, t):
                continue
            inside_t, inside_u = 0 < tt < 1, 0 < uu < 1
            if inside_t and inside_u:
                za = s[2][2] + tt * (s[3][2] - s[2][2])
                zb = t[2][2] + uu * (t[3][2] - t[2][2])
                if za == zb:
                    raise DegenerateProjection("strands meet in space at a crossing")
                point = (P[0] + tt * d1[0], P[1] + tt * d1[1])
                crossings.append([point, (a, tt), (b, uu), 0 if za > zb else 1])
            elif 0 <= tt <= 1 and 0 <= uu <= 1:
                raise DegenerateProjection("a vertex lies on another segment")
    if len({c[0] for c in crossings}) != len(crossings):
        raise DegenerateProjection("three strands through one point")

    # events along each component: (segment index, parameter, crossing, is_over)
    events = {ci: [] for ci in range(len(comps))}
    for xi, (point, sa, sb, over) in enumerate(crossings):
        for which, (si, par) in enumerate((sa, sb)):
            ci, idx = segs[si][0], segs[si][1]
            events[ci].append((idx, par, xi, which == over))
    order = sorted(range(len(crossings)),
                   key=lambda xi: min((ci, e[0], e[1]) for ci in events for e in events[ci] if e[2] == xi))

    edges = []  # (component, [(seg idx, t0, t1)...])
    comp_edges = []
    ends = {}  # (crossing, is_over, "in"/"out") -> edge index
    for ci, comp in enumerate(comps):
        ev = sorted(events[ci])
        m = len(comp)
        ids = []
        if not ev:
            edges.append((ci, [(i, Fraction(0), Fraction(1)) for i in range(m)]))
            ids.append(len(edges) - 1)
        for j, e0 in enumerate(ev):
            e1 = ev[(j + 1) % len(ev)]
            pieces = []
            seg, par = e0[0], e0[1]
            first = True
            while True:
                if seg == e1[0] and e1[1] > par and not (first and len(ev) == 1):
                    pieces.append((seg, par, e1[1]))
                    break
                first = False
                pieces.append((seg, par, Fraction(1)))
                seg, par = (seg + 1) % m, Fraction(0)
            edges.append((ci, pieces))
            idx = len(edges) - 1
            ids.append(idx)
            ends[(e0[2], e0[3], "out")] = idx
            ends[(e1[2], e1[3], "in")] = idx
        comp_edges.append(ids)

    n = len(punct)
    windings = []
    for ci, pieces in edges:
        w = [0] * n
        for si_local, t0, t1 in pieces:
            comp = comps[ci]
            P, Q = comp[si_local], comp[(si_local + 1) % len(comp)]
            for k, (px, py) in enumerate(punct):
                if P[1] == py or Q[1] == py:
                    if (P[1] == py and P[0] > px) or (Q[1] == py and Q[0] > px):
                        raise DegenerateProjection(f"ray from puncture {k} passes through a vertex")
                    if P[1] == py == Q[1] and min(P[0], Q[0]) <= px <= max(P[0], Q[0]):
                        raise DegenerateProjection(f"puncture {k} lies on the link")
                    if (P[1] == py and P[0] == px) or (Q[1] == py and Q[0] == px):
                        raise DegenerateProjection(f"puncture {k} lies on the link")
                    continue
                if (P[1] - py) * (Q[1] - py) > 0:
                    continue
                tt = (py - P[1]) / (Q[1] - P[1])
                x = P[0] + tt * (Q[0] - P[0])
                if x == px:
                    raise DegenerateProjection(f"puncture {k} lies on the link")
                if x < px:
                    continue
                if tt == t0 or tt == t1:
                    if 0 < tt < 1:
                        raise DegenerateProjection(f"ray from puncture {k} passes through a crossing")
                if t0 < tt < t1 or (tt == t0 == 0) or (tt == t1 == 1):
                    w[k] += 1 if Q[1] > P[1] else -1
        windings.append(w)

    doc_crossings = []
    for new, old in enumerate(order):
        point, sa, sb, over = crossings[old]
        dirs = []
        for which, (si, _) in enumerate((sa, sb)):
            s = segs[si]
            d = _sub(s[3], s[2])
            is_over = which == over
            dirs.append(((d[0], d[1]), ends[(old, is_over, "out")], "tail", is_over))
            dirs.append(((-d[0], -d[1]), ends[(old, is_over, "in")], "head", is_over))
        dirs.sort(key=functools.cmp_to_key(_angle_cmp))
        while dirs[0][3]:
            dirs = dirs[1:] + dirs[:1]
        doc_crossings.append({"id": new, "ports": [[e, end] for _, e, end, _ in dirs], "under0": True})

    doc = dict(meta)
    doc.update({
        "punctures": n,
        "edges": [{"id": i, "winding": w} for i, w in enumerate(windings)],
        "crossings": doc_crossings,
        "components": comp_edges,
    })
    return doc


def _angle_cmp(a, b):
    va, vb = a[0], b[0]
    ha = 0 if (va[1] > 0 or (va[1] == 0 and va[0] > 0)) else 1
    hb = 0 if (vb[1] > 0 or (vb[1] == 0 and vb[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    c = _cross(va, vb)
    return -1 if c > 0 else (1 if c < 0 else 0)


def polygon_diagram(components, punctures=(), **meta) -> Diagram:
    return from_dict(diagram_dict(components, punctures, **meta))


def _rough_crossings(comps) -> int:
    """Number of proper crossings between non-adjacent segments, integer arithmetic only."""
    segs = []
    for ci, comp in enumerate(comps):
        m = len(comp)
        for i in range(m):
            segs.append((ci, i, m, comp[i], comp[(i + 1) % m]))
    count = 0
    for a in range(len(segs)):
        ca, ia, ma, P, Q = segs[a]
        for b in range(a + 1, len(segs)):
            cb, ib, mb, R, S = segs[b]
            if ca == cb and (ia - ib) % ma in (1, ma - 1):
                continue
            d1 = (Q[0] - P[0]) * (R[1] - P[1]) - (Q[1] - P[1]) * (R[0] - P[0])
            d2 = (Q[0] - P[0]) * (S[1] - P[1]) - (Q[1] - P[1]) * (S[0] - P[0])
            d3 = (S[0] - R[0]) * (P[1] - R[1]) - (S[1] - R[1]) * (P[0] - R[0])
            d4 = (S[0] - R[0]) * (Q[1] - R[1]) - (S[1] - R[1]) * (Q[0] - R[0])
            if d1 * d2 < 0 and d3 * d4 < 0:
                count += 1
    return count


def random_polygon_diagram(rng: random.Random, crossings: int, max_punctures: int = 3,
                           grid: int = 8, max_components: int = 2, tries: int = 2000) -> Diagram:
    """A random polygonal link projection with exactly ``crossings`` crossings (or fewer if none is found)."""
    best = None
    for _ in range(tries):
        comps = []
        for _ in range(rng.randint(1, max_components)):
            nv = rng.randint(3, 3 + crossings)
            comps.append([(rng.randint(0, grid), rng.randint(0, grid), rng.randint(-3, 3)) for _ in range(nv)])
        n = rng.randint(0, max_punctures)
        punct = [(Fraction(2 * rng.randint(0, grid) + 1, 2), Fraction(3 * rng.randint(0, grid) + 1, 3))
                 for _ in range(n)]
        rough = _rough_crossings(comps)
        if rough > crossings or (rough < crossings and best is not None and rough <= len(best["crossings"])):
            continue
        try:
            doc = diagram_dict(comps, punct)
        except DegenerateProjection:
            continue
        k = len(doc["crossings"])
        if k == crossings:
            return from_dict(doc)
        if k < crossings and (best is None or k > len(best["crossings"])):
            best = doc
    return from_dict(best)


def random_braid_diagram(rng: random.Random, crossings: int, max_punctures: int = 3,
                         max_strands: int = 3) -> Diagram:
    """Closure of a random braid word, punctures dropped between strands and closing arcs."""
    m = rng.randint(2, max_strands) if crossings else rng.randint(1, max_strands)
    word = [rng.choice((1, -1)) * rng.randint(1, m - 1) for _ in range(crossings)]
    slots = braid_puncture_slots(m)
    n = rng.randint(0, min(max_punctures, len(slots)))
    return braid_closure(word, m, rng.sample(slots, n))


def random_diagram(rng: random.Random, max_crossings: int = 6, max_punctures: int = 3) -> Diagram:
    """Either a random polygon projection or a random braid closure, crossing count uniform."""
    k = rng.randint(0, max_crossings)
    if rng.random() < 0.5:
        return random_polygon_diagram(rng, k, max_punctures)
    return random_braid_diagram(rng, k, max_punctures)


def braid_polygons(word: Sequence[int], strands: int):
    """Polygons of the closure of a braid word.

    Generator ``+i`` / ``-i`` (1-based) crosses strands ``i-1`` and ``i``; for
    ``+i`` the strand moving right passes over.  Strand ``p`` sits at ``x = 2p``
    and the closing arcs run around the right-hand side, so a puncture at
    ``axis_puncture(strands)`` is encircled by every strand.
    """
    m, T = strands, len(word)
    for g in word:
        if not g or abs(g) >= m:
            raise ValueError(f"generator {g} is not valid on {m} strands")
    half = Fraction(1, 2)

    def path(p):
        """Vertices of one pass from the bottom at position p; returns (vertices, top position)."""
        pts = [(2 * p, 0, 0)]
        for t, g in enumerate(word):
            i = abs(g)
            if p not in (i - 1, i):
                continue
            right = p == i - 1
            over = (g > 0) == right
            x0, y0 = 2 * p, 2 * t
            dx = 1 if right else -1
            pts.append((x0, y0, 0))
            pts.append((x0 + dx * half, y0 + half, 2 if over else -2))
            pts.append((x0 + 2 * dx, y0 + 2, 0))
            p = p + dx
        c = 2 * (m - p + 1)
        X = 2 * (m - 1) + c
        pts += [(2 * p, 2 * T, 0), (2 * p, 2 * T + c, 0), (X, 2 * T + c, 0), (X, -c, 0), (2 * p, -c, 0)]
        return pts, p

    comps, done = [], set()
    for start in range(m):
        if start in done:
            continue
        poly, p = [], start
        while True:
            done.add(p)
            pts, p = path(p)
            poly += pts
            if p == start:
                break
        clean = []
        for v in poly:
            if not clean or (clean[-1][0], clean[-1][1]) != (v[0], v[1]):
                clean.append(v)
        if (clean[0][0], clean[0][1]) == (clean[-1][0], clean[-1][1]):
            clean.pop()
        comps.append(clean)
    return comps


def braid_closure(word: Sequence[int], strands: int, punctures: Sequence[Tuple] = (), **meta) -> Diagram:
    return polygon_diagram(braid_polygons(word, strands), punctures, **meta)


PUNCTURE_Y = Fraction(1, 3)  # below every crossing and off every vertex of a braid closure


def axis_puncture(strands: int):
    return (2 * strands + 1, PUNCTURE_Y)


def braid_puncture_slots(strands: int):
    """Puncture positions that are encircled by different sets of closed strands."""
    m = strands
    slots = [(2 * p + 1, PUNCTURE_Y) for p in range(m - 1)]
    slots.append(axis_puncture(m))
    slots += [(2 * (m - 1) + 2 * (m - p + 1) + 1, PUNCTURE_Y) for p in range(1, m)]
    return slots
