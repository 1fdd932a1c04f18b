"""Exhaustive enumeration of small planar circle configurations with bands.

A configuration is a 4-valent plane map (each vertex stands for a band in
crossing form) possibly together with a second piece nested in one of its
faces, a choice of outer face, and a multiset of faces holding punctures.
Darts are numbered ``4 * vertex + slot`` with slots in counter-clockwise
order; ``alpha`` pairs the two darts of an edge.  The face to the left of the
directed edge ``d -> alpha(d)`` is the orbit of ``d`` under
``d -> prev(alpha(d))``.

Each configuration is turned into an ordinary diagram whose crossings are the
bands, so the resolution engine and the band maps are exercised exactly as in
a real cube.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from ..diagram import Diagram, from_dict


@dataclass(frozen=True)
class Piece:
    vertices: int
    alpha: Tuple[int, ...]  # empty for a crossing-free loop

    @property
    def is_loop(self) -> bool:
        return self.vertices == 0


LOOP = Piece(0, ())


def _prev(d: int) -> int:
    return 4 * (d // 4) + (d % 4 - 1) % 4


def faces(piece: Piece) -> List[int]:
    """Face label per dart (for a loop: 0 = left of the loop edge, 1 = right)."""
    if piece.is_loop:
        return [0, 1]
    label = [-1] * len(piece.alpha)
    f = 0
    for d in range(len(piece.alpha)):
        if label[d] >= 0:
            continue
        x = d
        while label[x] < 0:
            label[x] = f
            x = _prev(piece.alpha[x])
        f += 1
    return label


def face_count(piece: Piece) -> int:
    return 2 if piece.is_loop else max(faces(piece)) + 1


def _matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in _matchings(rest):
            yield [(a, items[i])] + m


def _relabel(alpha, perm, rots):
    """Apply a vertex permutation and per-vertex slot rotation to a dart involution."""
    def f(d):
        v, s = divmod(d, 4)
        return 4 * perm[v] + (s + rots[v]) % 4
    out = [0] * len(alpha)
    for d, e in enumerate(alpha):
        out[f(d)] = f(e)
    return tuple(out)


@lru_cache(maxsize=None)
def plane_maps(vertices: int) -> Tuple[Piece, ...]:
    """Connected planar 4-valent maps on ``vertices`` vertices, up to relabelling."""
    darts = list(range(4 * vertices))
    seen = set()
    out = []
    for m in _matchings(darts):
        alpha = [0] * len(darts)
        for a, b in m:
            alpha[a], alpha[b] = b, a
        alpha = tuple(alpha)
        # connectivity
        adj = {v: set() for v in range(vertices)}
        for a, b in m:
            adj[a // 4].add(b // 4)
            adj[b // 4].add(a // 4)
        reach, todo = {0}, [0]
        while todo:
            for w in adj[todo.pop()]:
                if w not in reach:
                    reach.add(w)
                    todo.append(w)
        if len(reach) != vertices:
            continue
        p = Piece(vertices, alpha)
        if face_count(p) != vertices + 2:
            continue
        canon = min(_relabel(alpha, perm, rots)
                    for perm in itertools.permutations(range(vertices))
                    for rots in itertools.product(range(4), repeat=vertices))
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Piece(vertices, canon))
    return tuple(out)


@dataclass(frozen=True)
class Configuration:
    """A planar configuration; ``diagram`` has one crossing per band."""

    name: str
    diagram: Diagram

    @property
    def bands(self) -> int:
        return self.diagram.k


def _build(pieces, glue, outer, punct_faces, bits, name) -> Optional[Configuration]:
    """Assemble a diagram document from pieces and embedding data."""
    # unified face labels
    face_of = []  # per piece: list mapping local face -> unified face
    next_face = 0
    for pi, piece in enumerate(pieces):
        local = {}
        for f in range(face_count(piece)):
            if pi == 1 and f == glue[1]:
                local[f] = face_of[0][glue[0]]
            else:
                local[f] = next_face
                next_face += 1
        face_of.append(local)

    # edges: (piece, start dart) for map edges oriented along strands; loops separately
    edge_list = []  # (piece, dart or None)
    comp_list = []
    for pi, piece in enumerate(pieces):
        if piece.is_loop:
            edge_list.append((pi, None))
            comp_list.append([len(edge_list) - 1])
            continue
        done = set()
        for d0 in range(len(piece.alpha)):
            if d0 in done:
                continue
            comp = []
            d = d0
            while d not in done:
                e = piece.alpha[d]
                done.update((d, e))
                edge_list.append((pi, d))
                comp.append(len(edge_list) - 1)
                d = 4 * (e // 4) + (e % 4 + 2) % 4
            comp_list.append(comp)

    def sides(ei):
        pi, d = edge_list[ei]
        piece = pieces[pi]
        if d is None:
            return face_of[pi][0], face_of[pi][1]
        lab = faces(piece)
        return face_of[pi][lab[d]], face_of[pi][lab[piece.alpha[d]]]

    adj = {}
    for ei in range(len(edge_list)):
        left, right = sides(ei)
        if left != right:
            adj.setdefault(left, []).append((right, ei, +1))
            adj.setdefault(right, []).append((left, ei, -1))
    n = len(punct_faces)
    wind = [[0] * n for _ in edge_list]
    for k, f in enumerate(punct_faces):
        prev = {f: None}
        todo = deque([f])
        while todo:
            x = todo.popleft()
            for y, ei, s in adj.get(x, []):
                if y not in prev:
                    prev[y] = (x, ei, s)
                    todo.append(y)
        if outer not in prev:
            return None
        x = outer
        while prev[x] is not None:
            x, ei, s = prev[x]
            wind[ei][k] += s

    ids = list(range(len(edge_list)))
    where = {}
    for ei, (pi, d) in enumerate(edge_list):
        if d is not None:
            where[(pi, d)] = (ei, "tail")
            where[(pi, pieces[pi].alpha[d])] = (ei, "head")
    crossings = []
    offset = 0
    for pi, piece in enumerate(pieces):
        for v in range(piece.vertices):
            b = bits[offset + v]
            ports = [list(where[(pi, 4 * v + (b + s) % 4)]) for s in range(4)]
            crossings.append({"id": len(crossings), "ports": ports, "under0": True})
        offset += piece.vertices
    doc = {
        "name": name,
        "punctures": n,
        "edges": [{"id": i, "winding": w} for i, w in zip(ids, wind)],
        "crossings": crossings,
        "components": comp_list,
    }
    return Configuration(name, from_dict(doc))


def _layouts():
    """(pieces, glue) pairs: single maps and two-piece nestings."""
    one, two = plane_maps(1), plane_maps(2)
    for p in one + two:
        yield (p,), None
    for p in two + one:
        for fa in range(face_count(p)):
            for fb in range(2):
                yield (p, LOOP), (fa, fb)
    for i, p in enumerate(one):
        for q in one[i:]:
            for fa in range(face_count(p)):
                for fb in range(face_count(q)):
                    yield (p, q), (fa, fb)


def enumerate_configurations(max_punctures: int = 3, max_circles: int = 4,
                             max_bands: int = 2) -> Iterator[Configuration]:
    """All configurations with at most ``max_bands`` bands and ``max_circles`` circles
    in the all-zero resolution, punctures placed up to relabelling."""
    for li, (pieces, glue) in enumerate(_layouts()):
        nv = sum(p.vertices for p in pieces)
        if nv > max_bands:
            continue
        nfaces = sum(face_count(p) for p in pieces) - (1 if glue else 0)
        for outer in range(nfaces):
            bounded = [f for f in range(nfaces) if f != outer]
            for n in range(max_punctures + 1):
                for pf in itertools.combinations_with_replacement(bounded, n):
                    for bits in itertools.product((0, 1), repeat=nv):
                        name = f"L{li}-o{outer}-p{''.join(map(str, pf))}-b{''.join(map(str, bits))}"
                        c = _build(pieces, glue, outer, pf, bits, name)
                        if c is None:
                            continue
                        if len(c.diagram.resolve((0,) * nv).circles) > max_circles:
                            continue
                        yield c
