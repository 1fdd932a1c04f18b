"""Brute-force annular (lambda = 0) homology, written separately from the main path.

Nothing here is shared with ``sikh.tqft``, ``sikh.cube`` or ``sikh.linalg``:
circles are traced again from the raw ports, the band maps are the plain
lambda-free tables, matrices are dense lists, and the integral case uses a
textbook Smith normal form.  It is slow on purpose and only meant for small
diagrams.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Tuple

Key = Tuple[int, Tuple[int, ...], int, int]  # (h, g, qt, q)


def _trace(d, v):
    """Circles at vertex ``v`` as a list of (edge set, support), sorted by edge set."""
    n = d.punctures
    nxt = {}
    for c, bit in zip(d.crossings, v):
        p = c.ports
        pairs = [(p[0], p[1]), (p[2], p[3])] if bit == 0 else [(p[0], p[3]), (p[1], p[2])]
        for a, b in pairs:
            nxt[a] = b
            nxt[b] = a
    done = set()
    out = []
    for e0 in range(len(d.edges)):
        if e0 in done:
            continue
        w = [0] * n
        edges = set()
        e, end = e0, 0
        while True:
            done.add(e)
            edges.add(e)
            s = 1 if end == 0 else -1
            w = [a + s * b for a, b in zip(w, d.edges[e].winding)]
            far = (e, 1 - end)
            if far not in nxt:
                break
            e, end = nxt[far]
            if e == e0:
                break
        nz = [x for x in w if x]
        if any(abs(x) > 1 for x in nz) or len({x > 0 for x in nz}) > 1:
            raise ValueError(f"resolution {v} has a circle with winding {w}")
        out.append((frozenset(edges), frozenset(i for i, x in enumerate(w) if x)))
    out.sort(key=lambda c: sorted(c[0]))
    return out


def _sign_count(d):
    plus = 0
    for c in d.crossings:
        under_in = 0 if c.ports[0][1] == 1 else 2
        over_in = 1 if c.ports[1][1] == 1 else 3
        if over_in == (under_in - 1) % 4:
            plus += 1
    return plus, d.k - plus


def _local(src, dst):
    """lambda-free band map on touched circles: dict input labels -> list of output labels."""
    if len(src) == 2:
        a, b = src
        (c,) = dst
        out = {}
        for x, y in itertools.product((1, -1), repeat=2):
            if not a and not b:
                res = [(1,)] if x == y == 1 else ([(-1,)] if x != y else [])
            elif not a:
                res = [(y,)] if x == 1 else []
            elif not b:
                res = [(x,)] if y == 1 else []
            elif not c:
                res = [(-1,)] if x != y else []
            else:
                res = []
            out[(x, y)] = res
        return out
    (c,) = src
    a, b = dst
    out = {}
    for x in (1, -1):
        if not a and not b:
            res = [(1, -1), (-1, 1)] if x == 1 else [(-1, -1)]
        elif not a:
            res = [(-1, x)]
        elif not b:
            res = [(x, -1)]
        elif not c:
            res = [(1, -1), (-1, 1)] if x == 1 else []
        else:
            res = []
        out[(x,)] = res
    return out


def _chain_complex(d):
    n = d.punctures
    n_plus, n_minus = _sign_count(d)
    verts = list(itertools.product((0, 1), repeat=d.k))
    circles = {v: _trace(d, v) for v in verts}
    gens = []
    index = {}
    for v in verts:
        for labels in itertools.product((1, -1), repeat=len(circles[v])):
            q = sum(l for (e, s), l in zip(circles[v], labels) if not s) + sum(v) + n_plus - 2 * n_minus
            w = sum(l for (e, s), l in zip(circles[v], labels) if s)
            g = tuple(sum(l for (e, s), l in zip(circles[v], labels) if i in s) for i in range(n))
            index[(v, labels)] = len(gens)
            gens.append((v, labels, (sum(v) - n_minus, g, q + w, q)))
    entries = []  # (target gen, source gen, value)
    for v in verts:
        for i in range(d.k):
            if v[i]:
                continue
            u = v[:i] + (1,) + v[i + 1:]
            cu = circles[u]
            cv = circles[v]
            src_t = [j for j, c in enumerate(cv) if c[0] not in {x[0] for x in cu}]
            dst_t = [j for j, c in enumerate(cu) if c[0] not in {x[0] for x in cv}]
            same = {j: [jj for jj, cc in enumerate(cu) if cc[0] == c[0]][0]
                    for j, c in enumerate(cv) if j not in src_t}
            table = _local([cv[j][1] for j in src_t], [cu[j][1] for j in dst_t])
            sign = (-1) ** sum(v[i + 1:])
            for labels in itertools.product((1, -1), repeat=len(cv)):
                for image in table[tuple(labels[j] for j in src_t)]:
                    new = [0] * len(cu)
                    for j, jj in same.items():
                        new[jj] = labels[j]
                    for jj, lab in zip(dst_t, image):
                        new[jj] = lab
                    entries.append((index[(u, tuple(new))], index[(v, labels)], sign))
    return gens, entries


def _rank(mat, ring):
    m = [row[:] for row in mat]
    if ring == "f2":
        m = [[x % 2 for x in row] for row in m]
    else:
        m = [[Fraction(x) for x in row] for row in m]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                if ring == "f2":
                    m[r] = [(a + b) % 2 for a, b in zip(m[r], m[rank])]
                else:
                    f = m[r][c] / m[rank][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def smith_normal_form(mat):
    """Diagonal of the Smith normal form of an integer matrix (non-zero part, divisibility chain)."""
    m = [list(map(int, row)) for row in mat]
    rows = len(m)
    cols = len(m[0]) if m else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[r][c]), r, c) for r in range(t, rows) for c in range(t, cols) if m[r][c]]
        if not nz:
            break
        _, r, c = min(nz)
        m[t], m[r] = m[r], m[t]
        for row in m:
            row[t], row[c] = row[c], row[t]
        while True:
            p = m[t][t]
            bad = False
            for r in range(t + 1, rows):
                if m[r][t]:
                    f = m[r][t] // p
                    m[r] = [a - f * b for a, b in zip(m[r], m[t])]
                    if m[r][t]:
                        bad = True
            for c in range(t + 1, cols):
                if m[t][c]:
                    f = m[t][c] // p
                    for row in m:
                        row[c] -= f * row[t]
                    if m[t][c]:
                        bad = True
            if not bad:
                # pivot must divide the rest of the matrix
                off = next(((r, c) for r in range(t + 1, rows) for c in range(t + 1, cols) if m[r][c] % p), None)
                if off is None:
                    break
                m[t] = [a + b for a, b in zip(m[t], m[off[0]])]
                continue
            nz = [(abs(m[r][c]), r, c) for r in range(t, rows) for c in range(t, cols)
                  if m[r][c] and (r == t or c == t)]
            _, r, c = min(nz)
            m[t], m[r] = m[r], m[t]
            for row in m:
                row[t], row[c] = row[c], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def aps_homology(d, ring: str = "q") -> Dict[Key, Tuple[int, Tuple[int, ...]]]:
    """``{(h, g, qt, q): (rank, torsion)}`` of the lambda = 0 theory; ring is "f2", "q" or "z"."""
    gens, entries = _chain_complex(d)
    blocks: Dict[tuple, Dict[int, List[int]]] = {}
    for i, (_, _, (h, g, qt, q)) in enumerate(gens):
        blocks.setdefault((g, qt, q), {}).setdefault(h, []).append(i)
    pos = {}
    for key, by_h in blocks.items():
        for h, members in by_h.items():
            for j, i in enumerate(members):
                pos[i] = j
    dense = {}
    for tgt, src, val in entries:
        g, qt, q = gens[src][2][1:]
        h = gens[src][2][0]
        if gens[tgt][2] != (h + 1, g, qt, q):
            raise AssertionError("oracle differential is not homogeneous")
        key = (g, qt, q, h)
        if key not in dense:
            dense[key] = [[0] * len(blocks[(g, qt, q)][h]) for _ in blocks[(g, qt, q)].get(h + 1, [])]
        dense[key][pos[tgt]][pos[src]] += val
    out = {}
    for (g, qt, q), by_h in blocks.items():
        ranks, tors = {}, {}
        for h in by_h:
            mat = dense.get((g, qt, q, h))
            if not mat:
                ranks[h] = 0
                continue
            if ring == "z":
                diag = smith_normal_form(mat)
                ranks[h] = len(diag)
                tors[h + 1] = tuple(x for x in diag if x > 1)
            else:
                ranks[h] = _rank(mat, ring)
        for h, members in by_h.items():
            betti = len(members) - ranks.get(h, 0) - ranks.get(h - 1, 0)
            t = tors.get(h, ())
            if betti or t:
                out[(h, g, qt, q)] = (betti, t)
    return out


def as_oracle_table(H) -> Dict[Key, Tuple[int, Tuple[int, ...]]]:
    """Convert a ``GradedHomology`` to the oracle's table format."""
    return {(k.h, k.g, k.qt, k.q): (x.rank, tuple(x.torsion)) for k, x in H.groups.items() if x.rank or x.torsion}
