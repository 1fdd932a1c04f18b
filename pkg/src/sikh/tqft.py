"""State modules V(c) and band-surgery maps.

Every circle carries a label in ``{+1, -1}``: for a contractible circle this is
v+ / v-, for an essential circle it is the counter-clockwise / clockwise
orientation.  A basis element of ``V(c)`` is a tuple of labels, and basis
indices are lexicographic with the first circle most significant and ``+1``
before ``-1``.

The all-essential merge and split are implemented twice.  ``apply_saddle``
selects the unique orientation triple that adds up in homology and lowers the
orientation grading ``w`` by one; ``saddle_case_table_literal`` builds the pair
of pants and reads off its boundary orientations.  Tests assert they agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .coeff import Ring
from .diagram import Saddle
from .errors import InvariantError
from .planar import CircleClass, Orientation, canonical_identify, outer_of_three

Labels = Tuple[int, ...]
# a local term: (output labels, constant part, lambda part) ; coefficient = c0 + c1 * lambda
Term = Tuple[Labels, int, int]


@dataclass(frozen=True)
class Grading:
    q_internal: int
    w: int
    g: Tuple[int, ...]


@dataclass(frozen=True)
class StateSpace:
    circles: Tuple[CircleClass, ...]
    n: int = 0

    @property
    def dim(self) -> int:
        return 1 << len(self.circles)

    def labels(self, index: int) -> Labels:
        m = len(self.circles)
        return tuple(-1 if (index >> (m - 1 - j)) & 1 else 1 for j in range(m))

    def index(self, labels: Sequence[int]) -> int:
        out = 0
        for lab in labels:
            out = (out << 1) | (1 if lab < 0 else 0)
        return out

    def basis(self) -> List[Labels]:
        return [self.labels(i) for i in range(self.dim)]

    def grading(self, labels: Sequence[int]) -> Grading:
        q = w = 0
        g = [0] * self.n
        for c, lab in zip(self.circles, labels):
            if c.contractible:
                q += lab
            else:
                w += lab
                for p in c.support:
                    g[p] += lab
        return Grading(q, w, tuple(g))


def state_space(circles: Sequence[CircleClass], n: int = 0) -> StateSpace:
    circles = tuple(circles)
    for c in circles:
        if c.support and max(c.support) >= n:
            raise ValueError(f"circle encloses puncture {max(c.support)} but the surface has {n}")
    return StateSpace(circles, n)


def _vec(c: CircleClass, label: int, n: int) -> Tuple[int, ...]:
    return tuple(label if i in c.support else 0 for i in range(n))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


# -- local tables ----------------------------------------------------------------------

def _merge_common(a: CircleClass, b: CircleClass, out: CircleClass):
    """Merge cases not involving three essential circles; None when all are essential."""
    table: Dict[Labels, List[Term]] = {}
    if a.contractible and b.contractible:
        table[(1, 1)] = [((1,), 1, 0)]
        table[(1, -1)] = [((-1,), 1, 0)]
        table[(-1, 1)] = [((-1,), 1, 0)]
        table[(-1, -1)] = []
        return table
    if a.contractible or b.contractible:
        # v+ (x) x -> iota(x), v- (x) x -> 0, symmetric in the two factors
        ess, first = (b, True) if a.contractible else (a, False)
        iota = canonical_identify(ess, out)
        for x in (1, -1):
            y = int(iota[Orientation(x)])
            table[(1, x) if first else (x, 1)] = [((y,), 1, 0)]
            table[(-1, x) if first else (x, -1)] = []
        return table
    if out.contractible:
        iota = canonical_identify(a, b)
        for x in (1, -1):
            table[(x, int(iota[Orientation(x)]))] = []
            table[(x, -int(iota[Orientation(x)]))] = [((-1,), 1, 0)]
        return table
    return None


def _split_common(src: CircleClass, a: CircleClass, b: CircleClass):
    table: Dict[Labels, List[Term]] = {}
    if a.contractible and b.contractible:
        table[(1,)] = [((1, -1), 1, 0), ((-1, 1), 1, 0)]
        table[(-1,)] = [((-1, -1), 1, 0)]
        return table
    if a.contractible or b.contractible:
        ess, first = (b, True) if a.contractible else (a, False)
        iota = canonical_identify(src, ess)
        for x in (1, -1):
            y = int(iota[Orientation(x)])
            table[(x,)] = [((-1, y) if first else (y, -1), 1, 0)]
        return table
    if src.contractible:
        iota = canonical_identify(a, b)
        ccw, cw = int(iota[Orientation.CCW]), int(iota[Orientation.CW])
        table[(1,)] = [((1, cw), 1, 0), ((-1, ccw), 1, 0)]
        table[(-1,)] = []
        return table
    return None


def _merge_essential_rule(a, b, out, n):
    hits = [(x, y, z) for x, y, z in itertools.product((1, -1), repeat=3)
            if _add(_vec(a, x, n), _vec(b, y, n)) == _vec(out, z, n) and z == x + y - 1]
    if len(hits) != 1:
        raise InvariantError(f"no unique pair-of-pants orientation for merge "
                             f"{sorted(a.support)}, {sorted(b.support)} -> {sorted(out.support)}")
    x, y, z = hits[0]
    return {lab: ([((z,), 0, 1)] if lab == (x, y) else []) for lab in itertools.product((1, -1), repeat=2)}


def _split_essential_rule(src, a, b, n):
    hits = [(x, y, z) for x, y, z in itertools.product((1, -1), repeat=3)
            if _vec(src, x, n) == _add(_vec(a, y, n), _vec(b, z, n)) and y + z == x - 1]
    if len(hits) != 1:
        raise InvariantError(f"no unique pair-of-pants orientation for split "
                             f"{sorted(src.support)} -> {sorted(a.support)}, {sorted(b.support)}")
    x, y, z = hits[0]
    return {(lab,): ([((y, z), 0, 1)] if lab == x else []) for lab in (1, -1)}


def _pants_orientations(circles):
    """Boundary orientations of a planar pair of pants: outer boundary CCW, holes CW."""
    outer = outer_of_three(*circles)
    if outer is None:
        raise InvariantError("supports of the three essential circles are neither nested nor disjoint: "
                             + ", ".join(str(sorted(c.support)) for c in circles))
    return tuple(1 if i == outer else -1 for i in range(3))


def _merge_essential_literal(a, b, out):
    o1, o2, o = _pants_orientations((a, b, out))
    # v(g1)_{o1'} (x) v(g2)_{o2'} -> lambda v(g)_o, everything else -> 0
    return {lab: ([((o,), 0, 1)] if lab == (-o1, -o2) else []) for lab in itertools.product((1, -1), repeat=2)}


def _split_essential_literal(src, a, b):
    o, o1, o2 = _pants_orientations((src, a, b))
    # v(g)_{o'} -> lambda v(g1)_{o1} (x) v(g2)_{o2}, v(g)_o -> 0
    return {(-o,): [((o1, o2), 0, 1)], (o,): []}


def local_table(desc: Saddle, n: int, literal: bool = False) -> Dict[Labels, List[Term]]:
    """Band map on the touched circles, as label tuples -> list of affine terms."""
    if desc.kind == "self":
        return {(x,): [] for x in (1, -1)}
    if desc.kind == "merge":
        a, b = desc.src_classes
        (out,) = desc.dst_classes
        table = _merge_common(a, b, out)
        if table is None:
            table = _merge_essential_literal(a, b, out) if literal else _merge_essential_rule(a, b, out, n)
        return table
    if desc.kind == "split":
        (src,) = desc.src_classes
        a, b = desc.dst_classes
        table = _split_common(src, a, b)
        if table is None:
            table = _split_essential_literal(src, a, b) if literal else _split_essential_rule(src, a, b, n)
        return table
    raise ValueError(f"unknown saddle kind {desc.kind!r}")


# -- full maps -------------------------------------------------------------------------

def saddle_terms(src: StateSpace, dst: StateSpace, desc: Saddle, table=None):
    """Affine sparse matrix of the band map: ``{(row, col): (c0, c1)}``, value c0 + c1*lambda."""
    if table is None:
        table = local_table(desc, src.n)
    out = {}
    m_dst = len(dst.circles)
    for col in range(src.dim):
        labels = src.labels(col)
        touched = tuple(labels[i] for i in desc.src)
        for image, c0, c1 in table[touched]:
            new = [0] * m_dst
            for i, j in desc.untouched:
                new[j] = labels[i]
            for j, lab in zip(desc.dst, image):
                new[j] = lab
            key = (dst.index(new), col)
            a, b = out.get(key, (0, 0))
            out[key] = (a + c0, b + c1)
    return out


def _evaluate(terms, lam, ring: Ring):
    out = {}
    lam = ring(lam)
    for key, (c0, c1) in terms.items():
        val = ring.add(ring(c0), ring.mul(ring(c1), lam))
        if val != 0:
            out[key] = val
    return out


def apply_saddle(src: StateSpace, dst: StateSpace, desc: Saddle, lam, ring: Ring) -> Dict[Tuple[int, int], object]:
    """Matrix of the band map ``V(src) -> V(dst)`` as ``{(row, col): coefficient}``."""
    return _evaluate(saddle_terms(src, dst, desc), lam, ring)


def saddle_case_table_literal(src: StateSpace, dst: StateSpace, desc: Saddle, lam, ring: Ring):
    """Same map as ``apply_saddle``, all-essential cases taken from the pair-of-pants picture."""
    return _evaluate(saddle_terms(src, dst, desc, local_table(desc, src.n, literal=True)), lam, ring)
