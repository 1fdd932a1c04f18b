"""Cube of resolutions: the chain complex before taking homology."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .coeff import Ring, get_ring
from .diagram import Diagram, Saddle, Vertex, crossing_signs, describe_saddle, resolve
from .errors import InvariantError
from .tqft import StateSpace, local_table, saddle_terms, state_space

Generator = Tuple[Vertex, int]


def standard_sign(v: Vertex, i: int) -> int:
    """(-1) to the number of 1s of ``v`` after position ``i``."""
    return -1 if sum(v[i + 1:]) % 2 else 1


@dataclass(frozen=True)
class Degree:
    """Gradings of a generator: homological ``h``, quantum ``q``, orientation ``w``, H_1 class ``g``.

    ``qt = q + w`` is preserved by the differential for every value of lambda.
    """

    h: int
    q: int
    w: int
    g: Tuple[int, ...]

    @property
    def qt(self) -> int:
        return self.q + self.w


def generator_degree(spaces, n_plus: int, n_minus: int, gen: Generator) -> Degree:
    v, idx = gen
    sp = spaces[v]
    gr = sp.grading(sp.labels(idx))
    r = sum(v)
    return Degree(r - n_minus, gr.q_internal + r + n_plus - 2 * n_minus, gr.w, gr.g)


@dataclass
class CubeEdge:
    source: Vertex
    target: Vertex
    crossing: int
    sign: int
    saddle: Saddle
    matrix: Dict[Tuple[int, int], object]  # signed, evaluated in the ring
    lambda_entries: frozenset  # positions coming from the lambda-cases


@dataclass
class CubeComplex:
    diagram: Diagram
    ring: Ring
    lam: object
    n_plus: int
    n_minus: int
    states: Dict[Vertex, object] = field(default_factory=dict)
    spaces: Dict[Vertex, StateSpace] = field(default_factory=dict)
    edges: Dict[Tuple[Vertex, int], CubeEdge] = field(default_factory=dict)
    degrees: Dict[Generator, Degree] = field(default_factory=dict, repr=False)

    def generators(self) -> List[Generator]:
        return [(v, i) for v in sorted(self.spaces) for i in range(self.spaces[v].dim)]

    def degree(self, gen: Generator) -> Degree:
        deg = self.degrees.get(gen)
        if deg is None:
            deg = self.degrees[gen] = generator_degree(self.spaces, self.n_plus, self.n_minus, gen)
        return deg

    @property
    def has_lambda_entries(self) -> bool:
        return any(e.lambda_entries for e in self.edges.values())

    @property
    def q_graded(self) -> bool:
        """True when the quantum grading is preserved, i.e. no lambda-case entry survives."""
        return not self.has_lambda_entries

    def differential(self) -> Dict[Generator, Dict[Generator, object]]:
        out: Dict[Generator, Dict[Generator, object]] = defaultdict(dict)
        add = self.ring.add
        for e in self.edges.values():
            for (row, col), val in e.matrix.items():
                tgt = out[(e.source, col)]
                key = (e.target, row)
                nv = add(tgt.get(key, 0), val)
                if nv:
                    tgt[key] = nv
                else:
                    tgt.pop(key, None)
        return out


@dataclass
class CubeSkeleton:
    """Ring-independent part of a cube: resolutions and affine band-map entries."""

    diagram: Diagram
    states: Dict[Vertex, object]
    spaces: Dict[Vertex, StateSpace]
    saddles: Dict[Tuple[Vertex, int], Saddle]
    terms: Dict[Tuple[Vertex, int], Dict[Tuple[int, int], Tuple[int, int]]]
    degrees: Dict[Generator, Degree] = field(default_factory=dict)


def cube_skeleton(d: Diagram, literal: bool = False, check_gradings: bool = True) -> CubeSkeleton:
    """Resolve every vertex and tabulate every band map as affine entries ``c0 + c1*lambda``.

    With ``check_gradings`` every entry is checked to raise ``h`` by one,
    preserve ``g`` and ``qt``, and change ``q`` by 1 exactly on lambda-case
    entries.  None of this depends on the ring or on lambda, so it is done once.
    """
    states, spaces, saddles, terms = {}, {}, {}, {}
    for v in d.vertices():
        st = resolve(d, v)
        states[v] = st
        spaces[v] = state_space(st.classes, d.punctures)
    signs = crossing_signs(d)
    degrees: Dict[Generator, Degree] = {}

    def deg(gen):
        x = degrees.get(gen)
        if x is None:
            x = degrees[gen] = generator_degree(spaces, signs.n_plus, signs.n_minus, gen)
        return x

    for v in states:
        for i in range(d.k):
            if v[i]:
                continue
            u = v[:i] + (1,) + v[i + 1:]
            desc = describe_saddle(states[v], states[u], d.crossings[i])
            if desc.kind == "self":
                raise InvariantError(f"merge-to-self at vertex {v}, crossing {i}")
            saddles[(v, i)] = desc
            t = saddle_terms(spaces[v], spaces[u], desc, local_table(desc, d.punctures, literal=literal))
            for (row, col), (c0, c1) in t.items():
                if c0 and c1:
                    raise InvariantError("band map entry mixes a lambda-free and a lambda part")
                if check_gradings:
                    a, b = deg((v, col)), deg((u, row))
                    if not (b.h - a.h == 1 and b.g == a.g and b.qt == a.qt and b.q - a.q == (1 if c1 else 0)):
                        raise InvariantError(f"inhomogeneous entry {(row, col)} on cube edge {v}->{u}: {a} -> {b}")
            terms[(v, i)] = t
    return CubeSkeleton(d, states, spaces, saddles, terms, degrees)


def build_cube(d: Diagram, lam=1, ring="f2", sign_rule: Callable[[Vertex, int], int] = standard_sign,
               literal: bool = False, check_gradings: bool = True,
               skeleton: Optional[CubeSkeleton] = None) -> CubeComplex:
    """Assemble the signed cube of resolutions of ``d``.

    ``literal`` switches the all-essential band maps to the pair-of-pants
    formulation.  ``check_gradings`` runs the homogeneity assertions of
    ``cube_skeleton``.  A precomputed ``skeleton`` skips resolution when the
    same diagram is evaluated at several (ring, lambda).
    """
    ring = get_ring(ring)
    lam = ring(lam)
    sk = skeleton if skeleton is not None else cube_skeleton(d, literal, check_gradings)
    signs = crossing_signs(d)
    cube = CubeComplex(d, ring, lam, signs.n_plus, signs.n_minus)
    cube.states, cube.spaces = sk.states, sk.spaces
    cube.degrees = dict(sk.degrees)
    one = ring(1)
    for (v, i), terms in sk.terms.items():
        u = v[:i] + (1,) + v[i + 1:]
        sign = sign_rule(v, i)
        base = one if sign > 0 else ring.neg(one)
        lam_val = ring.mul(base, lam)
        matrix = {}
        lam_pos = set()
        for key, (c0, c1) in terms.items():
            if c1:
                val = ring.mul(ring(c1), lam_val)
                if val:
                    lam_pos.add(key)
            else:
                val = ring.mul(ring(c0), base)
            if val:
                matrix[key] = val
        cube.edges[(v, i)] = CubeEdge(v, u, i, sign, sk.saddles[(v, i)], matrix, frozenset(lam_pos))
    return cube


def d_squared_violations(cube: CubeComplex, limit: int = 5) -> List[Tuple[Generator, Generator, object]]:
    """Non-zero entries of D∘D (at most ``limit`` of them)."""
    D = cube.differential()
    ring = cube.ring
    bad = []
    for x, image in D.items():
        acc: Dict[Generator, object] = {}
        for y, a in image.items():
            for z, b in D.get(y, {}).items():
                acc[z] = ring.add(acc.get(z, 0), ring.mul(a, b))
        for z, val in acc.items():
            if val:
                bad.append((x, z, val))
                if len(bad) >= limit:
                    return bad
    return bad


# -- grading blocks --------------------------------------------------------------------

BlockKey = Tuple[Tuple[int, ...], int, Optional[int]]  # (g, qt, q or None)


@dataclass
class ChainBlock:
    key: BlockKey
    chains: Dict[int, List[Generator]]  # homological degree -> generators
    maps: Dict[int, List[Tuple[int, int, object]]]  # d_h : C^h -> C^{h+1} as (row, col, value)

    def dims(self) -> Dict[int, int]:
        return {h: len(g) for h, g in self.chains.items()}


@dataclass
class GradedChainComplex:
    ring: Ring
    q_graded: bool
    blocks: Dict[BlockKey, ChainBlock]


def grading_blocks(cube: CubeComplex) -> GradedChainComplex:
    """Split the complex by ``g`` and ``qt``, and also by ``q`` when it is a grading."""
    qg = cube.q_graded
    gens_by: Dict[BlockKey, Dict[int, List[Generator]]] = defaultdict(lambda: defaultdict(list))
    where: Dict[Generator, Tuple[BlockKey, int, int]] = {}
    for gen in cube.generators():
        deg = cube.degree(gen)
        key = (deg.g, deg.qt, deg.q if qg else None)
        lst = gens_by[key][deg.h]
        where[gen] = (key, deg.h, len(lst))
        lst.append(gen)
    maps: Dict[BlockKey, Dict[int, list]] = defaultdict(lambda: defaultdict(list))
    for src, image in cube.differential().items():
        key, h, col = where[src]
        for tgt, val in image.items():
            tkey, th, row = where[tgt]
            if tkey != key or th != h + 1:
                raise InvariantError(f"differential leaves its grading block: {src} -> {tgt}")
            maps[key][h].append((row, col, val))
    blocks = {}
    for key in sorted(gens_by, key=_block_sort):
        chains = dict(sorted(gens_by[key].items()))
        blocks[key] = ChainBlock(key, chains, dict(maps.get(key, {})))
    return GradedChainComplex(cube.ring, qg, blocks)


def _block_sort(key):
    g, qt, q = key
    return (g, qt, -10**9 if q is None else q)
