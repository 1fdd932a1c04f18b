"""Homology of graded chain complexes: Betti numbers over fields, torsion over Z."""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .coeff import F2, QQ, ZZ, Ring, get_ring
from .cube import ChainBlock, GradedChainComplex, build_cube, cube_skeleton, grading_blocks
from .linalg import rank_f2, rank_q, smith_invariants


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: Tuple[int, ...] = ()


@dataclass(frozen=True, order=True)
class HomDegree:
    h: int
    g: Tuple[int, ...]
    qt: int
    q: Optional[int] = None


@dataclass
class GradedHomology:
    ring: Ring
    q_graded: bool
    groups: Dict[HomDegree, HomologyGroup] = field(default_factory=dict)
    chain_dims: Dict[HomDegree, int] = field(default_factory=dict)

    def total_rank(self) -> int:
        return sum(x.rank for x in self.groups.values())

    def torsion(self) -> Dict[HomDegree, Tuple[int, ...]]:
        return {k: x.torsion for k, x in self.groups.items() if x.torsion}

    def ranks(self, by: Iterable[str] = ("h", "g", "qt", "q")) -> Dict[tuple, int]:
        """Ranks summed over the gradings not listed in ``by``; zero ranks dropped."""
        by = tuple(by)
        out: Dict[tuple, int] = defaultdict(int)
        for k, x in self.groups.items():
            out[tuple(getattr(k, name) for name in by)] += x.rank
        return {k: v for k, v in sorted(out.items(), key=lambda kv: _sortable(kv[0])) if v}

    def block_rank(self, g) -> int:
        g = tuple(g)
        return sum(x.rank for k, x in self.groups.items() if k.g == g)

    def euler(self, by: Iterable[str] = ("g", "qt")) -> Dict[tuple, int]:
        """Alternating sum of chain ranks, which equals that of homology ranks."""
        by = tuple(by)
        out: Dict[tuple, int] = defaultdict(int)
        for k, n in self.chain_dims.items():
            out[tuple(getattr(k, name) for name in by)] += (-1) ** k.h * n
        return {k: v for k, v in sorted(out.items(), key=lambda kv: _sortable(kv[0])) if v}

    def to_dict(self) -> dict:
        rows = []
        for k in sorted(self.groups, key=lambda d: _sortable((d.h, d.g, d.qt, d.q))):
            x = self.groups[k]
            if not x.rank and not x.torsion:
                continue
            rows.append({"h": k.h, "g": list(k.g), "qt": k.qt, "q": k.q, "rank": x.rank, "torsion": list(x.torsion)})
        return {"ring": self.ring.name, "q_graded": self.q_graded, "total_rank": self.total_rank(), "groups": rows}


PARALLEL_THRESHOLD = 4096  # generators; below this a process pool costs more than it saves


def _sortable(t):
    return tuple(-10**9 if x is None else x for x in t)


def _rank(entries, ring: Ring, order: str) -> int:
    if ring is F2:
        return rank_f2(entries, order)
    if ring is QQ:
        return rank_q(entries, order)
    raise ValueError(f"{ring.name} is not a field")


def _block_homology(block: ChainBlock, ring: Ring, order: str = "forward"):
    """Per-degree ``(rank, torsion, chain dim)`` for one block."""
    dims = block.dims()
    ranks: Dict[int, int] = {}
    torsion: Dict[int, Tuple[int, ...]] = {}
    for h, entries in block.maps.items():
        if ring is ZZ:
            r, t = smith_invariants(entries, order)
            ranks[h] = r
            torsion[h + 1] = tuple(t)
        else:
            ranks[h] = _rank(entries, ring, order)
    out = {}
    for h, n in dims.items():
        betti = n - ranks.get(h, 0) - ranks.get(h - 1, 0)
        out[h] = (betti, torsion.get(h, ()), n)
    return out


def _job(args):
    block, ring_name, order = args
    return block.key, _block_homology(block, get_ring(ring_name), order)


def _compute(c: GradedChainComplex, ring: Ring, jobs: int = 1, order: str = "forward") -> GradedHomology:
    blocks = list(c.blocks.values())
    if jobs is None:
        jobs = os.cpu_count() or 1
    size = sum(len(g) for b in blocks for g in b.chains.values())
    if jobs > 1 and len(blocks) > 1 and size >= PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_job, [(b, ring.name, order) for b in blocks], chunksize=4))
    else:
        results = [(b.key, _block_homology(b, ring, order)) for b in blocks]
    out = GradedHomology(ring, c.q_graded)
    for (g, qt, q), per_h in results:
        for h, (betti, tors, n) in per_h.items():
            deg = HomDegree(h, g, qt, q)
            out.chain_dims[deg] = n
            if betti or tors:
                out.groups[deg] = HomologyGroup(betti, tors)
    return out


def homology_field(c: GradedChainComplex, field: Ring = F2, jobs: int = 1, order: str = "forward") -> GradedHomology:
    """Betti numbers by exact Gaussian elimination over F2 or Q."""
    field = get_ring(field)
    if not field.is_field:
        raise ValueError(f"{field.name} is not a field; use homology_integral")
    return _compute(c, field, jobs, order)


def homology_integral(c: GradedChainComplex, jobs: int = 1, order: str = "forward") -> GradedHomology:
    """Free ranks and invariant factors from Smith normal forms over Z."""
    return _compute(c, ZZ, jobs, order)


def homology(c: GradedChainComplex, jobs: int = 1, order: str = "forward") -> GradedHomology:
    if c.ring is ZZ:
        return homology_integral(c, jobs, order)
    return homology_field(c, c.ring, jobs, order)


def sikh(diagram, lam=1, ring="f2", jobs: int = 1, order: str = "forward") -> GradedHomology:
    """The deformed homology of a diagram, graded by (h, g, qt) and by q when possible."""
    cube = build_cube(diagram, lam, ring)
    return homology(grading_blocks(cube), jobs, order)


EULER_GRADINGS = ("h", "g", "qt", "q", "w")


def euler_characteristic(diagram, by: Iterable[str] = ("g",)) -> Dict[tuple, int]:
    """Graded Euler characteristic from chain ranks alone (independent of ring and lambda)."""
    by = tuple(by)
    unknown = [x for x in by if x not in EULER_GRADINGS]
    if unknown:
        raise ValueError(f"unknown grading {unknown[0]!r}; choose from {', '.join(EULER_GRADINGS)}")
    sk = cube_skeleton(diagram)
    cube = build_cube(diagram, 0, ZZ, skeleton=sk)
    out: Dict[tuple, int] = defaultdict(int)
    for gen in cube.generators():
        deg = cube.degree(gen)
        vals = {"h": deg.h, "g": deg.g, "qt": deg.qt, "q": deg.q, "w": deg.w}
        out[tuple(vals[name] for name in by)] += (-1) ** deg.h
    return {k: v for k, v in sorted(out.items(), key=lambda kv: _sortable(kv[0])) if v}
