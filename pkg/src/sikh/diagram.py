"""Link diagrams on a punctured disk and their resolutions.

A diagram is purely combinatorial.  Edges are oriented arcs between crossings
(or crossing-free loops) and carry a winding vector: for every puncture, the
signed number of times the arc crosses a fixed ray from that puncture, counted
``+1`` when the puncture is on the traveller's left.  Each crossing lists four
edge ends in counter-clockwise order, normalized so ``ports[0]`` is an end of
the under-strand; the strands are ``ports[0]-ports[2]`` and ``ports[1]-ports[3]``.

Smoothings: the 0-smoothing joins ``ports[0]-ports[1]`` and ``ports[2]-ports[3]``,
the 1-smoothing joins ``ports[0]-ports[3]`` and ``ports[1]-ports[2]``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import DiagramError, InvariantError
from .planar import CircleClass, WindingError, classify_winding

TAIL, HEAD = 0, 1
_END_NAMES = {"tail": TAIL, "head": HEAD}
_END_STR = {TAIL: "tail", HEAD: "head"}

Port = Tuple[int, int]  # (edge index, end)
Vertex = Tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    id: object
    winding: Tuple[int, ...]


@dataclass(frozen=True)
class Crossing:
    id: object
    ports: Tuple[Port, Port, Port, Port]

    def smoothing(self, bit: int) -> Tuple[Tuple[Port, Port], Tuple[Port, Port]]:
        p = self.ports
        if bit == 0:
            return (p[0], p[1]), (p[2], p[3])
        return (p[0], p[3]), (p[1], p[2])

    @property
    def sign(self) -> int:
        # positive iff the under-strand end at ports[0] and the over-strand end
        # at ports[1] point opposite ways (one incoming, one outgoing)
        return 1 if self.ports[0][1] != self.ports[1][1] else -1

    @property
    def edges(self) -> frozenset:
        return frozenset(e for e, _ in self.ports)


@dataclass(frozen=True)
class Circle:
    cls: CircleClass
    footprint: frozenset
    winding: Tuple[int, ...] = field(compare=False, default=())

    @property
    def key(self) -> int:
        return min(self.footprint)


@dataclass(frozen=True)
class ResolvedState:
    vertex: Vertex
    circles: Tuple[Circle, ...]

    @property
    def classes(self) -> Tuple[CircleClass, ...]:
        return tuple(c.cls for c in self.circles)


@dataclass(frozen=True)
class CrossingSigns:
    n_plus: int
    n_minus: int


@dataclass(frozen=True)
class Saddle:
    """How the circles change across one cube edge.

    ``src``/``dst`` are positions of the touched circles in the source and
    target states; ``untouched`` pairs up the positions of all other circles.
    """

    kind: str  # "merge", "split" or "self"
    src: Tuple[int, ...]
    dst: Tuple[int, ...]
    untouched: Tuple[Tuple[int, int], ...]
    src_classes: Tuple[CircleClass, ...]
    dst_classes: Tuple[CircleClass, ...]


@dataclass(frozen=True)
class Diagram:
    punctures: int
    edges: Tuple[Edge, ...]
    crossings: Tuple[Crossing, ...]
    components: Tuple[Tuple[int, ...], ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.crossings)

    def vertices(self) -> Iterator[Vertex]:
        return itertools.product((0, 1), repeat=self.k)

    def port_index(self) -> Dict[Port, Tuple[int, int]]:
        """Map each edge end to ``(crossing index, port position)``."""
        out = {}
        for ci, c in enumerate(self.crossings):
            for j, p in enumerate(c.ports):
                out[p] = (ci, j)
        return out

    def free_loops(self) -> List[int]:
        used = {e for c in self.crossings for e, _ in c.ports}
        return [i for i in range(len(self.edges)) if i not in used]

    def resolve(self, v: Sequence[int]) -> ResolvedState:
        return resolve(self, v)

    def to_dict(self) -> dict:
        out = {}
        for key, value in self.meta.items():
            out[key] = value
        ids = [e.id for e in self.edges]
        out["punctures"] = self.punctures
        out["edges"] = [{"id": e.id, "winding": list(e.winding)} for e in self.edges]
        out["crossings"] = [
            {"id": c.id, "ports": [[ids[e], _END_STR[end]] for e, end in c.ports], "under0": True}
            for c in self.crossings
        ]
        out["components"] = [[ids[e] for e in comp] for comp in self.components]
        return out

    def dumps(self) -> str:
        """Stable JSON text, one edge / crossing / component per line."""
        items = list(self.to_dict().items())
        lines = ["{"]
        for i, (key, value) in enumerate(items):
            if key in ("edges", "crossings", "components") and value:
                body = ",\n".join("  " + json.dumps(x) for x in value)
                text = f" {json.dumps(key)}: [\n{body}\n ]"
            else:
                text = f" {json.dumps(key)}: {json.dumps(value)}"
            lines.append(text + ("," if i < len(items) - 1 else ""))
        lines.append("}")
        return "\n".join(lines)


# -- parsing ---------------------------------------------------------------------------

def loads(text: str, check_windings: bool = True) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    return from_dict(obj, check_windings=check_windings)


parse = loads


def load(path, check_windings: bool = True) -> Diagram:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DiagramError(str(exc), str(path)) from None
    try:
        return loads(text, check_windings=check_windings)
    except DiagramError as exc:
        raise DiagramError(str(exc), str(path)) from None


def _require(cond, message, location):
    if not cond:
        raise DiagramError(message, location)


def _as_int(x, location):
    _require(isinstance(x, int) and not isinstance(x, bool), f"expected an integer, got {x!r}", location)
    return x


def from_dict(obj, check_windings: bool = True) -> Diagram:
    _require(isinstance(obj, dict), "diagram must be an object", "$")
    for key in ("punctures", "edges", "crossings", "components"):
        _require(key in obj, f"missing field {key!r}", "$")
    n = _as_int(obj["punctures"], "punctures")
    _require(n >= 0, "puncture count must be non-negative", "punctures")

    _require(isinstance(obj["edges"], list), "edges must be a list", "edges")
    edges = []
    index = {}
    for i, e in enumerate(obj["edges"]):
        loc = f"edges[{i}]"
        _require(isinstance(e, dict) and "id" in e and "winding" in e, "edge needs 'id' and 'winding'", loc)
        eid = e["id"]
        _require(isinstance(eid, (str, int)) and not isinstance(eid, bool), "edge id must be a string or integer", loc)
        _require(eid not in index, f"duplicate edge id {eid!r}", loc)
        w = e["winding"]
        _require(isinstance(w, list) and len(w) == n, f"winding must be a list of {n} integers", loc + ".winding")
        index[eid] = i
        edges.append(Edge(eid, tuple(_as_int(x, f"{loc}.winding") for x in w)))

    _require(isinstance(obj["crossings"], list), "crossings must be a list", "crossings")
    crossings = []
    seen_ports = {}
    cids = set()
    for i, c in enumerate(obj["crossings"]):
        loc = f"crossings[{i}]"
        _require(isinstance(c, dict) and "ports" in c, "crossing needs 'ports'", loc)
        cid = c.get("id", i)
        _require(cid not in cids, f"duplicate crossing id {cid!r}", loc)
        cids.add(cid)
        raw = c["ports"]
        _require(isinstance(raw, list) and len(raw) == 4, "a crossing has exactly four ports", loc + ".ports")
        ports = []
        for j, p in enumerate(raw):
            ploc = f"{loc}.ports[{j}]"
            _require(isinstance(p, list) and len(p) == 2, "port must be [edge-id, end]", ploc)
            eid, end = p
            _require(eid in index, f"unknown edge {eid!r}", ploc)
            _require(end in _END_NAMES, f"end must be 'head' or 'tail', got {end!r}", ploc)
            port = (index[eid], _END_NAMES[end])
            if port in seen_ports:
                raise DiagramError(f"port reuse: {eid!r} {end} already used at {seen_ports[port]}", ploc)
            seen_ports[port] = ploc
            ports.append(port)
        under0 = c.get("under0")
        _require(isinstance(under0, bool), "'under0' must be a boolean", loc + ".under0")
        if not under0:
            ports = ports[1:] + ports[:1]
        for a, b in ((0, 2), (1, 3)):
            _require({ports[a][1], ports[b][1]} == {HEAD, TAIL},
                     "opposite ports must be one incoming and one outgoing end of a strand", loc + ".ports")
        crossings.append(Crossing(cid, tuple(ports)))

    _require(isinstance(obj["components"], list), "components must be a list", "components")
    port_at = {p: (ci, j) for ci, c in enumerate(crossings) for j, p in enumerate(c.ports)}
    components = []
    owner = {}
    for i, comp in enumerate(obj["components"]):
        loc = f"components[{i}]"
        _require(isinstance(comp, list) and comp, "component must be a non-empty list of edge ids", loc)
        idxs = []
        for eid in comp:
            _require(eid in index, f"unknown edge {eid!r}", loc)
            ei = index[eid]
            _require(ei not in owner, f"edge {eid!r} already belongs to {owner.get(ei)}", loc)
            owner[ei] = loc
            idxs.append(ei)
        for a, b in zip(idxs, idxs[1:] + idxs[:1]):
            head, tail = port_at.get((a, HEAD)), port_at.get((b, TAIL))
            if head is None and tail is None and a == b and len(idxs) == 1:
                continue  # crossing-free loop
            _require(head is not None and tail is not None and head[0] == tail[0]
                     and (head[1] - tail[1]) % 4 == 2,
                     f"component is not a closed cycle at {edges[a].id!r} -> {edges[b].id!r}", loc)
        components.append(tuple(idxs))
    for ei, e in enumerate(edges):
        _require(ei in owner, f"edge {e.id!r} belongs to no component", "components")
        ends = [(ei, TAIL) in port_at, (ei, HEAD) in port_at]
        _require(all(ends) or not any(ends), f"dangling end of edge {e.id!r}", f"edges[{ei}]")

    meta = {k: v for k, v in obj.items() if k not in ("punctures", "edges", "crossings", "components")}
    d = Diagram(n, tuple(edges), tuple(crossings), tuple(components), meta)
    if check_windings:
        check_winding_consistency(d)
    return d


def check_winding_consistency(d: Diagram) -> None:
    """Resolve every cube vertex; raise DiagramError if a circle cannot be embedded."""
    for v in d.vertices():
        try:
            resolve(d, v)
        except WindingError as exc:
            raise DiagramError(f"winding inconsistency at resolution {''.join(map(str, v))}: {exc}",
                               "edges") from None


# -- resolutions -----------------------------------------------------------------------

def _junctions(d: Diagram, v: Sequence[int]) -> Dict[Port, Port]:
    link = {}
    for c, bit in zip(d.crossings, v):
        for a, b in c.smoothing(bit):
            link[a] = b
            link[b] = a
    for e in d.free_loops():
        link[(e, HEAD)] = (e, TAIL)
        link[(e, TAIL)] = (e, HEAD)
    return link


def resolve(d: Diagram, v: Sequence[int]) -> ResolvedState:
    """Circles of the resolution at cube vertex ``v``, sorted by smallest edge index."""
    v = tuple(v)
    if len(v) != d.k:
        raise ValueError(f"vertex has length {len(v)}, diagram has {d.k} crossings")
    link = _junctions(d, v)
    n = d.punctures
    seen = set()
    circles = []
    for start in range(len(d.edges)):
        if start in seen:
            continue
        total = [0] * n
        foot = []
        e, end = start, TAIL  # enter at the tail, walk forwards
        while True:
            seen.add(e)
            foot.append(e)
            sgn = 1 if end == TAIL else -1
            for i, x in enumerate(d.edges[e].winding):
                total[i] += sgn * x
            e, end = link[(e, 1 - end)]
            if e == start:
                break
        cls, _ = classify_winding(total)
        circles.append(Circle(cls, frozenset(foot), tuple(total)))
    return ResolvedState(v, tuple(circles))


def crossing_signs(d: Diagram) -> CrossingSigns:
    plus = sum(1 for c in d.crossings if c.sign > 0)
    return CrossingSigns(plus, d.k - plus)


def describe_saddle(src: ResolvedState, dst: ResolvedState, crossing: Crossing) -> Saddle:
    touched_edges = crossing.edges
    by_foot = {c.footprint: j for j, c in enumerate(dst.circles)}
    untouched = []
    s_t = []
    for i, c in enumerate(src.circles):
        if c.footprint & touched_edges:
            s_t.append(i)
            continue
        j = by_foot.get(c.footprint)
        if j is None:
            raise InvariantError(f"untouched circle {sorted(c.footprint)} has no counterpart")
        untouched.append((i, j))
    matched = {j for _, j in untouched}
    d_t = [j for j in range(len(dst.circles)) if j not in matched]
    if len(s_t) == 2 and len(d_t) == 1:
        kind = "merge"
    elif len(s_t) == 1 and len(d_t) == 2:
        kind = "split"
    elif len(s_t) == 1 and len(d_t) == 1:
        kind = "self"
    else:
        raise InvariantError(f"saddle touches {len(s_t)} -> {len(d_t)} circles")
    return Saddle(kind, tuple(s_t), tuple(d_t), tuple(untouched),
                  tuple(src.circles[i].cls for i in s_t), tuple(dst.circles[j].cls for j in d_t))


def saddle_descriptor(d: Diagram, v: Sequence[int], i: int) -> Saddle:
    """The merge or split between ``resolve(d, v)`` and ``resolve(d, v + e_i)``."""
    v = tuple(v)
    if v[i] != 0:
        raise ValueError(f"coordinate {i} of {v} is already 1")
    u = v[:i] + (1,) + v[i + 1:]
    s = describe_saddle(resolve(d, v), resolve(d, u), d.crossings[i])
    if s.kind == "self":
        raise InvariantError("a band on a planar surface cannot turn one circle into one circle")
    return s


# -- diagram surgery -------------------------------------------------------------------

def permute_crossings(d: Diagram, order: Sequence[int]) -> Diagram:
    """Diagram with crossing list ``[d.crossings[i] for i in order]``."""
    if sorted(order) != list(range(d.k)):
        raise ValueError("order must be a permutation of the crossing indices")
    return Diagram(d.punctures, d.edges, tuple(d.crossings[i] for i in order), d.components, dict(d.meta))


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing (over-strand becomes under-strand)."""
    crossings = tuple(Crossing(c.id, c.ports[1:] + c.ports[:1]) for c in d.crossings)
    return Diagram(d.punctures, d.edges, crossings, d.components, dict(d.meta))


def smooth_crossing(d: Diagram, i: int, bit: int) -> Diagram:
    """Replace crossing ``i`` by its ``bit``-smoothing, re-orienting components as needed."""
    cross = d.crossings[i]
    at_i = {}
    for a, b in cross.smoothing(bit):
        at_i[a] = b
        at_i[b] = a
    n = d.punctures
    seen = set()
    chains = []  # (winding, start end, finish end) ; ends None for closed chains

    def walk(e, end):
        total = [0] * n
        while True:
            seen.add(e)
            sgn = 1 if end == TAIL else -1
            for j, x in enumerate(d.edges[e].winding):
                total[j] += sgn * x
            far = (e, 1 - end)
            if far not in at_i:
                return total, far
            e, end = at_i[far]

    port_at = d.port_index()
    for e in range(len(d.edges)):
        for end in (TAIL, HEAD):
            p = (e, end)
            if e in seen or p not in port_at or p in at_i:
                continue
            total, far = walk(e, end)
            chains.append((total, p, far))
    for e in range(len(d.edges)):
        if e in seen:
            continue
        total = [0] * n
        cur, end = e, TAIL
        while True:
            seen.add(cur)
            sgn = 1 if end == TAIL else -1
            for j, x in enumerate(d.edges[cur].winding):
                total[j] += sgn * x
            far = (cur, 1 - end)
            nxt = at_i.get(far)
            if nxt is None:  # a crossing-free loop elsewhere in the diagram
                nxt = (cur, end)
            cur, end = nxt
            if cur == e:
                break
        chains.append((total, None, None))

    # new edge j runs from chains[j][1] (its tail) to chains[j][2] (its head)
    wind = [list(t) for t, _, _ in chains]
    tail_of = [s for _, s, _ in chains]
    head_of = [f for _, _, f in chains]
    old_to_new = {}
    for j, (_, s, f) in enumerate(chains):
        if s is not None:
            old_to_new[s] = (j, TAIL)
            old_to_new[f] = (j, HEAD)
    others = [c for ci, c in enumerate(d.crossings) if ci != i]
    new_ports = [[old_to_new[p] for p in c.ports] for c in others]
    where = {}
    for ci, ports in enumerate(new_ports):
        for pj, p in enumerate(ports):
            where[p] = (ci, pj)

    def flip(j):
        wind[j] = [-x for x in wind[j]]
        for ci, pj in (where.pop((j, TAIL)), where.pop((j, HEAD))):
            e, end = new_ports[ci][pj]
            new_ports[ci][pj] = (e, 1 - end)
        for ci, ports in enumerate(new_ports):
            for pj, p in enumerate(ports):
                if p[0] == j:
                    where[p] = (ci, pj)

    oriented = set()
    components = []
    for j in range(len(chains)):
        if j in oriented:
            continue
        if tail_of[j] is None:
            oriented.add(j)
            components.append((j,))
            continue
        comp = []
        cur = j
        while cur not in oriented:
            oriented.add(cur)
            comp.append(cur)
            ci, pj = where[(cur, HEAD)]
            nxt, end = new_ports[ci][(pj + 2) % 4]
            if nxt in oriented:
                break
            if end == HEAD:
                flip(nxt)
            cur = nxt
        components.append(tuple(comp))

    edges = tuple(Edge(f"s{j}", tuple(w)) for j, w in enumerate(wind))
    crossings = tuple(Crossing(c.id, tuple(ports)) for c, ports in zip(others, new_ports))
    out = Diagram(n, edges, crossings, tuple(components), {})
    return out
