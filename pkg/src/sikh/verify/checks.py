"""Verification checks: each returns a ``VerificationReport`` and never raises on failure."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from ..coeff import QQ, ZZ, get_ring
from ..cube import build_cube, cube_skeleton, d_squared_violations, standard_sign
from ..diagram import Diagram, smooth_crossing
from ..errors import InvariantError
from ..homology import sikh
from ..tqft import apply_saddle, saddle_case_table_literal, saddle_terms, local_table
from .configurations import enumerate_configurations
from .fixtures import fixtures, load_fixture, move_pairs
from .oracle import aps_homology, as_oracle_table
from .polygons import random_diagram


@dataclass
class Failure:
    case: str
    message: str
    counterexample: Optional[dict] = None


@dataclass
class VerificationReport:
    name: str
    trials: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    details: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, case: str, message: str, counterexample: Optional[dict] = None) -> None:
        self.failures.append(Failure(case, message, counterexample))

    def to_dict(self) -> dict:
        out = asdict(self)
        out["elapsed"] = round(self.elapsed, 3)
        out["ok"] = self.ok
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.trials} trials, {len(self.failures)} failures, {self.elapsed:.2f}s"


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self.t0
        return False


# -- D^2 = 0 --------------------------------------------------------------------------

def _dsq_problem(d: Diagram, rings, lambdas, sign_rule) -> Optional[str]:
    try:
        sk = cube_skeleton(d)
    except InvariantError as exc:
        return f"grading homogeneity: {exc}"
    for r in rings:
        for lam in lambdas:
            cube = build_cube(d, lam, r, sign_rule=sign_rule, skeleton=sk)
            bad = d_squared_violations(cube, limit=1)
            if bad:
                x, z, val = bad[0]
                return f"D^2 != 0 over {get_ring(r).name} at lambda={lam}: {x} -> {z} has coefficient {val}"
    return None


def shrink(d: Diagram, failing: Callable[[Diagram], bool]) -> Diagram:
    """Greedily smooth crossings away while ``failing`` stays true."""
    changed = True
    while changed and d.k:
        changed = False
        for i in range(d.k):
            for bit in (0, 1):
                try:
                    smaller = smooth_crossing(d, i, bit)
                except Exception:
                    continue
                if failing(smaller):
                    d, changed = smaller, True
                    break
            if changed:
                break
    return d


def check_d_squared(trials: int = 500, seed: int = 7, rings: Sequence = ("f2", "z"),
                    lambdas: Sequence = (0, 1, 2, -1), sign_rule=standard_sign,
                    max_crossings: int = 6, max_punctures: int = 3) -> VerificationReport:
    """Random diagrams: D^2 = 0 and every entry homogeneous, for all rings and lambdas."""
    report = VerificationReport("dsquare")
    with _Timer(report):
        rng = random.Random(seed)
        with_lambda = 0
        for t in range(trials):
            d = random_diagram(rng, max_crossings, max_punctures)
            report.trials += 1
            problem = _dsq_problem(d, rings, lambdas, sign_rule)
            if problem is None:
                if d.k and build_cube(d, 1, "z").has_lambda_entries:
                    with_lambda += 1
                continue
            small = shrink(d, lambda x: _dsq_problem(x, rings, lambdas, sign_rule) is not None)
            report.fail(f"trial {t}", _dsq_problem(small, rings, lambdas, sign_rule), small.to_dict())
        report.details.append(f"{trials} diagrams x {len(rings)} rings x {len(lambdas)} lambdas; "
                              f"{with_lambda} diagrams with lambda-case entries")
    return report


# -- exhaustive configurations ------------------------------------------------------------

@lru_cache(maxsize=4)
def configuration_set(max_punctures: int = 3):
    """Every enumerated configuration with its cube skeleton (None if building it failed)."""
    out = []
    for conf in enumerate_configurations(max_punctures=max_punctures):
        try:
            sk = cube_skeleton(conf.diagram)
        except InvariantError:
            sk = None
        out.append((conf, sk))
    return tuple(out)


def _evaluate(terms, lam, ring):
    out = {}
    for key, (c0, c1) in terms.items():
        val = ring.add(ring(c0), ring.mul(ring(c1), ring(lam)))
        if val:
            out[key] = val
    return out


def _compose(b, a, ring):
    """Matrix product ``b @ a`` for {(row, col): value} dictionaries."""
    by_row = {}
    for (r, c), v in a.items():
        by_row.setdefault(r, []).append((c, v))
    out = {}
    for (r, m), v in b.items():
        for c, w in by_row.get(m, ()):
            out[(r, c)] = ring.add(out.get((r, c), 0), ring.mul(v, w))
    return {k: v for k, v in out.items() if v}


def check_commutativity(max_punctures: int = 3, lambdas: Sequence = (0, 1, 2)) -> VerificationReport:
    """Two disjoint bands: both orders of surgery give the same map."""
    report = VerificationReport("commute")
    with _Timer(report):
        configs = [(c, sk) for c, sk in configuration_set(max_punctures) if c.bands == 2]
        lam_squares = 0
        for conf, sk in configs:
            if sk is None:
                report.fail(conf.name, "cube could not be built", conf.diagram.to_dict())
                continue
            t = sk.terms
            first = (t[((0, 0), 0)], t[((1, 0), 1)])
            second = (t[((0, 0), 1)], t[((0, 1), 0)])
            if any(c1 for m in first + second for _, c1 in m.values()):
                lam_squares += 1
            for lam in lambdas:
                report.trials += 1
                a = _compose(_evaluate(first[1], lam, ZZ), _evaluate(first[0], lam, ZZ), ZZ)
                b = _compose(_evaluate(second[1], lam, ZZ), _evaluate(second[0], lam, ZZ), ZZ)
                if a != b:
                    report.fail(conf.name, f"compositions differ at lambda={lam}", conf.diagram.to_dict())
        report.details.append(f"{len(configs)} two-band configurations, {lam_squares} with lambda-case maps")
    return report


def check_case_tables(max_punctures: int = 3, lambdas: Sequence = (0, 1, 2)) -> VerificationReport:
    """The winding rule and the pair-of-pants rule give identical band maps.

    Band maps are pure functions of (source circles, target circles, saddle);
    identical inputs recurring across configurations are compared once.
    """
    report = VerificationReport("cases")
    with _Timer(report):
        edges = essential = 0
        verdict = {}
        for conf, sk in configuration_set(max_punctures):
            d = conf.diagram
            if sk is None:
                report.fail(conf.name, "cube could not be built", d.to_dict())
                continue
            for (v, i), desc in sk.saddles.items():
                u = v[:i] + (1,) + v[i + 1:]
                src, dst = sk.spaces[v], sk.spaces[u]
                edges += 1
                report.trials += 1
                key = (src, dst, desc)
                if key not in verdict:
                    verdict[key] = _compare_tables(src, dst, desc, d.punctures, lambdas)
                lam_case, problem = verdict[key]
                essential += lam_case
                if problem:
                    report.fail(f"{conf.name} edge {v}/{i}", problem, d.to_dict())
        report.details.append(f"{edges} band maps compared ({len(verdict)} distinct), "
                              f"{essential} of them all-essential lambda-cases")
    return report


def _compare_tables(src, dst, desc, n, lambdas) -> Tuple[bool, Optional[str]]:
    try:
        rule = saddle_terms(src, dst, desc, local_table(desc, n))
        lit = saddle_terms(src, dst, desc, local_table(desc, n, literal=True))
    except InvariantError as exc:
        return False, str(exc)
    lam_case = any(c1 for _, c1 in rule.values())
    if rule != lit:
        return lam_case, "affine tables differ"
    for lam in lambdas:
        if apply_saddle(src, dst, desc, lam, QQ) != saddle_case_table_literal(src, dst, desc, lam, QQ):
            return lam_case, f"maps differ at lambda={lam}"
    return lam_case, None


def check_affinity(trials: int = 100, seed: int = 11, lambdas: Sequence = (2, 3, -5),
                   max_punctures: int = 3) -> VerificationReport:
    """T_lambda = T_0 + lambda (T_1 - T_0) exactly, over Q."""
    report = VerificationReport("affine")
    with _Timer(report):
        pool = []
        for conf, sk in configuration_set(max_punctures):
            if sk is not None:
                pool.extend((conf, sk, key) for key in sorted(sk.saddles))
        rng = random.Random(seed)
        sample = rng.sample(pool, min(trials, len(pool)))
        hits = 0
        for conf, sk, (v, i) in sample:
            u = v[:i] + (1,) + v[i + 1:]
            src, dst, desc = sk.spaces[v], sk.spaces[u], sk.saddles[(v, i)]
            t0 = apply_saddle(src, dst, desc, 0, QQ)
            t1 = apply_saddle(src, dst, desc, 1, QQ)
            if t0 != t1:
                hits += 1
            report.trials += 1
            for lam in lambdas:
                lam_q = QQ(lam)
                tl = apply_saddle(src, dst, desc, lam_q, QQ)
                keys = set(t0) | set(t1) | set(tl)
                for k in keys:
                    a, b = t0.get(k, 0), t1.get(k, 0)
                    if tl.get(k, 0) != a + lam_q * (b - a):
                        report.fail(f"{conf.name} edge {v}/{i}", f"affinity fails at lambda={lam}, entry {k}",
                                    conf.diagram.to_dict())
                        break
        report.details.append(f"{len(sample)} band maps sampled from {len(pool)}; {hits} depend on lambda")
    return report


# -- fixture-based checks -----------------------------------------------------------------

def _graded(H, with_q: bool):
    return H.ranks(("h", "g", "qt", "q") if with_q else ("h", "g", "qt"))


def check_reidemeister(rings: Sequence = ("f2", "q"), lambdas: Sequence = (0, 1)) -> VerificationReport:
    """Move-related fixture pairs have equal graded homology."""
    report = VerificationReport("rmoves")
    with _Timer(report):
        for pair in move_pairs():
            a, b = load_fixture(pair.left), load_fixture(pair.right)
            for r in rings:
                for lam in lambdas:
                    report.trials += 1
                    ha, hb = sikh(a, lam, r), sikh(b, lam, r)
                    both = ha.q_graded and hb.q_graded
                    if _graded(ha, both) != _graded(hb, both):
                        report.fail(f"{pair.move} {pair.left} / {pair.right}",
                                    f"graded ranks differ over {r} at lambda={lam}: "
                                    f"{_graded(ha, both)} vs {_graded(hb, both)}")
            report.details.append(f"{pair.move:12s} {pair.left} ~ {pair.right}: "
                                  f"total rank {sikh(a, 1, 'f2').total_rank()}")
    return report


CLASSICAL = {
    # name: (rank over Q, rank over F2, torsion factors over Z)
    "trefoil": (4, 6, (2,)),
    "hopf": (4, 4, ()),
}


def check_classical() -> VerificationReport:
    """Plain-disk values against known Khovanov homology and the brute-force oracle."""
    report = VerificationReport("classical")
    with _Timer(report):
        for name, (rq, rf, tors) in CLASSICAL.items():
            d = load_fixture(name)
            got = (sikh(d, 1, "q").total_rank(), sikh(d, 1, "f2").total_rank(),
                   tuple(sorted(x for t in sikh(d, 1, "z").torsion().values() for x in t)))
            report.trials += 1
            if got != (rq, rf, tors):
                report.fail(name, f"expected (Q rank, F2 rank, torsion) = {(rq, rf, tors)}, got {got}")
            for r in ("q", "f2", "z"):
                report.trials += 1
                if as_oracle_table(sikh(d, 0, r)) != aps_homology(d, r):
                    report.fail(name, f"disagrees with the brute-force oracle over {r}")
            report.details.append(f"{name}: Q rank {got[0]}, F2 rank {got[1]}, torsion {list(got[2])}")
    return report


PARALLEL_CLASP_BLOCK = ((2,), 4)


def check_specializations() -> VerificationReport:
    """lambda = 0 against the oracle, the parallel-clasp block, and rank(SiKh_0) >= rank(SiKh_1) over F2."""
    report = VerificationReport("specialize")
    with _Timer(report):
        for name in fixtures():
            d = load_fixture(name)
            for r in ("f2", "q", "z"):
                report.trials += 1
                if as_oracle_table(sikh(d, 0, r)) != aps_homology(d, r):
                    report.fail(name, f"lambda=0 homology disagrees with the brute-force oracle over {r}")
            r0, r1 = sikh(d, 0, "f2").total_rank(), sikh(d, 1, "f2").total_rank()
            report.trials += 1
            if r0 < r1:
                report.fail(name, f"rank over F2 at lambda=0 is {r0} < {r1} at lambda=1")
            report.details.append(f"{name:32s} F2 rank: lambda=0 {r0}, lambda=1 {r1}")
        g, expected = PARALLEL_CLASP_BLOCK
        got = sikh(load_fixture("parallel_clasp"), 0, "q").block_rank(g)
        report.trials += 1
        if got != expected:
            report.fail("parallel_clasp", f"block g={list(g)} over Q at lambda=0 has rank {got}, expected {expected}")
        report.details.append(f"parallel_clasp block g={list(g)}, Q, lambda=0: rank {got}")
    return report


def check_detection() -> VerificationReport:
    """rank over F2 at lambda=1 is >= 2, with equality exactly for embedded knots."""
    report = VerificationReport("detect")
    with _Timer(report):
        for name, info in fixtures().items():
            rank = sikh(load_fixture(name), 1, "f2").total_rank()
            report.trials += 1
            expect = "= 2" if info.embedded_knot else "> 2"
            if rank < 2 or (rank == 2) != info.embedded_knot:
                report.fail(name, f"rank {rank}, expected {expect}")
            report.details.append(f"{name:32s} rank {rank:3d} (expected {expect})")
    return report


CHECKS = {
    "dsquare": check_d_squared,
    "commute": check_commutativity,
    "cases": check_case_tables,
    "affine": check_affinity,
    "rmoves": check_reidemeister,
    "specialize": check_specializations,
    "detect": check_detection,
    "classical": check_classical,
}
