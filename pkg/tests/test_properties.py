import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sikh import sikh
from sikh.coeff import F2, QQ, ZZ
from sikh.cube import build_cube, cube_skeleton, d_squared_violations
from sikh.linalg import rank_f2, rank_q, smith_invariants
from sikh.planar import CircleClass, Orientation, oriented_class
from sikh.verify.polygons import random_diagram

SCALARS = {
    F2: st.integers(0, 1).map(F2),
    ZZ: st.integers(-10**6, 10**6),
    QQ: st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 1000)),
}


@pytest.mark.parametrize("ring", [F2, ZZ, QQ], ids=lambda r: r.name)
@given(data=st.data())
def test_ring_axioms(ring, data):
    a, b, c = (data.draw(SCALARS[ring]) for _ in range(3))
    add, mul = ring.add, ring.mul
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, ring.neg(a)) == 0 and mul(a, ring(1)) == a
    if ring.is_unit(a):
        assert mul(a, ring.inv(a)) == 1


@pytest.mark.parametrize("ring", [F2, ZZ, QQ], ids=lambda r: r.name)
@given(data=st.data())
def test_scalar_round_trip(ring, data):
    a = data.draw(SCALARS[ring])
    assert ring.parse(ring.format(a)) == a


@given(st.frozensets(st.integers(0, 4)))
def test_orientation_negates_class(support):
    c = CircleClass(support)
    assert oriented_class(c, Orientation.CCW, 5) == tuple(-x for x in oriented_class(c, Orientation.CW, 5))


def diagrams(max_crossings=5, max_punctures=2):
    return st.integers(0, 2**32 - 1).map(lambda s: random_diagram(random.Random(s), max_crossings, max_punctures))


@settings(max_examples=40)
@given(diagrams(), st.sampled_from([0, 1, 2, -1, 7]), st.sampled_from(["f2", "z", "q"]))
def test_d_squared_random(d, lam, ring):
    if ring == "f2":
        lam %= 2
    assert d_squared_violations(build_cube(d, lam, ring)) == []


@settings(max_examples=40)
@given(diagrams(), st.sampled_from([0, 1]))
def test_universal_coefficients(d, lam):
    """dim over F2 in degree h = free rank + even factors in degree h + those in degree h+1."""
    hz, hf = sikh(d, lam, "z"), sikh(d, lam, "f2")
    assert hz.q_graded == hf.q_graded
    keys = set(hz.groups) | set(hf.groups)
    for k in keys:
        free = hz.groups[k].rank if k in hz.groups else 0
        up = type(k)(k.h + 1, k.g, k.qt, k.q)
        t = sum(1 for x in hz.torsion().get(k, ()) if x % 2 == 0)
        t_up = sum(1 for x in hz.torsion().get(up, ()) if x % 2 == 0)
        got = hf.groups[k].rank if k in hf.groups else 0
        assert got == free + t + t_up


@settings(max_examples=30)
@given(diagrams(), st.sampled_from(["f2", "q", "z"]))
def test_pivot_order_determinism(d, ring):
    assert sikh(d, 1, ring).to_dict() == sikh(d, 1, ring, order="reverse").to_dict()


@settings(max_examples=30)
@given(diagrams(), st.integers(-6, 6))
def test_lambda_affinity_of_cube(d, lam):
    sk = cube_skeleton(d)
    c0, c1, cl = (build_cube(d, x, QQ, skeleton=sk) for x in (0, 1, lam))
    for key, e in cl.edges.items():
        m0, m1 = c0.edges[key].matrix, c1.edges[key].matrix
        for pos in set(m0) | set(m1) | set(e.matrix):
            a, b = m0.get(pos, 0), m1.get(pos, 0)
            assert e.matrix.get(pos, 0) == a + lam * (b - a)


@settings(max_examples=30)
@given(diagrams())
def test_euler_characteristic_is_lambda_independent(d):
    e = [sikh(d, lam, "q").euler(("g", "qt")) for lam in (0, 1, 3)]
    assert e[0] == e[1] == e[2]


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def entries(mat):
    return [(r, c, v) for r, row in enumerate(mat) for c, v in enumerate(row) if v]


@given(matrices)
def test_ranks_and_smith_against_sympy(mat):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    m = sympy.Matrix(mat)
    assert rank_q(entries(mat)) == m.rank()
    snf = smith_normal_form(m, domain=sympy.ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(m.shape)) if snf[i, i] != 0]
    assert smith_invariants(entries(mat)) == (len(diag), [x for x in diag if x > 1])
    # rank over F2 = number of odd invariant factors
    assert rank_f2(entries(mat)) == sum(1 for x in diag if x % 2)


@given(matrices)
def test_rank_order_independent(mat):
    e = entries(mat)
    assert rank_q(e) == rank_q(e, order="reverse")
    assert rank_f2(e) == rank_f2(e, order="reverse")
    assert smith_invariants(e) == smith_invariants(e, order="reverse")
