import random
from fractions import Fraction

import pytest

from sikh.diagram import crossing_signs, resolve
from sikh.verify.polygons import (DegenerateProjection, axis_puncture, braid_closure, diagram_dict,
                                  polygon_diagram, random_diagram)


def square(r, z=0):
    return [(r, -r, z), (r, r, z), (-r, r, z), (-r, -r, z)]


def test_square_around_puncture_is_ccw():
    d = polygon_diagram([square(2)], [(0, 0)])
    (e,) = d.edges
    assert e.winding == (1,)


def test_clockwise_square():
    d = polygon_diagram([list(reversed(square(2)))], [(0, 0), (5, 5)])
    assert d.edges[0].winding == (-1, 0)


def test_bowtie_has_one_crossing():
    bowtie = [(-4, -2, 1), (4, 2, 1), (4, -2, 0), (-4, 2, 0)]
    d = polygon_diagram([bowtie], [(Fraction(-5, 2), Fraction(1, 2)), (Fraction(5, 2), Fraction(1, 2))])
    assert d.k == 1
    assert {c.winding for c in resolve(d, (0,)).circles} | {c.winding for c in resolve(d, (1,)).circles}


def test_equal_heights_at_crossing_rejected():
    with pytest.raises(DegenerateProjection):
        diagram_dict([square(2), [(0, -4, 0), (1, 4, 0), (0, 5, 0)]])


def test_braid_closure_signs():
    s = crossing_signs(braid_closure([1, 1, 1], 2))
    assert (s.n_plus, s.n_minus) == (3, 0)
    s = crossing_signs(braid_closure([-1, 2], 3))
    assert (s.n_plus, s.n_minus) == (1, 1)


def test_axis_puncture_windings():
    d = braid_closure([], 2, [axis_puncture(2)])
    assert sorted(e.winding for e in d.edges) == [(-1,), (-1,)]


def test_random_diagrams_are_deterministic_and_bounded():
    a = [random_diagram(random.Random(5), 6, 3).to_dict() for _ in range(2)]
    assert a[0] == a[1]
    rng = random.Random(9)
    for _ in range(40):
        d = random_diagram(rng, 6, 3)
        assert d.k <= 6 and d.punctures <= 3
