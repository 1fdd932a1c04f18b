import json

import pytest

from sikh.diagram import (crossing_signs, from_dict, loads, mirror, permute_crossings, resolve,
                          saddle_descriptor, smooth_crossing)
from sikh.errors import DiagramError
from sikh.verify.fixtures import load_fixture


def loop(winding):
    return {"punctures": len(winding), "edges": [{"id": "a", "winding": winding}],
            "crossings": [], "components": [["a"]]}


def test_crossing_free_annular_loop():
    d = from_dict(loop([1]))
    assert d.k == 0 and len(d.components) == 1
    st = resolve(d, ())
    assert [c.cls.support for c in st.circles] == [frozenset({0})]


def test_port_reuse_rejected():
    doc = json.loads(load_fixture("unknot_kink_pos").dumps())
    doc["crossings"][0]["ports"][1] = [1, "tail"]
    with pytest.raises(DiagramError, match="port reuse") as err:
        from_dict(doc)
    assert "crossings[0].ports[1]" in str(err.value)


def test_parse_error_has_location():
    with pytest.raises(DiagramError, match="line 2, column"):
        loads('{"punctures": 0,\n "edges": [,]}')


@pytest.mark.parametrize("mutate,message", [
    (lambda d: d.pop("components"), "missing field"),
    (lambda d: d.update(punctures=-1), "non-negative"),
    (lambda d: d["edges"][0].update(winding=[1, 2]), "winding must be a list of 1"),
    (lambda d: d["components"].append(["b"]), "unknown edge"),
])
def test_validation_errors(mutate, message):
    doc = loop([0])
    mutate(doc)
    with pytest.raises(DiagramError, match=message):
        from_dict(doc)


def test_non_embedded_winding_rejected():
    with pytest.raises(DiagramError, match="winding"):
        from_dict(loop([2]))


def test_hopf_fixture_shape():
    d = load_fixture("hopf")
    assert d.k == 2 and len(d.components) == 2


def test_kinked_unknot_resolutions():
    # the 0-smoothing of a negative crossing is the unoriented one
    d = load_fixture("unknot_kink_neg")
    assert len(resolve(d, (0,)).circles) == 1
    assert len(resolve(d, (1,)).circles) == 2
    p = load_fixture("unknot_kink_pos")
    assert len(resolve(p, (0,)).circles) == 2
    assert len(resolve(p, (1,)).circles) == 1


def test_crossing_free_resolution_keeps_components():
    d = load_fixture("unlink2")
    assert len(resolve(d, ()).circles) == 2


def test_signs():
    t = load_fixture("trefoil")
    s = crossing_signs(t)
    assert (s.n_plus, s.n_minus) == (3, 0)
    m = crossing_signs(mirror(t))
    assert (m.n_plus, m.n_minus) == (0, 3)
    u = crossing_signs(load_fixture("unknot"))
    assert (u.n_plus, u.n_minus) == (0, 0)
    assert crossing_signs(load_fixture("unknot_kink_neg")).n_minus == 1


def test_saddle_descriptors():
    assert saddle_descriptor(load_fixture("hopf"), (0, 0), 0).kind == "merge"
    assert saddle_descriptor(load_fixture("unknot_kink_neg"), (0,), 0).kind == "split"
    assert saddle_descriptor(load_fixture("unknot_kink_pos"), (0,), 0).kind == "merge"


def test_winding_sum_constant_mod_two_over_cube():
    # circles of a non-oriented smoothing are traversed in an arbitrary direction,
    # so only the parity of the summed winding vector is resolution independent
    d = load_fixture("annular_r3_left")
    sums = set()
    for v in d.vertices():
        total = [0] * d.punctures
        for c in resolve(d, v).circles:
            total = [(a + b) % 2 for a, b in zip(total, c.winding)]
        sums.add(tuple(total))
    assert len(sums) == 1


def test_round_trip_and_stable_dump():
    d = load_fixture("parallel_clasp")
    text = d.dumps()
    assert loads(text).dumps() == text
    assert loads(text) == d


def test_permute_and_smooth():
    d = load_fixture("trefoil")
    p = permute_crossings(d, (2, 0, 1))
    assert p.k == 3 and p.crossings[0] == d.crossings[2]
    with pytest.raises(ValueError):
        permute_crossings(d, (0, 0, 1))
    s = smooth_crossing(d, 0, 0)
    assert s.k == 2
