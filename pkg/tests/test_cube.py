import pytest

from sikh.coeff import ZZ
from sikh.cube import build_cube, cube_skeleton, d_squared_violations, grading_blocks, standard_sign
from sikh.diagram import permute_crossings
from sikh.verify.fixtures import load_fixture


def test_standard_sign():
    assert standard_sign((0, 1, 1), 0) == 1
    assert standard_sign((0, 0, 1), 0) == -1
    assert standard_sign((1, 0, 1), 1) == -1
    assert standard_sign((1, 1, 0), 2) == 1


def test_crossing_free_circle():
    cube = build_cube(load_fixture("unknot"), 1, "z")
    assert list(cube.spaces) == [()]
    assert cube.edges == {} and cube.differential() == {}


def test_kinked_unknot_cube():
    cube = build_cube(load_fixture("unknot_kink_pos"), 1, "z")
    assert (cube.n_plus, cube.n_minus) == (1, 0)
    assert sorted(cube.spaces) == [(0,), (1,)]
    (edge,) = cube.edges.values()
    assert edge.saddle.kind == "merge"
    assert {cube.degree(g).h for g in cube.generators()} == {0, 1}


@pytest.mark.parametrize("name", ["trefoil", "parallel_clasp", "figure_eight_curve", "annular_r3_left", "whitehead_clasp"])
@pytest.mark.parametrize("lam", [0, 1, 2, -1])
def test_d_squared_on_fixtures(name, lam):
    sk = cube_skeleton(load_fixture(name))
    assert d_squared_violations(build_cube(sk.diagram, lam, "z", skeleton=sk)) == []


def test_constant_sign_rule_breaks_d_squared():
    d = load_fixture("trefoil")
    assert d_squared_violations(build_cube(d, 1, "z", sign_rule=lambda v, i: 1))


def test_lambda_entries_flagged():
    cube = build_cube(load_fixture("figure_eight_curve"), 1, "z")
    assert cube.has_lambda_entries and not cube.q_graded
    assert not build_cube(load_fixture("figure_eight_curve"), 0, "z").has_lambda_entries
    assert build_cube(load_fixture("trefoil"), 1, "z").q_graded


def test_every_entry_is_homogeneous():
    for name in ("figure_eight_curve", "parallel_clasp", "two_puncture_r3_left"):
        cube = build_cube(load_fixture(name), 1, ZZ, check_gradings=False)
        for e in cube.edges.values():
            for (row, col) in e.matrix:
                a, b = cube.degree((e.source, col)), cube.degree((e.target, row))
                assert b.h - a.h == 1 and b.g == a.g and b.qt == a.qt
                assert b.q - a.q == (1 if (row, col) in e.lambda_entries else 0)


def test_blocks_annular_unknot():
    c = grading_blocks(build_cube(load_fixture("annular_unknot"), 1, "f2"))
    assert sorted(k[0] for k in c.blocks) == [(-1,), (1,)]
    assert all(b.dims() == {0: 1} for b in c.blocks.values())


def test_disk_diagram_single_g_block():
    c = grading_blocks(build_cube(load_fixture("trefoil"), 1, "q"))
    assert {k[0] for k in c.blocks} == {()}
    assert all(k[1] == k[2] for k in c.blocks)


def test_literal_cube_equals_rule_cube():
    d = load_fixture("figure_eight_curve")
    a, b = build_cube(d, 3, "z"), build_cube(d, 3, "z", literal=True)
    assert {k: e.matrix for k, e in a.edges.items()} == {k: e.matrix for k, e in b.edges.items()}


def test_reordered_crossings_same_chain_dims():
    d = load_fixture("trefoil")
    a = grading_blocks(build_cube(d, 1, "q"))
    b = grading_blocks(build_cube(permute_crossings(d, (1, 2, 0)), 1, "q"))
    assert {k: v.dims() for k, v in a.blocks.items()} == {k: v.dims() for k, v in b.blocks.items()}
