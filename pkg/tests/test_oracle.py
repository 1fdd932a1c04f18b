import pytest

from sikh import sikh
from sikh.verify.fixtures import fixtures, load_fixture
from sikh.verify.oracle import aps_homology, as_oracle_table, smith_normal_form


def test_oracle_snf():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[4, 0], [0, 6]]) == [2, 12]


def test_oracle_classical_values():
    t = aps_homology(load_fixture("trefoil"), "z")
    assert sum(r for r, _ in t.values()) == 4
    assert [tors for _, tors in t.values() if tors] == [(2,)]
    assert sum(r for r, _ in aps_homology(load_fixture("trefoil"), "f2").values()) == 6
    assert sum(r for r, _ in aps_homology(load_fixture("hopf"), "q").values()) == 4


@pytest.mark.parametrize("name", sorted(fixtures()))
def test_main_path_matches_oracle_at_lambda_zero(name):
    d = load_fixture(name)
    for ring in ("f2", "q"):
        assert as_oracle_table(sikh(d, 0, ring)) == aps_homology(d, ring)
