from sikh.cube import cube_skeleton
from sikh.verify.configurations import LOOP, enumerate_configurations, face_count, plane_maps


def test_plane_map_counts():
    assert len(plane_maps(1)) == 1
    assert len(plane_maps(2)) == 3
    assert all(face_count(p) == p.vertices + 2 for p in plane_maps(2))
    assert face_count(LOOP) == 2


def test_small_enumeration():
    confs = list(enumerate_configurations(max_punctures=1))
    names = [c.name for c in confs]
    assert len(names) == len(set(names))
    assert {c.bands for c in confs} == {1, 2}
    for c in confs:
        assert c.diagram.punctures <= 1
        assert len(c.diagram.resolve((0,) * c.bands).circles) <= 4
        cube_skeleton(c.diagram)


def test_enumeration_reaches_essential_merges():
    kinds = set()
    for c in enumerate_configurations(max_punctures=2):
        if c.bands != 1:
            continue
        sk = cube_skeleton(c.diagram)
        (desc,) = sk.saddles.values()
        if all(x.support for x in desc.src_classes + desc.dst_classes):
            kinds.add(desc.kind)
    assert kinds == {"merge", "split"}
