import pytest

from cactus45 import (
    CayleyBall,
    PartialLinkError,
    build_ball,
    canonical_form,
    check_tiling,
    j4prime_presentation,
    vertex_link,
)
from cactus45.words import shortlex_key

from fixtures import FACES_AT_E

P = j4prime_presentation()


def w(text):
    return P.word(text)


@pytest.fixture(scope="module")
def ball2():
    return build_ball(P, 2)


@pytest.fixture(scope="module")
def ball3():
    return build_ball(P, 3)


def test_radius_validation():
    with pytest.raises(ValueError):
        build_ball(P, 0)


def test_radius_one_counts():
    b = build_ball(P, 1)
    assert len(b.vertices) == 6
    assert len(b.edges) == 5
    assert len(b.faces) == 0
    assert len(b.interior) == 0


def test_radius_two_counts(ball2):
    assert len(ball2.vertices) == 21
    assert len(ball2.edges) == 25


def test_vertex_distances(ball2):
    by_len = {}
    for v, d in ball2.vertices.items():
        assert len(v) == d
        by_len[d] = by_len.get(d, 0) + 1
    assert by_len == {0: 1, 1: 5, 2: 15}


def test_edges_realize_multiplication(ball2):
    for u, v, s in ball2.edges:
        assert canonical_form(u * w(s), P) == v
        assert canonical_form(v * w(s), P) == u
        assert (len(u) - len(v)) % 2 == 1


def test_edge_endpoint_ordering(ball2):
    for u, v, _ in ball2.edges:
        assert shortlex_key(u) < shortlex_key(v)


def test_faces_at_identity(ball2):
    e = ball2.identity()
    expected = {
        frozenset(canonical_form(w(x), P) for x in row) for row in FACES_AT_E
    }
    got = {f.vertex_set for f in ball2.faces_at(e)}
    assert got == expected
    # radius 2 contains no other complete face
    assert len(ball2.faces) == 5


def test_face_boundary_convention(ball2):
    for f in ball2.faces:
        corners = sorted(f.boundary, key=shortlex_key)
        assert f.boundary[0] == corners[0]
        assert shortlex_key(f.boundary[1]) < shortlex_key(f.boundary[3])
        assert len(f.vertex_set) == 4


def test_face_sides_are_edges(ball2):
    for f in ball2.faces:
        for i in range(4):
            a, b = f.boundary[i], f.boundary[(i + 1) % 4]
            assert b in ball2.neighbor[a].values()


def test_interior_radius_two(ball2):
    assert ball2.interior == {ball2.identity()}


def test_link_at_identity(ball2):
    e = ball2.identity()
    link = vertex_link(ball2, e)
    assert link == [w("s12"), w("s13"), w("s23"), w("s24"), w("s34")]


def test_link_requires_interior(ball2):
    with pytest.raises(PartialLinkError):
        vertex_link(ball2, w("s12"))


def test_radius_three_growth(ball3):
    by_len = {}
    for v, d in ball3.vertices.items():
        by_len[d] = by_len.get(d, 0) + 1
    assert by_len == {0: 1, 1: 5, 2: 15, 3: 40}


def test_radius_three_interior(ball3):
    # whole spheres 0 and 1 are interior; sphere 2 touches distance-4
    # face corners that fall outside
    assert {len(v) for v in ball3.interior} == {0, 1}
    assert len(ball3.interior) == 6


def test_tiling_report_ok(ball3):
    report = check_tiling(ball3)
    assert report.ok
    assert report.failures == ()
    assert report.vertex_count == 61
    assert report.interior_count == 6


def test_tiling_requires_radius_three(ball2):
    with pytest.raises(ValueError):
        check_tiling(ball2)


def test_interior_links_are_pentagons(ball3):
    for v in ball3.interior:
        assert ball3.degree(v) == 5
        assert len(ball3.faces_at(v)) == 5
        assert len(vertex_link(ball3, v)) == 5


def test_deleted_face_is_detected(ball3):
    victim = next(f for f in ball3.faces if ball3.identity() in f.vertex_set)
    damaged = ball3.without_face(victim)
    report = check_tiling(damaged)
    assert not report.ok
    flagged = {v for v in victim.vertex_set if damaged.is_interior(v)}
    for v in flagged:
        assert any(f"vertex {v}" in msg for msg in report.failures)


def test_without_face_requires_member(ball3, ball2):
    foreign = ball2.faces[0]
    stray = next(f for f in ball3.faces if f not in ball3.faces[:0])
    assert ball3.without_face(stray) is not ball3
    missing = type(foreign)(boundary=tuple(reversed(foreign.boundary)))
    with pytest.raises(ValueError):
        ball3.without_face(missing)


def test_radius_four_interior_count():
    b = build_ball(P, 4)
    assert len(b.vertices) == 166
    assert {len(v) for v in b.interior} == {0, 1, 2}
    assert len(b.interior) == 21
    report = check_tiling(b)
    assert report.ok
    assert report.interior_count == 21
