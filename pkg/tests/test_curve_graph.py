import pytest

from chillingworth.curve_graph import (CurveVertex, GraphPath, adjacent,
                                       find_edges, signed_distance, signed_length,
                                       trace_preimage, verify_length_vs_integral,
                                       vertex_from_json)
from chillingworth.euler import euler_char, euler_integral
from chillingworth.homology import HomologyClass
from chillingworth.torelli import build_catalog, desk_generators, desk_instance

G = 3
CAT = build_catalog(G)
H = HomologyClass.alpha(G, 1)
A1 = CurveVertex.admit(G, (1,), H)
BP1, BPC = desk_generators(CAT)


def image(f, v):
    return CurveVertex.admit(G, f.realized.on_curve(v.word), H, v.closed)


def test_admission():
    with pytest.raises(ValueError):
        CurveVertex.admit(G, (2,), H)            # wrong class
    with pytest.raises(ValueError):
        CurveVertex.admit(G, (1, 1), HomologyClass([2, 0, 0, 0, 0, 0]))
    with pytest.raises(ValueError):
        CurveVertex.admit(G, (1, 2, 1, -2), HomologyClass([2, 0, 0, 0, 0, 0]))
    assert CurveVertex.admit(G, (2, 1, -2), H) == A1  # cyclic normal form


def test_bp_step_is_signed_edge():
    w = image(BP1, A1)
    (e,) = find_edges(A1, w)
    assert e.sign == 1
    assert euler_char(e.subsurface) == -2
    assert e.reversed().sign == -1
    assert adjacent(w, A1)


def test_not_adjacent_to_self():
    assert not adjacent(A1, A1)
    assert find_edges(A1, A1) == []


def test_equivariance_of_edge_signs():
    # applying a Torelli map to both ends keeps the edge and its sign
    w = image(BP1, A1)
    (e,) = find_edges(A1, w)
    for f in (BP1, BPC):
        (e2,) = find_edges(image(f, A1), image(f, w))
        assert e2.sign == e.sign


def test_path_length_and_integral():
    v1 = image(BP1, A1)
    v2 = image(BP1, v1)
    p = GraphPath(((find_edges(A1, v1)[0], 1), (find_edges(v1, v2)[0], 1)))
    assert signed_length(p) == 2
    assert signed_length(p.reverse()) == -2
    assert euler_integral(trace_preimage(p)) == -2 * signed_length(p)
    assert verify_length_vs_integral(p)


def test_path_adjacency_checked():
    v1 = image(BP1, A1)
    e = find_edges(A1, v1)[0]
    with pytest.raises(ValueError):
        GraphPath(((e, 1), (e, 1)))


@pytest.fixture(scope="module")
def small_ball():
    return desk_instance(G, closed=False, radius=1)


def test_ball_paths_agree(small_ball):
    vs = small_ball.vertices
    seen = 0
    for v1 in vs:
        for v2 in vs:
            if v1 < v2:
                lengths = {signed_length(p) for p in small_ball.paths(v1, v2, 3)}
                assert len(lengths) <= 1
                seen += bool(lengths)
    assert seen > 0


def test_signed_distance(small_ball):
    w = image(BP1, A1)
    d, m, path = signed_distance(A1, w, small_ball, 2)
    assert (d, m) == (1, 0)
    assert len(path) == 1


def test_ball_json(small_ball):
    data = small_ball.to_json()
    assert len(data["vertices"]) == len(small_ball.vertices)
    v = vertex_from_json(data["vertices"][0], G, H)
    assert v in small_ball.vertices


def test_closed_vertex():
    v = CurveVertex.admit(G, (1,), H, closed=True)
    w = CurveVertex.admit(G, BP1.realized.on_curve((1,)), H, closed=True)
    signs = sorted(e.sign for e in find_edges(v, w))
    assert signs in ([1], [-1, 1])
