import random

import pytest
from hypothesis import given, settings, strategies as st

from chillingworth.curve_graph import CurveVertex, find_edges
from chillingworth.euler import (CellComplex, ConstructibleFunction, TameSet, euler_char,
                                 euler_integral, integral_of_sum, polygon_surface, refine,
                                 refine_set, signed_genus)
from chillingworth.homology import HomologyClass
from chillingworth.torelli import build_catalog

S3 = polygon_surface(3, bordered=False)
S31 = polygon_surface(3, bordered=True)


def random_sets(cx, rng, n):
    cells = list(cx.cells())
    return [TameSet(cx, rng.sample(cells, rng.randint(0, len(cells)))) for _ in range(n)]


def random_terms(cx, rng):
    return [(rng.randint(-5, 5), u) for u in random_sets(cx, rng, rng.randint(1, 5))]


# -- fixtures ------------------------------------------------------------------

def test_point_and_open_edge():
    cx = CellComplex(2, [(0, 1)], [])
    assert euler_char(TameSet(cx, [("v", 0)])) == 1
    assert euler_char(TameSet(cx, [("e", 0)])) == -1
    assert euler_char(TameSet.everything(cx)) == 1


def test_closed_genus3():
    assert S3.euler_characteristic() == -4
    assert euler_char(TameSet.everything(S3)) == -4


def test_bordered_genus3_is_one_holed():
    assert S31.euler_characteristic() == -5


def test_genus_one_two_boundary_piece():
    cat = build_catalog(3)
    h = HomologyClass.alpha(3, 1)
    a1 = CurveVertex.admit(3, (1,), h)
    bp = cat.bounding_pairs["bp:a=-β1,k=1"].realized
    w = CurveVertex.admit(3, bp.on_curve((1,)), h)
    (e,) = find_edges(a1, w)
    assert euler_char(e.subsurface) == -2


# -- integral laws -------------------------------------------------------------

@pytest.mark.parametrize("seed", range(50))
def test_representation_independence(seed):
    rng = random.Random(seed)
    cx = S31 if seed % 2 else S3
    terms = random_terms(cx, rng)
    f = ConstructibleFunction.from_indicators(terms)
    # rewrite f through its level sets, a different sum of indicators
    levels = [(lam, TameSet(cx, cells)) for lam, cells in f.level_sets().items()]
    assert ConstructibleFunction.from_indicators(levels) == f
    assert euler_integral(f) == integral_of_sum(terms) == integral_of_sum(levels)


@pytest.mark.parametrize("seed", range(50))
def test_subdivision_invariance(seed):
    rng = random.Random(1000 + seed)
    cx = S31 if seed % 2 else S3
    terms = random_terms(cx, rng)
    f = ConstructibleFunction.from_indicators(terms)
    new, g, parent = refine(cx, f)
    new.validate()
    assert new.euler_characteristic() == cx.euler_characteristic()
    assert euler_integral(g) == euler_integral(f)
    assert integral_of_sum((lam, refine_set(u, new, parent)) for lam, u in terms) \
        == integral_of_sum(terms)


def test_double_refinement():
    new, _, _ = refine(S3)
    newer, _, _ = refine(new)
    assert newer.euler_characteristic() == -4


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2 ** 20)), max_size=6))
@settings(max_examples=60)
def test_integral_linear(spec):
    cells = list(S3.cells())
    sets = [TameSet(S3, [c for i, c in enumerate(cells) if mask >> (i % 20) & 1])
            for _, mask in spec]
    f = ConstructibleFunction()
    for (lam, _), u in zip(spec, sets):
        f = f + u.indicator(lam)
    assert euler_integral(f) == sum(lam * euler_char(u) for (lam, _), u in zip(spec, sets))
    assert euler_integral(f * 2 - f) == euler_integral(f)


def test_signed_genus():
    f = TameSet.everything(S3).indicator(1)
    assert signed_genus(f) == 2
    odd = TameSet(S3, [("v", 0)]).indicator(1)
    with pytest.raises(ValueError):
        signed_genus(odd)


def test_complex_json_roundtrip():
    cx = CellComplex.from_json(S31.to_json())
    assert cx.euler_characteristic() == S31.euler_characteristic()
    assert cx.boundary == S31.boundary


def test_invalid_complex_rejected():
    with pytest.raises(ValueError):
        CellComplex(1, [(0, 0)], [[1, 1]]).validate()
