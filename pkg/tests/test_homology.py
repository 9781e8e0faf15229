import pytest
from hypothesis import given, settings, strategies as st

from chillingworth import freegroup as fg
from chillingworth.homology import (CohomologyClass, HomologyClass, SurfaceSpec, TriWedge,
                                   contract, intersection_pairing, is_primitive, johnson_bp)

G = 3
letters = st.integers(1, 2 * G).flatmap(lambda i: st.sampled_from([i, -i]))
words = st.lists(letters, max_size=12)
classes = st.lists(st.integers(-4, 4), min_size=2 * G, max_size=2 * G).map(HomologyClass)


def test_boundary_word_g3():
    assert fg.boundary_word(3) == (1, 2, -1, -2, 3, 4, -3, -4, 5, 6, -5, -6)
    assert fg.abelianize(fg.boundary_word(3), 3) == [0] * 6


def test_parse_roundtrip():
    w = fg.parse("x1 X2 x3")
    assert w == (1, -2, 3)
    assert fg.parse(fg.format_word(w)) == w


@given(words)
def test_reduce_idempotent(w):
    r = fg.reduce(w)
    assert fg.reduce(r) == r
    assert fg.multiply(r, fg.inverse(r)) == ()


@given(words)
def test_cyclic_normal_form_rotation_invariant(w):
    c = fg.cyclic_reduce(fg.reduce(w))
    if not c:
        return
    nf = fg.cyclic_normal_form(c)
    for r in fg.rotations(c):
        assert fg.cyclic_normal_form(r) == nf


@given(words, words)
def test_abelianize_is_homomorphism(u, v):
    a = fg.abelianize(fg.multiply(u, v), G)
    assert a == [x + y for x, y in zip(fg.abelianize(u, G), fg.abelianize(v, G))]


def test_pairing_basis():
    a1, b1 = HomologyClass.alpha(G, 1), HomologyClass.beta(G, 1)
    a2 = HomologyClass.alpha(G, 2)
    assert intersection_pairing(a1, b1) == 1
    assert intersection_pairing(b1, a1) == -1
    assert intersection_pairing(a1, a2) == 0


@given(classes, classes)
def test_pairing_antisymmetric(x, y):
    assert intersection_pairing(x, y) == -intersection_pairing(y, x)


def test_primitive():
    assert is_primitive(HomologyClass([1, 0, 0, 0, 0, 0]))
    assert is_primitive(HomologyClass([2, 3, 0, 0, 0, 0]))
    assert not is_primitive(HomologyClass([2, 4, 0, 0, 0, 0]))
    assert not is_primitive(HomologyClass.zero(G))


def test_contraction_on_decomposable():
    a1, b1 = HomologyClass.alpha(G, 1), HomologyClass.beta(G, 1)
    a2 = HomologyClass.alpha(G, 2)
    # 2[î(a1,b1) a2 + î(b1,a2) a1 + î(a2,a1) b1] = 2 a2
    assert contract(TriWedge.wedge(a1, b1, a2)) == a2 * 2


@given(classes, classes, classes)
@settings(max_examples=50)
def test_wedge_alternating(x, y, z):
    assert TriWedge.wedge(x, y, z) == -TriWedge.wedge(y, x, z)
    assert not TriWedge.wedge(x, x, z)


@pytest.mark.parametrize("k", [1, 2])
def test_johnson_bp_contraction_pairs_to_2k(k):
    a = -HomologyClass.beta(G, 1)
    span = [(HomologyClass.alpha(G, j), HomologyClass.beta(G, j)) for j in range(2, 2 + k)]
    c = CohomologyClass.dual_of(contract(johnson_bp(a, span)))
    h = HomologyClass.alpha(G, 1)
    assert intersection_pairing(a, h) == 1
    assert c.evaluate(h) == 2 * k


def test_surface_spec():
    s = SurfaceSpec.parse("g=4,closed")
    assert (s.genus, s.bordered, s.modulus(), s.chillingworth_modulus()) == (4, False, 3, 6)
    assert SurfaceSpec.parse("g=3,bordered").modulus() == 0
    with pytest.raises(ValueError):
        SurfaceSpec.parse("g=2")


def test_cohomology_reduce():
    c = CohomologyClass([5, -1, 0, 0, 0, 0]).reduce(4)
    assert c == CohomologyClass([1, 3, 0, 0, 0, 0], 4)
