import pytest
from hypothesis import given, settings, strategies as st

from chillingworth import freegroup as fg
from chillingworth.torelli import TorelliWord, build_catalog, chain_curve, theorem_generators
from chillingworth.winding import (InadmissibleCurve, PlanarImmersion, boundary_winding,
                                   chillingworth_class, chillingworth_eval,
                                   homology_dependence_check, winding_number)

G = 3
CAT = build_catalog(G)
GENS = theorem_generators(CAT)
IMMS = [PlanarImmersion.default(G), PlanarImmersion.curled(G)]

torelli_words = st.lists(st.tuples(st.sampled_from(GENS), st.sampled_from([1, -1])),
                         max_size=4).map(lambda fs: TorelliWord(tuple(fs)))


@pytest.mark.parametrize("g", [3, 4, 5])
def test_boundary_winding(g):
    assert boundary_winding(PlanarImmersion.default(g)) == 1 - 2 * g
    assert boundary_winding(PlanarImmersion.curled(g)) == 1 - 2 * g


def test_non_simple_is_inadmissible():
    with pytest.raises(InadmissibleCurve):
        winding_number((1, 1), IMMS[0])
    with pytest.raises(InadmissibleCurve):
        winding_number((1, 2, 1, -2), IMMS[0])


@pytest.mark.parametrize("imm", IMMS, ids=lambda i: i.name)
def test_rotation_invariance(imm):
    for curve in [chain_curve(1), chain_curve(2), fg.boundary_word(G)]:
        vals = {winding_number(r, imm) for r in fg.rotations(curve)}
        assert len(vals) == 1


@pytest.mark.parametrize("imm", IMMS, ids=lambda i: i.name)
def test_reversal_negates(imm):
    for curve in [(1,), chain_curve(1), (3, 4, -3, -4)]:
        assert winding_number(fg.inverse(curve), imm) == -winding_number(curve, imm)


def test_immersion_validation():
    d = IMMS[0]
    with pytest.raises(ValueError):
        PlanarImmersion(G, d.angles[::-1], d.band_turns)
    assert PlanarImmersion.from_json(IMMS[1].to_json()) == IMMS[1]


def test_calibration_case():
    bp = CAT.bounding_pairs["bp:a=-β1,k=1"]
    assert chillingworth_eval(bp.realized, (1,), IMMS[0]) == 2


@given(torelli_words, torelli_words)
@settings(max_examples=40, deadline=None)
def test_chillingworth_additive(u, v):
    for imm in IMMS:
        assert chillingworth_class(u * v, imm) == \
            chillingworth_class(u, imm) + chillingworth_class(v, imm)


@given(torelli_words)
@settings(max_examples=30, deadline=None)
def test_homology_dependence(w):
    # alpha_1 and its image under a Torelli map are homologous simple curves
    other = CAT.bounding_pairs["bp:a=-β1,k=2"].realized.on_curve((1,))
    for imm in IMMS:
        assert homology_dependence_check(w, (1,), other, imm)


@given(torelli_words)
@settings(max_examples=30, deadline=None)
def test_immersion_independence(w):
    assert chillingworth_class(w, IMMS[0]) == chillingworth_class(w, IMMS[1])


def test_separating_twist_is_zero():
    for name in ("sep:s1", "sep:h2"):
        w = CAT.word(name)
        assert list(chillingworth_class(w, IMMS[0]).dual_coords) == [0] * 6
