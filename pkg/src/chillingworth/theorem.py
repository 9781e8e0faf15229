"""Three independent evaluations of the Chillingworth class on Torelli words.

For each Torelli word tau and basis class h we compare

* ``2 * phi_eval(tau, h)``, the doubled signed stable length,
* the winding difference ``e(tau)[h]`` on every shipped immersion,
* the contraction of the Johnson image, paired with h.

On closed surfaces all three are compared modulo 2g - 2 (phi itself is only
defined mod g - 1, and doubling is well defined on that quotient).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .homology import HomologyClass, SurfaceSpec, chillingworth_from_johnson
from .torelli import BoundingPairSpec, Catalog, TorelliWord, build_catalog, phi_eval, \
    theorem_generators
from .winding import PlanarImmersion, basis_curve, chillingworth_eval

CALIBRATION = ("bp:a=-β1,k=1", 0)   # generator name, basis index of alpha_1


@dataclass(frozen=True)
class TheoremRow:
    word: TorelliWord
    h_index: int
    phi2: int
    windings: tuple       # one value per immersion
    contraction: int
    modulus: int
    calibration: bool = False

    @property
    def agrees(self) -> bool:
        m = self.modulus
        vals = [self.phi2, self.contraction, *self.windings]
        if m:
            vals = [v % m for v in vals]
        return len(set(vals)) == 1

    def to_json(self) -> dict:
        return {"word": self.word.to_json(), "h": self.h_index, "two_phi": self.phi2,
                "winding": list(self.windings), "contraction": self.contraction,
                "modulus": self.modulus, "calibration": self.calibration,
                "agrees": self.agrees}


def reduced_words(gens: Sequence, max_len: int) -> list[TorelliWord]:
    """All freely reduced words of length <= max_len, shortest first."""
    letters = [(x, e) for x in gens for e in (1, -1)]
    out, frontier = [()], [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x, e in letters:
                if w and w[-1][0] is x and w[-1][1] == -e:
                    continue
                nxt.append(w + ((x, e),))
        out += nxt
        frontier = nxt
    return [TorelliWord(w) for w in out]


def is_calibration(word: TorelliWord, h_index: int) -> bool:
    if len(word) != 1 or h_index != CALIBRATION[1]:
        return False
    (gen, e), = word.factors
    return e == 1 and isinstance(gen, BoundingPairSpec) and gen.name == CALIBRATION[0]


def evaluate(word: TorelliWord, h_index: int, spec: SurfaceSpec,
             immersions: Sequence[PlanarImmersion]) -> TheoremRow:
    g = spec.genus
    h = HomologyClass.basis(g, h_index)
    phi = phi_eval(word, h, spec)
    gamma = basis_curve(g, h_index)
    # the winding side is computed on S_{g,1}; capping reduces it mod 2g-2
    wind = tuple(chillingworth_eval(word, gamma, imm) for imm in immersions)
    contr = chillingworth_from_johnson(word.bp_factors(), spec).evaluate(h)
    return TheoremRow(word, h_index, 2 * phi, wind, contr, spec.chillingworth_modulus(),
                      is_calibration(word, h_index))


def theorem_suite(spec: SurfaceSpec, max_len: int = 4, catalog: Catalog | None = None,
                  immersions: Sequence[PlanarImmersion] | None = None) -> list[TheoremRow]:
    g = spec.genus
    catalog = catalog or build_catalog(g)
    immersions = immersions or (PlanarImmersion.default(g), PlanarImmersion.curled(g))
    rows = []
    for w in reduced_words(theorem_generators(catalog), max_len):
        if not len(w):
            continue
        for i in range(2 * g):
            rows.append(evaluate(w, i, spec, immersions))
    return rows


def identity_row(spec: SurfaceSpec, immersions=None) -> TheoremRow:
    g = spec.genus
    immersions = immersions or (PlanarImmersion.default(g),)
    return evaluate(TorelliWord(), 0, spec, immersions)
