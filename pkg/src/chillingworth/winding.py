"""Winding numbers on S_{g,1} and the Chillingworth class they define.

The vector field X is the pullback of a constant direction under a planar
immersion of the ribbon surface: the vertex disk sits in the plane with
its stubs at given angles, and each band is an immersed strip that may
curl a whole number of extra times.  A simple curve is drawn tautly
(straight chords in the disk), so its turning number relative to X is the
sum of the chord and band rotations, all in exact fractions of a turn.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Sequence

from . import freegroup as fg
from .homology import CohomologyClass
from .mapping import surface
from .ribbon import IN, OUT, NotSimpleError, StrandLayout, arr, dep, stub


class InadmissibleCurve(ValueError):
    pass


def _half_open(t: Fraction) -> Fraction:
    """Representative of t mod 1 in (-1/2, 1/2]."""
    r = t - (t.numerator // t.denominator)
    return r - 1 if r > Fraction(1, 2) else r


@dataclass(frozen=True)
class PlanarImmersion:
    """Stub angles (fractions of a turn, by stub id) and extra band curls."""
    genus: int
    angles: tuple
    band_turns: tuple
    name: str = "custom"

    def __post_init__(self):
        s = surface(self.genus)
        if len(self.angles) != s.n_stubs or len(self.band_turns) != 2 * self.genus:
            raise ValueError("wrong number of angles or band turns")
        ordered = [Fraction(self.angles[st]) for st in s.order]
        if not all(0 <= a < 1 for a in ordered):
            raise ValueError("angles must lie in [0, 1)")
        if any(b <= a for a, b in zip(ordered, ordered[1:])):
            raise ValueError("angles must increase in the cyclic order of the stubs")

    @classmethod
    def default(cls, genus: int) -> "PlanarImmersion":
        """Equally spaced stubs, every band with no extra curl."""
        s = surface(genus)
        n = s.n_stubs
        angles = [Fraction(0)] * n
        for p, st in enumerate(s.order):
            angles[st] = Fraction(p, n)
        return cls(genus, tuple(angles), (0,) * (2 * genus), "default")

    @classmethod
    def curled(cls, genus: int) -> "PlanarImmersion":
        """Unequal spacing and nonzero curls on several bands."""
        s = surface(genus)
        n = s.n_stubs
        weights = [1 + (p * 7) % 3 for p in range(n)]
        total = sum(weights)
        angles = [Fraction(0)] * n
        acc = 0
        for p, st in enumerate(s.order):
            angles[st] = Fraction(acc, total)
            acc += weights[p]
        turns = tuple(((k * 5) % 3) - 1 for k in range(2 * genus))
        return cls(genus, tuple(angles), turns, "curled")

    def band_rotation(self, letter: int) -> Fraction:
        x = abs(letter)
        base = _half_open(self.angles[stub(x, IN)] + Fraction(1, 2) - self.angles[stub(x, OUT)])
        rot = base + self.band_turns[x - 1]
        return rot if letter > 0 else -rot

    def chord_rotation(self, s_in: int, s_out: int) -> Fraction:
        return _half_open(self.angles[s_out] - self.angles[s_in] - Fraction(1, 2))

    @cached_property
    def _tables(self):
        """Band and chord rotations in integer units of 1/unit turn."""
        g = self.genus
        rots = {}
        for x in range(1, 2 * g + 1):
            rots[("b", x)] = self.band_rotation(x)
        n = 4 * g
        for s_in in range(n):
            for s_out in range(n):
                rots[("c", s_in, s_out)] = self.chord_rotation(s_in, s_out)
        unit = 1
        for r in rots.values():
            unit = unit * r.denominator // _gcd(unit, r.denominator)
        band = [0] + [int(rots[("b", x)] * unit) for x in range(1, 2 * g + 1)]
        chord = [[int(rots[("c", i, o)] * unit) for o in range(n)] for i in range(n)]
        return unit, band, chord

    def to_json(self) -> dict:
        # angles in integer units of 1/(4g * k) turn
        den = 1
        for a in self.angles:
            den = den * Fraction(a).denominator // _gcd(den, Fraction(a).denominator)
        return {"g": self.genus, "unit": den,
                "angles": [int(Fraction(a) * den) for a in self.angles],
                "band_turns": list(self.band_turns), "name": self.name}

    @classmethod
    def from_json(cls, data) -> "PlanarImmersion":
        if isinstance(data, str):
            data = json.loads(data)
        unit = data.get("unit", 4 * data["g"])
        return cls(data["g"], tuple(Fraction(a, unit) for a in data["angles"]),
                   tuple(data["band_turns"]), data.get("name", "custom"))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def fatgraph_json(genus: int) -> dict:
    s = surface(genus)
    return {"g": genus, "cyclic_order": list(s.order)}


def admissible(word: Sequence[int], genus: int) -> tuple:
    """Cyclically reduced form of a simple, nontrivial word, else raise."""
    return _admissible(fg.cyclic_reduce(word), genus)


@lru_cache(maxsize=4096)
def _admissible(w: tuple, genus: int) -> tuple:
    if not w:
        raise InadmissibleCurve("trivial word has no winding number")
    try:
        ok = StrandLayout(surface(genus), [w]).is_simple(0)
    except NotSimpleError as err:
        raise InadmissibleCurve(str(err)) from None
    if not ok:
        raise InadmissibleCurve(f"{fg.format_word(w)} has no embedded taut representative")
    return w


def turning(word: Sequence[int], imm: PlanarImmersion) -> Fraction:
    """Total turning, in turns, of the taut drawing of a cyclic word."""
    w = tuple(word)
    unit, band, chord = imm._tables
    total = 0
    for k, letter in enumerate(w):
        nxt = w[(k + 1) % len(w)]
        total += (band[letter] if letter > 0 else -band[-letter]) + chord[arr(letter)][dep(nxt)]
    return Fraction(total, unit)


def winding_number(word: Sequence[int], imm: PlanarImmersion) -> int:
    w = admissible(word, imm.genus)
    t = turning(w, imm)
    if t.denominator != 1:
        raise AssertionError(f"turning {t} of a closed curve is not whole")
    return int(t)


def boundary_winding(imm: PlanarImmersion) -> int:
    return winding_number(fg.boundary_word(imm.genus), imm)


# Fixed once: the sign relating winding differences to the Chillingworth
# class, pinned by the genus-1 bounding pair (see theorem.CALIBRATION).
CHILLINGWORTH_SIGN = 1


def chillingworth_eval(f, gamma: Sequence[int], imm: PlanarImmersion,
                       sign: int = CHILLINGWORTH_SIGN) -> int:
    """sign * (w(f gamma) - w(gamma)); f is anything with ``on_curve``."""
    if getattr(f, "genus", imm.genus) != imm.genus:
        raise ValueError("genus mismatch")
    g0 = admissible(gamma, imm.genus)
    g1 = admissible(f.on_curve(g0), imm.genus)
    return sign * (winding_number(g1, imm) - winding_number(g0, imm))


def homology_dependence_check(f, gamma1, gamma2, imm: PlanarImmersion) -> bool:
    g = imm.genus
    if fg.abelianize(gamma1, g) != fg.abelianize(gamma2, g):
        raise ValueError("curves are not homologous")
    return chillingworth_eval(f, gamma1, imm) == chillingworth_eval(f, gamma2, imm)


def basis_curve(genus: int, idx: int) -> tuple:
    return (fg.generator_for_index(idx, genus),)


def chillingworth_class(f, imm: PlanarImmersion) -> CohomologyClass:
    g = imm.genus
    return CohomologyClass([chillingworth_eval(f, basis_curve(g, i), imm) for i in range(2 * g)])


def closed_surface_reduce(e: CohomologyClass, genus: int) -> CohomologyClass:
    if e.modulus:
        raise ValueError("expected an exact (unreduced) class")
    return CohomologyClass(e.dual_coords, 2 * genus - 2)
