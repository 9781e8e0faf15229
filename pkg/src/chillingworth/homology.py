"""Exact arithmetic on H_1 of S_g / S_{g,1}.

Basis order is (alpha_1..alpha_g, beta_1..beta_g) everywhere, with
i(alpha_i, beta_i) = +1 and every other basis pairing zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class SurfaceSpec:
    genus: int
    bordered: bool = True

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 3:
            raise ValueError(f"genus must be an integer >= 3, got {self.genus!r}")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def modulus(self) -> int:
        """0 for S_{g,1} (exact integers), g-1 for the closed surface."""
        return 0 if self.bordered else self.genus - 1

    def chillingworth_modulus(self) -> int:
        return 0 if self.bordered else 2 * self.genus - 2

    @classmethod
    def parse(cls, text: str) -> "SurfaceSpec":
        """Parse e.g. ``"g=3,bordered"`` or ``"g=4,closed"``."""
        genus, bordered = None, True
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            if part.startswith("g="):
                genus = int(part[2:])
            elif part == "bordered":
                bordered = True
            elif part == "closed":
                bordered = False
            else:
                raise ValueError(f"unknown surface option {part!r}")
        if genus is None:
            raise ValueError("surface spec needs g=<genus>")
        return cls(genus, bordered)

    def __str__(self):
        return f"g={self.genus},{'bordered' if self.bordered else 'closed'}"


class HomologyClass:
    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[int]):
        self.coords = tuple(int(c) for c in coords)
        if len(self.coords) % 2:
            raise ValueError("homology vector must have even length 2g")

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    @classmethod
    def zero(cls, genus: int) -> "HomologyClass":
        return cls([0] * 2 * genus)

    @classmethod
    def basis(cls, genus: int, idx: int) -> "HomologyClass":
        v = [0] * 2 * genus
        v[idx] = 1
        return cls(v)

    @classmethod
    def alpha(cls, genus: int, i: int) -> "HomologyClass":
        return cls.basis(genus, i - 1)

    @classmethod
    def beta(cls, genus: int, i: int) -> "HomologyClass":
        return cls.basis(genus, genus + i - 1)

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise ValueError("homology classes live on surfaces of different genus")

    def __add__(self, other):
        self._check(other)
        return HomologyClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HomologyClass(-a for a in self.coords)

    def __mul__(self, k: int):
        return HomologyClass(k * a for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HomologyClass) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"HomologyClass({list(self.coords)})"

    def is_primitive(self) -> bool:
        return is_primitive(self)

    def to_json(self) -> list[int]:
        return list(self.coords)


def intersection_pairing(x: HomologyClass, y: HomologyClass) -> int:
    x._check(y)
    g = x.genus
    return sum(x.coords[i] * y.coords[g + i] - x.coords[g + i] * y.coords[i]
               for i in range(g))


def is_primitive(h: HomologyClass) -> bool:
    return math.gcd(*h.coords) == 1 if h.coords else False


def content(h: HomologyClass) -> int:
    """Largest lambda with h = lambda * (primitive class); 0 for h = 0."""
    return math.gcd(*h.coords)


def symplectic_matrix_ok(images: Sequence[HomologyClass]) -> bool:
    """Whether the linear map sending basis_i to images[i] preserves i(,)."""
    g = len(images) // 2
    for i in range(2 * g):
        for j in range(2 * g):
            want = intersection_pairing(HomologyClass.basis(g, i), HomologyClass.basis(g, j))
            if intersection_pairing(images[i], images[j]) != want:
                return False
    return True


class TriWedge:
    """Element of the third exterior power, keyed by increasing index triples."""

    __slots__ = ("genus", "terms")

    def __init__(self, genus: int, terms: Mapping | None = None):
        self.genus = genus
        self.terms: dict[tuple[int, int, int], int] = {}
        for triple, coeff in (terms or {}).items():
            self._add(triple, coeff)

    def _add(self, triple, coeff):
        if coeff == 0:
            return
        if any(not 0 <= t < 2 * self.genus for t in triple):
            raise ValueError(f"index out of range in {triple}")
        if len(set(triple)) < 3:
            return
        sign = _perm_sign(triple)
        key = tuple(sorted(triple))
        c = self.terms.get(key, 0) + sign * coeff
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    @classmethod
    def wedge(cls, x: HomologyClass, y: HomologyClass, z: HomologyClass) -> "TriWedge":
        x._check(y)
        x._check(z)
        w = cls(x.genus)
        for i, a in enumerate(x.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if not b:
                    continue
                for k, c in enumerate(z.coords):
                    if c:
                        w._add((i, j, k), a * b * c)
        return w

    def __add__(self, other):
        out = TriWedge(self.genus, self.terms)
        for t, c in other.terms.items():
            out._add(t, c)
        return out

    def __mul__(self, k: int):
        return TriWedge(self.genus, {t: k * c for t, c in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, TriWedge) and self.genus == other.genus and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"TriWedge(g={self.genus}, {self.terms})"

    def to_json(self) -> list[dict]:
        return [{"triple": list(t), "coeff": c} for t, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, genus: int, data) -> "TriWedge":
        w = cls(genus)
        for item in data:
            w._add(tuple(item["triple"]), item["coeff"])
        return w


def _perm_sign(seq) -> int:
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


def contract(w: TriWedge) -> HomologyClass:
    """a^b^c -> 2[i(a,b)c + i(b,c)a + i(c,a)b], extended linearly."""
    g = w.genus
    out = HomologyClass.zero(g)
    e = lambda i: HomologyClass.basis(g, i)
    for (i, j, k), coeff in w.terms.items():
        a, b, c = e(i), e(j), e(k)
        term = (intersection_pairing(a, b) * c + intersection_pairing(b, c) * a
                + intersection_pairing(c, a) * b)
        out = out + (2 * coeff) * term
    return out


def johnson_bp(a: HomologyClass, span: Sequence[tuple[HomologyClass, HomologyClass]]) -> TriWedge:
    """[a] ^ sum x_i ^ y_i for a bounding pair with twisting class a."""
    if not span:
        raise ValueError("a bounding pair needs a nonempty symplectic span")
    w = TriWedge(a.genus)
    for x, y in span:
        w = w + TriWedge.wedge(a, x, y)
    return w


class CohomologyClass:
    """Integer cochain on H_1, optionally reduced modulo ``modulus``."""

    __slots__ = ("dual_coords", "modulus")

    def __init__(self, dual_coords: Iterable[int], modulus: int = 0):
        if modulus < 0:
            raise ValueError("modulus must be nonnegative")
        self.modulus = modulus
        d = [int(c) for c in dual_coords]
        self.dual_coords = tuple(c % modulus for c in d) if modulus else tuple(d)

    @property
    def genus(self) -> int:
        return len(self.dual_coords) // 2

    @classmethod
    def dual_of(cls, x: HomologyClass, modulus: int = 0) -> "CohomologyClass":
        """h -> i(x, h)."""
        g = x.genus
        return cls([intersection_pairing(x, HomologyClass.basis(g, i)) for i in range(2 * g)],
                   modulus)

    def evaluate(self, h: HomologyClass) -> int:
        if len(h.coords) != len(self.dual_coords):
            raise ValueError("dimension mismatch")
        v = sum(a * b for a, b in zip(self.dual_coords, h.coords))
        return v % self.modulus if self.modulus else v

    def reduce(self, modulus: int) -> "CohomologyClass":
        if self.modulus and modulus and self.modulus % modulus:
            raise ValueError(f"cannot reduce mod {self.modulus} class to mod {modulus}")
        return CohomologyClass(self.dual_coords, modulus)

    def __add__(self, other):
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        return CohomologyClass((a + b for a, b in zip(self.dual_coords, other.dual_coords)),
                               self.modulus)

    def __mul__(self, k: int):
        return CohomologyClass((k * a for a in self.dual_coords), self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass) or other.modulus != self.modulus:
            return False
        return self.dual_coords == other.dual_coords

    def __repr__(self):
        m = f", mod {self.modulus}" if self.modulus else ""
        return f"CohomologyClass({list(self.dual_coords)}{m})"

    def to_json(self) -> dict:
        return {"dual": list(self.dual_coords), "modulus": self.modulus}

    @classmethod
    def from_json(cls, data) -> "CohomologyClass":
        return cls(data["dual"], data.get("modulus", 0))


def chillingworth_from_johnson(bp_factors, spec: SurfaceSpec) -> CohomologyClass:
    """Chillingworth class as the dual of the contracted Johnson image.

    ``bp_factors`` is a list of ``(sign, a, span)`` bounding-pair data.
    """
    g = spec.genus
    total = HomologyClass.zero(g)
    for sign, a, span in bp_factors:
        if sign not in (1, -1):
            raise ValueError("factor sign must be +1 or -1")
        total = total + sign * contract(johnson_bp(a, span))
    return CohomologyClass.dual_of(total, spec.chillingworth_modulus())
