"""Mapping classes of S_{g,1} as automorphisms of the free group pi_1.

The basepoint sits on the boundary, so a mapping class fixes the boundary
word W = prod [a_i, b_i] exactly.  Every MappingClass carries the images of
its inverse too, which is how automorphy is certified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import freegroup as fg
from .homology import HomologyClass, symplectic_matrix_ok
from .ribbon import RibbonSurface, twist_images


@lru_cache(maxsize=None)
def surface(genus: int) -> RibbonSurface:
    return RibbonSurface(genus)


def _apply(images, word):
    out = []
    for x in word:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else fg.inverse(img))
    return fg.reduce(out)


@dataclass(frozen=True)
class MappingClass:
    genus: int
    images: tuple
    inverse_images: tuple = field(repr=False)
    provenance: tuple = ()

    def __post_init__(self):
        if len(self.images) != 2 * self.genus or len(self.inverse_images) != 2 * self.genus:
            raise ValueError("need one image per generator")
        object.__setattr__(self, "images", tuple(tuple(w) for w in self.images))
        object.__setattr__(self, "inverse_images", tuple(tuple(w) for w in self.inverse_images))

    # -- constructors ----------------------------------------------------
    @classmethod
    def identity(cls, genus: int) -> "MappingClass":
        ids = tuple((x,) for x in range(1, 2 * genus + 1))
        return cls(genus, ids, ids, ())

    @classmethod
    def twist(cls, genus: int, curve: Sequence[int], name: str | None = None,
              power: int = 1) -> "MappingClass":
        """Dehn twist x -> x + i(c, x) c on homology (power=1), or its inverse."""
        s = surface(genus)
        name = name or fg.format_word(curve)
        fwd = twist_images(s, curve, power)
        back = twist_images(s, curve, -power)
        prov = ((name, power),)
        return cls(genus, tuple(fwd), tuple(back), prov)

    # -- group operations -----------------------------------------------
    def __call__(self, word: Sequence[int]) -> tuple:
        return _apply(self.images, word)

    def on_curve(self, word: Sequence[int]) -> tuple:
        """Image of a free homotopy class, as a cyclically reduced word."""
        return fg.cyclic_reduce(self(word))

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        """Composition: (f * g)(x) = f(g(x))."""
        if other.genus != self.genus:
            raise ValueError("genus mismatch")
        imgs = tuple(_apply(self.images, w) for w in other.images)
        inv = tuple(_apply(other.inverse_images, w) for w in self.inverse_images)
        return MappingClass(self.genus, imgs, inv, self.provenance + other.provenance)

    def inverse(self) -> "MappingClass":
        prov = tuple((n, -p) for n, p in reversed(self.provenance))
        return MappingClass(self.genus, self.inverse_images, self.images, prov)

    def __pow__(self, n: int) -> "MappingClass":
        if n < 0:
            return self.inverse() ** (-n)
        out = MappingClass.identity(self.genus)
        for _ in range(n):
            out = out * self
        return out

    def conjugate_by(self, f: "MappingClass") -> "MappingClass":
        return f * self * f.inverse()

    def same_action(self, other: "MappingClass") -> bool:
        return self.images == other.images

    def is_identity(self) -> bool:
        return all(w == (x,) for x, w in enumerate(self.images, start=1))

    # -- homology --------------------------------------------------------
    def on_homology(self, h: HomologyClass) -> HomologyClass:
        g = self.genus
        out = HomologyClass.zero(g)
        for idx, c in enumerate(h.coords):
            if c:
                img = self.images[fg.generator_for_index(idx, g) - 1]
                out = out + c * HomologyClass(fg.abelianize(img, g))
        return out

    def homology_images(self) -> list[HomologyClass]:
        return [self.on_homology(HomologyClass.basis(self.genus, i))
                for i in range(2 * self.genus)]

    def is_torelli(self) -> bool:
        return all(img == HomologyClass.basis(self.genus, i)
                   for i, img in enumerate(self.homology_images()))

    # -- validators ------------------------------------------------------
    def fixes_boundary(self) -> bool:
        w = fg.boundary_word(self.genus)
        return self(w) == w

    def is_symplectic(self) -> bool:
        return symplectic_matrix_ok(self.homology_images())

    def inverse_checks(self) -> bool:
        gens = [(x,) for x in range(1, 2 * self.genus + 1)]
        return all(_apply(self.inverse_images, img) == x for img, x in zip(self.images, gens)) \
            and all(_apply(self.images, img) == x for img, x in zip(self.inverse_images, gens))

    def provenance_str(self) -> str:
        if not self.provenance:
            return "id"
        return " ".join(n if p == 1 else f"{n}^-1" for n, p in self.provenance)

    def to_json(self) -> dict:
        return {"genus": self.genus,
                "images": [fg.format_word(w) for w in self.images],
                "inverse_images": [fg.format_word(w) for w in self.inverse_images],
                "provenance": [[n, p] for n, p in self.provenance]}

    @classmethod
    def from_json(cls, data) -> "MappingClass":
        return cls(data["genus"], tuple(fg.parse(s) for s in data["images"]),
                   tuple(fg.parse(s) for s in data["inverse_images"]),
                   tuple((n, p) for n, p in data.get("provenance", [])))


def braid_relation_holds(f: MappingClass, g: MappingClass) -> bool:
    return (f * g * f).same_action(g * f * g)


def commute(f: MappingClass, g: MappingClass) -> bool:
    return (f * g).same_action(g * f)
