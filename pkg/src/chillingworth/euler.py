"""Cell complexes, tame sets, constructible functions and Euler integration.

Cells are addressed by ids ``("v", i)``, ``("e", i)``, ``("f", i)``.  Faces
list their boundary as signed 1-based edge ids: ``+k`` traverses edge
``k-1`` from its first to its second endpoint, ``-k`` the other way.

The Euler characteristic used throughout is the cell-alternating sum over
*open* cells (compactly supported), so an open edge has chi = -1 and the
integral of a constructible function is sum f(cell) * (-1)**dim(cell).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

DIM = {"v": 0, "e": 1, "f": 2}


def cell_key(cell) -> str:
    return f"{cell[0]}/{cell[1]}"


def parse_cell_key(key: str):
    kind, idx = key.split("/")
    if kind not in DIM:
        raise ValueError(f"bad cell key {key!r}")
    return (kind, int(idx))


@dataclass(frozen=True, eq=False)
class CellComplex:
    n_vertices: int
    edges: tuple
    faces: tuple
    boundary: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        if self.boundary is not None:
            object.__setattr__(self, "boundary", tuple(self.boundary))

    # -- structure -------------------------------------------------------
    def cells(self):
        yield from (("v", i) for i in range(self.n_vertices))
        yield from (("e", i) for i in range(len(self.edges)))
        yield from (("f", i) for i in range(len(self.faces)))

    def endpoints(self, signed_edge: int) -> tuple[int, int]:
        u, v = self.edges[abs(signed_edge) - 1]
        return (u, v) if signed_edge > 0 else (v, u)

    @cached_property
    def edge_faces(self) -> dict[int, list[int]]:
        """edge index -> faces incident to it (with multiplicity)."""
        inc: dict[int, list[int]] = {i: [] for i in range(len(self.edges))}
        for fi, loop in enumerate(self.faces):
            for se in loop:
                inc[abs(se) - 1].append(fi)
        return inc

    @cached_property
    def vertex_faces(self) -> dict[int, set[int]]:
        inc: dict[int, set[int]] = {i: set() for i in range(self.n_vertices)}
        for fi, loop in enumerate(self.faces):
            for se in loop:
                for x in self.endpoints(se):
                    inc[x].add(fi)
        return inc

    def euler_characteristic(self) -> int:
        return self.n_vertices - len(self.edges) + len(self.faces)

    def validate(self):
        """Raise ValueError unless this is a coherently oriented surface."""
        for fi, loop in enumerate(self.faces):
            if not loop:
                raise ValueError(f"face {fi} has empty boundary")
            for k, se in enumerate(loop):
                if se == 0 or abs(se) > len(self.edges):
                    raise ValueError(f"face {fi}: bad edge id {se}")
                nxt = loop[(k + 1) % len(loop)]
                if self.endpoints(se)[1] != self.endpoints(nxt)[0]:
                    raise ValueError(f"face {fi} boundary is not a closed loop")
        uses: dict[int, list[int]] = {i: [] for i in range(len(self.edges))}
        for loop in self.faces:
            for se in loop:
                uses[abs(se) - 1].append(1 if se > 0 else -1)
        on_bdry: dict[int, int] = {}
        for se in self.boundary or ():
            on_bdry[abs(se) - 1] = on_bdry.get(abs(se) - 1, 0) + 1
        for e, signs in uses.items():
            want = 2 - on_bdry.get(e, 0)
            if len(signs) != want:
                raise ValueError(f"edge {e} used {len(signs)} times, expected {want}")
            if want == 2 and sorted(signs) != [-1, 1]:
                raise ValueError(f"edge {e}: incoherent face orientations")
        if self.boundary:
            for k, se in enumerate(self.boundary):
                nxt = self.boundary[(k + 1) % len(self.boundary)]
                if self.endpoints(se)[1] != self.endpoints(nxt)[0]:
                    raise ValueError("boundary is not a closed loop")
        return self

    # -- serialisation ---------------------------------------------------
    def to_json(self) -> dict:
        d = {"vertices": self.n_vertices, "edges": [list(e) for e in self.edges],
             "faces": [list(f) for f in self.faces]}
        if self.boundary is not None:
            d["boundary"] = list(self.boundary)
        return d

    @classmethod
    def from_json(cls, data: Mapping | str) -> "CellComplex":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["vertices"], data["edges"], data["faces"], data.get("boundary"))


@dataclass(frozen=True)
class TameSet:
    """A finite union of open cells of a fixed complex."""
    complex: CellComplex = field(repr=False, compare=False)
    cells: frozenset

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))

    @classmethod
    def everything(cls, cx: CellComplex) -> "TameSet":
        return cls(cx, cx.cells())

    def __or__(self, other):
        return TameSet(self.complex, self.cells | other.cells)

    def __and__(self, other):
        return TameSet(self.complex, self.cells & other.cells)

    def __sub__(self, other):
        return TameSet(self.complex, self.cells - other.cells)

    def complement(self) -> "TameSet":
        return TameSet(self.complex, frozenset(self.complex.cells()) - self.cells)

    def indicator(self, weight: int = 1) -> "ConstructibleFunction":
        return ConstructibleFunction({c: weight for c in self.cells})


class ConstructibleFunction:
    """Integer-valued function on open cells; missing cells are zero."""

    def __init__(self, values: Mapping | None = None):
        self.values = {c: int(v) for c, v in (values or {}).items() if v}

    def __call__(self, cell) -> int:
        return self.values.get(cell, 0)

    def __add__(self, other):
        out = dict(self.values)
        for c, v in other.values.items():
            out[c] = out.get(c, 0) + v
        return ConstructibleFunction(out)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return ConstructibleFunction({c: k * v for c, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ConstructibleFunction) and self.values == other.values

    def __repr__(self):
        return f"ConstructibleFunction({len(self.values)} cells)"

    def support(self) -> frozenset:
        return frozenset(self.values)

    def level_sets(self) -> dict[int, frozenset]:
        out: dict[int, set] = {}
        for c, v in self.values.items():
            out.setdefault(v, set()).add(c)
        return {v: frozenset(s) for v, s in out.items()}

    def to_json(self) -> dict:
        return {cell_key(c): v for c, v in sorted(self.values.items())}

    @classmethod
    def from_json(cls, data: Mapping) -> "ConstructibleFunction":
        return cls({parse_cell_key(k): v for k, v in data.items()})

    @classmethod
    def from_indicators(cls, terms: Iterable[tuple[int, TameSet]]):
        f = cls()
        for lam, u in terms:
            f = f + u.indicator(lam)
        return f


def euler_char(u: TameSet | Iterable) -> int:
    cells = u.cells if isinstance(u, TameSet) else u
    return sum((-1) ** DIM[c[0]] for c in cells)


def euler_integral(f: ConstructibleFunction) -> int:
    return sum(v * (-1) ** DIM[c[0]] for c, v in f.values.items())


def integral_of_sum(terms: Iterable[tuple[int, TameSet]]) -> int:
    """sum lambda * chi(U), the defining formula for a written-out sum."""
    return sum(lam * euler_char(u) for lam, u in terms)


def signed_genus(p: ConstructibleFunction) -> int:
    total = euler_integral(p)
    if total % 2:
        raise ValueError(
            f"Euler integral {total} is odd; the pre-image function is malformed")
    return -total // 2


# -- canonical models ----------------------------------------------------

def polygon_surface(genus: int, bordered: bool) -> CellComplex:
    """One 4g-gon with sides glued by prod [a_i, b_i].

    Bordered: a second vertex on a boundary loop, joined to the polygon
    vertex by a collar edge inserted into the same face.
    """
    edges = [(0, 0)] * (2 * genus)
    loop = []
    for i in range(genus):
        a, b = 2 * i + 1, 2 * i + 2
        loop += [a, b, -a, -b]
    if not bordered:
        return CellComplex(1, edges, [loop]).validate()
    edges = edges + [(0, 1), (1, 1)]
    collar, bd = 2 * genus + 1, 2 * genus + 2
    # face runs the polygon, out along the collar, around the hole, back
    face = loop + [collar, -bd, -collar]
    return CellComplex(2, edges, [face], boundary=[bd]).validate()


def refine(cx: CellComplex, f: ConstructibleFunction | None = None,
           ) -> tuple[CellComplex, ConstructibleFunction, dict]:
    """Barycentric-style subdivision.

    Returns the new complex, the pulled-back function, and ``parent``
    mapping each new cell to the old open cell containing it.  Loops and
    repeated boundary edges are handled per occurrence.
    """
    f = f or ConstructibleFunction()
    nv, ne = cx.n_vertices, len(cx.edges)
    mid = lambda e: nv + e
    center = lambda fi: nv + ne + fi
    parent: dict = {}
    for i in range(nv):
        parent[("v", i)] = ("v", i)
    for e in range(ne):
        parent[("v", mid(e))] = ("e", e)
    for fi in range(len(cx.faces)):
        parent[("v", center(fi))] = ("f", fi)

    new_edges: list[tuple[int, int]] = []
    halves = {}
    for e, (u, v) in enumerate(cx.edges):
        halves[e] = (len(new_edges) + 1, len(new_edges) + 2)
        new_edges += [(u, mid(e)), (mid(e), v)]
        parent[("e", halves[e][0] - 1)] = ("e", e)
        parent[("e", halves[e][1] - 1)] = ("e", e)

    def half_path(se):
        # signed new edges for traversing old signed edge se, and its midpoint
        h1, h2 = halves[abs(se) - 1]
        return (h1, h2) if se > 0 else (-h2, -h1)

    new_faces = []
    for fi, loop in enumerate(cx.faces):
        n = len(loop)
        corner_spokes, mid_spokes = [], []
        for k, se in enumerate(loop):
            start = cx.endpoints(se)[0]
            new_edges.append((center(fi), start))
            corner_spokes.append(len(new_edges))
            parent[("e", len(new_edges) - 1)] = ("f", fi)
            new_edges.append((center(fi), mid(abs(se) - 1)))
            mid_spokes.append(len(new_edges))
            parent[("e", len(new_edges) - 1)] = ("f", fi)
        for k, se in enumerate(loop):
            first, second = half_path(se)
            nxt_corner = corner_spokes[(k + 1) % n]
            new_faces.append([corner_spokes[k], first, -mid_spokes[k]])
            parent[("f", len(new_faces) - 1)] = ("f", fi)
            new_faces.append([mid_spokes[k], second, -nxt_corner])
            parent[("f", len(new_faces) - 1)] = ("f", fi)

    boundary = None
    if cx.boundary is not None:
        boundary = [h for se in cx.boundary for h in half_path(se)]
    new = CellComplex(nv + ne + len(cx.faces), new_edges, new_faces, boundary)
    g = ConstructibleFunction({c: f(p) for c, p in parent.items() if f(p)})
    return new, g, parent


def refine_set(u: TameSet, new: CellComplex, parent: Mapping) -> TameSet:
    return TameSet(new, {c for c, p in parent.items() if p in u.cells})
