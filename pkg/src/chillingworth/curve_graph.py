"""The homological curve graph C(S; h) with signed edges.

Vertices are simple closed curves in a fixed class h, stored as cyclic
words in pi_1(S_{g,1}).  Two vertices span an edge for each genus-1 piece of
the complement of their union whose boundary is their difference; the edge
v -> w is positive when the piece lies to the left of w (its oriented
boundary is w - v) and negative when it lies to the left of v.

Every geometric question is answered on a drawing: the curves are laid out
tautly together on the ribbon surface, crossings become vertices, and the
pieces are unions of faces of the resulting cell complex.  The closed
surface is the same drawing with a cap glued onto the boundary.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import freegroup as fg
from .drawing import Drawing, draw
from .euler import ConstructibleFunction, TameSet, cell_key, euler_char, signed_genus
from .homology import HomologyClass, is_primitive
from .mapping import surface
from .ribbon import NotSimpleError, StrandLayout


@dataclass(frozen=True, order=True)
class CurveVertex:
    genus: int
    word: tuple
    closed: bool = False

    @classmethod
    def admit(cls, genus: int, word: Sequence[int], h: HomologyClass,
              closed: bool = False) -> "CurveVertex":
        """Vertex for ``word`` in the graph of class h, or ValueError."""
        w = fg.cyclic_reduce(word)
        if not w:
            raise ValueError("trivial word is not a curve")
        if max(abs(x) for x in w) > 2 * genus:
            raise ValueError("letter out of range for this genus")
        if not is_primitive(h):
            raise ValueError(f"graph class {h} is not primitive")
        if HomologyClass(fg.abelianize(w, genus)) != h:
            raise ValueError(f"{fg.format_word(w)} is not in class {h}")
        bd = fg.cyclic_normal_form(fg.boundary_word(genus))
        if fg.cyclic_normal_form(w) in (bd, fg.cyclic_normal_form(fg.inverse(bd))):
            raise ValueError("curve is parallel to the boundary")
        try:
            ok = StrandLayout(surface(genus), [w]).is_simple(0)
        except NotSimpleError:
            ok = False
        if not ok:
            raise ValueError(f"{fg.format_word(w)} has no embedded representative")
        return cls(genus, fg.cyclic_normal_form(w), closed)

    @property
    def homology(self) -> HomologyClass:
        return HomologyClass(fg.abelianize(self.word, self.genus))

    def cycle(self) -> list[int]:
        """Directed edge-id cycle of this curve on its own drawing."""
        d = draw(StrandLayout(surface(self.genus), [self.word]), self.closed)
        return d.cycles[0]

    def label(self) -> str:
        return fg.format_word(self.word)

    def to_json(self) -> dict:
        return {"word": self.label(), "cycle": self.cycle()}

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class GraphEdge:
    source: CurveVertex
    target: CurveVertex
    sign: int
    side: int            # +1: piece left of target; -1: piece left of source
    subsurface: TameSet = field(compare=False, repr=False)
    piece_id: int = 0    # smallest face id of the piece in the pair drawing

    def reversed(self) -> "GraphEdge":
        return GraphEdge(self.target, self.source, -self.sign, -self.side,
                         self.subsurface, self.piece_id)

    def to_json(self, ids: dict | None = None) -> dict:
        ids = ids or {}
        return {"src": ids.get(self.source, self.source.label()),
                "dst": ids.get(self.target, self.target.label()),
                "cells": sorted(cell_key(c) for c in self.subsurface.cells),
                "sign": self.sign}


@dataclass(frozen=True)
class GraphPath:
    steps: tuple = ()        # ((GraphEdge, direction), ...)
    start: CurveVertex | None = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        here = self.start
        for e, d in self.steps:
            if d not in (1, -1):
                raise ValueError("direction must be +1 or -1")
            src, dst = (e.source, e.target) if d == 1 else (e.target, e.source)
            if here is not None and src != here:
                raise ValueError("consecutive path steps do not share a vertex")
            here = dst
        if self.start is None and self.steps:
            e, d = self.steps[0]
            object.__setattr__(self, "start", e.source if d == 1 else e.target)

    @property
    def end(self) -> CurveVertex | None:
        if not self.steps:
            return self.start
        e, d = self.steps[-1]
        return e.target if d == 1 else e.source

    def vertices(self) -> list[CurveVertex]:
        out = [self.start] if self.start is not None else []
        for e, d in self.steps:
            out.append(e.target if d == 1 else e.source)
        return out

    def reverse(self) -> "GraphPath":
        return GraphPath(tuple((e, -d) for e, d in reversed(self.steps)), self.end)

    def __add__(self, other: "GraphPath") -> "GraphPath":
        if self.end is not None and other.start is not None and self.end != other.start:
            raise ValueError("paths do not meet")
        return GraphPath(self.steps + other.steps, self.start or other.start)

    def __len__(self):
        return len(self.steps)

    def to_json(self, edge_ids: dict) -> list[dict]:
        """Steps as ids into a list of canonical (source < target) edges."""
        out = []
        for e, d in self.steps:
            if e.target < e.source:
                e, d = e.reversed(), -d
            out.append({"edge": edge_ids[edge_key(e)], "dir": d})
        return out


def edge_key(e: "GraphEdge") -> tuple:
    return (e.source, e.target, e.side)


# -- edges -----------------------------------------------------------------

def _closed_s3_rule(v1: CurveVertex, v2: CurveVertex) -> bool:
    return v1.closed and v1.genus == 3


@lru_cache(maxsize=65536)
def _pair_pieces(v1: CurveVertex, v2: CurveVertex) -> tuple:
    """Genus-1 pieces between two vertices as (side, piece_id, cells)."""
    if v1 == v2 or v1.genus != v2.genus or v1.closed != v2.closed:
        return ()
    try:
        layout = StrandLayout(surface(v1.genus), [v1.word, v2.word])
    except NotSimpleError:
        return ()
    if not layout.disjoint(0, 1):
        return ()
    d = draw(layout, v1.closed)
    return tuple((side, min(comp), interior)
                 for side, comp, interior in _genus_one_pieces(d, 0, 1))


def _genus_one_pieces(d: Drawing, i: int, j: int):
    """Pieces of the complement of curves i, j bounded by j - i or i - j."""
    left_i, right_i = d.left_faces(i), d.right_faces(i)
    left_j, right_j = d.left_faces(j), d.right_faces(j)
    for comp in d.components([i, j]):
        if d.touches_boundary(comp):
            continue
        if comp & left_j and comp & right_i and not comp & (right_j | left_i):
            side = 1
        elif comp & right_j and comp & left_i and not comp & (left_j | right_i):
            side = -1
        else:
            continue
        interior = d.interior(comp, [i, j])
        if euler_char(interior) == -2:
            yield side, comp, interior


def find_edges(v1: CurveVertex, v2: CurveVertex) -> list[GraphEdge]:
    """All edges v1 -> v2, one per genus-1 piece bounded by v2 - v1."""
    if v1 == v2:
        return []
    flip = v2 < v1
    a, b = (v2, v1) if flip else (v1, v2)
    pieces = _pair_pieces(a, b)
    edges = []
    if _closed_s3_rule(a, b):
        # both pieces have genus 1: the one holding the smallest cell is +1
        ordered = sorted(pieces, key=lambda p: p[1])
        signs = [1 if n == 0 else -1 for n in range(len(ordered))]
        pieces = ordered
    else:
        signs = [side for side, _, _ in pieces]
    for (side, pid, cells), sign in zip(pieces, signs):
        e = GraphEdge(a, b, sign, side, cells, pid)
        edges.append(e.reversed() if flip else e)
    return edges


def adjacent(v1: CurveVertex, v2: CurveVertex) -> bool:
    return bool(find_edges(v1, v2))


# -- paths -----------------------------------------------------------------

def signed_length(path: GraphPath) -> int:
    return sum(e.sign * d for e, d in path.steps)


@lru_cache(maxsize=1024)
def _common_drawing(words: tuple, genus: int, closed: bool) -> Drawing:
    return draw(StrandLayout(surface(genus), list(words)), closed)


def common_drawing(vertices: Iterable[CurveVertex]) -> tuple[Drawing, dict]:
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("need at least one vertex")
    d = _common_drawing(tuple(v.word for v in vs), vs[0].genus, vs[0].closed)
    return d, {v: i for i, v in enumerate(vs)}


def trace_preimage(path: GraphPath, drawing: tuple | None = None) -> ConstructibleFunction:
    """Sum over steps of sign * direction * (indicator of the piece interior)."""
    if not path.steps:
        return ConstructibleFunction()
    d, index = drawing or common_drawing(path.vertices())
    total = ConstructibleFunction()
    for e, direction in path.steps:
        i, j = index[e.source], index[e.target]
        found = [cells for side, comp, cells in _genus_one_pieces(d, i, j) if side == e.side]
        if len(found) != 1:
            raise RuntimeError("edge piece not found on the common drawing")
        total = total + found[0].indicator(e.sign * direction)
    return total


def verify_length_vs_integral(path: GraphPath) -> bool:
    return signed_length(path) == signed_genus(trace_preimage(path))


# -- search ------------------------------------------------------------------

class SearchExhausted(RuntimeError):
    """No path within the search radius (not a claim that none exists)."""


@dataclass
class CurveGraphBall:
    """An explicit finite set of vertices with all edges among them."""
    genus: int
    h: HomologyClass
    closed: bool = False
    vertices: list = field(default_factory=list)
    _adj: dict = field(default_factory=dict, repr=False)

    def add(self, v: CurveVertex) -> bool:
        if v in self._adj:
            return False
        self._adj[v] = None
        self.vertices.append(v)
        for u in self._adj:
            if self._adj[u] is not None:
                self._adj[u] = None       # recompute lazily
        return True

    @classmethod
    def from_orbit(cls, genus: int, h: HomologyClass, seeds, maps, radius: int,
                   closed: bool = False) -> "CurveGraphBall":
        """Images of the seeds under all words of length <= radius in ``maps``."""
        ball = cls(genus, h, closed)
        frontier = list(seeds)
        for v in frontier:
            ball.add(v)
        for _ in range(radius):
            nxt = []
            for v in frontier:
                for m in maps:
                    u = CurveVertex.admit(genus, m.on_curve(v.word), h, closed)
                    if ball.add(u):
                        nxt.append(u)
            frontier = nxt
        return ball

    def neighbours(self, v: CurveVertex) -> list[GraphEdge]:
        if self._adj.get(v) is None:
            self._adj[v] = [e for u in self.vertices for e in find_edges(v, u)]
        return self._adj[v]

    def edges(self) -> list[GraphEdge]:
        out = []
        for v in self.vertices:
            out += [e for e in self.neighbours(v) if e.source < e.target]
        return out

    def paths(self, v1: CurveVertex, v2: CurveVertex, max_len: int) -> list[GraphPath]:
        """Every path v1 -> v2 of length <= max_len (vertices may repeat)."""
        out = []

        def walk(here, steps):
            if here == v2:
                out.append(GraphPath(tuple(steps), v1))
            if len(steps) == max_len:
                return
            for e in self.neighbours(here):
                steps.append((e, 1))
                walk(e.target, steps)
                steps.pop()

        walk(v1, [])
        return out

    def edge_ids(self) -> dict:
        return {edge_key(e): i for i, e in enumerate(self.edges())}

    def to_json(self) -> dict:
        ids = {v: i for i, v in enumerate(self.vertices)}
        edges = self.edges()
        return {"genus": self.genus, "h": self.h.to_json(), "closed": self.closed,
                "vertices": [v.to_json() for v in self.vertices],
                "edges": [e.to_json(ids) for e in edges]}


def modulus(genus: int, closed: bool) -> int:
    return genus - 1 if closed else 0


def signed_distance(v1: CurveVertex, v2: CurveVertex, ball: CurveGraphBall,
                    search_radius: int) -> tuple[int, int, GraphPath]:
    """(d_s, modulus, witnessing path) via breadth-first search in the ball."""
    if v1 == v2:
        return 0, modulus(v1.genus, v1.closed), GraphPath((), v1)
    prev = {v1: None}
    queue = deque([(v1, 0)])
    while queue:
        here, depth = queue.popleft()
        if depth == search_radius:
            continue
        for e in ball.neighbours(here):
            if e.target in prev:
                continue
            prev[e.target] = (e, here)
            if e.target == v2:
                steps = []
                node = v2
                while prev[node] is not None:
                    edge, node = prev[node]
                    steps.append((edge, 1))
                path = GraphPath(tuple(reversed(steps)), v1)
                m = modulus(v1.genus, v1.closed)
                s = signed_length(path)
                return (s % m if m else s), m, path
            queue.append((e.target, depth + 1))
    raise SearchExhausted(f"no path from {v1} to {v2} within radius {search_radius}")


def vertex_from_json(data, genus: int, h: HomologyClass, closed: bool = False) -> CurveVertex:
    if isinstance(data, str):
        data = json.loads(data)
    word = data["word"] if isinstance(data, dict) else data
    return CurveVertex.admit(genus, fg.parse(word), h, closed)
