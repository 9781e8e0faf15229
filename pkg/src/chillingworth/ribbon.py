"""One-vertex ribbon graph model of S_{g,1} and taut drawings of curves on it.

The vertex is a disk; generator x_k is a band leaving the disk at stub
``(k, OUT)`` and returning at stub ``(k, IN)``.  Stubs sit around the disk
counterclockwise in the order a1+ b1- a1- b1+ a2+ ... so that walking the
boundary with the disk on the left reads prod [a_i, b_i].

The surface orientation is the *mirror* of the drawing plane: with it,
alpha_i . beta_i = +1.  Everything planar below (ccw order, chord
crossings, turning) is measured in the drawing plane.

A cyclically reduced word is drawn tautly: its passages through each band
are stacked by comparing their forward continuations, and every visit to
the vertex becomes a straight chord between slots on the disk boundary.  A
word is simple exactly when its chords are pairwise non-crossing.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import freegroup as fg

OUT, IN = 0, 1


class NotSimpleError(ValueError):
    pass


def stub(letter_index: int, side: int) -> int:
    return 2 * (letter_index - 1) + side


def dep(letter: int) -> int:
    return stub(abs(letter), OUT if letter > 0 else IN)


def arr(letter: int) -> int:
    return stub(abs(letter), IN if letter > 0 else OUT)


def letter_departing(s: int) -> int:
    k = s // 2 + 1
    return k if s % 2 == OUT else -k


class RibbonSurface:
    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError("genus must be positive")
        self.genus = genus
        order = []
        for i in range(1, genus + 1):
            a, b = 2 * i - 1, 2 * i
            order += [stub(a, OUT), stub(b, IN), stub(a, IN), stub(b, OUT)]
        self.order = tuple(order)
        self.pos = {s: p for p, s in enumerate(order)}
        self.n_stubs = len(order)

    def ccw_next(self, s: int) -> int:
        return self.order[(self.pos[s] + 1) % self.n_stubs]

    def ccw_distance(self, s: int, t: int) -> int:
        return (self.pos[t] - self.pos[s]) % self.n_stubs

    def boundary_cycles(self) -> list[tuple]:
        seen, cycles = set(), []
        for s0 in self.order:
            if s0 in seen:
                continue
            cyc, s = [], s0
            while s not in seen:
                seen.add(s)
                letter = letter_departing(self.ccw_next(s))
                cyc.append(letter)
                s = arr(letter)
            cycles.append(tuple(cyc))
        return cycles

    def boundary_word(self) -> tuple:
        """The boundary read from the basepoint gap (just before a1+)."""
        (cyc,) = self.boundary_cycles()
        k = cyc.index(1)
        return cyc[k:] + cyc[:k]


def _forward(word: Sequence[int], k: int):
    """Letters after occurrence k, read so that occurrence k is positive."""
    n = len(word)
    if word[k] > 0:
        i = k
        while True:
            i = (i + 1) % n
            yield word[i]
    else:
        i = k
        while True:
            i = (i - 1) % n
            yield -word[i]


class StrandLayout:
    """Simultaneous taut drawing of several cyclically reduced words.

    Circle positions are integers: stub p owns [p * width, (p + 1) * width),
    with its corners at the two ends and strand slots in between.
    """

    def __init__(self, surface: RibbonSurface, curves: Sequence[Sequence[int]]):
        self.surface = surface
        self.curves = [tuple(c) for c in curves]
        for c in self.curves:
            if not c or fg.cyclic_reduce(c) != c:
                raise ValueError(f"curve {fg.format_word(c)!r} is not cyclically reduced")
            if max(abs(x) for x in c) > 2 * surface.genus:
                raise ValueError("letter out of range for this genus")
        self._turns: dict = {}
        self._rank: dict[tuple[int, int], int] = {}
        self.band_size: dict[int, int] = {}
        by_band: dict[int, list] = {x: [] for x in range(1, 2 * surface.genus + 1)}
        for ci, c in enumerate(self.curves):
            for k, l in enumerate(c):
                by_band[abs(l)].append((ci, k))
        for x, occ in by_band.items():
            occ = _sort_occurrences(self, occ, x)
            self.band_size[x] = len(occ)
            for r, o in enumerate(occ):
                self._rank[o] = r
        self.width = max(self.band_size.values(), default=0) + 4

    def _turn_cache(self, ci: int, direction: int) -> tuple:
        key = (ci, direction)
        if key not in self._turns:
            w = self.curves[ci] if direction > 0 else fg.inverse(self.curves[ci])
            self._turns[key] = _turns(self.surface, w)
        return self._turns[key]

    # -- slots on the disk boundary ---------------------------------------
    def slot(self, s: int, rank: int) -> int:
        """Circle position of slot ``rank`` (ccw order) at stub s.

        rank -1 and rank m are reserved lanes on either side of the strands.
        """
        return self.surface.pos[s] * self.width + rank + 2

    def corners(self, s: int) -> tuple[int, int]:
        m = self.band_size[s // 2 + 1]
        p = self.surface.pos[s] * self.width
        return p, p + m + 3

    def rank_at(self, ci: int, k: int, s: int) -> int:
        r = self._rank[(ci, k)]
        if s % 2 == IN:
            return r
        return self.band_size[s // 2 + 1] - 1 - r

    def point(self, ci: int, k: int, s: int) -> int:
        return self.slot(s, self.rank_at(ci, k, s))

    def chord(self, ci: int, k: int) -> tuple[int, int]:
        """Vertex visit between letters k and k+1 of curve ci: (entry, exit)."""
        c = self.curves[ci]
        k1 = (k + 1) % len(c)
        return (self.point(ci, k, arr(c[k])), self.point(ci, k1, dep(c[k1])))

    def chords(self, ci: int) -> list[tuple[int, int]]:
        return [self.chord(ci, k) for k in range(len(self.curves[ci]))]

    @property
    def circumference(self) -> int:
        return self.surface.n_stubs * self.width

    # -- crossings -------------------------------------------------------
    def _in_arc(self, a, b, x) -> bool:
        n = self.circumference
        return 0 < (x - a) % n < (b - a) % n

    def crosses(self, c1, c2) -> bool:
        (p, q), (r, s) = c1, c2
        return self._in_arc(p, q, r) != self._in_arc(p, q, s)

    def crossings(self, ci: int, cj: int) -> int:
        return sum(self.crosses(a, b) for a in self.chords(ci) for b in self.chords(cj))

    def is_simple(self, ci: int = 0) -> bool:
        return _non_crossing(self.chords(ci))

    def disjoint(self, *indices: int) -> bool:
        """Whether the chords of all the given curves are pairwise non-crossing."""
        return _non_crossing([ch for i in indices for ch in self.chords(i)])


def _non_crossing(chords) -> bool:
    ends = {}
    for idx, (p, q) in enumerate(chords):
        ends[p] = idx
        ends[q] = idx
    stack = []
    for pos in sorted(ends):
        idx = ends[pos]
        if stack and stack[-1] == idx:
            stack.pop()
        else:
            stack.append(idx)
    return not stack


def _turns(surface: RibbonSurface, w: tuple) -> tuple:
    """t[i] = ccw distance turned when passing from letter i-1 into letter i."""
    d = surface.ccw_distance
    return tuple(d(arr(w[i - 1]), dep(w[i])) for i in range(len(w)))


def _sort_occurrences(layout: StrandLayout, occ, x: int):
    """Order the passages through band x, counterclockwise at its IN stub.

    Two passages are compared where their forward continuations first
    differ: the one turning to the stub nearer counterclockwise lies further
    counterclockwise.  Each passage is encoded by its sequence of turn
    distances, so the order is lexicographic (descending) on those keys.
    """
    curves = layout.curves
    if not occ:
        return occ
    horizon = 2 * max(len(curves[ci]) for ci, _ in occ) + 2
    turns = layout._turn_cache

    def key(o):
        ci, k = o
        w = curves[ci]
        n = len(w)
        if w[k] > 0:
            t = turns(ci, 1)
        else:
            # read backwards: occurrence k of w is occurrence n-1-k of w^-1
            t = turns(ci, -1)
            k = n - 1 - k
        r = t[k + 1:] + t[:k + 1]
        return (r * (horizon // n + 1))[:horizon]

    keyed = sorted(((key(o), o) for o in occ), reverse=True)
    for (k1, o1), (k2, o2) in zip(keyed, keyed[1:]):
        if k1 == k2:
            w1, w2 = curves[o1[0]], curves[o2[0]]
            raise NotSimpleError(
                "two band passages never separate: repeated curve or proper power "
                f"({fg.format_word(w1)} / {fg.format_word(w2)})")
    # a larger turn distance means further clockwise, hence a lower rank
    return [o for _, o in keyed]


def is_simple(surface: RibbonSurface, word: Sequence[int]) -> bool:
    w = fg.cyclic_reduce(word)
    if not w:
        return False
    try:
        return StrandLayout(surface, [w]).is_simple(0)
    except NotSimpleError:
        return False


def twist_images(surface: RibbonSurface, curve: Sequence[int], power: int = 1) -> list[tuple]:
    """Images of x_1..x_2g under the Dehn twist about a simple curve.

    The twist turns so that it acts on homology by x -> x + i(c, x) c;
    ``power=-1`` gives its inverse.

    Each based generator loop runs from the basepoint (a boundary gap of the
    disk) straight to its band, along the band beside all strands, and
    straight back.  Every crossing with a chord of the curve splices in the
    curve, read from that crossing, in the direction the twist turns.
    """
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")
    c = fg.cyclic_reduce(curve)
    layout = StrandLayout(surface, [c])
    if not layout.is_simple(0):
        raise NotSimpleError(f"{fg.format_word(c)} is not simple")
    n = layout.circumference
    base = Fraction(2 * n - 1, 2)
    chords = layout.chords(0)
    rot = [c[(k + 1) % len(c):] + c[:(k + 1) % len(c)] for k in range(len(c))]

    def splices(a, b):
        hits = []
        for k, (p, q) in enumerate(chords):
            p_in, q_in = layout._in_arc(a, b, p), layout._in_arc(a, b, q)
            if p_in == q_in:
                continue
            near = p if p_in else q
            # a chord entering from the ccw arc (plane-right of a->b) is
            # followed forwards, one leaving through it backwards
            sign = (1 if p_in else -1) * power
            hits.append(((near - a) % n, k, sign))
        hits.sort()
        return [rot[k] if sign > 0 else fg.inverse(rot[k]) for _, k, sign in hits]

    images = []
    for x in range(1, 2 * surface.genus + 1):
        m = layout.band_size[x]
        out_lane = layout.slot(stub(x, OUT), -1)
        in_lane = layout.slot(stub(x, IN), m)
        before = splices(base, out_lane)
        after = splices(in_lane, base)
        images.append(fg.multiply(*before, (x,), *after))
    return images
