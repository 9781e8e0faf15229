"""Cell complex of the ribbon surface refined by a family of drawn curves.

The disk is realised with exact rational coordinates (slots in convex
position on the unit circle, chords straight), so chords of different
curves may cross and the crossing points become vertices.  Bands are
strips cut lengthwise by the strands passing through them.

Faces are oriented positively for the *surface* orientation, which is the
mirror of the drawing plane (see ``ribbon``): disk faces are therefore the
clockwise planar loops, band faces the ones with the band on the plane-right.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .euler import CellComplex, TameSet
from .ribbon import IN, OUT, StrandLayout, arr, dep, stub


def _circle_point(t: Fraction, n: int) -> tuple[Fraction, Fraction]:
    # monotone in t, convex position; avoids (-1, 0) since tau stays finite
    tau = t - Fraction(n, 2)
    d = 1 + tau * tau
    return ((1 - tau * tau) / d, 2 * tau / d)


def _intersect(p1, p2, q1, q2):
    """Parameter along p1->p2 and the point where the open segments meet."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    den = rx * sy - ry * sx
    if den == 0:
        return None
    qpx, qpy = q1[0] - p1[0], q1[1] - p1[1]
    t = (qpx * sy - qpy * sx) / den
    u = (qpx * ry - qpy * rx) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, (p1[0] + t * rx, p1[1] + t * ry)
    return None


def _angle_key(dx, dy):
    # exact angular order: half-plane, then pseudo-angle via slope compare
    half = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
    return (half, _Slope(dx, dy))


class _Slope:
    __slots__ = ("dx", "dy")

    def __init__(self, dx, dy):
        self.dx, self.dy = dx, dy

    def __lt__(self, other):
        # within one half-plane, a before b iff cross(a, b) > 0
        return self.dx * other.dy - self.dy * other.dx > 0

    def __eq__(self, other):
        return self.dx * other.dy - self.dy * other.dx == 0


@dataclass
class Drawing:
    complex: CellComplex
    layout: StrandLayout
    cycles: list            # per curve: signed edge ids along the curve
    curve_edges: list       # per curve: set of edge indices
    curve_vertices: list    # per curve: set of vertex indices
    boundary_edges: set     # edge indices on the surface boundary
    cap_face: int | None    # index of the cap face (closed model)
    disk_faces: list
    band_faces: list

    # -- cutting ---------------------------------------------------------
    def components(self, cut: list[int]):
        """Face components of the complement of the given curves."""
        cut_edges = set().union(*(self.curve_edges[i] for i in cut)) if cut else set()
        parent = list(range(len(self.complex.faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e, fs in self.complex.edge_faces.items():
            if e in cut_edges or len(fs) < 2:
                continue
            a, b = find(fs[0]), find(fs[1])
            if a != b:
                parent[a] = b
        groups: dict[int, set] = {}
        for f in range(len(self.complex.faces)):
            groups.setdefault(find(f), set()).add(f)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def interior(self, faces: frozenset, cut: list[int]) -> TameSet:
        """Open cells of the region made of ``faces``, minus the cut curves."""
        cx = self.complex
        cut_e = set().union(*(self.curve_edges[i] for i in cut)) if cut else set()
        cut_v = set().union(*(self.curve_vertices[i] for i in cut)) if cut else set()
        cells = {("f", f) for f in faces}
        for e, fs in cx.edge_faces.items():
            if e not in cut_e and fs and set(fs) <= faces:
                cells.add(("e", e))
        for v, fs in cx.vertex_faces.items():
            if v not in cut_v and fs and fs <= faces:
                cells.add(("v", v))
        return TameSet(cx, cells)

    def left_faces(self, ci: int) -> set[int]:
        """Faces immediately to the (surface) left of curve ci."""
        want = set(self.cycles[ci])
        out = set()
        for fi, loop in enumerate(self.complex.faces):
            if want.intersection(loop):
                out.add(fi)
        return out

    def right_faces(self, ci: int) -> set[int]:
        want = {-se for se in self.cycles[ci]}
        return {fi for fi, loop in enumerate(self.complex.faces) if want.intersection(loop)}

    def touches_boundary(self, faces) -> bool:
        if self.cap_face is not None:
            return False
        return any(set(self.complex.edge_faces[e]) & set(faces) for e in self.boundary_edges)


def draw(layout: StrandLayout, closed: bool = False) -> Drawing:
    surface = layout.surface
    n = surface.n_stubs
    verts: dict = {}            # key -> index
    coords: list = []

    def vertex(key, xy):
        if key not in verts:
            verts[key] = len(coords)
            coords.append(xy)
        return verts[key]

    # circle points in ccw order
    circle = []                 # (t, vertex index, kind, info)
    for s in surface.order:
        m = layout.band_size[s // 2 + 1]
        lo, hi = layout.corners(s)
        circle.append((lo, ("L", s)))
        for r in range(m):
            circle.append((layout.slot(s, r), ("S", s, r)))
        circle.append((hi, ("R", s)))
    circle.sort(key=lambda x: x[0])
    circ_index = {}
    for t, key in circle:
        xy = _circle_point(Fraction(t, layout.width), n)
        circ_index[key] = vertex(("c", t), xy)

    edges: list[tuple[int, int]] = []
    edge_id: dict = {}

    def add_edge(u, v, tag):
        edges.append((u, v))
        edge_id[tag] = len(edges)
        return len(edges)

    # circle arcs (ccw)
    arc_edges = []
    gap_edges = set()
    for i, (t, key) in enumerate(circle):
        nt, nkey = circle[(i + 1) % len(circle)]
        eid = add_edge(circ_index[key], circ_index[nkey], ("arc", i))
        arc_edges.append(eid)
        if key[0] == "R":
            gap_edges.add(eid - 1)

    # chords and their crossings
    chords = []                 # (curve, k, p, q) with p, q circle keys
    for ci, c in enumerate(layout.curves):
        for k in range(len(c)):
            k1 = (k + 1) % len(c)
            sp, sq = arr(c[k]), dep(c[k1])
            p = ("S", sp, layout.rank_at(ci, k, sp))
            q = ("S", sq, layout.rank_at(ci, k1, sq))
            chords.append((ci, k, p, q))
    pts = [(coords[circ_index[p]], coords[circ_index[q]]) for _, _, p, q in chords]
    on_chord = [[(Fraction(0), circ_index[p]), (Fraction(1), circ_index[q])]
                for _, _, p, q in chords]
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            hit = _intersect(*pts[i], *pts[j])
            if hit is None:
                continue
            t, xy = hit
            v = vertex(("x", xy), xy)
            on_chord[i].append((t, v))
            tj = _intersect(*pts[j], *pts[i])[0]
            on_chord[j].append((tj, v))
    chord_pieces = {}           # (ci, k) -> list of signed edge ids
    piece_edges = []
    for idx, (ci, k, _, _) in enumerate(chords):
        seq = sorted(set(on_chord[idx]))
        ids = []
        for (_, u), (_, v) in zip(seq, seq[1:]):
            ids.append(add_edge(u, v, ("chord", ci, k, len(ids))))
        chord_pieces[(ci, k)] = ids
        piece_edges += ids

    # disk faces: trace the planar graph inside the disk
    adj: dict[int, list] = {}
    for eid in arc_edges + piece_edges:
        u, v = edges[eid - 1]
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, -eid))
    order_at = {}
    for u, nbrs in adj.items():
        ux, uy = coords[u]
        nbrs.sort(key=lambda nb: _angle_key(coords[nb[0]][0] - ux, coords[nb[0]][1] - uy))
        order_at[u] = nbrs
    used = set()
    disk_loops = []
    for start in [se for eid in arc_edges + piece_edges for se in (eid, -eid)]:
        if start in used:
            continue
        loop, se = [], start
        while se not in used:
            used.add(se)
            loop.append(se)
            u, v = edges[abs(se) - 1] if se > 0 else edges[abs(se) - 1][::-1]
            nbrs = order_at[v]
            back = next(i for i, (w, s2) in enumerate(nbrs) if s2 == -se)
            # next edge clockwise from the way back keeps the face on the left
            se = nbrs[(back - 1) % len(nbrs)][1]
        disk_loops.append(loop)
    arc_set = set(arc_edges)
    # the outer (unbounded) loop runs every arc backwards
    disk_loops = [lp for lp in disk_loops
                  if not all(-s in arc_set for s in lp)]
    faces = [[-s for s in reversed(lp)] for lp in disk_loops]
    disk_faces = list(range(len(faces)))

    # bands
    arc_of = {}                 # (key_from) -> arc edge id starting there
    for i, (t, key) in enumerate(circle):
        arc_of[key] = arc_edges[i]
    band_faces = []
    strand_edge = {}            # (ci, k) -> signed edge id along the curve
    side_edges = set()
    for x in range(1, 2 * surface.genus + 1):
        m = layout.band_size[x]
        s_in, s_out = stub(x, IN), stub(x, OUT)
        in_keys = [("L", s_in)] + [("S", s_in, r) for r in range(m)] + [("R", s_in)]
        out_keys = [("R", s_out)] + [("S", s_out, m - 1 - r) for r in range(m)] + [("L", s_out)]
        line_ids = []
        for j, (ki, ko) in enumerate(zip(in_keys, out_keys)):
            eid = add_edge(circ_index[ko], circ_index[ki], ("band", x, j))
            line_ids.append(eid)
            if j in (0, m + 1):
                side_edges.add(eid - 1)
        occ_by_rank = {layout._rank[(ci, k)]: (ci, k)
                       for ci, c in enumerate(layout.curves)
                       for k, l in enumerate(c) if abs(l) == x}
        for r, (ci, k) in occ_by_rank.items():
            eid = line_ids[r + 1]
            strand_edge[(ci, k)] = eid if layout.curves[ci][k] > 0 else -eid
        for j in range(m + 1):
            # in-arc j->j+1, line j+1 in->out, out-arc, line j out->in
            face = [arc_of[in_keys[j]], -line_ids[j + 1],
                    arc_of[out_keys[j + 1]], line_ids[j]]
            band_faces.append(len(faces))
            faces.append(face)

    boundary_walk = []
    s = surface.order[-1]
    for _ in range(surface.n_stubs):
        # gap arc leaving R_s, then the band side from L_next to its partner
        boundary_walk.append(arc_of[("R", s)])
        nxt = surface.ccw_next(s)
        x = nxt // 2 + 1
        m = layout.band_size[x]
        side = edge_id[("band", x, m + 1 if nxt % 2 == OUT else 0)]
        boundary_walk.append(side if nxt % 2 == OUT else -side)
        s = nxt ^ 1
    cap = None
    bd = None
    if closed:
        cap = len(faces)
        faces.append(boundary_walk)
    else:
        bd = [-s for s in reversed(boundary_walk)]

    cycles, c_edges, c_verts = [], [], []
    for ci, c in enumerate(layout.curves):
        cyc = []
        for k in range(len(c)):
            cyc.append(strand_edge[(ci, k)])
            cyc += chord_pieces[(ci, k)]
        cycles.append(cyc)
        c_edges.append({abs(s) - 1 for s in cyc})
        vs = set()
        for s in cyc:
            vs.update(edges[abs(s) - 1])
        c_verts.append(vs)

    cx = CellComplex(len(coords), edges, faces, bd)
    cx.validate()
    return Drawing(cx, layout, cycles, c_edges, c_verts,
                   (gap_edges | side_edges), cap, disk_faces, band_faces)
