"""Torelli generators, Torelli words and the signed stable length phi.

Bounding pairs are built from the curves

    gamma_k = b1 [b_{k+1}, a_{k+1}] ... [b_2, a_2]      (k = 1 .. g-1)

which are simple, pairwise disjoint and homologous to b1.  The piece F_k
between b1 and gamma_k (to the right of b1, left of gamma_k) has genus k and
holds handles 2..k+1.  Reversing both curves, a = b1^-1 and b = gamma_k^-1
give a - b = boundary of F_k, so T_a T_b^-1 has twisting class -beta_1 and
phi(., alpha_1) = +k.  Conjugating by catalog mapping classes moves all of
this data along.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import freegroup as fg
from .homology import (CohomologyClass, HomologyClass, SurfaceSpec, intersection_pairing,
                       johnson_bp)
from .mapping import MappingClass, braid_relation_holds, commute, surface
from .ribbon import StrandLayout


def gamma_curve(k: int) -> tuple:
    """b1 [b_{k+1}, a_{k+1}] ... [b_2, a_2] as a word."""
    w = [2]
    for j in range(k + 1, 1, -1):
        w += [2 * j, 2 * j - 1, -2 * j, -(2 * j - 1)]
    return tuple(w)


def chain_curve(i: int) -> tuple:
    """Curve meeting b_i and b_{i+1} once each, in class alpha_{i+1} - alpha_i."""
    return (2 * i, -(2 * i - 1), -2 * i, 2 * i + 1)


def separating_curve(first: int, last: int) -> tuple:
    """prod_{i=first}^{last} [a_i, b_i], cutting off handles first..last."""
    w = []
    for i in range(first, last + 1):
        w += [2 * i - 1, 2 * i, -(2 * i - 1), -2 * i]
    return tuple(w)


def class_label(h: HomologyClass) -> str:
    g = h.genus
    parts = []
    for idx, c in enumerate(h.coords):
        if not c:
            continue
        name = f"α{idx + 1}" if idx < g else f"β{idx - g + 1}"
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{coef}{name}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


@dataclass(frozen=True)
class BoundingPairSpec:
    name: str
    a_class: HomologyClass
    genus_k: int
    span: tuple
    realized: MappingClass | None = field(default=None, compare=False, repr=False)
    curves: tuple | None = None          # oriented (a, b) words

    def check_span(self, genus: int) -> list[str]:
        errs = []
        if not 1 <= self.genus_k <= genus - 1:
            errs.append(f"{self.name}: genus_k={self.genus_k} outside 1..{genus - 1}")
        if len(self.span) != self.genus_k:
            errs.append(f"{self.name}: span has {len(self.span)} pairs, expected {self.genus_k}")
        flat = [v for pair in self.span for v in pair]
        for v in flat:
            if intersection_pairing(v, self.a_class):
                errs.append(f"{self.name}: span vector {v} meets the twisting class")
        for i, (x, y) in enumerate(self.span):
            if intersection_pairing(x, y) != 1:
                errs.append(f"{self.name}: span pair {i} has i(x, y) != 1")
            for j, (u, w) in enumerate(self.span):
                if i != j and any(intersection_pairing(p, q) for p in (x, y) for q in (u, w)):
                    errs.append(f"{self.name}: span pairs {i} and {j} are not orthogonal")
        return errs


@dataclass(frozen=True)
class SeparatingTwistSpec:
    name: str
    curve: tuple
    realized: MappingClass | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TorelliWord:
    factors: tuple = ()          # ((generator spec, exponent), ...)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for gen, e in self.factors:
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
            if not isinstance(gen, (BoundingPairSpec, SeparatingTwistSpec)):
                raise TypeError(f"not a Torelli generator: {gen!r}")

    def __mul__(self, other: "TorelliWord") -> "TorelliWord":
        return TorelliWord(self.factors + other.factors)

    def inverse(self) -> "TorelliWord":
        return TorelliWord(tuple((g, -e) for g, e in reversed(self.factors)))

    def __len__(self):
        return len(self.factors)

    def realize(self, genus: int) -> MappingClass:
        f = MappingClass.identity(genus)
        for gen, e in self.factors:
            if gen.realized is None:
                raise ValueError(f"{gen.name} has no realized mapping class")
            f = f * (gen.realized if e == 1 else gen.realized.inverse())
        return f

    def on_curve(self, word: Sequence[int]) -> tuple:
        """Image of a curve, applying the rightmost factor first."""
        w = fg.cyclic_reduce(word)
        for gen, e in reversed(self.factors):
            m = gen.realized if e == 1 else gen.realized.inverse()
            w = m.on_curve(w)
        return w

    def bp_factors(self) -> list:
        return [(e, g.a_class, g.span) for g, e in self.factors
                if isinstance(g, BoundingPairSpec)]

    def to_json(self) -> list[dict]:
        return [{"gen": g.name, "exp": e} for g, e in self.factors]

    @classmethod
    def from_json(cls, data, catalog: "Catalog") -> "TorelliWord":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple((catalog.generator(item["gen"]), int(item["exp"])) for item in data))

    def __str__(self):
        if not self.factors:
            return "id"
        return " ".join(g.name if e == 1 else f"({g.name})^-1" for g, e in self.factors)


def phi_eval(w: TorelliWord, h: HomologyClass, spec: SurfaceSpec) -> int:
    """Signed stable length of w on the curve graph of class h."""
    if not h:
        raise ValueError("phi is only defined for nonzero homology classes")
    if h.genus != spec.genus:
        raise ValueError("class lives on a surface of different genus")
    total = 0
    for gen, e in w.factors:
        if isinstance(gen, BoundingPairSpec):
            total += e * gen.genus_k * intersection_pairing(gen.a_class, h)
    m = spec.modulus()
    return total % m if m else total


def phi_cohomology(w: TorelliWord, spec: SurfaceSpec) -> CohomologyClass:
    g = spec.genus
    return CohomologyClass([phi_eval(w, HomologyClass.basis(g, i), spec) for i in range(2 * g)],
                           spec.modulus())


# -- the catalog -----------------------------------------------------------

@dataclass
class Catalog:
    genus: int
    curves: dict            # twist name -> word
    twists: dict            # twist name -> MappingClass
    bounding_pairs: dict    # name -> BoundingPairSpec
    separating: dict        # name -> SeparatingTwistSpec

    def generator(self, name: str):
        key = _ascii_name(name)
        for table in (self.bounding_pairs, self.separating):
            for n, gen in table.items():
                if _ascii_name(n) == key:
                    return gen
        raise KeyError(f"unknown Torelli generator {name!r}")

    def word(self, *items) -> TorelliWord:
        """TorelliWord from (name, exponent) pairs or bare names."""
        out = []
        for it in items:
            name, e = (it, 1) if isinstance(it, str) else it
            out.append((self.generator(name), e))
        return TorelliWord(tuple(out))

    def generators(self) -> list:
        return list(self.bounding_pairs.values()) + list(self.separating.values())

    def validate(self) -> list[str]:
        return validate_catalog(self)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "twists": {n: {"curve": fg.format_word(c), **self.twists[n].to_json()}
                       for n, c in self.curves.items()},
            "bounding_pairs": [_bp_json(b) for b in self.bounding_pairs.values()],
            "separating": [{"name": s.name, "curve": fg.format_word(s.curve)}
                           for s in self.separating.values()],
        }


def _ascii_name(name: str) -> str:
    return name.replace("α", "a").replace("β", "b").replace(" ", "")


def _bp_json(b: BoundingPairSpec) -> dict:
    d = {"name": b.name, "a_class": b.a_class.to_json(), "genus_k": b.genus_k,
         "span": [[x.to_json(), y.to_json()] for x, y in b.span]}
    if b.curves:
        d["curves"] = [fg.format_word(c) for c in b.curves]
    if b.realized is not None:
        d["images"] = [fg.format_word(w) for w in b.realized.images]
    return d


def bounding_pair(genus: int, a: Sequence[int], b: Sequence[int], genus_k: int, span,
                  name: str | None = None) -> BoundingPairSpec:
    """T_a T_b^-1 for oriented disjoint homologous curves with a - b bounding genus k."""
    a, b = fg.cyclic_reduce(a), fg.cyclic_reduce(b)
    ha = HomologyClass(fg.abelianize(a, genus))
    f = MappingClass.twist(genus, a, fg.format_word(a)) * \
        MappingClass.twist(genus, b, fg.format_word(b), power=-1)
    name = name or f"bp:a={class_label(ha)},k={genus_k}"
    return BoundingPairSpec(name, ha, genus_k, tuple(span), f, (a, b))


def _conjugators(genus: int, twists: dict) -> list[tuple[str, MappingClass]]:
    T = twists
    out = [("Ta1", T["a1"]), ("Tc1", T["c1"]), ("Tb2.Tc1", T["b2"] * T["c1"])]
    last = genus - 1
    out.append((f"Tc{last}.Tb1^-1.Ta1", T[f"c{last}"] * T["b1"].inverse() * T["a1"]))
    return out


@lru_cache(maxsize=None)
def build_catalog(genus: int) -> Catalog:
    SurfaceSpec(genus)            # rejects g <= 2
    curves = {}
    for i in range(1, genus + 1):
        curves[f"a{i}"] = (2 * i - 1,)
        curves[f"b{i}"] = (2 * i,)
    for i in range(1, genus):
        curves[f"c{i}"] = chain_curve(i)
    twists = {n: MappingClass.twist(genus, w, f"T{n}") for n, w in curves.items()}

    alpha = lambda i: HomologyClass.alpha(genus, i)
    beta = lambda i: HomologyClass.beta(genus, i)
    bps = {}
    base = []
    for k in range(1, genus):
        span = tuple((alpha(j), beta(j)) for j in range(2, k + 2))
        bp = bounding_pair(genus, fg.inverse((2,)), fg.inverse(gamma_curve(k)), k, span)
        base.append(bp)
        bps[bp.name] = bp
    # genus-1 pairs between consecutive gamma curves, cutting off handle j+1
    for j in range(1, genus - 1):
        span = ((alpha(j + 2), beta(j + 2)),)
        bp = bounding_pair(genus, fg.inverse(gamma_curve(j)), fg.inverse(gamma_curve(j + 1)),
                           1, span)
        name = f"{bp.name}@γ{j}γ{j + 1}"
        bps[name] = BoundingPairSpec(name, bp.a_class, 1, span, bp.realized, bp.curves)
    for cname, f in _conjugators(genus, twists):
        for bp in base:
            a, b = (f.on_curve(c) for c in bp.curves)
            span = tuple((f.on_homology(x), f.on_homology(y)) for x, y in bp.span)
            new = bounding_pair(genus, a, b, bp.genus_k, span)
            name = f"{new.name}@{cname}"
            bps[name] = BoundingPairSpec(name, new.a_class, new.genus_k, new.span,
                                         new.realized, new.curves)

    seps = {}
    for last in range(1, genus):
        c = separating_curve(1, last)
        name = f"sep:s{last}"
        seps[name] = SeparatingTwistSpec(name, c, MappingClass.twist(genus, c, name))
    c = separating_curve(2, 2)
    seps["sep:h2"] = SeparatingTwistSpec("sep:h2", c, MappingClass.twist(genus, c, "sep:h2"))
    return Catalog(genus, curves, twists, bps, seps)


def theorem_generators(catalog: Catalog) -> list:
    """Four bounding pairs with distinct twisting classes and two separating twists."""
    g = catalog.genus
    bps = list(catalog.bounding_pairs.values())
    names = ["bp:a=-β1,k=1", f"bp:a=-β1,k={g - 1}"]
    chosen = [catalog.generator(n) for n in names]
    seen = {b.a_class for b in chosen}
    for b in bps:
        if len(chosen) >= 4:
            break
        if b.genus_k == 1 and b.a_class not in seen:
            chosen.append(b)
            seen.add(b.a_class)
    return chosen + [catalog.separating["sep:s1"], catalog.separating["sep:h2"]]


# -- validators --------------------------------------------------------------

def _piece_genus_left_of(genus: int, a, b) -> tuple[int | None, bool]:
    """Genus of the piece left of a and right of b, and whether it avoids the boundary."""
    from .drawing import draw
    from .euler import euler_char
    layout = StrandLayout(surface(genus), [a, b])
    if not layout.disjoint(0, 1):
        return None, False
    d = draw(layout)
    for comp in d.components([0, 1]):
        if not comp & d.left_faces(0):
            continue
        if not comp & d.right_faces(1) or comp & (d.right_faces(0) | d.left_faces(1)):
            return None, False
        chi = euler_char(d.interior(comp, [0, 1]))
        return (-chi) // 2, not d.touches_boundary(comp)
    return None, False


def validate_bounding_pair(bp: BoundingPairSpec, genus: int) -> list[str]:
    errs = bp.check_span(genus)
    f = bp.realized
    if f is None:
        return errs
    if not f.is_torelli():
        errs.append(f"{bp.name}: realized map is not in the Torelli group")
    if not f.fixes_boundary():
        errs.append(f"{bp.name}: realized map moves the boundary word")
    if not f.inverse_checks():
        errs.append(f"{bp.name}: inverse images do not invert")
    if bp.curves:
        a, b = bp.curves
        for c in (a, b):
            if HomologyClass(fg.abelianize(c, genus)) != bp.a_class:
                errs.append(f"{bp.name}: curve {fg.format_word(c)} is not in the twisting class")
        k, interior = _piece_genus_left_of(genus, a, b)
        if k != bp.genus_k or not interior:
            errs.append(f"{bp.name}: a - b does not bound an interior piece of genus "
                        f"{bp.genus_k} (found {k})")
        direct = MappingClass.twist(genus, a) * MappingClass.twist(genus, b, power=-1)
        if not direct.same_action(f):
            errs.append(f"{bp.name}: realized map differs from T_a T_b^-1")
    # the span must be the homology of the piece: the Johnson image needs it
    if bp.span and johnson_bp(bp.a_class, bp.span).genus != genus:
        errs.append(f"{bp.name}: span lives on the wrong surface")
    return errs


def validate_catalog(cat: Catalog) -> list[str]:
    g = cat.genus
    errs = []
    s = surface(g)
    for n, t in cat.twists.items():
        if not t.fixes_boundary():
            errs.append(f"T{n} moves the boundary word")
        if not t.is_symplectic():
            errs.append(f"T{n} is not symplectic")
        if not t.inverse_checks():
            errs.append(f"T{n}: inverse images do not invert")
        if t.is_torelli():
            errs.append(f"T{n} about a nonseparating curve acts trivially on homology")
    names = list(cat.curves)
    for i, n1 in enumerate(names):
        for n2 in names[i + 1:]:
            k = StrandLayout(s, [cat.curves[n1], cat.curves[n2]]).crossings(0, 1)
            t1, t2 = cat.twists[n1], cat.twists[n2]
            if k == 0 and not commute(t1, t2):
                errs.append(f"T{n1}, T{n2}: disjoint curves but twists do not commute")
            if k == 1 and not braid_relation_holds(t1, t2):
                errs.append(f"T{n1}, T{n2}: braid relation fails")
            if k == 1 and commute(t1, t2):
                errs.append(f"T{n1}, T{n2}: curves meet once but twists commute")
    for cname, f in _conjugators(g, cat.twists):
        for n, c in cat.curves.items():
            if not MappingClass.twist(g, f.on_curve(c)).same_action(cat.twists[n].conjugate_by(f)):
                errs.append(f"conjugation covariance fails for T{n} under {cname}")
    for bp in cat.bounding_pairs.values():
        errs += validate_bounding_pair(bp, g)
    for sp in cat.separating.values():
        t = sp.realized
        if any(fg.abelianize(sp.curve, g)):
            errs.append(f"{sp.name}: curve is not null-homologous")
        if not (t.is_torelli() and t.fixes_boundary() and t.inverse_checks()):
            errs.append(f"{sp.name}: separating twist fails Torelli/boundary/inverse checks")
    return errs


def sign_flipped(bp: BoundingPairSpec) -> BoundingPairSpec:
    """Negative control: same map, twisting class negated."""
    return BoundingPairSpec(bp.name + "!flipped", -bp.a_class, bp.genus_k, bp.span,
                            bp.realized, bp.curves)


# -- the desk instance and stable length -------------------------------------

def desk_generators(catalog: Catalog) -> list[BoundingPairSpec]:
    """Two commuting genus-1 pairs around handle 1 (handles 2 and 3)."""
    return [catalog.generator("bp:a=-β1,k=1"), catalog.generator("bp:a=-β1,k=1@γ1γ2")]


def desk_instance(genus: int = 3, closed: bool = False, radius: int = 2):
    """Ball around alpha_1 spanned by words of length <= radius in the desk pairs."""
    from .curve_graph import CurveGraphBall, CurveVertex
    cat = build_catalog(genus)
    h = HomologyClass.alpha(genus, 1)
    maps = []
    for bp in desk_generators(cat):
        maps += [bp.realized, bp.realized.inverse()]
    seed = CurveVertex.admit(genus, (1,), h, closed)
    return CurveGraphBall.from_orbit(genus, h, [seed], maps, radius, closed)


@dataclass
class StableLengthReport:
    name: str
    n: int
    distances: dict            # base vertex label -> [d_s(v, f^k v) for k = 1..n]
    modulus: int
    conclusive: bool
    paths: dict = field(default_factory=dict)

    @property
    def linear(self) -> bool:
        m = self.modulus
        for ds in self.distances.values():
            if ds is None:
                continue
            d1 = ds[0]
            for k, d in enumerate(ds, start=1):
                if (d - k * d1) % m if m else d != k * d1:
                    return False
        return True

    @property
    def base_independent(self) -> bool:
        seqs = [tuple(ds) for ds in self.distances.values() if ds is not None]
        if self.modulus:
            seqs = [tuple(d % self.modulus for d in s) for s in seqs]
        return len(set(seqs)) <= 1

    @property
    def ok(self) -> bool:
        return self.linear and self.base_independent

    def to_json(self) -> dict:
        return {"name": self.name, "n": self.n, "modulus": self.modulus,
                "distances": self.distances, "conclusive": self.conclusive,
                "linear": self.linear, "base_independent": self.base_independent,
                "paths": self.paths}


def stable_length_check(f: MappingClass, vertices, n: int, helpers=(), name: str = "f",
                        radius: int | None = None) -> StableLengthReport:
    """d_s(v, f^k v) for k = 1..n on the ball of f-orbits of the vertices.

    ``helpers`` are extra vertices (with their orbits) that supply the
    intermediate curves when d_s(v, f v) needs more than one edge.
    """
    from .curve_graph import CurveGraphBall, SearchExhausted, signed_distance
    if n < 1:
        raise ValueError("n must be positive")
    vertices = list(vertices) if isinstance(vertices, (list, tuple)) else [vertices]
    v0 = vertices[0]
    ball = CurveGraphBall(v0.genus, v0.homology, v0.closed)
    powers = [MappingClass.identity(v0.genus)]
    for _ in range(n):
        powers.append(powers[-1] * f)
    for u in list(vertices) + list(helpers):
        for p in powers:
            ball.add(type(u).admit(u.genus, p.on_curve(u.word), u.homology, u.closed))
    radius = radius or len(ball.vertices)
    dist, paths, conclusive = {}, {}, True
    m = 0
    for v in vertices:
        seq, ws = [], []
        try:
            for k in range(1, n + 1):
                target = type(v).admit(v.genus, powers[k].on_curve(v.word), v.homology, v.closed)
                d, m, path = signed_distance(v, target, ball, radius)
                seq.append(d)
                ws.append(len(path))
        except SearchExhausted:
            conclusive = False
            seq = None
        dist[v.label()] = seq
        paths[v.label()] = ws
    return StableLengthReport(name, n, dist, m, conclusive, paths)


def catalog_from_json(data) -> Catalog:
    """Catalog holding the generators listed in a file, realized from their curves.

    The standard twists of that genus come along so the relation checks run too.
    """
    if isinstance(data, str):
        data = json.loads(data)
    genus = int(data["genus"])
    base = build_catalog(genus)
    bps = {}
    for item in data.get("bounding_pairs", []):
        a, b = (fg.parse(c) for c in item["curves"])
        real = bounding_pair(genus, a, b, item["genus_k"], ())
        span = tuple((HomologyClass(x), HomologyClass(y)) for x, y in item["span"])
        bps[item["name"]] = BoundingPairSpec(item["name"], HomologyClass(item["a_class"]),
                                             int(item["genus_k"]), span, real.realized, real.curves)
    seps = {}
    for item in data.get("separating", []):
        c = fg.parse(item["curve"])
        seps[item["name"]] = SeparatingTwistSpec(item["name"], c,
                                                 MappingClass.twist(genus, c, item["name"]))
    return Catalog(genus, dict(base.curves), dict(base.twists), bps, seps)
