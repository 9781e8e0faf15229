"""Command line front end.

    chillingworth phi --surface g=3,bordered --word w.json --class 1,0,0,0,0,0
    chillingworth chillingworth --word w.json
    chillingworth verify-theorem --surface g=3,bordered --max-len 2
    chillingworth graph-ball --radius 2 --power 3
    chillingworth euler --surface g=3,closed
    chillingworth catalog validate [--catalog FILE]

Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .curve_graph import (SearchExhausted, signed_length, verify_length_vs_integral)
from .euler import (ConstructibleFunction, CellComplex, euler_integral,
                    polygon_surface, signed_genus)
from .homology import HomologyClass, SurfaceSpec
from .theorem import evaluate, identity_row, reduced_words
from .torelli import (Catalog, TorelliWord, build_catalog, catalog_from_json,
                      desk_generators, desk_instance, phi_cohomology, phi_eval, sign_flipped,
                      stable_length_check, theorem_generators)
from .winding import (PlanarImmersion, boundary_winding, chillingworth_class,
                      closed_surface_reduce)

OK, FAIL, INPUT = 0, 1, 2
RADIUS_CAP = 3


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    surface: SurfaceSpec
    word: str | None = None
    h: HomologyClass | None = None
    radius: int = 2
    power: int = 3
    fmt: str = "text"
    seed: int = 0
    catalog: str | None = None
    immersion: str | None = None
    max_len: int = 2
    plant_sign_flip: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.radius < 1:
            raise InputError("--radius must be at least 1")
        if self.power < 1:
            raise InputError("--power must be at least 1")
        if self.fmt not in ("text", "json"):
            raise InputError("--format must be text or json")


# -- input helpers -----------------------------------------------------------

def _load_json(text: str):
    """Inline JSON or a path to a JSON file."""
    s = text.strip()
    if s[:1] in "[{":
        return json.loads(s)
    p = Path(text)
    if not p.exists():
        raise InputError(f"no such file: {text}")
    return json.loads(p.read_text())


def _catalog(cfg: RunConfig) -> Catalog:
    if cfg.catalog:
        cat = catalog_from_json(_load_json(cfg.catalog))
        if cat.genus != cfg.surface.genus:
            raise InputError("catalog genus differs from --surface")
        return cat
    return build_catalog(cfg.surface.genus)


def _word(cfg: RunConfig, cat: Catalog) -> TorelliWord:
    if cfg.word is None:
        raise InputError("--word is required")
    try:
        return TorelliWord.from_json(_load_json(cfg.word), cat)
    except (KeyError, TypeError) as err:
        raise InputError(f"bad Torelli word: {err}") from None


def _class(text: str, genus: int) -> HomologyClass:
    try:
        coords = [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise InputError(f"bad class {text!r}") from None
    if len(coords) != 2 * genus:
        raise InputError(f"class needs {2 * genus} coordinates")
    return HomologyClass(coords)


def _immersions(cfg: RunConfig):
    g = cfg.surface.genus
    if cfg.immersion:
        return [PlanarImmersion.from_json(_load_json(cfg.immersion))]
    return [PlanarImmersion.default(g), PlanarImmersion.curled(g)]


def _emit(cfg: RunConfig, report: dict, lines: list[str]):
    if cfg.fmt == "json":
        print(json.dumps(report, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(lines))


# -- commands ------------------------------------------------------------------

def cmd_phi(cfg: RunConfig) -> int:
    cat = _catalog(cfg)
    w = _word(cfg, cat)
    if cfg.h is None:
        raise InputError("--class is required")
    if not cfg.h:
        raise InputError("phi needs a nonzero class")
    val = phi_eval(w, cfg.h, cfg.surface)
    m = cfg.surface.modulus()
    text = f"phi ≡ {val} (mod {m})" if m else f"phi = {val}"
    _emit(cfg, {"command": "phi", "surface": str(cfg.surface), "word": w.to_json(),
                "class": cfg.h.to_json(), "phi": val, "modulus": m,
                "cohomology": phi_cohomology(w, cfg.surface).to_json()}, [text])
    return OK


def cmd_chillingworth(cfg: RunConfig) -> int:
    cat = _catalog(cfg)
    w = _word(cfg, cat)
    g = cfg.surface.genus
    rows, lines = [], []
    for imm in _immersions(cfg):
        e = chillingworth_class(w, imm)
        if not cfg.surface.bordered:
            e = closed_surface_reduce(e, g)
        rows.append({"immersion": imm.name, "class": e.to_json(),
                     "boundary_winding": boundary_winding(imm)})
        lines.append(f"{imm.name}: e = {list(e.dual_coords)}"
                     + (f" (mod {e.modulus})" if e.modulus else ""))
    agree = len({tuple(r["class"]["dual"]) for r in rows}) == 1
    lines.append("immersions agree" if agree else "IMMERSIONS DISAGREE")
    _emit(cfg, {"command": "chillingworth", "surface": str(cfg.surface),
                "word": w.to_json(), "rows": rows, "agree": agree}, lines)
    return OK if agree else FAIL


def cmd_verify_theorem(cfg: RunConfig) -> int:
    cat = _catalog(cfg)
    spec = cfg.surface
    imms = _immersions(cfg)
    if cfg.catalog:
        gens = cat.generators()
    else:
        gens = theorem_generators(cat)
    if cfg.plant_sign_flip:
        gens = [sign_flipped(gens[0])] + gens[1:]
    rows = [identity_row(spec, imms)]
    for w in reduced_words(gens, cfg.max_len):
        if len(w):
            rows += [evaluate(w, i, spec, imms) for i in range(2 * spec.genus)]
    if cfg.extra.get("sample"):
        rng = random.Random(cfg.seed)
        for _ in range(cfg.extra["sample"]):
            n = rng.randint(1, 8)
            w = TorelliWord(tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(n)))
            rows.append(evaluate(w, rng.randrange(2 * spec.genus), spec, imms))
    failing = [r for r in rows if not r.agrees]
    scored = [r for r in rows if not r.calibration]
    lines = [f"{'word':<48} {'h':>2} {'2phi':>5} {'winding':>12} {'contr':>6}"]
    for r in rows[:40] if not failing else failing[:40]:
        lines.append(f"{str(r.word)[:48]:<48} {r.h_index:>2} {r.phi2:>5} "
                     f"{','.join(map(str, r.windings)):>12} {r.contraction:>6}"
                     + ("  [calibration]" if r.calibration else "")
                     + ("" if r.agrees else "  MISMATCH"))
    if len(rows) > 40 and not failing:
        lines.append(f"... {len(rows) - 40} more rows")
    m = spec.chillingworth_modulus()
    lines.append(f"{len(scored) - sum(not r.agrees for r in scored)}/{len(scored)} scored rows "
                 f"agree" + (f" mod {m}" if m else " exactly"))
    _emit(cfg, {"command": "verify-theorem", "surface": str(spec),
                "immersions": [i.name for i in imms], "rows": [r.to_json() for r in rows],
                "failures": len(failing)}, lines)
    return FAIL if failing else OK


def cmd_graph_ball(cfg: RunConfig) -> int:
    spec = cfg.surface
    if spec.genus != 3:
        raise InputError("graph-ball runs on the g=3 desk instance")
    inconclusive = cfg.radius > RADIUS_CAP
    radius = min(cfg.radius, RADIUS_CAP)
    ball = desk_instance(3, not spec.bordered, radius)
    m = spec.modulus()
    path_pairs = paths = bad_pairs = bad_integrals = 0
    max_paths = cfg.extra.get("max_paths", 20000)
    for v1 in ball.vertices:
        for v2 in ball.vertices:
            if not v1 < v2 or paths > max_paths:
                continue
            ps = ball.paths(v1, v2, 4)
            if not ps:
                continue
            paths += len(ps)
            lengths = {signed_length(p) % m if m else signed_length(p) for p in ps}
            if len(ps) > 1:
                path_pairs += 1
                bad_pairs += len(lengths) > 1
            bad_integrals += sum(not verify_length_vs_integral(p) for p in ps)
    inconclusive |= paths > max_paths
    cat = build_catalog(3)
    stable = []
    v = ball.vertices[0]
    for bp in desk_generators(cat):
        try:
            rep = stable_length_check(bp.realized, [v], cfg.power, name=bp.name)
            stable.append(rep)
        except SearchExhausted:
            inconclusive = True
    bad_stable = [r.name for r in stable if not r.ok]
    inconclusive |= any(not r.conclusive for r in stable)
    ok = not (bad_pairs or bad_integrals or bad_stable)
    lines = [f"ball: {len(ball.vertices)} vertices, {len(ball.edges())} edges, radius {radius}",
             f"path invariance: {path_pairs - bad_pairs}/{path_pairs} vertex pairs consistent"
             + (f" mod {m}" if m else ""),
             f"integral identity: {paths - bad_integrals}/{paths} paths",
             *[f"power linearity {r.name}: {r.distances}" for r in stable],
             "all path pairs consistent" if ok else "VERIFICATION FAILED"]
    if inconclusive:
        lines.append("(inconclusive: resource cap reached)")
    _emit(cfg, {"command": "graph-ball", "surface": str(spec), "radius": radius,
                "vertices": len(ball.vertices), "edges": len(ball.edges()),
                "path_pairs": path_pairs, "inconsistent_pairs": bad_pairs, "paths": paths,
                "integral_failures": bad_integrals, "modulus": m,
                "stable_length": [r.to_json() for r in stable],
                "inconclusive": inconclusive, "ok": ok}, lines)
    return OK if ok else FAIL


def cmd_euler(cfg: RunConfig) -> int:
    spec = cfg.surface
    if cfg.extra.get("function"):
        data = _load_json(cfg.extra["function"])
        cx = CellComplex.from_json(data["complex"])
        cx.validate()
        f = ConstructibleFunction.from_json(data["function"])
        total = euler_integral(f)
        report = {"command": "euler", "integral": total}
        lines = [f"integral = {total}"]
        if total % 2 == 0:
            report["signed_genus"] = signed_genus(f)
            lines.append(f"signed genus = {report['signed_genus']}")
    else:
        cx = polygon_surface(spec.genus, spec.bordered)
        chi = cx.euler_characteristic()
        report = {"command": "euler", "surface": str(spec), "chi": chi,
                  "complex": cx.to_json()}
        lines = [f"chi({spec}) = {chi}"]
    _emit(cfg, report, lines)
    return OK


def cmd_catalog_validate(cfg: RunConfig) -> int:
    cat = _catalog(cfg)
    if cfg.plant_sign_flip:
        first = next(iter(cat.bounding_pairs.values()))
        flipped = sign_flipped(first)
        cat = Catalog(cat.genus, cat.curves, cat.twists,
                      {**cat.bounding_pairs, flipped.name: flipped}, cat.separating)
    errs = cat.validate()
    lines = [f"catalog g={cat.genus}: {len(cat.twists)} twists, "
             f"{len(cat.bounding_pairs)} bounding pairs, {len(cat.separating)} separating twists"]
    lines += [f"FAIL {e}" for e in errs] or ["all checks pass"]
    _emit(cfg, {"command": "catalog validate", "genus": cat.genus, "errors": errs,
                "ok": not errs}, lines)
    return FAIL if errs else OK


COMMANDS = {"phi": cmd_phi, "chillingworth": cmd_chillingworth,
            "verify-theorem": cmd_verify_theorem, "graph-ball": cmd_graph_ball,
            "euler": cmd_euler, "catalog": cmd_catalog_validate}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", default="g=3,bordered")
    common.add_argument("--format", dest="fmt", default="text", choices=["text", "json"])
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--catalog", help="catalog JSON file replacing the built-in one")

    p = argparse.ArgumentParser(prog="chillingworth", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("phi", parents=[common])
    s.add_argument("--word", required=True)
    s.add_argument("--class", dest="h", required=True)
    s = sub.add_parser("chillingworth", parents=[common])
    s.add_argument("--word", required=True)
    s.add_argument("--immersion")
    s = sub.add_parser("verify-theorem", parents=[common])
    s.add_argument("--max-len", type=int, default=2)
    s.add_argument("--sample", type=int, default=0, help="extra random words (uses --seed)")
    s.add_argument("--immersion")
    s.add_argument("--plant-sign-flip", action="store_true")
    s = sub.add_parser("graph-ball", parents=[common])
    s.add_argument("--radius", type=int, default=2)
    s.add_argument("--power", type=int, default=3)
    s = sub.add_parser("euler", parents=[common])
    s.add_argument("--function", help="JSON with a complex and a constructible function")
    s = sub.add_parser("catalog", parents=[common])
    s.add_argument("action", choices=["validate"])
    s.add_argument("--plant-sign-flip", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = SurfaceSpec.parse(args.surface)
        extra = {k: getattr(args, k) for k in ("sample", "function") if hasattr(args, k)}
        cfg = RunConfig(args.command, spec, word=getattr(args, "word", None),
                        radius=getattr(args, "radius", 2), power=getattr(args, "power", 3),
                        fmt=args.fmt, seed=args.seed, catalog=args.catalog,
                        immersion=getattr(args, "immersion", None),
                        max_len=getattr(args, "max_len", 2),
                        plant_sign_flip=getattr(args, "plant_sign_flip", False), extra=extra)
        if getattr(args, "h", None) is not None:
            cfg.h = _class(args.h, spec.genus)
        return COMMANDS[args.command](cfg)
    except (InputError, ValueError, KeyError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT


if __name__ == "__main__":
    sys.exit(main())
