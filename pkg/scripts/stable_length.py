"""d_s(v, tau^n v) for the desk bounding pairs and the genus-2 pair.

    python scripts/stable_length.py --power 5
"""
import argparse
import json

from chillingworth.curve_graph import CurveVertex
from chillingworth.homology import HomologyClass
from chillingworth.torelli import build_catalog, stable_length_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--power", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cat = build_catalog(3)
    h = HomologyClass.alpha(3, 1)
    tw = cat.twists
    a = cat.generator("bp:a=-β1,k=1")
    b = cat.generator("bp:a=-β1,k=1@γ1γ2")
    k2 = cat.generator("bp:a=-β1,k=2")
    a_img, b_img = a.realized.on_curve((1,)), b.realized.on_curve((1,))
    bases = [CurveVertex.admit(3, w, h) for w in
             [(1,), tw["b2"].on_curve(a_img), tw["a2"].on_curve(b_img)]]
    helper = [CurveVertex.admit(3, a_img, h)]
    out = []
    for bp, helpers in ((a, []), (b, []), (k2, helper)):
        r = stable_length_check(bp.realized, bases, args.power, helpers=helpers, name=bp.name)
        out.append(r.to_json())
        if not args.json:
            print(f"{bp.name} (expected slope {bp.genus_k}): linear={r.linear} "
                  f"base independent={r.base_independent}")
            for v, ds in r.distances.items():
                print(f"   {v:<50} {ds}")
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))


if __name__ == "__main__":
    main()
