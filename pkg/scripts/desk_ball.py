"""Build the desk instance ball and check path independence of signed length.

    python scripts/desk_ball.py --radius 2 [--closed] [--max-path 4] [--out ball.json]
"""
import argparse
import json
import time
from collections import Counter

from chillingworth.curve_graph import signed_length, verify_length_vs_integral
from chillingworth.torelli import desk_instance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=2)
    ap.add_argument("--closed", action="store_true")
    ap.add_argument("--max-path", type=int, default=4)
    ap.add_argument("--out")
    args = ap.parse_args()
    t = time.time()
    ball = desk_instance(3, args.closed, args.radius)
    edges = ball.edges()
    print(f"{len(ball.vertices)} vertices, {len(edges)} edges "
          f"(signs {dict(Counter(e.sign for e in edges))}) in {time.time() - t:.1f}s")
    m = 2 if args.closed else 0
    pairs = paths = bad = bad_int = 0
    for v1 in ball.vertices:
        for v2 in ball.vertices:
            if not v1 < v2:
                continue
            ps = ball.paths(v1, v2, args.max_path)
            paths += len(ps)
            if len(ps) > 1:
                pairs += 1
                bad += len({signed_length(p) % m if m else signed_length(p) for p in ps}) > 1
            bad_int += sum(not verify_length_vs_integral(p) for p in ps)
    print(f"{pairs} pairs with several paths, {paths} paths, {bad} inconsistent, "
          f"{bad_int} integral failures ({time.time() - t:.1f}s)")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(ball.to_json(), fh, sort_keys=True, ensure_ascii=False)


if __name__ == "__main__":
    main()
