"""Run the three-way check on every short Torelli word and summarize.

    python scripts/theorem_sweep.py --surface g=3,bordered --max-len 3 --out sweep.json
"""
import argparse
import json
import time
from collections import Counter

from chillingworth.homology import SurfaceSpec
from chillingworth.theorem import theorem_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--surface", default="g=3,bordered")
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--out")
    args = ap.parse_args()
    spec = SurfaceSpec.parse(args.surface)
    t = time.time()
    rows = theorem_suite(spec, max_len=args.max_len)
    scored = [r for r in rows if not r.calibration]
    bad = [r for r in scored if not r.agrees]
    values = Counter(r.phi2 for r in rows)
    print(f"{spec}, words up to length {args.max_len}: {len(rows)} rows in {time.time() - t:.1f}s")
    print(f"{len(scored) - len(bad)}/{len(scored)} scored rows agree")
    print("distribution of 2*phi:", dict(sorted(values.items())))
    for r in bad[:20]:
        print("mismatch:", r.word, r.h_index, r.phi2, r.windings, r.contraction)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_json() for r in rows], fh, sort_keys=True, ensure_ascii=False)


if __name__ == "__main__":
    main()
