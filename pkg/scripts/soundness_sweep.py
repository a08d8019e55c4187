"""Sampled soundness of every axiom schema.

    python3 scripts/soundness_sweep.py --seeds 0 1 2 --instances 200 --models 50
"""

import argparse
import sys
import time

from awarearg.semantics import Rebuttal
from awarearg.testkit import GenConfig, soundness_report, translation
from awarearg.testkit.schemas import DYNAMIC_SCHEMAS, STATIC_SCHEMAS, VALIDITY_SCHEMAS

GROUPS = {"static": STATIC_SCHEMAS, "dynamic": DYNAMIC_SCHEMAS, "validities": VALIDITY_SCHEMAS}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, nargs="+", default=[0])
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--models", type=int, default=50)
    parser.add_argument("--groups", nargs="+", choices=sorted(GROUPS), default=sorted(GROUPS))
    parser.add_argument("--restricted", action="store_true", help="also evaluate under restricted rebuttal")
    parser.add_argument("--pairs", type=int, default=500, help="translation pairs per seed")
    args = parser.parse_args(argv)

    modes = (Rebuttal.UNRESTRICTED, Rebuttal.RESTRICTED) if args.restricted else (Rebuttal.UNRESTRICTED,)
    ok = True
    for seed in args.seeds:
        cfg = GenConfig(seed=seed)
        for group in args.groups:
            start = time.perf_counter()
            report = soundness_report(cfg, args.instances, args.models, GROUPS[group], modes=modes)
            print(f"== seed {seed}, {group} ({time.perf_counter() - start:.1f}s)")
            print(report.text(), end="")
            ok &= report.ok
        if args.pairs:
            pairs = translation(cfg, n_pairs=args.pairs)
            print(f"== seed {seed}, translation")
            print(pairs.text(), end="")
            ok &= pairs.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
