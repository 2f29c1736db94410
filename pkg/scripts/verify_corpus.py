"""Run every check over a corpus, timing each instance, and save the reports.

    python3 scripts/verify_corpus.py --corpus all --seed 7 --out results/
"""

import argparse
import json
import time
from pathlib import Path

from declat.corpus import CORPORA, build_corpus
from declat.report import Suite, check_instance


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", choices=CORPORA, default="all")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--random-count", type=int, default=50)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    suite = Suite()
    timings = []
    for inst in build_corpus(args.corpus, args.seed, args.random_count):
        t0 = time.perf_counter()
        check_instance(suite, inst)
        timings.append((time.perf_counter() - t0, inst.name))

    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "report.txt").write_text("\n".join(suite.lines()) + "\n")
    (args.out / "report.json").write_text(json.dumps(suite.to_json(), indent=2, ensure_ascii=False) + "\n")

    print("\n".join(suite.lines()))
    total = sum(t for t, _ in timings)
    print(f"\n{len(timings)} instances in {total:.2f}s; slowest:")
    for t, name in sorted(timings, reverse=True)[:5]:
        print(f"  {name:<16} {t:.3f}s")
    return 0 if suite.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
