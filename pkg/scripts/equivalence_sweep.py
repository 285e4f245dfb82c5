"""Compare the fast decider against full vertex enumeration on random instances.

    python scripts/equivalence_sweep.py --max-atoms 6 --instances 100
"""
import argparse
import random
import time

from belieforder.audit import random_evidence, random_pi
from belieforder.decider import decide
from belieforder.oracle import EnumerationTable
from belieforder.sentences import Domain, Sentence


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-atoms", type=int, default=2)
    parser.add_argument("--max-atoms", type=int, default=5)
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--nil-rate", type=float, default=0.1)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    total_bad = 0
    for n in range(args.min_atoms, args.max_atoms + 1):
        domain = Domain.of_size(n)
        start = time.perf_counter()
        pairs = bad = 0
        for _ in range(args.instances):
            ev = None if rng.random() < args.nil_rate else random_evidence(rng, domain)
            pi = random_pi(rng)
            table = EnumerationTable(domain, ev, pi)
            for sm in range(1 << n):
                s = Sentence(domain, sm)
                for tm in range(1 << n):
                    pairs += 1
                    if decide(s, Sentence(domain, tm), ev, pi) != table.holds(sm, tm):
                        bad += 1
                        print(f"  disagreement: N={n} S={s} T={Sentence(domain, tm)} ev={ev} pi={pi}")
        total_bad += bad
        print(f"N={n}: {pairs} pairs, {bad} disagreements, {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if total_bad else 0)


if __name__ == "__main__":
    main()
