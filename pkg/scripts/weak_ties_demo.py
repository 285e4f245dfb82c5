"""Six-atom example: ordering on equal likelihoods is not transitive,
while the strict rule keeps every triple transitive.

    python scripts/weak_ties_demo.py
"""
import itertools
from fractions import Fraction

import numpy as np

from belieforder.decider import TieMode, compare, decide
from belieforder.evidence import PiParam
from belieforder.fixtures import six_atoms
from belieforder.relation import build_relation


def count_intransitive(rel):
    m = rel.matrix.astype(np.int64)
    return int(np.sum(((m @ m) > 0) & ~rel.matrix))


def main():
    model = six_atoms()
    ev = model.evidence["e1"]
    S, T, U = (model.sentences[k] for k in "STU")
    for mode in TieMode:
        print(f"[{mode.value} ties, pi={model.pi}]")
        for (nx, x), (ny, y) in itertools.permutations(zip("STU", (S, T, U)), 2):
            print(f"  {nx} >= {ny}: {'asserted' if decide(x, y, ev, model.pi, mode) else 'not asserted'}")
        print(f"  S vs U: {compare(S, U, ev, model.pi, mode).value}")
    for pi in (Fraction(1, 3), Fraction(2, 5), Fraction(49, 100)):
        for mode in TieMode:
            rel = build_relation(model.domain, ev, PiParam(pi), mode=mode)
            print(f"all 64 sentences, pi={pi}, {mode.value}: {count_intransitive(rel)} pairs missing from the closure")


if __name__ == "__main__":
    main()
