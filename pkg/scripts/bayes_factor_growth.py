"""Evidence contrast needed to order an atom over its negation: single
convex set versus the ensemble, as the number of atoms grows.

    python scripts/bayes_factor_growth.py --pi 1/10
"""
import argparse
from fractions import Fraction

from belieforder.baselines import SingleSetParam, min_bayes_factor
from belieforder.decider import decide
from belieforder.evidence import Evidence, PiParam, format_rational, parse_rational, threshold
from belieforder.sentences import Domain


def ensemble_min_factor(domain, pi):
    # smallest B (on a 1/64 grid) with p(e|a0) = B x, p(e|other) = x that orders a0 over not a0
    s = domain.atom(domain.atoms[0])
    for k in range(64, 64 * 200):
        b = Fraction(k, 64)
        ev = Evidence(domain, [Fraction(1)] + [1 / b] * (len(domain) - 1))
        if decide(s, ~s, ev, pi):
            return b
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pi", type=parse_rational, default=Fraction(1, 10))
    parser.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 5, 10, 20, 50, 100])
    args = parser.parse_args()
    pi = PiParam(args.pi)
    print(f"ensemble pi={pi}, threshold (1-pi)/pi = {format_rational(threshold(pi))}")
    print(f"{'N':>4} {'c':>10} {'single-set B':>14} {'N-1':>5} {'ensemble B':>11}")
    for n in args.sizes:
        d = Domain.of_size(n)
        c = SingleSetParam(Fraction(1, 2 * n - 2) / 2, n)
        b = min_bayes_factor(d, c)
        print(f"{n:>4} {format_rational(c.c):>10} {format_rational(b):>14} {n - 1:>5} "
              f"{format_rational(ensemble_min_factor(d, pi)):>11}")


if __name__ == "__main__":
    main()
