"""Brute-force decisions by enumerating every vertex of every credal set.

This is the slow reference path.  It never consults the decider's rules:
it revises each vertex with Bayes' formula and asks whether some set has
p(S|e) >= p(T|e) at all of its vertices.  Vertices at which the evidence
is impossible are skipped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .ensemble import Distribution, ensemble_vertices, revise
from .evidence import Evidence, PiParam, check_domain
from .sentences import Domain, Sentence, check_same_domain


def _revised_sets(domain: Domain, ev: Optional[Evidence], pi: PiParam) -> list[list[Distribution]]:
    sets = []
    for credal in ensemble_vertices(domain, pi):
        if ev is None:
            sets.append(list(credal.vertices))
        else:
            sets.append([q for q in (revise(v, ev) for v in credal.vertices) if q is not None])
    return sets


def decide_by_enumeration(
    s: Sentence,
    t: Sentence,
    ev: Optional[Evidence],
    pi: PiParam,
    anchors: Optional[Iterable[str]] = None,
) -> bool:
    """Assert ``s >=_e t`` iff one credal set agrees unanimously.

    ``anchors`` restricts the search to the sets of the named atoms.
    """
    check_same_domain(s, t)
    check_domain(s, ev)
    domain = s.domain
    wanted = None if anchors is None else {domain.index[a] for a in anchors}
    for k, credal in enumerate(ensemble_vertices(domain, pi)):
        if wanted is not None and k not in wanted:
            continue
        unanimous = True
        for vertex in credal.vertices:
            post = vertex if ev is None else revise(vertex, ev)
            if post is None:
                continue
            if post.prob(s) < post.prob(t):
                unanimous = False
                break
        if unanimous:
            return True
    return False


class EnumerationTable:
    """Every vertex posterior of one (domain, evidence, pi) instance, with
    p(X|e) tabulated for all 2**N sentences X.

    Answers the same question as :func:`decide_by_enumeration` in bulk;
    meant for exhaustive sweeps over small domains.
    """

    MAX_ATOMS = 12

    def __init__(self, domain: Domain, ev: Optional[Evidence], pi: PiParam):
        n = len(domain)
        if n > self.MAX_ATOMS:
            raise ValueError(f"tabulating 2**{n} sentences per vertex is too large")
        if ev is not None and ev.domain != domain:
            raise ValueError("evidence belongs to a different domain")
        self.domain = domain
        self.sets = []
        for vertices in _revised_sets(domain, ev, pi):
            self.sets.append([self._subset_sums(v.probs) for v in vertices])

    @staticmethod
    def _subset_sums(probs: tuple[Fraction, ...]) -> list[Fraction]:
        sums = [Fraction(0)] * (1 << len(probs))
        for m in range(1, len(sums)):
            low = m & -m
            sums[m] = sums[m ^ low] + probs[low.bit_length() - 1]
        return sums

    def holds(self, s_mask: int, t_mask: int) -> bool:
        for vertices in self.sets:
            if all(sums[s_mask] >= sums[t_mask] for sums in vertices):
                return True
        return False

    def decide(self, s: Sentence, t: Sentence) -> bool:
        check_same_domain(s, t)
        return self.holds(s.mask, t.mask)
