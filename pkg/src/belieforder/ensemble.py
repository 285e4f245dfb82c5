"""The ensemble of credal sets and per-vertex Bayes revision.

For every atom s the ensemble holds the convex set {p(s) >= pi, p >= 0,
sum p = 1}.  Its N vertices are written down directly: the unit mass on s,
and for each other atom t the distribution with pi on s and 1 - pi on t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .evidence import Evidence, PiParam, format_rational
from .sentences import Domain, Sentence


@dataclass(frozen=True)
class Distribution:
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(self.probs)
        if any(not 0 <= p <= 1 for p in probs):
            raise ValueError("probabilities must lie in [0, 1]")
        if sum(probs) != 1:
            raise ValueError(f"probabilities sum to {sum(probs)}, not 1")
        object.__setattr__(self, "probs", probs)

    def __len__(self):
        return len(self.probs)

    def prob(self, s: Sentence) -> Fraction:
        probs = self.probs
        return sum((probs[i] for i in s.indices()), Fraction(0))

    def __str__(self):
        return "(" + ", ".join(format_rational(p) for p in self.probs) + ")"


@dataclass(frozen=True)
class CredalSetVertices:
    anchor: str
    vertices: tuple[Distribution, ...]


def credal_set_vertices(domain: Domain, pi: PiParam, anchor: str) -> CredalSetVertices:
    n = len(domain)
    a = domain.index[anchor]
    zero, one, low = Fraction(0), Fraction(1), pi.value
    vertices = []
    for t in range(n):
        probs = [zero] * n
        if t == a:
            probs[a] = one
        else:
            probs[a] = low
            probs[t] = one - low
        vertices.append(Distribution(tuple(probs)))
    return CredalSetVertices(anchor, tuple(vertices))


def ensemble_vertices(domain: Domain, pi: PiParam) -> list[CredalSetVertices]:
    """One vertex list per atom, in domain order."""
    return [credal_set_vertices(domain, pi, a) for a in domain.atoms]


def revise(prior: Distribution, ev: Evidence) -> Optional[Distribution]:
    """Bayes' formula at one vertex; None when p(e) is zero there."""
    if len(prior) != len(ev.likelihoods):
        raise ValueError("prior and evidence disagree on the number of atoms")
    joint = [p * lk for p, lk in zip(prior.probs, ev.likelihoods)]
    p_e = sum(joint)
    if p_e == 0:
        return None
    return Distribution(tuple(j / p_e for j in joint))


def posterior_ratio(pi: PiParam, ls: Fraction, lt: Fraction) -> Optional[Fraction]:
    """p(s|e) / p(t|e) at the vertex with pi on s and 1 - pi on t."""
    if lt == 0:
        return None
    return pi.value / (1 - pi.value) * Fraction(ls) / Fraction(lt)
