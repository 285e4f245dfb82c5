"""Simpler probabilistic formalisms that the ensemble is measured against.

Two rivals are modelled under the unanimous agreement rule: a single prior
distribution, and the single convex set {p(s) >= c for every atom s}.
Both can be made to break impartiality; the searches here produce concrete,
re-verified likelihood assignments that show it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .decider import decide
from .ensemble import Distribution, revise
from .evidence import Evidence, PiParam, as_rational, check_domain, format_rational
from .sentences import Domain, Sentence, check_same_domain


class Formalism(enum.Enum):
    ENSEMBLE = "ensemble"
    SINGLE_PRIOR = "single-prior"
    SINGLE_SET = "single-set"


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SingleSetParam:
    """Lower bound ``c`` on every atom's probability; 0 < c < 1/(2N - 2)."""

    c: Fraction
    n_atoms: int

    def __post_init__(self):
        c = as_rational(self.c)
        bound = Fraction(1, 2 * self.n_atoms - 2)
        if not 0 < c < bound:
            raise ValueError(f"c must satisfy 0 < c < {format_rational(bound)}, got {format_rational(c)}")
        object.__setattr__(self, "c", c)


def uniform_prior(domain: Domain) -> Distribution:
    n = len(domain)
    return Distribution(tuple(Fraction(1, n) for _ in range(n)))


def single_prior_order(prior: Distribution, s: Sentence, t: Sentence, ev: Optional[Evidence]) -> bool:
    """p(s|e) >= p(t|e) under one prior; with nil evidence compare priors."""
    check_same_domain(s, t)
    check_domain(s, ev)
    if len(prior) != len(s.domain):
        raise ValueError("prior does not match the domain")
    post = prior
    if ev is not None:
        post = revise(prior, ev)
        if post is None:
            raise ValueError("evidence has probability zero under the prior")
    return post.prob(s) >= post.prob(t)


def single_set_vertices(domain: Domain, c: SingleSetParam) -> list[Distribution]:
    """Vertices of {p >= c, sum p = 1}: one atom at 1 - (N-1)c, the rest at c."""
    n = len(domain)
    if c.n_atoms != n:
        raise ValueError("c was validated for a different number of atoms")
    big = 1 - (n - 1) * c.c
    return [
        Distribution(tuple(big if i == k else c.c for i in range(n)))
        for k in range(n)
    ]


def single_set_order(domain: Domain, c: SingleSetParam, s: Sentence, t: Sentence, ev: Optional[Evidence]) -> bool:
    check_same_domain(s, t)
    check_domain(s, ev)
    for vertex in single_set_vertices(domain, c):
        post = vertex if ev is None else revise(vertex, ev)
        if post is None:
            continue
        if post.prob(s) < post.prob(t):
            return False
    return True


def min_bayes_factor(domain: Domain, c: SingleSetParam, atom: Optional[str] = None) -> Fraction:
    """Smallest B with p(e|s) = B x and p(e|t) = x elsewhere that makes the
    single set assert ``s >= not s``.

    At a vertex giving s prior mass q the posterior odds of s against not-s
    are B q / (1 - q), so B must reach (1 - q) / q at every vertex.
    """
    k = 0 if atom is None else domain.index[atom]
    return max((1 - v.probs[k]) / v.probs[k] for v in single_set_vertices(domain, c))


# -- witnesses ----------------------------------------------------------------


@dataclass
class ImpartialityWitness:
    """Likelihoods under which ``u`` is strictly ahead of ``s`` but ``u >= s or t``
    is not asserted, although p(e|s) = p(e|t) makes the evidence for
    ``s or t`` no stronger."""

    formalism: Formalism
    evidence: Evidence
    u: Sentence
    s: Sentence
    s_or_t: Sentence
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        lk = " ".join(f"{a}={format_rational(v)}" for a, v in self.evidence.as_dict().items())
        return (
            f"{self.formalism.value}: evidence {lk}; "
            f"asserted {self.u} >= {self.s}; not asserted {self.u} >= {self.s_or_t}"
        )


def order_for(formalism: Formalism, domain: Domain, params: dict) -> Callable[[Sentence, Sentence, Optional[Evidence]], bool]:
    """An ``order(S, T, ev)`` callable for one formalism and parameter set.

    ``params`` keys: ``pi`` (ensemble), ``prior`` (single prior, defaults to
    uniform), ``c`` (single set).
    """
    if formalism is Formalism.ENSEMBLE:
        pi = params["pi"]
        if not isinstance(pi, PiParam):
            pi = PiParam(pi)
        return lambda s, t, ev: decide(s, t, ev, pi)
    if formalism is Formalism.SINGLE_PRIOR:
        prior = params.get("prior") or uniform_prior(domain)
        return lambda s, t, ev: single_prior_order(prior, s, t, ev)
    if formalism is Formalism.SINGLE_SET:
        c = params["c"]
        if not isinstance(c, SingleSetParam):
            c = SingleSetParam(c, len(domain))
        return lambda s, t, ev: single_set_order(domain, c, s, t, ev)
    raise ValueError(f"unknown formalism {formalism!r}")


def _grid(denominator: int) -> list[Fraction]:
    return [Fraction(k, denominator) for k in range(1, denominator + 1)]


def impartiality_witness(
    formalism: Formalism,
    domain: Domain,
    params: Optional[dict] = None,
    max_denominator: int = 256,
) -> ImpartialityWitness:
    """Search rational likelihoods for an impartiality violation.

    A witness has ``u`` strictly ahead of ``s`` yet not asserted over
    ``s or t``, although p(e|s) = p(e|t).  The first three atoms play the roles s, t, u; p(e|s) = p(e|t) and the
    remaining atoms share that likelihood.  The grid of denominators doubles
    from 4 up to ``max_denominator``.  Raises :class:`SearchExhausted` when
    nothing is found, which is the expected outcome for the ensemble.
    """
    if len(domain) < 3:
        raise ValueError("impartiality witnesses need at least three atoms")
    params = dict(params or {})
    order = order_for(formalism, domain, params)
    s_name, t_name, u_name = domain.atoms[:3]
    s, t, u = domain.atom(s_name), domain.atom(t_name), domain.atom(u_name)
    s_or_t = s | t

    seen = set()
    den = 4
    while den <= max_denominator:
        for ls, lu in itertools.product(_grid(den), repeat=2):
            if (ls, lu) in seen:
                continue
            seen.add((ls, lu))
            values = {a: ls for a in domain.atoms}
            values[u_name] = lu
            ev = Evidence(domain, values)
            try:
                if order(u, s, ev) and not order(s, u, ev) and not order(u, s_or_t, ev):
                    return _verified(formalism, domain, params, ev, u, s, s_or_t)
            except ValueError:
                continue
        den *= 2
    raise SearchExhausted(f"no impartiality witness for {formalism.value} up to denominator {max_denominator}")


def _verified(formalism, domain, params, ev, u, s, s_or_t) -> ImpartialityWitness:
    # Re-run both verdicts through a freshly built order before reporting.
    order = order_for(formalism, domain, params)
    if ev[s.atoms()[0]] != ev[(s_or_t - s).atoms()[0]] or ev[s.atoms()[0]] <= 0:
        raise AssertionError("witness does not have equal positive likelihoods on s and t")
    if not order(u, s, ev) or order(s, u, ev) or order(u, s_or_t, ev):
        raise AssertionError("witness failed re-verification")
    return ImpartialityWitness(formalism, ev, u, s, s_or_t, {k: str(v) for k, v in params.items()})


@dataclass(frozen=True)
class CompletenessWitness:
    """Implication-unrelated sentences that a prior orders on nil evidence."""

    first: Sentence
    second: Sentence
    forward: bool
    backward: bool


def single_prior_completeness_witness(prior: Distribution, domain: Domain) -> CompletenessWitness:
    """A nil-evidence ordering between sentences neither of which implies the other."""
    if len(domain) <= 12:
        candidates = domain.all_sentences()
    else:
        candidates = [domain.atom(a) for a in domain.atoms]
    for s, t in itertools.combinations(candidates, 2):
        if s.implies(t) or t.implies(s):
            continue
        forward = single_prior_order(prior, s, t, None)
        backward = single_prior_order(prior, t, s, None)
        if forward or backward:
            return CompletenessWitness(s, t, forward, backward)
    raise SearchExhausted("prior produced no non-trivial nil ordering")


def bayes_factor_table(ns: Sequence[int], cs_per_n: int = 4) -> list[tuple[int, Fraction, Fraction]]:
    """Rows (N, c, min Bayes factor) over a spread of legal c for each N."""
    rows = []
    for n in ns:
        domain = Domain.of_size(n)
        bound = Fraction(1, 2 * n - 2)
        for k in range(1, cs_per_n + 1):
            c = SingleSetParam(bound * Fraction(k, cs_per_n + 1), n)
            rows.append((n, c.c, min_bayes_factor(domain, c)))
    return rows
