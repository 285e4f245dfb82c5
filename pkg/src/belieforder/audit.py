"""Executable checks of the ordering axioms and qualitative-probability laws.

Each property is a predicate over an :class:`Instance` and a tuple of
sentences.  It returns None when the tuple does not meet the property's
preconditions, True when the property holds and False on a violation.
Violations are recorded as :class:`Witness` objects that carry everything
needed to rebuild the instance, so :func:`replay` can re-check them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .baselines import Formalism, SingleSetParam, single_prior_order, single_set_order
from .decider import TieMode, decide
from .ensemble import Distribution
from .evidence import Evidence, PiParam, format_rational, parse_rational
from .model import ModelFile
from .sentences import Domain, Sentence

_DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 12)
_PIS = tuple(Fraction(k, d) for d in (3, 4, 5, 7, 8, 10, 100) for k in range(1, d) if Fraction(k, d) < Fraction(1, 2))


@dataclass
class Instance:
    domain: Domain
    ev: Optional[Evidence]
    formalism: Formalism = Formalism.ENSEMBLE
    pi: Optional[PiParam] = None
    prior: Optional[Distribution] = None
    c: Optional[SingleSetParam] = None
    mode: TieMode = TieMode.STRICT

    def order(self, s: Sentence, t: Sentence, ev: Optional[Evidence] = ...) -> bool:
        if ev is ...:
            ev = self.ev
        if self.formalism is Formalism.ENSEMBLE:
            return decide(s, t, ev, self.pi, self.mode)
        if self.formalism is Formalism.SINGLE_PRIOR:
            return single_prior_order(self.prior, s, t, ev)
        return single_set_order(self.domain, self.c, s, t, ev)

    def likelihood(self, i: int) -> Fraction:
        return self.ev.likelihoods[i]

    def describe(self) -> dict:
        d = {"formalism": self.formalism.value, "atoms": list(self.domain.atoms), "mode": self.mode.value}
        d["evidence"] = None if self.ev is None else {a: format_rational(v) for a, v in self.ev.as_dict().items()}
        if self.pi is not None:
            d["pi"] = str(self.pi)
        if self.prior is not None:
            d["prior"] = [format_rational(p) for p in self.prior.probs]
        if self.c is not None:
            d["c"] = format_rational(self.c.c)
        return d

    @classmethod
    def from_description(cls, d: dict) -> Instance:
        domain = Domain(d["atoms"])
        ev = None if d["evidence"] is None else Evidence(domain, d["evidence"])
        inst = cls(domain, ev, Formalism(d["formalism"]), mode=TieMode(d["mode"]))
        if "pi" in d:
            inst.pi = PiParam(parse_rational(d["pi"]))
        if "prior" in d:
            inst.prior = Distribution(tuple(parse_rational(p) for p in d["prior"]))
        if "c" in d:
            inst.c = SingleSetParam(parse_rational(d["c"]), len(domain))
        return inst


# -- properties ---------------------------------------------------------------


def _boundedness(inst, s):
    d = inst.domain
    return inst.order(d.true(), s) and inst.order(s, d.false())


def _transitivity(inst, s, t, u):
    if not (inst.order(s, t) and inst.order(t, u)):
        return None
    return inst.order(s, u)


def _quasi_additivity(inst, s, t, u):
    if not (u.exclusive_of(s) and u.exclusive_of(t)):
        return None
    return inst.order(s | u, t | u) == inst.order(s, t)


def _complementarity(inst, s, t):
    if not inst.order(s, t):
        return None
    return inst.order(~t, ~s)


def _lemma(inst, a, b, c, d):
    if not (a.exclusive_of(b) and c.exclusive_of(d)):
        return None
    if not (inst.order(a, b) and inst.order(c, d)):
        return None
    return inst.order(a | c, b | d)


def _a1(inst, s, t):
    if not inst.order(s, t, None):
        return None
    return t.implies(s)


def _a3(inst, s, t):
    if not t.implies(s):
        return None
    return inst.order(s, t) and inst.order(s, t, None)


def _max_likelihood(inst, s):
    return max(inst.likelihood(i) for i in s.indices())


def _a4(inst, s, t, s2, t2):
    # Sufficient-condition form: every atom of s2 is at least as well
    # supported as the best atom of s, and no atom of t2 beats the best of t.
    if inst.ev is None or s.is_false or t.is_false or not s.exclusive_of(t):
        return None
    if not inst.order(s, t):
        return None
    checks = []
    if not s2.is_false and s2.exclusive_of(t):
        if min(inst.likelihood(i) for i in s2.indices()) >= _max_likelihood(inst, s):
            checks.append(inst.order(s2, t))
    if not t2.is_false and t2.exclusive_of(s):
        if _max_likelihood(inst, t2) <= _max_likelihood(inst, t):
            checks.append(inst.order(s, t2))
    if not checks:
        return None
    return all(checks)


def _is_atom(s):
    return len(s) == 1


def _a5_advantage(inst, s, t):
    if inst.ev is None or not (_is_atom(s) and _is_atom(t)) or s == t:
        return None
    if not inst.order(s, t):
        return None
    ls, lt = _max_likelihood(inst, s), _max_likelihood(inst, t)
    return ls > lt if ls > 0 else ls >= lt


def _a5_recovery(inst, s, t):
    # A positively supported atom can come out ahead of a rival whose
    # likelihood is small but still positive.
    if inst.ev is None or not (_is_atom(s) and _is_atom(t)) or s == t:
        return None
    ls = _max_likelihood(inst, s)
    if ls == 0:
        return None
    (t_name,) = t.atoms()
    for k in range(1, 65):
        ev = inst.ev.replace(**{t_name: ls / 2**k})
        if inst.order(s, t, ev):
            return True
    return False


def _a6(inst, s, t, u, u2):
    if not (u.exclusive_of(s) and u.exclusive_of(t) and u2.implies(u)):
        return None
    ok = True
    engaged = False
    if inst.order(s | u2, t | u):
        engaged = True
        ok &= inst.order(s, t)
    if inst.order(s, t):
        engaged = True
        ok &= inst.order(s | u, t | u2)
    return ok if engaged else None


def _exclusive_antisymmetry(inst, s, t):
    # Exclusive sentences cannot each be asserted over the other unless
    # both are impossible given the evidence.
    if s.is_false or t.is_false or not s.exclusive_of(t):
        return None
    if inst.ev is not None and all(inst.likelihood(i) == 0 for i in (s | t).indices()):
        return None
    return not (inst.order(s, t) and inst.order(t, s))


def _random_sentence(rng: random.Random, domain: Domain, within: Optional[int] = None) -> Sentence:
    full = domain.full_mask if within is None else within
    return Sentence(domain, rng.getrandbits(len(domain)) & full)


def _atom(rng, domain):
    return Sentence(domain, 1 << rng.randrange(len(domain)))


def _draw_any(k):
    return lambda rng, inst: tuple(_random_sentence(rng, inst.domain) for _ in range(k))


def _draw_with_exclusive_third(rng, inst):
    d = inst.domain
    s, t = _random_sentence(rng, d), _random_sentence(rng, d)
    u = _random_sentence(rng, d, d.full_mask & ~(s.mask | t.mask))
    return s, t, u


def _draw_two_exclusive_pairs(rng, inst):
    d = inst.domain
    a = _random_sentence(rng, d)
    b = _random_sentence(rng, d, d.full_mask & ~a.mask)
    c = _random_sentence(rng, d)
    dd = _random_sentence(rng, d, d.full_mask & ~c.mask)
    return a, b, c, dd


def _draw_implication(rng, inst):
    s = _random_sentence(rng, inst.domain)
    return s, _random_sentence(rng, inst.domain, s.mask)


def _draw_a4(rng, inst):
    d = inst.domain
    s = _random_sentence(rng, d)
    t = _random_sentence(rng, d, d.full_mask & ~s.mask)
    s2 = _random_sentence(rng, d, d.full_mask & ~t.mask)
    t2 = _random_sentence(rng, d, d.full_mask & ~s.mask)
    return s, t, s2, t2


def _draw_atoms(rng, inst):
    return _atom(rng, inst.domain), _atom(rng, inst.domain)


def _draw_a6(rng, inst):
    s, t, u = _draw_with_exclusive_third(rng, inst)
    return s, t, u, _random_sentence(rng, inst.domain, u.mask)


def _draw_exclusive(rng, inst):
    d = inst.domain
    s = _random_sentence(rng, d)
    return s, _random_sentence(rng, d, d.full_mask & ~s.mask)


@dataclass(frozen=True)
class Property:
    name: str
    arity: int
    check: Callable[..., Optional[bool]]
    draw: Callable[[random.Random, Instance], tuple]


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in [
        Property("boundedness", 1, _boundedness, _draw_any(1)),
        Property("transitivity", 3, _transitivity, _draw_any(3)),
        Property("quasi-additivity", 3, _quasi_additivity, _draw_with_exclusive_third),
        Property("complementarity", 2, _complementarity, _draw_any(2)),
        Property("disjunction-lemma", 4, _lemma, _draw_two_exclusive_pairs),
        Property("A1-nil-implication", 2, _a1, _draw_any(2)),
        Property("A3-consistency", 2, _a3, _draw_implication),
        Property("A4-impartiality", 4, _a4, _draw_a4),
        Property("A5-strict-advantage", 2, _a5_advantage, _draw_atoms),
        Property("A5-recovery", 2, _a5_recovery, _draw_atoms),
        Property("A6-dominance", 4, _a6, _draw_a6),
        Property("exclusive-antisymmetry", 2, _exclusive_antisymmetry, _draw_exclusive),
    ]
}


# -- reports ------------------------------------------------------------------


@dataclass
class Witness:
    prop: str
    instance: dict
    sentences: list[str]

    def describe(self) -> str:
        inst = self.instance
        parts = [f"{self.prop} fails for ({', '.join(self.sentences)})"]
        parts.append("evidence nil" if inst["evidence"] is None else
                     "evidence " + " ".join(f"{a}={v}" for a, v in inst["evidence"].items()))
        for key in ("pi", "c"):
            if key in inst:
                parts.append(f"{key}={inst[key]}")
        if "prior" in inst:
            parts.append(f"prior=({', '.join(inst['prior'])})")
        parts.append(f"{inst['formalism']}/{inst['mode']}")
        return "; ".join(parts)


def replay(witness: Witness) -> Optional[bool]:
    """Re-evaluate a witness; False means the violation reproduces."""
    inst = Instance.from_description(witness.instance)
    sentences = [inst.domain.parse(s) for s in witness.sentences]
    return PROPERTIES[witness.prop].check(inst, *sentences)


@dataclass
class PropertyResult:
    name: str
    checked: int = 0  # cases meeting the preconditions
    drawn: int = 0
    violations: int = 0
    witness: Optional[Witness] = None

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} applicable of {self.drawn} cases, {self.violations} violations"
        if self.witness is not None:
            text += f"\n     witness: {self.witness.describe()}"
        return text


@dataclass
class AuditReport:
    seed: int
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def __getitem__(self, name: str) -> PropertyResult:
        return self.results[name]

    def render(self) -> str:
        lines = [f"audit seed={self.seed}"]
        lines += [r.line() for r in self.results.values()]
        failed = sum(not r.passed for r in self.results.values())
        lines.append(f"{len(self.results) - failed} passed, {failed} failed")
        return "\n".join(lines)


@dataclass
class AuditConfig:
    trials: int = 1000
    min_atoms: int = 2
    max_atoms: int = 5
    seed: int = 0
    formalism: Formalism = Formalism.ENSEMBLE
    mode: TieMode = TieMode.STRICT
    nil_rate: float = 0.1
    properties: Optional[Sequence[str]] = None
    c: Optional[Fraction] = None  # single-set bound for model audits
    # Keep drawing past ``trials`` until this many cases were applicable,
    # giving up after ``max_draw_factor * trials`` draws.
    min_checked: int = 0
    max_draw_factor: int = 200


def random_likelihood(rng: random.Random) -> Fraction:
    d = rng.choice(_DENOMINATORS)
    return Fraction(rng.randint(0, d), d)


def random_evidence(rng: random.Random, domain: Domain) -> Evidence:
    values = [random_likelihood(rng) for _ in domain.atoms]
    if not any(values):
        values[rng.randrange(len(values))] = Fraction(1)
    return Evidence(domain, values)


def random_pi(rng: random.Random) -> PiParam:
    return PiParam(rng.choice(_PIS))


def random_instance(rng: random.Random, config: AuditConfig) -> Instance:
    n = rng.randint(config.min_atoms, config.max_atoms)
    domain = Domain.of_size(n)
    ev = None if rng.random() < config.nil_rate else random_evidence(rng, domain)
    inst = Instance(domain, ev, config.formalism, mode=config.mode)
    if config.formalism is Formalism.ENSEMBLE:
        inst.pi = random_pi(rng)
    elif config.formalism is Formalism.SINGLE_PRIOR:
        weights = [rng.randint(1, 6) for _ in range(n)]
        inst.prior = Distribution(tuple(Fraction(w, sum(weights)) for w in weights))
    else:
        bound = Fraction(1, 2 * n - 2)
        inst.c = SingleSetParam(bound * Fraction(rng.randint(1, 9), 10), n)
    return inst


def _model_instances(model: ModelFile, config: AuditConfig) -> list[Instance]:
    n = len(model.domain)
    out = []
    for ev in [None, *model.evidence.values()]:
        inst = Instance(model.domain, ev, config.formalism, mode=config.mode)
        if config.formalism is Formalism.ENSEMBLE:
            inst.pi = model.pi
        elif config.formalism is Formalism.SINGLE_PRIOR:
            inst.prior = Distribution(tuple(Fraction(1, n) for _ in range(n)))
        else:
            c = config.c if config.c is not None else Fraction(1, 4 * n - 4)
            inst.c = SingleSetParam(c, n)
        out.append(inst)
    return out


def _record(result: PropertyResult, prop: Property, inst: Instance, sentences) -> None:
    result.drawn += 1
    verdict = prop.check(inst, *sentences)
    if verdict is None:
        return
    result.checked += 1
    if not verdict:
        result.violations += 1
        if result.witness is None:
            result.witness = Witness(prop.name, inst.describe(), [str(s) for s in sentences])


def run_audit(model: Optional[ModelFile] = None, config: Optional[AuditConfig] = None) -> AuditReport:
    """Check every property over ``config.trials`` seeded random cases.

    Without a model each case draws a fresh random instance.  With a model,
    each of its evidence entries (and nil) is used in turn; tuples of the
    model's named sentences are checked exhaustively before random cases.
    """
    config = config or AuditConfig()
    names = config.properties or list(PROPERTIES)
    report = AuditReport(config.seed)
    model_instances = _model_instances(model, config) if model is not None else None
    for name in names:
        prop = PROPERTIES[name]
        # Each property gets its own stream so results do not depend on
        # which other properties were selected.
        rng = random.Random(f"{config.seed}:{name}")
        result = PropertyResult(name)
        if model_instances is not None:
            named = list(model.sentences.values())
            for inst in model_instances:
                for combo in itertools.product(named, repeat=prop.arity):
                    _record(result, prop, inst, combo)
        k = 0
        while k < config.trials or (
            result.checked < config.min_checked and k < config.max_draw_factor * max(config.trials, 1)
        ):
            if model_instances is not None:
                inst = model_instances[k % len(model_instances)]
            else:
                inst = random_instance(rng, config)
            _record(result, prop, inst, prop.draw(rng, inst))
            k += 1
        report.results[name] = result
    return report
