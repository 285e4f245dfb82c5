"""The contrast parameter and per-atom evidence likelihoods.

All quantities are :class:`fractions.Fraction`.  Rule comparisons in the
decider are done on integer numerators scaled to a common denominator,
so ties are decided exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Mapping, Optional, Union

import numpy as np

from .sentences import Domain, DomainError, Sentence

RationalLike = Union[Fraction, int, str]

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")

# Above this many atoms the best-atom scan goes through numpy.
_VECTOR_SCAN_MIN = 256


class EvidenceError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``a/b`` or an integer literal.  Decimals are rejected."""
    m = _RATIONAL.fullmatch(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r} (expected a/b)")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"{type(value).__name__} is not an exact rational; use Fraction")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class PiParam:
    """Ensemble contrast parameter, strictly between 0 and 1/2."""

    value: Fraction

    def __post_init__(self):
        value = as_rational(self.value)
        if not 0 < value < Fraction(1, 2):
            raise EvidenceError(f"pi must satisfy 0 < pi < 1/2, got {format_rational(value)}")
        object.__setattr__(self, "value", value)

    @property
    def threshold(self) -> Fraction:
        return threshold(self)

    def __str__(self):
        return format_rational(self.value)


def threshold(pi: PiParam) -> Fraction:
    """Likelihood ratio an atom must reach over its rival: (1 - pi) / pi."""
    return (1 - pi.value) / pi.value


class Evidence:
    """Likelihoods p(e | atom) for one evidence event.

    Nil evidence is represented by ``None`` wherever evidence is accepted.
    Likelihoods attach to atoms only; they need not sum to anything.
    """

    def __init__(self, domain: Domain, likelihoods: Union[Mapping[str, RationalLike], list]):
        if isinstance(likelihoods, Mapping):
            unknown = [a for a in likelihoods if a not in domain.index]
            if unknown:
                raise EvidenceError(f"evidence mentions unknown atom(s): {', '.join(map(str, unknown))}")
            missing = [a for a in domain.atoms if a not in likelihoods]
            if missing:
                raise EvidenceError(f"evidence has no likelihood for atom(s): {', '.join(missing)}")
            values = [as_rational(likelihoods[a]) for a in domain.atoms]
        else:
            if len(likelihoods) != len(domain):
                raise EvidenceError(f"expected {len(domain)} likelihoods, got {len(likelihoods)}")
            values = [as_rational(v) for v in likelihoods]
        for name, v in zip(domain.atoms, values):
            if not 0 <= v <= 1:
                raise EvidenceError(f"likelihood for {name} must lie in [0, 1], got {format_rational(v)}")
        if not any(values):
            raise EvidenceError("evidence with zero likelihood under every atom is impossible")
        self.domain = domain
        self.likelihoods = tuple(values)
        # Integer images on a common denominator: same order, same ratios.
        den = lcm(*(v.denominator for v in values))
        self.scaled = tuple(v.numerator * (den // v.denominator) for v in values)

    def __getitem__(self, atom: str) -> Fraction:
        return self.likelihoods[self.domain.index[atom]]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.domain.atoms, self.likelihoods))

    def replace(self, **updates: RationalLike) -> Evidence:
        values = self.as_dict()
        values.update(updates)
        return Evidence(self.domain, values)

    def __eq__(self, other):
        if not isinstance(other, Evidence):
            return NotImplemented
        return self.domain == other.domain and self.likelihoods == other.likelihoods

    def __hash__(self):
        return hash(self.likelihoods)

    def __repr__(self):
        if len(self.domain) > 8:
            return f"Evidence(<{len(self.domain)} atoms>)"
        body = " ".join(f"{a}={format_rational(v)}" for a, v in self.as_dict().items())
        return f"Evidence({body})"

    @cached_property
    def _array(self) -> np.ndarray:
        if max(self.scaled) < 2**62:
            return np.array(self.scaled, dtype=np.int64)
        return np.array(self.scaled, dtype=object)

    def best_index(self, mask: int) -> Optional[int]:
        """Index of a maximal-likelihood atom in ``mask``; lowest index on ties."""
        if not mask:
            return None
        scaled = self.scaled
        n = len(scaled)
        if n < _VECTOR_SCAN_MIN:
            best = -1
            best_value = -1
            m = mask
            while m:
                low = m & -m
                i = low.bit_length() - 1
                if scaled[i] > best_value:
                    best, best_value = i, scaled[i]
                m ^= low
            return best
        raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
        member = np.unpackbits(raw, bitorder="little", count=n).astype(bool)
        values = np.where(member, self._array, -1)
        return int(np.argmax(values))


def check_domain(sentence: Sentence, ev: Optional[Evidence]) -> None:
    if ev is not None and ev.domain is not sentence.domain and ev.domain != sentence.domain:
        raise DomainError("evidence and sentence belong to different domains")


def best_atom(s: Sentence, ev: Evidence) -> Optional[tuple[str, Fraction]]:
    """An atom of ``s`` with the greatest likelihood, with that likelihood.

    Returns None when ``s`` is false.  Ties go to the lowest atom index.
    """
    check_domain(s, ev)
    i = ev.best_index(s.mask)
    if i is None:
        return None
    return ev.domain.atoms[i], ev.likelihoods[i]
