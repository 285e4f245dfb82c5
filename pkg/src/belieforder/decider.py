"""Deciding S >=_e T without materializing the ensemble.

The procedure looks only at the atoms peculiar to each side and at the
best likelihood on each side, so a query costs O(N) regardless of how many
credal sets the ensemble holds.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional

from .evidence import Evidence, PiParam, check_domain
from .sentences import Sentence, check_same_domain


class TieMode(enum.Enum):
    STRICT = "strict"
    # Orders atoms on equal likelihood; breaks transitivity, demo use only.
    WEAK = "weak"


class Comparison(enum.Enum):
    EQUIVALENT = "equivalent"
    FIRST = "first"
    SECOND = "second"
    INCOMPARABLE = "incomparable"

    @classmethod
    def from_verdicts(cls, forward: bool, backward: bool) -> Comparison:
        if forward and backward:
            return cls.EQUIVALENT
        if forward:
            return cls.FIRST
        if backward:
            return cls.SECOND
        return cls.INCOMPARABLE


class Decision(NamedTuple):
    asserted: bool
    rule: int  # 0 for the nil-evidence rule, else 1..5


def explain(
    s: Sentence,
    t: Sentence,
    ev: Optional[Evidence],
    pi: PiParam,
    mode: TieMode = TieMode.STRICT,
) -> Decision:
    """Decide ``s >=_e t`` and report which rule settled it."""
    check_same_domain(s, t)
    check_domain(s, ev)
    sm, tm = s.mask, t.mask
    if ev is None:
        # Nil evidence: only implication orders sentences.
        return Decision(tm & ~sm == 0, 0)

    s_only = sm & ~tm
    t_only = tm & ~sm
    bs = ev.best_index(s_only)
    bt = ev.best_index(t_only)
    scaled = ev.scaled
    ls = scaled[bs] if bs is not None else 0
    lt = scaled[bt] if bt is not None else 0

    if ls == 0 and lt == 0:
        return Decision(True, 2)
    if bs is None:
        return Decision(False, 3)
    if bt is None:
        return Decision(True, 4)
    if lt == 0:
        return Decision(True, 5)
    if ls == 0:
        return Decision(False, 5)
    if mode is TieMode.WEAK:
        return Decision(ls >= lt, 5)
    # ls / lt >= (1 - pi) / pi, cleared of denominators
    p = pi.value
    return Decision(ls * p.numerator >= lt * (p.denominator - p.numerator), 5)


def decide(
    s: Sentence,
    t: Sentence,
    ev: Optional[Evidence],
    pi: PiParam,
    mode: TieMode = TieMode.STRICT,
) -> bool:
    """True when ``s`` is asserted at least as belief-worthy as ``t`` given ``ev``.

    ``ev=None`` is nil evidence.
    """
    return explain(s, t, ev, pi, mode).asserted


def compare(
    s: Sentence,
    t: Sentence,
    ev: Optional[Evidence],
    pi: PiParam,
    mode: TieMode = TieMode.STRICT,
) -> Comparison:
    return Comparison.from_verdicts(decide(s, t, ev, pi, mode), decide(t, s, ev, pi, mode))
