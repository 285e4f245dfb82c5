"""Line-oriented model files.

    # comment
    atoms: i j k l m n
    pi: 2/5
    evidence e1: i=3/5 j=2/5 k=1/2 l=3/5 m=2/5 n=1/2
    sentence S: i or j or m

``atoms`` and ``pi`` are required.  ``evidence`` and ``sentence`` lines are
optional and repeatable; their names must be unique.  The evidence name
``nil`` is reserved and always refers to no evidence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .evidence import Evidence, EvidenceError, PiParam, format_rational, parse_rational
from .sentences import Domain, DomainError, Sentence, SentenceSyntaxError, parse_sentence

NIL = "nil"
_NAMED = re.compile(r"(evidence|sentence)\s+(\w+)\s*:(.*)")


class ModelError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass
class ModelFile:
    domain: Domain
    pi: PiParam
    evidence: dict[str, Evidence] = field(default_factory=dict)
    sentences: dict[str, Sentence] = field(default_factory=dict)

    def get_evidence(self, name: str) -> Optional[Evidence]:
        if name == NIL:
            return None
        try:
            return self.evidence[name]
        except KeyError:
            known = ", ".join([NIL, *self.evidence]) or NIL
            raise ModelError(f"no evidence named {name!r} (known: {known})") from None

    def sentence(self, text: str) -> Sentence:
        """A named sentence from the model, or else a parsed expression."""
        if text in self.sentences:
            return self.sentences[text]
        return parse_sentence(text, self.domain)


def load_model(text: str) -> ModelFile:
    domain = pi = None
    evidence_lines: list[tuple[int, str, str]] = []
    sentence_lines: list[tuple[int, str, str]] = []
    names: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        named = _NAMED.fullmatch(line)
        if named:
            kind, name, body = named.groups()
            if name == NIL:
                raise ModelError("'nil' is reserved", lineno)
            if (kind, name) in names:
                raise ModelError(f"duplicate {kind} name {name!r}", lineno)
            names.add((kind, name))
            (evidence_lines if kind == "evidence" else sentence_lines).append((lineno, name, body))
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise ModelError(f"expected 'key: value', got {line!r}", lineno)
        if key == "atoms":
            if domain is not None:
                raise ModelError("atoms given twice", lineno)
            try:
                domain = Domain(value.split())
            except DomainError as exc:
                raise ModelError(str(exc), lineno) from None
        elif key == "pi":
            if pi is not None:
                raise ModelError("pi given twice", lineno)
            try:
                pi = PiParam(parse_rational(value.strip()))
            except ValueError as exc:
                raise ModelError(str(exc), lineno) from None
        else:
            raise ModelError(f"unknown key {key!r}", lineno)

    if domain is None:
        raise ModelError("missing 'atoms:' line")
    if pi is None:
        raise ModelError("missing 'pi:' line")

    model = ModelFile(domain, pi)
    for lineno, name, body in evidence_lines:
        values = {}
        for item in body.split():
            atom, eq, rat = item.partition("=")
            if not eq:
                raise ModelError(f"expected atom=a/b, got {item!r}", lineno)
            if atom in values:
                raise ModelError(f"atom {atom!r} given twice", lineno)
            try:
                values[atom] = parse_rational(rat)
            except ValueError as exc:
                raise ModelError(str(exc), lineno) from None
        try:
            model.evidence[name] = Evidence(domain, values)
        except EvidenceError as exc:
            raise ModelError(str(exc), lineno) from None
    for lineno, name, body in sentence_lines:
        try:
            model.sentences[name] = parse_sentence(body, domain)
        except SentenceSyntaxError as exc:
            raise ModelError(str(exc), lineno) from None
    return model


def dump_model(model: ModelFile) -> str:
    lines = [f"atoms: {' '.join(model.domain.atoms)}", f"pi: {model.pi}"]
    for name, ev in model.evidence.items():
        body = " ".join(f"{a}={format_rational(v)}" for a, v in ev.as_dict().items())
        lines.append(f"evidence {name}: {body}")
    for name, s in model.sentences.items():
        lines.append(f"sentence {name}: {s}")
    return "\n".join(lines) + "\n"


def read_model(path) -> ModelFile:
    with open(path, encoding="utf-8") as fh:
        return load_model(fh.read())
