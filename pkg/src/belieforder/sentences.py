"""Partitioned domains and their sentence algebra.

Atoms are exclusive and exhaustive, so every boolean sentence over them
is equivalent to a disjunction of atoms.  A :class:`Sentence` stores that
disjunction as a bit mask over the domain's atom order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

RESERVED = frozenset({"true", "false", "nil", "or", "and", "not"})
ATOM_NAME = re.compile(r"\w+")


class DomainError(ValueError):
    """Raised for malformed domains or cross-domain operations."""


class SentenceSyntaxError(ValueError):
    """A sentence failed to parse.  ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Domain:
    """An ordered, finite set of exclusive and exhaustive atoms."""

    __slots__ = ("atoms", "index", "_hash")

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if len(atoms) < 2:
            raise DomainError("a partitioned domain needs at least two atoms")
        index = {}
        for i, name in enumerate(atoms):
            if not isinstance(name, str) or not ATOM_NAME.fullmatch(name):
                raise DomainError(f"invalid atom name {name!r}")
            if name in RESERVED:
                raise DomainError(f"atom name {name!r} is a reserved word")
            if name in index:
                raise DomainError(f"duplicate atom {name!r}")
            index[name] = i
        self.atoms = atoms
        self.index = index
        self._hash = hash(atoms)

    @classmethod
    def of_size(cls, n: int, prefix: str = "a") -> Domain:
        return cls(f"{prefix}{i}" for i in range(n))

    def __len__(self) -> int:
        return len(self.atoms)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Domain):
            return NotImplemented
        return self._hash == other._hash and self.atoms == other.atoms

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if len(self.atoms) > 8:
            return f"Domain(<{len(self.atoms)} atoms>)"
        return f"Domain({list(self.atoms)!r})"

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def true(self) -> Sentence:
        return Sentence(self, self.full_mask)

    def false(self) -> Sentence:
        return Sentence(self, 0)

    def atom(self, name: str) -> Sentence:
        try:
            return Sentence(self, 1 << self.index[name])
        except KeyError:
            raise DomainError(f"unknown atom {name!r}") from None

    def sentence(self, names: Iterable[str]) -> Sentence:
        mask = 0
        for name in names:
            mask |= self.atom(name).mask
        return Sentence(self, mask)

    def all_sentences(self) -> list[Sentence]:
        """Every sentence of the domain, ordered by mask (2**N of them)."""
        return [Sentence(self, m) for m in range(1 << len(self.atoms))]

    def parse(self, text: str) -> Sentence:
        return parse_sentence(text, self)


@dataclass(frozen=True)
class Sentence:
    """A simple disjunction, held as a bit mask over ``domain.atoms``."""

    domain: Domain
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.domain.atoms):
            raise DomainError("sentence mask has bits outside the domain")

    @property
    def is_true(self) -> bool:
        return self.mask == self.domain.full_mask

    @property
    def is_false(self) -> bool:
        return self.mask == 0

    def indices(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def atoms(self) -> list[str]:
        names = self.domain.atoms
        return [names[i] for i in self.indices()]

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, name: str) -> bool:
        i = self.domain.index.get(name)
        return i is not None and bool(self.mask >> i & 1)

    def _other(self, other: Sentence) -> int:
        if not isinstance(other, Sentence):
            raise TypeError(f"expected a Sentence, got {type(other).__name__}")
        if other.domain is not self.domain and other.domain != self.domain:
            raise DomainError("sentences belong to different domains")
        return other.mask

    def __or__(self, other: Sentence) -> Sentence:
        return Sentence(self.domain, self.mask | self._other(other))

    def __and__(self, other: Sentence) -> Sentence:
        return Sentence(self.domain, self.mask & self._other(other))

    def __sub__(self, other: Sentence) -> Sentence:
        return Sentence(self.domain, self.mask & ~self._other(other))

    def __invert__(self) -> Sentence:
        return Sentence(self.domain, self.domain.full_mask ^ self.mask)

    def implies(self, other: Sentence) -> bool:
        return self.mask & ~self._other(other) == 0

    def exclusive_of(self, other: Sentence) -> bool:
        return self.mask & self._other(other) == 0

    def __str__(self):
        if self.is_false:
            return "false"
        if self.is_true:
            return "true"
        return " or ".join(sorted(self.atoms()))

    def __repr__(self):
        return f"Sentence({self})"


def check_same_domain(s: Sentence, t: Sentence) -> None:
    s._other(t)


def implies(s: Sentence, t: Sentence) -> bool:
    """True iff every atom of ``s`` is an atom of ``t``."""
    return s.implies(t)


def reduce_common(s: Sentence, t: Sentence) -> tuple[Sentence, Sentence]:
    """Drop the atoms shared by ``s`` and ``t`` from both."""
    return s - t, t - s


def complement(s: Sentence) -> Sentence:
    return ~s


def union(s: Sentence, t: Sentence) -> Sentence:
    return s | t


def intersection(s: Sentence, t: Sentence) -> Sentence:
    return s & t


# -- parsing -----------------------------------------------------------------
#
#   sent   := conj ('or' conj)*
#   conj   := unary ('and' unary)*
#   unary  := 'not' unary | '(' sent ')' | 'true' | 'false' | atom

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\w+))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SentenceSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, domain: Domain):
        self.domain = domain
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def sentence(self) -> int:
        mask = self.conjunction()
        while self.peek() == "or":
            self.take()
            mask |= self.conjunction()
        return mask

    def conjunction(self) -> int:
        mask = self.unary()
        while self.peek() == "and":
            self.take()
            mask &= self.unary()
        return mask

    def unary(self) -> int:
        pos = self.pos()
        tok = self.take()
        if tok == "not":
            return self.domain.full_mask ^ self.unary()
        if tok == "(":
            mask = self.sentence()
            if self.peek() != ")":
                raise SentenceSyntaxError("expected ')'", self.pos())
            self.take()
            return mask
        if tok == "true":
            return self.domain.full_mask
        if tok == "false":
            return 0
        if tok == "":
            raise SentenceSyntaxError("unexpected end of sentence", pos)
        if tok in RESERVED or tok == ")":
            raise SentenceSyntaxError(f"unexpected {tok!r}", pos)
        i = self.domain.index.get(tok)
        if i is None:
            raise SentenceSyntaxError(f"unknown atom {tok!r}", pos)
        return 1 << i


def parse_sentence(text: str, domain: Domain) -> Sentence:
    """Parse a boolean sentence over ``domain`` into its atom set.

    Precedence is ``not`` > ``and`` > ``or``.  Unknown atoms and malformed
    input raise :class:`SentenceSyntaxError` carrying the offending offset.
    """
    parser = _Parser(text, domain)
    mask = parser.sentence()
    if parser.peek() != "":
        raise SentenceSyntaxError(f"unexpected {parser.peek()!r}", parser.pos())
    return Sentence(domain, mask)
