import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from belieforder.sentences import (
    Domain,
    DomainError,
    Sentence,
    SentenceSyntaxError,
    complement,
    implies,
    intersection,
    parse_sentence,
    reduce_common,
    union,
)

from conftest import domains, sentences_of


def test_parse_examples(abc, six):
    assert parse_sentence("not false", abc) == abc.true()
    assert parse_sentence("(a or b) and not b", abc) == abc.sentence(["a"])
    assert parse_sentence("i or j or m", six.domain).atoms() == ["i", "j", "m"]


def test_precedence(abc):
    # not > and > or
    assert parse_sentence("a or b and c", abc) == abc.sentence(["a"])
    assert parse_sentence("not a and b", abc) == abc.sentence(["b"])
    assert parse_sentence("not (a and b)", abc) == abc.true()
    assert parse_sentence("not not a", abc) == abc.atom("a")
    assert parse_sentence("true and not true", abc) == abc.false()


@pytest.mark.parametrize(
    "text, position",
    [
        ("a or", 4),
        ("(a or b", 7),
        ("a b", 2),
        ("a or z", 5),
        ("a + b", 2),
        ("", 0),
        ("or a", 0),
        ("a )", 2),
    ],
)
def test_parse_errors_carry_position(abc, text, position):
    with pytest.raises(SentenceSyntaxError) as info:
        parse_sentence(text, abc)
    assert info.value.position == position


def test_unknown_atom_message(abc):
    with pytest.raises(SentenceSyntaxError, match="unknown atom 'z'"):
        parse_sentence("a or z", abc)


@pytest.mark.parametrize(
    "atoms",
    [["a"], [], ["a", "a"], ["a", "or"], ["a", "nil"], ["a", ""], ["a", "b c"], ["a", "x=1"]],
)
def test_bad_domains(atoms):
    with pytest.raises(DomainError):
        Domain(atoms)


def test_implies_examples(abc):
    a, b = abc.atom("a"), abc.atom("b")
    assert implies(a, a | b)
    assert implies(abc.false(), a)
    assert implies(abc.false(), abc.true())
    assert not implies(a | b, a)


def test_reduce_common_examples(six, abc):
    d = six.domain
    s, t = reduce_common(d.parse("i or j or m"), d.parse("k or l or m"))
    assert (s, t) == (d.parse("i or j"), d.parse("k or l"))
    x = abc.parse("a or c")
    assert reduce_common(x, x) == (abc.false(), abc.false())
    a, b = abc.atom("a"), abc.atom("b")
    assert reduce_common(a, b) == (a, b)


def test_set_algebra_examples(abc):
    assert complement(abc.true()) == abc.false()
    assert union(abc.atom("a"), abc.atom("b")) == abc.parse("a or b")
    assert intersection(abc.parse("a or b"), abc.parse("b or c")) == abc.atom("b")


def test_serialization(abc):
    d = Domain(["zeta", "alpha", "mid"])
    assert str(d.parse("zeta or alpha")) == "alpha or zeta"
    assert str(abc.true()) == "true"
    assert str(abc.false()) == "false"


def test_cross_domain_rejected(abc):
    other = Domain(["x", "y"])
    with pytest.raises(DomainError):
        abc.atom("a") | other.atom("x")
    with pytest.raises(DomainError):
        implies(abc.atom("a"), other.atom("x"))


def test_equal_domains_interoperate():
    d1, d2 = Domain(["p", "q"]), Domain(["p", "q"])
    assert d1.atom("p") | d2.atom("q") == d1.true()


# -- canonical parsing against truth tables -------------------------------------
#
# Atoms are exclusive and exhaustive, so the possible worlds are exactly
# "atom k is the true one".  A sentence's atom set is the set of worlds in
# which it evaluates to true.


def expressions(domain):
    leaves = st.sampled_from(list(domain.atoms) + ["true", "false"]).map(lambda x: ("leaf", x))
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.tuples(st.just("not"), sub),
            st.tuples(st.just("and"), sub, sub),
            st.tuples(st.just("or"), sub, sub),
        ),
        max_leaves=12,
    )


def render(expr):
    op = expr[0]
    if op == "leaf":
        return expr[1]
    if op == "not":
        return f"not ({render(expr[1])})"
    return f"({render(expr[1])}) {op} ({render(expr[2])})"


def render_bare(expr):
    # Minimal parentheses: relies on not > and > or.
    prec = {"or": 1, "and": 2, "not": 3, "leaf": 4}

    def go(e, parent):
        op = e[0]
        if op == "leaf":
            return e[1]
        if op == "not":
            text = "not " + go(e[1], prec["not"])
        else:
            text = f"{go(e[1], prec[op])} {op} {go(e[2], prec[op] + 1)}"
        return f"({text})" if prec[op] < parent else text

    return go(expr, 0)


def evaluate(expr, world):
    op = expr[0]
    if op == "leaf":
        return {"true": True, "false": False}.get(expr[1], expr[1] == world)
    if op == "not":
        return not evaluate(expr[1], world)
    left, right = evaluate(expr[1], world), evaluate(expr[2], world)
    return left and right if op == "and" else left or right


def truth_table_mask(expr, domain):
    return sum(1 << k for k, w in enumerate(domain.atoms) if evaluate(expr, w))


@given(st.data())
def test_parse_matches_truth_table(data):
    domain = data.draw(domains(2, 5))
    expr = data.draw(expressions(domain))
    expected = truth_table_mask(expr, domain)
    assert parse_sentence(render(expr), domain).mask == expected
    assert parse_sentence(render_bare(expr), domain).mask == expected


@given(st.data())
def test_parse_is_canonical(data):
    domain = data.draw(domains(2, 4))
    e1 = data.draw(expressions(domain))
    e2 = data.draw(expressions(domain))
    same_table = all(evaluate(e1, w) == evaluate(e2, w) for w in domain.atoms)
    assert (parse_sentence(render(e1), domain) == parse_sentence(render(e2), domain)) == same_table


@given(st.data())
def test_serialization_round_trips(data):
    domain = data.draw(domains(2, 6))
    s = data.draw(sentences_of(domain))
    assert parse_sentence(str(s), domain) == s


# -- implication and reduction properties ------------------------------------------


def test_implies_is_a_partial_order():
    d = Domain.of_size(4)
    sents = d.all_sentences()
    for s in sents:
        assert implies(s, s)
    for s, t in itertools.product(sents, repeat=2):
        if implies(s, t) and implies(t, s):
            assert s == t
    for s, t, u in itertools.product(sents, repeat=3):
        if implies(s, t) and implies(t, u):
            assert implies(s, u)


@given(st.data())
def test_reduce_common_properties(data):
    domain = data.draw(domains())
    s, t = data.draw(sentences_of(domain)), data.draw(sentences_of(domain))
    s2, t2 = reduce_common(s, t)
    assert s2.exclusive_of(t2)
    assert s2 | (s & t) == s
    assert t2 | (s & t) == t


@given(st.data())
def test_de_morgan(data):
    domain = data.draw(domains())
    s, t = data.draw(sentences_of(domain)), data.draw(sentences_of(domain))
    assert complement(union(s, t)) == intersection(complement(s), complement(t))
    assert complement(complement(s)) == s


def test_sentence_mask_bounds(abc):
    with pytest.raises(DomainError):
        Sentence(abc, 1 << 3)
    with pytest.raises(DomainError):
        Sentence(abc, -1)
