from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import pytest

from belieforder.evidence import Evidence, PiParam
from belieforder.fixtures import six_atoms
from belieforder.sentences import Domain, Sentence

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile("default")

_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary is printed after the run."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        _CRITERIA[name] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        ok, detail = _CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def six():
    return six_atoms()


@pytest.fixture
def abc():
    return Domain(["a", "b", "c"])


# -- strategies ---------------------------------------------------------------

likelihoods = st.builds(
    Fraction,
    st.integers(0, 12),
    st.sampled_from([1, 2, 3, 4, 5, 6, 8, 10, 12]),
).filter(lambda q: q <= 1)

pis = st.builds(Fraction, st.integers(1, 49), st.just(100)) | st.sampled_from(
    [Fraction(1, 3), Fraction(2, 5), Fraction(1, 4), Fraction(49, 100), Fraction(1, 100)]
)
pi_params = pis.map(PiParam)


@st.composite
def domains(draw, min_atoms=2, max_atoms=6):
    return Domain.of_size(draw(st.integers(min_atoms, max_atoms)))


@st.composite
def evidence_for(draw, domain, allow_nil=True):
    if allow_nil and draw(st.booleans()) and draw(st.booleans()) and draw(st.booleans()):
        return None
    values = draw(st.lists(likelihoods, min_size=len(domain), max_size=len(domain)))
    if not any(values):
        values[draw(st.integers(0, len(domain) - 1))] = Fraction(1)
    return Evidence(domain, values)


def sentences_of(domain):
    return st.integers(0, domain.full_mask).map(lambda m: Sentence(domain, m))


@st.composite
def instances(draw, min_atoms=2, max_atoms=6, allow_nil=True):
    """(domain, evidence-or-None, pi)"""
    domain = draw(domains(min_atoms, max_atoms))
    return domain, draw(evidence_for(domain, allow_nil)), draw(pi_params)
