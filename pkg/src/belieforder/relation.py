"""The induced ordering over a family of sentences, and its Hasse diagram."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from .decider import Comparison, TieMode, decide
from .evidence import Evidence, PiParam
from .oracle import EnumerationTable
from .sentences import Domain, Sentence

MAX_ALL_SENTENCES_ATOMS = 20


@dataclass(frozen=True)
class Relation:
    """``matrix[i, j]`` is True when ``sentences[i] >=_e sentences[j]``."""

    sentences: tuple[Sentence, ...]
    matrix: np.ndarray

    def __len__(self):
        return len(self.sentences)

    def asserted(self, i: int, j: int) -> bool:
        return bool(self.matrix[i, j])

    def compare(self, i: int, j: int) -> Comparison:
        return Comparison.from_verdicts(self.asserted(i, j), self.asserted(j, i))

    def strict_pairs(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with i above j and not the other way round."""
        strict = self.matrix & ~self.matrix.T
        return [tuple(map(int, p)) for p in np.argwhere(strict)]

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        neither = ~self.matrix & ~self.matrix.T
        return [(int(i), int(j)) for i, j in np.argwhere(neither) if i < j]

    def equivalence_classes(self) -> list[list[int]]:
        """Mutually asserted sentences, grouped (strongly connected components)."""
        graph = self.graph()
        classes = [sorted(c) for c in nx.strongly_connected_components(graph)]
        return sorted(classes)

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.sentences)))
        graph.add_edges_from(map(tuple, np.argwhere(self.matrix)))
        graph.remove_edges_from(nx.selfloop_edges(graph))
        return graph

    def hasse(self) -> tuple[list[list[int]], nx.DiGraph]:
        """Equivalence classes and the covering graph between them.

        An edge (a, b) means class a lies directly above class b.
        """
        classes = self.equivalence_classes()
        graph = self.graph()
        where = {i: k for k, members in enumerate(classes) for i in members}
        dag = nx.DiGraph()
        dag.add_nodes_from(range(len(classes)))
        dag.add_edges_from((where[i], where[j]) for i, j in graph.edges if where[i] != where[j])
        return classes, nx.transitive_reduction(dag)


def build_relation(
    domain: Domain,
    ev: Optional[Evidence],
    pi: PiParam,
    sentences: Optional[Sequence[Sentence]] = None,
    mode: TieMode = TieMode.STRICT,
    method: str = "decide",
) -> Relation:
    """Evaluate ``>=_e`` on every ordered pair of ``sentences``.

    Defaults to all 2**N sentences of the domain.  ``method="enumeration"``
    uses the vertex-enumeration oracle (strict ties only).
    """
    if sentences is None:
        if len(domain) > MAX_ALL_SENTENCES_ATOMS:
            raise ValueError(
                f"refusing to enumerate all 2**{len(domain)} sentences; pass an explicit list"
            )
        sentences = domain.all_sentences()
    sentences = tuple(sentences)
    if not sentences:
        raise ValueError("need at least one sentence")
    for s in sentences:
        if s.domain != domain:
            raise ValueError(f"sentence {s} is not over the given domain")

    n = len(sentences)
    matrix = np.zeros((n, n), dtype=bool)
    if method == "decide":
        for i, s in enumerate(sentences):
            for j, t in enumerate(sentences):
                matrix[i, j] = decide(s, t, ev, pi, mode)
    elif method == "enumeration":
        if mode is not TieMode.STRICT:
            raise ValueError("the enumeration oracle only models strict ties")
        table = EnumerationTable(domain, ev, pi)
        for i, s in enumerate(sentences):
            for j, t in enumerate(sentences):
                matrix[i, j] = table.holds(s.mask, t.mask)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Relation(sentences, matrix)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_hasse(relation: Relation, name: str = "belief_order") -> str:
    """Graphviz DOT text for the Hasse diagram of ``relation``.

    Each equivalence class becomes one node, named by its first member and
    labelled with all members.  Edges point from the higher class down.
    """
    classes, reduced = relation.hasse()
    names = [str(relation.sentences[members[0]]) for members in classes]
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for members, node in zip(classes, names):
        label = " = ".join(str(relation.sentences[i]) for i in members)
        lines.append(f"  {_quote(node)} [label={_quote(label)}];")
    for a, b in sorted(reduced.edges):
        lines.append(f"  {_quote(names[a])} -> {_quote(names[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
