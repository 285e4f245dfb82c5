"""Command line entry point: ``belieforder <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import audit as audit_mod
from .baselines import (
    Formalism,
    SearchExhausted,
    SingleSetParam,
    bayes_factor_table,
    impartiality_witness,
    min_bayes_factor,
)
from .decider import TieMode, compare, decide
from .ensemble import ensemble_vertices
from .evidence import PiParam, format_rational, parse_rational
from .model import read_model
from .relation import build_relation, export_hasse
from .sentences import Domain, parse_sentence

EXIT_INPUT_ERROR = 2


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mode(args) -> TieMode:
    return TieMode.WEAK if args.weak_ties else TieMode.STRICT


def cmd_decide(args) -> int:
    model = read_model(args.model)
    ev = model.get_evidence(args.evidence)
    s, t = model.sentence(args.first), model.sentence(args.second)
    if args.command == "decide":
        print("asserted" if decide(s, t, ev, model.pi, _mode(args)) else "not-asserted")
    else:
        print(compare(s, t, ev, model.pi, _mode(args)).value)
    return 0


def _read_sentences(path, domain):
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(parse_sentence(line, domain))
    return out


def cmd_relation(args) -> int:
    model = read_model(args.model)
    ev = model.get_evidence(args.evidence)
    sentences = None
    if args.sentences:
        sentences = _read_sentences(args.sentences, model.domain)
    elif args.named:
        sentences = list(model.sentences.values())
    rel = build_relation(model.domain, ev, model.pi, sentences, _mode(args), args.method)
    classes, reduced = rel.hasse()
    label = lambda k: " = ".join(str(rel.sentences[i]) for i in classes[k])
    print(f"{len(rel)} sentences, {len(classes)} classes, "
          f"{len(rel.strict_pairs())} strict pairs, {len(rel.incomparable_pairs())} incomparable pairs")
    for a, b in sorted(reduced.edges):
        print(f"{label(a)}  >  {label(b)}")
    if args.dot:
        dot = export_hasse(rel)
        if args.dot == "-":
            sys.stdout.write(dot)
        else:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(dot)
    return 0


def cmd_audit(args) -> int:
    model = read_model(args.model) if args.model else None
    config = audit_mod.AuditConfig(
        trials=args.trials,
        max_atoms=args.max_atoms,
        seed=args.seed,
        formalism=Formalism(args.formalism),
        mode=_mode(args),
        c=args.c,
    )
    report = audit_mod.run_audit(model, config)
    print(report.render())
    return 0 if report.passed else 1


def cmd_bayes_factor(args) -> int:
    domain = Domain.of_size(args.atoms)
    if args.c is not None:
        c = SingleSetParam(args.c, args.atoms)
        print(f"N={args.atoms} c={format_rational(c.c)} min_bayes_factor={format_rational(min_bayes_factor(domain, c))}")
        return 0
    print("N  c  min_bayes_factor  N-1")
    for n, c, b in bayes_factor_table(range(2, args.atoms + 1)):
        print(f"{n}  {format_rational(c)}  {format_rational(b)}  {n - 1}")
    return 0


def cmd_witness(args) -> int:
    formalism = Formalism(args.formalism)
    domain = Domain.of_size(args.atoms, prefix="s")
    params: dict = {}
    if formalism is Formalism.ENSEMBLE:
        params["pi"] = PiParam(args.pi)
    elif formalism is Formalism.SINGLE_SET:
        params["c"] = SingleSetParam(args.c if args.c is not None else Fraction(1, 8), args.atoms)
    try:
        witness = impartiality_witness(formalism, domain, params, args.max_denominator)
    except SearchExhausted as exc:
        print(f"no witness: {exc}")
        return 0
    print(witness.describe())
    return 0


def cmd_vertices(args) -> int:
    model = read_model(args.model)
    print("# " + " ".join(model.domain.atoms))
    for credal in ensemble_vertices(model.domain, model.pi):
        for v in credal.vertices:
            print(f"{credal.anchor}: " + " ".join(format_rational(p) for p in v.probs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="belieforder", description="Belief orderings from an ensemble of credal sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("decide", "compare"):
        p = sub.add_parser(name, help="decide S >= T" if name == "decide" else "compare S and T both ways")
        p.add_argument("model")
        p.add_argument("--evidence", default="nil", help="evidence name from the model, or nil")
        p.add_argument("--weak-ties", action="store_true", help="order atoms on equal likelihoods")
        p.add_argument("first", help="sentence S (expression or named sentence)")
        p.add_argument("second", help="sentence T")
        p.set_defaults(func=cmd_decide)

    p = sub.add_parser("relation", help="induced order over a sentence family")
    p.add_argument("model")
    p.add_argument("--evidence", default="nil")
    p.add_argument("--sentences", help="file with one sentence per line (default: all sentences)")
    p.add_argument("--named", action="store_true", help="use the model's named sentences")
    p.add_argument("--dot", help="write the Hasse diagram as DOT to this path ('-' for stdout)")
    p.add_argument("--weak-ties", action="store_true")
    p.add_argument("--method", choices=["decide", "enumeration"], default="decide")
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("audit", help="check ordering axioms on random and model instances")
    p.add_argument("--model")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-atoms", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--formalism", choices=[f.value for f in Formalism], default="ensemble")
    p.add_argument("--weak-ties", action="store_true")
    p.add_argument("--c", type=_rational, help="single-set lower bound for model audits")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("baseline", help="rival formalisms")
    bsub = p.add_subparsers(dest="baseline", required=True)
    b = bsub.add_parser("bayes-factor", help="smallest Bayes factor the single set needs")
    b.add_argument("--atoms", type=int, required=True)
    b.add_argument("--c", type=_rational)
    b.set_defaults(func=cmd_bayes_factor)
    b = bsub.add_parser("witness", help="search for an impartiality violation")
    b.add_argument("--formalism", choices=[f.value for f in Formalism], required=True)
    b.add_argument("--atoms", type=int, default=3)
    b.add_argument("--c", type=_rational)
    b.add_argument("--pi", type=_rational, default=Fraction(1, 3))
    b.add_argument("--max-denominator", type=int, default=256)
    b.set_defaults(func=cmd_witness)

    p = sub.add_parser("vertices", help="dump the ensemble's vertices")
    p.add_argument("model")
    p.set_defaults(func=cmd_vertices)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
