"""Command-line driver.

Verbs map 1:1 onto kernel operations: ``check`` (axiom checkers), ``normalize``
(1-cell normal form + canonical witness), ``coheq`` (coherence 2-cell
equality), ``eq2`` (the 2-cell word problem), ``eval`` (interpret terms in a
bicategory), ``equiv`` (search for internal equivalences), ``hom`` (build and
check a hom-bicategory), ``strictify``, ``yoneda`` (local equivalence of the
embedding), and ``classify`` (strength of a morphism or transformation).

Exit codes: 0 = pass/true, 1 = checked and failed, 2 = usage or parse error,
3 = enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .bicat import Bicategory, check_bicategory, find_equivalences, is_two_category
from .errors import (AssignmentError, BudgetExceeded, NotCanonicalError,
                     NotParallelError, ParseError, StructureError)
from .fincat import DEFAULT_BUDGET, FinCat, check_fincat
from .freebicat import (Assignment, TwoComputad, check_assignment,
                        coherence_equal, eval_one, eval_two, normalize,
                        two_cell_equal)
from .grammar import parse_one_term, parse_two_term, print_one_term, print_two_term
from .homs import HomBicatSpec, build_hom_bicategory
from .maps import (Modification, Morphism, Transformation, check_modification,
                   check_morphism, check_transformation, classify_strength)
from .report import ReportBuilder
from .structio import parse_structure
from .yoneda import check_local_equivalence_of_Y, strictify, yoneda


def _fixture_root() -> str | None:
    try:
        path = resources.files(__package__) / "fixtures"
        return str(path) if path.is_dir() else None
    except (ModuleNotFoundError, FileNotFoundError):
        return None


def _resolve(path: str, fixture_dir: str | None) -> str:
    if os.path.exists(path):
        return path
    for root in (fixture_dir, _fixture_root()):
        if root is not None:
            cand = os.path.join(root, path)
            if os.path.exists(cand):
                return cand
    return path


def _load(path: str, args):
    return parse_structure(_resolve(path, args.fixture_dir))


def _load_as(path: str, args, types, what: str):
    x = _load(path, args)
    if not isinstance(x, types):
        raise ParseError(f"{path}: expected {what}, found {_kind_name(x)}")
    return x


def _kind_name(x) -> str:
    return {FinCat: "fincat", Bicategory: "bicategory",
            TwoComputad: "computad", Assignment: "assignment",
            Morphism: "morphism", Transformation: "transformation",
            Modification: "modification", HomBicatSpec: "homspec",
            }.get(type(x), type(x).__name__)


def _emit(doc, text: str, fmt: str) -> None:
    if fmt == "tree":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text)


def _emit_report(rep, fmt: str) -> int:
    _emit(rep.to_tree(), rep.to_text(), fmt)
    return 0 if rep.ok else 1


# -- verbs -------------------------------------------------------------------------


def _cmd_check(args) -> int:
    x = _load(args.file, args)
    if isinstance(x, FinCat):
        rep = check_fincat(x)
    elif isinstance(x, Bicategory):
        rep = check_bicategory(x)
    elif isinstance(x, Morphism):
        rep = check_morphism(x)
    elif isinstance(x, Transformation):
        rep = check_transformation(x)
    elif isinstance(x, Modification):
        rep = check_modification(x)
    elif isinstance(x, HomBicatSpec):
        rb = ReportBuilder("homspec")
        for i, mor in enumerate(x.zero_cells):
            rb.merge(check_morphism(mor), (f"F{i}",))
        rep = rb.build()
    else:
        rep = ReportBuilder(_kind_name(x)).build()
    return _emit_report(rep, args.format)


def _cmd_normalize(args) -> int:
    nf, witness = normalize(parse_one_term(args.term))
    doc = {"normal_form": print_one_term(nf),
           "witness": {"term": print_two_term(witness.term),
                       "src": print_one_term(witness.src),
                       "dst": print_one_term(witness.dst)}}
    text = (f"{doc['normal_form']}\n"
            f"witness: {doc['witness']['term']}")
    _emit(doc, text, args.format)
    return 0


def _cmd_coheq(args) -> int:
    cpd = None
    if args.computad is not None:
        cpd = _load_as(args.computad, args, TwoComputad, "a computad")
    u = parse_two_term(args.term1)
    v = parse_two_term(args.term2)
    equal = coherence_equal(u, v, cpd)
    _emit({"equal": equal}, "equal" if equal else "not equal", args.format)
    return 0 if equal else 1


def _cmd_eq2(args) -> int:
    cpd = _load_as(args.computad, args, TwoComputad, "a computad")
    u = parse_two_term(args.term1)
    v = parse_two_term(args.term2)
    equal = two_cell_equal(u, v, cpd)
    _emit({"equal": equal}, "equal" if equal else "not equal", args.format)
    return 0 if equal else 1


def _cmd_eval(args) -> int:
    bic = _load_as(args.bicategory, args, Bicategory, "a bicategory")
    asg = _load_as(args.assignment, args, Assignment, "an assignment")
    if args.computad is not None:
        cpd = _load_as(args.computad, args, TwoComputad, "a computad")
        check_assignment(asg, cpd, bic)
    if args.one is not None:
        cell = eval_one(parse_one_term(args.one), bic, asg)
        doc = {"one": [cell.src, cell.dst, cell.name]}
        text = f"{cell.name} : {cell.src} -> {cell.dst}"
    else:
        cell = eval_two(parse_two_term(args.two), bic, asg)
        doc = {"two": [cell.src, cell.dst, cell.name]}
        text = (f"{cell.name} : {bic.two_src(cell).name} => "
                f"{bic.two_dst(cell).name} in hom({cell.src}, {cell.dst})")
    _emit(doc, text, args.format)
    return 0


def _cmd_equiv(args) -> int:
    bic = _load_as(args.file, args, Bicategory, "a bicategory")
    if args.a not in bic.zero_cells or args.b not in bic.zero_cells:
        raise StructureError(f"0-cells {args.a!r}, {args.b!r} must belong to "
                             f"the bicategory")
    witnesses = find_equivalences(bic, args.a, args.b, budget=args.budget)
    doc = {"count": len(witnesses),
           "witnesses": [{"forward": w.forward.name, "backward": w.backward.name,
                          "unit": w.unit.name, "counit": w.counit.name}
                         for w in witnesses]}
    lines = [f"{len(witnesses)} equivalence(s) from {args.a} to {args.b}"]
    lines += [f"  forward={w['forward']} backward={w['backward']} "
              f"unit={w['unit']} counit={w['counit']}"
              for w in doc["witnesses"]]
    _emit(doc, "\n".join(lines), args.format)
    return 0 if witnesses else 1


def _cmd_hom(args) -> int:
    spec = _load_as(args.file, args, HomBicatSpec, "a homspec")
    built = build_hom_bicategory(spec, budget=args.budget)
    rep = check_bicategory(built)
    return _emit_report(rep, args.format)


def _cmd_strictify(args) -> int:
    bic = _load_as(args.file, args, Bicategory, "a bicategory")
    st = strictify(bic, budget=args.budget)
    strict = is_two_category(st.bicategory)
    emb = check_morphism(st.embedding)
    ok = strict and emb.ok and st.biequivalence
    doc = {"strict": strict, "embedding": emb.to_tree(),
           "biequivalence": st.biequivalence,
           "zero_cells": len(st.bicategory.zero_cells)}
    text = (f"strict: {'yes' if strict else 'no'}\n"
            f"embedding: {emb.to_text()}\n"
            f"biequivalence: {'yes' if st.biequivalence else 'no'}")
    _emit(doc, text, args.format)
    return 0 if ok else 1


def _cmd_yoneda(args) -> int:
    bic = _load_as(args.file, args, Bicategory, "a bicategory")
    pkg = yoneda(bic, budget=args.budget)
    rep = check_local_equivalence_of_Y(pkg, budget=args.budget)
    return _emit_report(rep, args.format)


def _cmd_classify(args) -> int:
    x = _load_as(args.file, args, (Morphism, Transformation),
                 "a morphism or transformation")
    strength = classify_strength(x)
    _emit({"kind": _kind_name(x), "strength": strength}, strength, args.format)
    return 0


# -- driver -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of exiting
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration budget (default %(default)s)")
    common.add_argument("--format", choices=("text", "tree"), default="text",
                        help="report format (default %(default)s)")
    common.add_argument("--fixture-dir", default=None,
                        help="extra directory to resolve file arguments in")

    parser = _Parser(prog="bicatkit",
                     description="finite bicategory toolkit")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("check", parents=[common],
                       help="run the axiom checker for a structure file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("normalize", parents=[common],
                       help="normal form of a 1-cell term, with witness")
    p.add_argument("term")
    p.set_defaults(run=_cmd_normalize)

    p = sub.add_parser("coheq", parents=[common],
                       help="decide equality of two canonical 2-cell terms")
    p.add_argument("--computad", default=None,
                   help="computad file for endpoint validation")
    p.add_argument("term1")
    p.add_argument("term2")
    p.set_defaults(run=_cmd_coheq)

    p = sub.add_parser("eq2", parents=[common],
                       help="decide equality of two 2-cell terms over a computad")
    p.add_argument("--computad", required=True)
    p.add_argument("term1")
    p.add_argument("term2")
    p.set_defaults(run=_cmd_eq2)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate a term in a bicategory under an assignment")
    p.add_argument("--bicategory", required=True)
    p.add_argument("--assignment", required=True)
    p.add_argument("--computad", default=None,
                   help="validate the assignment against this computad first")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--one", default=None, help="1-cell term")
    group.add_argument("--two", default=None, help="2-cell term")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("equiv", parents=[common],
                       help="search for internal equivalences between two 0-cells")
    p.add_argument("file")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(run=_cmd_equiv)

    p = sub.add_parser("hom", parents=[common],
                       help="build the hom-bicategory of a homspec and check it")
    p.add_argument("file")
    p.set_defaults(run=_cmd_hom)

    p = sub.add_parser("strictify", parents=[common],
                       help="strictify a bicategory and check the embedding")
    p.add_argument("file")
    p.set_defaults(run=_cmd_strictify)

    p = sub.add_parser("yoneda", parents=[common],
                       help="check local equivalence of the embedding")
    p.add_argument("file")
    p.set_defaults(run=_cmd_yoneda)

    p = sub.add_parser("classify", parents=[common],
                       help="classify a morphism or transformation's strength")
    p.add_argument("file")
    p.set_defaults(run=_cmd_classify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        return args.run(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 3
    except (ParseError, StructureError, NotParallelError, NotCanonicalError,
            AssignmentError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
