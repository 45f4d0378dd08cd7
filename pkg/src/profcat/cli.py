"""Command-line interface: validate documents, list limits, build the example
indexed profunctors, run theorem verifiers, and generate seeded corpora.

Exit codes: 0 verified pass (or inapplicable), 1 verified fail (a report is
emitted), 2 usage, IO or schema errors. The enumeration budget defaults to
1000000 steps and can be overridden with PROFCAT_BUDGET.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import DocumentError, ProfcatError
from .documents import Document, document_for, emit_bundle, emit_document, load_document
from .examples import (
    BuiltSub2Cat,
    build_conical_ip,
    build_ends_ip,
    build_finset_skeleton,
    build_hom_ip,
    build_kan_ip,
    build_weighted_ip,
)
from .fincat import identity_functor, validate_category, validate_functor, validate_nat_trans
from .gen import GenSpec, generate, generate_adjunction_bundle
from .indexed import (
    validate_all,
    validate_indexed_category,
    validate_indexed_functor,
)
from .prof import limits_of, validate_prof_nat_trans, validate_profunctor
from .report import VerificationReport, merge, passing
from .theorems import (
    check_creation,
    check_lifting,
    check_preservation,
    check_reflection,
    relative_adjunction,
    validate_relative_adjunction,
    verify_adjoints_preserve,
    verify_ff_reflection,
    verify_jointly_create,
    verify_preservator_naturality,
    verify_whisker_prop,
)
from .twocat import check_adjunction, validate_two_category

VERIFY_LAWS = (
    "indexed-axioms", "preservation", "reflection", "lifting", "creation",
    "jointly-create", "relative-adjunction", "adjoints-preserve",
    "preservator-naturality", "ff-reflection", "whisker",
)


def _render(report: VerificationReport, out) -> None:
    print(report.summary(), file=out)
    for w in report.witnesses[:50]:
        print("  witness: " + " ".join(f"{k}={v}" for k, v in sorted(w.items())), file=out)
    if len(report.witnesses) > 50:
        print(f"  ... {len(report.witnesses) - 50} more", file=out)


def _finish(report: VerificationReport, report_path: str | None) -> int:
    _render(report, sys.stdout)
    if report_path:
        Path(report_path).write_bytes(emit_document(document_for(report)))
    return 1 if report.failed else 0


def _validate_any(doc: Document) -> VerificationReport:
    kind, value = doc.kind, doc.value
    if kind == "category":
        return validate_category(value)
    if kind == "functor":
        return validate_functor(value)
    if kind == "nat_trans":
        return validate_nat_trans(value)
    if kind == "profunctor":
        return validate_profunctor(value)
    if kind == "prof_nat_trans":
        return validate_prof_nat_trans(value)
    if kind == "two_category":
        if isinstance(value, BuiltSub2Cat):
            base = validate_two_category(value.two_cat)
            if not base.passed:
                return base
            return merge("two-category-with-interpretation",
                         [base, validate_indexed_category(value.inclusion)])
        return validate_two_category(value)
    if kind == "indexed_category":
        return validate_indexed_category(value)
    if kind == "indexed_functor":
        return validate_indexed_functor(value)
    if kind == "indexed_profunctor":
        return validate_all(value)
    if kind == "report":
        return passing("report-document", notes="reports carry no laws of their own")
    raise DocumentError(f"documents of kind {kind!r} validate only against a base; "
                        "use `verify relative-adjunction`")


def _need_ip(doc: Document):
    if doc.kind != "indexed_profunctor":
        raise DocumentError(f"expected an indexed_profunctor document, got {doc.kind}")
    return doc.value


def _need_kind(doc: Document, kind: str):
    if doc.kind != kind:
        raise DocumentError(f"expected a {kind} document, got {doc.kind}")
    return doc.value


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="profcat")
    sub = top.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="structural parse plus exhaustive law check")
    v.add_argument("file")
    v.add_argument("--report")

    l = sub.add_parser("limits", help="list the (object, het) limits of an object")
    l.add_argument("file")
    l.add_argument("--object", required=True)
    l.add_argument("--polarity", choices=("limit", "colimit"), default="limit")

    e = sub.add_parser("example", help="build one of the example indexed profunctors")
    e.add_argument("name", choices=("hom", "conical", "weighted", "ends", "kan"))
    e.add_argument("--base", required=True)
    e.add_argument("--I", dest="i_cell")
    e.add_argument("--A", dest="a_cell")
    e.add_argument("--finset-max", type=int, default=1)
    e.add_argument("-o", "--out", required=True)

    w = sub.add_parser("verify", help="run a law or theorem verifier")
    w.add_argument("law", choices=VERIFY_LAWS)
    w.add_argument("files", nargs="*")
    w.add_argument("--report")
    w.add_argument("--one-cell", nargs=3, metavar=("X", "Y", "F"))
    w.add_argument("--polarity", choices=("limit", "colimit", "both"), default="limit")
    w.add_argument("--mode", choices=("plain", "strict", "strict_unique"), default="plain")
    w.add_argument("--clause", choices=("reflect", "preserve"), default="reflect")
    w.add_argument("--side", choices=("left", "right"), default="left")
    w.add_argument("--x", dest="x_cell")
    w.add_argument("--y", dest="y_cell")
    w.add_argument("--object", dest="s_obj")
    w.add_argument("--phi")

    g = sub.add_parser("gen", help="deterministic seeded document generation")
    g.add_argument("kind", choices=("category", "functor", "profunctor", "two_category",
                                    "indexed_profunctor", "adjunction"))
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--max-objects", type=int, default=4)
    g.add_argument("--max-arrows", type=int, default=12)
    g.add_argument("--max-hets", type=int, default=8)
    g.add_argument("--max-zero-cells", type=int, default=2)
    g.add_argument("--plant")
    g.add_argument("-o", "--out", required=True)
    return top


def _cmd_validate(args) -> int:
    return _finish(_validate_any(load_document(args.file)), args.report)


def _cmd_limits(args) -> int:
    prof = _need_kind(load_document(args.file), "profunctor")
    for obj, het in limits_of(args.object, prof, args.polarity):
        print(f"{obj}\t{het}")
    return 0


def _cmd_example(args) -> int:
    base_doc = load_document(args.base)
    base = _need_kind(base_doc, "two_category")
    needs_interp = args.name in ("hom", "weighted", "ends")
    if needs_interp and not isinstance(base, BuiltSub2Cat):
        raise DocumentError(f"example {args.name} needs a two_category document with interpretation")
    if args.name == "hom":
        ip = build_hom_ip(base)
    elif args.name == "conical":
        if not args.i_cell:
            raise DocumentError("example conical needs --I")
        ip = build_conical_ip(base, args.i_cell)
    elif args.name == "weighted":
        if not args.i_cell:
            raise DocumentError("example weighted needs --I")
        ip = build_weighted_ip(base, args.i_cell, build_finset_skeleton(args.finset_max))
    elif args.name == "ends":
        if not args.i_cell:
            raise DocumentError("example ends needs --I")
        ip = build_ends_ip(base, args.i_cell)
    else:
        if not (args.i_cell and args.a_cell):
            raise DocumentError("example kan needs --I and --A")
        ip = build_kan_ip(base, args.i_cell, args.a_cell)
    Path(args.out).write_bytes(emit_document(document_for(ip, name=args.name)))
    cells = sum(len(p.hets) for p in ip.at0.values())
    print(f"wrote {args.name} indexed profunctor with {cells} hets to {args.out}")
    return 0


def _one_cell(args):
    if not args.one_cell:
        raise DocumentError("this law needs --one-cell X Y F")
    return args.one_cell


def _cmd_verify(args) -> int:
    law = args.law
    files = [load_document(f) for f in args.files]
    if law == "indexed-axioms":
        ip = _need_ip(files[0])
        return _finish(validate_all(ip), args.report)
    if law in ("preservation", "reflection", "lifting", "creation"):
        ip = _need_ip(files[0])
        x, y, f = _one_cell(args)
        m = ip.morphism(x, y, f)
        polarity = "limit" if args.polarity == "both" else args.polarity
        if law == "preservation":
            rep = check_preservation(m, polarity)
        elif law == "reflection":
            rep = check_reflection(m, polarity)
        elif law == "lifting":
            rep = check_lifting(m, polarity, args.mode)
        else:
            mode = "strict" if args.mode in ("strict", "strict_unique") else "plain"
            rep = check_creation(m, polarity, mode)
        return _finish(rep, args.report)
    if law == "jointly-create":
        prof = _need_kind(files[0], "profunctor")
        cat = _need_kind(files[1], "category")
        return _finish(verify_jointly_create(prof, cat), args.report)
    if law == "relative-adjunction":
        ip = _need_ip(files[0])
        adj = _need_kind(files[1], "adjunction")
        data = relative_adjunction(ip, adj)
        return _finish(validate_relative_adjunction(data), args.report)
    if law == "adjoints-preserve":
        ip = _need_ip(files[0])
        adj = _need_kind(files[1], "adjunction")
        return _finish(verify_adjoints_preserve(ip, adj, args.polarity), args.report)
    if law == "preservator-naturality":
        ip = _need_ip(files[0])
        if not (args.x_cell and args.y_cell and args.s_obj):
            raise DocumentError("preservator-naturality needs --x, --y and --object")
        if args.phi:
            phi = _need_kind(load_document(args.phi), "functor")
        else:
            phi = identity_functor(ip.base.hom[(args.x_cell, args.y_cell)])
        rep = verify_preservator_naturality(ip, args.x_cell, args.y_cell, phi, args.s_obj)
        return _finish(rep, args.report)
    if law == "ff-reflection":
        ip = _need_ip(files[0])
        x, y, f = _one_cell(args)
        polarity = "limit" if args.polarity == "both" else args.polarity
        rep = verify_ff_reflection(ip.morphism(x, y, f), polarity, args.clause)
        return _finish(rep, args.report)
    if law == "whisker":
        theta = _need_kind(files[0], "prof_nat_trans")
        alpha = _need_kind(files[1], "functor")
        return _finish(verify_whisker_prop(theta, alpha, args.side), args.report)
    raise DocumentError(f"unknown law {law}")


def _cmd_gen(args) -> int:
    spec = GenSpec(args.seed, args.kind, args.max_objects, args.max_arrows,
                   args.max_hets, args.max_zero_cells, args.plant)
    if args.kind == "adjunction":
        built, adj = generate_adjunction_bundle(spec)
        blob = emit_bundle(
            {"adjunction": document_for(adj), "base": document_for(built)},
            root="adjunction",
        )
    else:
        blob = emit_document(generate(spec))
    Path(args.out).write_bytes(blob)
    print(f"wrote {args.kind} (seed {args.seed}) to {args.out}")
    return 0


def run_command(argv) -> int:
    """Dispatch one CLI invocation; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handlers = {
        "validate": _cmd_validate,
        "limits": _cmd_limits,
        "example": _cmd_example,
        "verify": _cmd_verify,
        "gen": _cmd_gen,
    }
    try:
        return handlers[args.command](args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ProfcatError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IndexError:
        print("error: missing input file arguments", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
