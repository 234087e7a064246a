"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 a property check failed,
3 a search budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .augment import Augmentation
from .corpus import load_corpus
from .dga import d_squared_residue, differential
from .disks import DiskClass, enumerate_front_disks
from .errors import BudgetExceeded, FrontParseError, InvalidFront, LegmcsError, MaslovInconsistent
from .front import FrontDiagram, load_front
from .mcs import MCS, augmentation_of, build_a_form
from .render import render_svg
from .report import analyze, build_report, front_hash, mcs_classes, save_report
from .sweep import are_equivalent
from .verify import run_all

EXIT_INVALID, EXIT_PROPERTY, EXIT_BUDGET = 1, 2, 3


def _load(path: str) -> FrontDiagram:
    return load_front(Path(path).read_text(encoding="utf-8"))


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_aug(spec: str, analysis) -> Augmentation:
    if spec.isdigit():
        index = int(spec)
        if index >= len(analysis.augmentations):
            raise ValueError(f"only {len(analysis.augmentations)} augmentations exist")
        return analysis.augmentations[index]
    by_label = {g.label: g.id for g in analysis.diagram.generators}
    labels = [] if spec in ("", "-", "none") else spec.split(",")
    eps = Augmentation(frozenset(by_label[x.strip()] for x in labels))
    if eps not in analysis.augmentations:
        raise ValueError(f"{spec!r} is not an augmentation")
    return eps


def cmd_validate(args) -> int:
    diagram = _load(args.file)
    print(f"front: {diagram.word}")
    print(f"events: {len(diagram.events)}  rotation: {diagram.rotation}")
    print(f"strand counts: {list(diagram.strand_counts)}")
    for g in diagram.generators:
        print(f"  {g.label}: {g.kind.value} at event {g.event_index}, degree {g.degree}")
    return 0


def cmd_dga(args) -> int:
    diagram = _load(args.file)
    d = differential(diagram)
    residue = d_squared_residue(d)
    if args.json:
        Path(args.json).write_text(d.dumps() + "\n")
    for g in diagram.generators:
        print(f"d {g.label} = {d.format(g.id)}")
    if residue:
        print("property violated: dga-soundness (d^2 != 0)")
        return EXIT_PROPERTY
    return 0


def cmd_augs(args) -> int:
    analysis = analyze(_load(args.file))
    d = analysis.d
    payload = analysis.classes.to_json(d)
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"{len(analysis.augmentations)} augmentations, {analysis.n_classes} homotopy classes")
    for i, eps in enumerate(analysis.augmentations):
        labels = ",".join(d.label(g) for g in eps.sorted_ids()) or "-"
        print(f"  [{i}] {labels}  class {analysis.classes.class_of(i)}")
    for (a, b), cert in sorted(analysis.classes.certificates.items()):
        if a < b:
            h = ",".join(d.label(g) for g in sorted(cert.support)) or "0"
            print(f"  {a} ~ {b} via H = {h}")
    return 0


def cmd_mcs_equiv(args) -> int:
    analysis = analyze(_load(args.file))
    eps, eps2 = _parse_aug(args.aug, analysis), _parse_aug(args.aug2, analysis)
    start, target = build_a_form(analysis.diagram, eps), build_a_form(analysis.diagram, eps2)
    trace = are_equivalent(start, target, analysis.d, deep=args.deep)
    if trace is None:
        print("not equivalent")
        return 0
    text = json.dumps(trace.to_json(), indent=1) + "\n"
    if args.json:
        Path(args.json).write_text(text)
        print(f"equivalent: {len(trace)} moves written to {args.json}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_mcs_aform(args) -> int:
    analysis = analyze(_load(args.file))
    mcs = build_a_form(analysis.diagram, _parse_aug(args.aug, analysis))
    _write_or_print(mcs.dumps() + "\n", args.json)
    return 0


def cmd_invariants(args) -> int:
    diagram = _load(args.file)
    if args.cache:
        cached = Path(args.cache) / f"{front_hash(diagram.word)}.json"
        if cached.exists() and not args.deep:
            _write_or_print(cached.read_text(), args.out)
            return 0
    analysis = analyze(diagram)
    report = build_report(analysis, deep=args.deep)
    text = report.dumps()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.cache:
        save_report(report, args.cache)
    if not all(report.checks.values()):
        failed = [k for k, v in report.checks.items() if not v]
        print(f"property violated: {', '.join(failed)}", file=sys.stderr)
        return EXIT_PROPERTY
    return 0


def cmd_verify(args) -> int:
    targets: list[tuple[str, FrontDiagram]] = []
    corpus = None
    if args.corpus:
        corpus = load_corpus(args.corpus)
        targets = [(e.name, e.load()) for e in corpus.entries]
    if args.file:
        targets.append((Path(args.file).stem, _load(args.file)))
    if not targets:
        print("nothing to verify: give a file or --corpus", file=sys.stderr)
        return EXIT_INVALID
    failed = []
    counts = {}
    for name, diagram in targets:
        analysis = analyze(diagram)
        groups, _ = mcs_classes(analysis)
        counts[name] = (analysis.n_classes, len(groups))
        print(f"{name}: {diagram.word}")
        for result in run_all(analysis, deep=args.deep):
            print(f"  {result.line()}")
            if not result.ok:
                failed.append(f"{name}:{result.id}")
    if corpus is not None:
        for group in corpus.same_knot:
            values = {counts[n] for n in group if n in counts}
            ok = len(values) <= 1
            detail = ", ".join(f"{c[0]} classes/{c[1]} MCS classes" for c in sorted(values))
            print(f"same-knot {'/'.join(group)}: {'PASS' if ok else 'FAIL'} ({detail})")
            if not ok:
                failed.append("same-knot-counts:" + "/".join(group))
    if failed:
        print(f"property violated: {', '.join(failed)}")
        return EXIT_PROPERTY
    return 0


def cmd_render(args) -> int:
    diagram = _load(args.file)
    mcs = None
    if args.mcs:
        mcs = MCS.from_json(diagram, json.loads(Path(args.mcs).read_text()))
    elif args.aug is not None:
        analysis = analyze(diagram)
        mcs = build_a_form(diagram, _parse_aug(args.aug, analysis))
    disks = None
    if args.disk:
        slot, i, j = (int(x) for x in args.disk.split(","))
        if mcs is None:
            raise ValueError("--disk needs an augmentation (--aug or --mcs)")
        disks = enumerate_front_disks(
            diagram, DiskClass.EPS_HALF, (slot, i, j), eps=augmentation_of(mcs)
        )
    _write_or_print(render_svg(diagram, mcs, disks), args.svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legmcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and grade a front")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dga", help="print the differential")
    p.add_argument("file")
    p.add_argument("--json")
    p.set_defaults(func=cmd_dga)

    p = sub.add_parser("augs", help="augmentations and homotopy classes")
    p.add_argument("file")
    p.add_argument("--json")
    p.set_defaults(func=cmd_augs)

    p = sub.add_parser("mcs", help="MCS operations")
    mcs_sub = p.add_subparsers(dest="mcs_command", required=True)
    q = mcs_sub.add_parser("equiv", help="move trace between two A-form MCSs")
    q.add_argument("file")
    q.add_argument("--aug", required=True, help="augmentation index or crossing labels")
    q.add_argument("--aug2", required=True)
    q.add_argument("--json")
    q.add_argument("--deep", action="store_true")
    q.set_defaults(func=cmd_mcs_equiv)
    q = mcs_sub.add_parser("aform", help="A-form MCS of one augmentation as JSON")
    q.add_argument("file")
    q.add_argument("--aug", required=True)
    q.add_argument("--json")
    q.set_defaults(func=cmd_mcs_aform)

    p = sub.add_parser("invariants", help="full invariant report")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--cache", help="directory for reports keyed by front hash")
    p.add_argument("--deep", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run the property checks")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus")
    p.add_argument("--deep", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG drawing")
    p.add_argument("file")
    p.add_argument("--mcs")
    p.add_argument("--aug")
    p.add_argument("--disk", help="slot,i,j of an eps-half-disk origin to shade")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except (FrontParseError, InvalidFront, MaslovInconsistent, OSError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_INVALID
    except LegmcsError as err:
        print(f"property violated: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_PROPERTY
    except (ValueError, KeyError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
