"""Command-line front end.

Exit status: 0 success / verification passed, 1 verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import json
import math
import sys

from . import io
from .core import CycleClass, classify, degree_sequence, pendency
from .entropy import degree_entropy, h_bounds, h_value, theorem_bounds
from .enumeration import (
    DEFAULT_MAX_SPACE,
    THEOREMS,
    ExtremalReport,
    enumerate_class,
    extremal_report,
    random_instance,
    verify_theorem,
)
from .errors import HypergraphError
from .families import FamilyTag, family_member, family_tags, hyperstar, loose_path, membership
from .iso import dedup_isomorphic
from .transforms import MoveSpec, class_closure_check, edge_release, move_edges

SCHEMA_VERSION = "1"
REPORT_COLUMNS = ("class", "k", "m", "n", "labeled_count", "min_I", "max_I", "min_h", "max_h",
                  "bound_lower", "bound_upper", "verdict", "extremizer_tags")


def num(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return f"{x:.12f}"


class Output:
    """Collects one record per command and emits it once in the requested format."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, kind: str, record: dict, *, text: str | None = None, rows: list[dict] | None = None,
             columns: tuple[str, ...] | None = None) -> None:
        if self.fmt == "json":
            doc = {"schema_version": SCHEMA_VERSION, "kind": kind, **record}
            self.stream.write(json.dumps(_jsonable(doc), indent=2) + "\n")
        elif self.fmt == "csv":
            rows = rows if rows is not None else [record]
            cols = columns or tuple(rows[0].keys())
            buf = _stdio.StringIO()
            w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({c: _cell(r.get(c)) for c in cols})
            self.stream.write(buf.getvalue())
        else:
            if text is None:
                text = "\n".join(f"{key}: {_cell(v)}" for key, v in record.items()) + "\n"
            self.stream.write(text)


def _jsonable(v):
    if isinstance(v, float):
        return None if math.isnan(v) else round(v, 12)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _cell(v) -> str:
    if isinstance(v, float):
        return num(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v)
    return "" if v is None else str(v)


# --- commands --------------------------------------------------------------------------------


def cmd_entropy(args, out: Output) -> int:
    H = io.read(args.infile)
    rec = {"k": H.k, "n": H.n, "m": H.m, "t": args.t, "entropy": degree_entropy(H, args.t),
           "h": h_value(H), "log2_n": math.log2(H.n)}
    out.emit("entropy", rec)
    return 0


def cmd_classify(args, out: Output) -> int:
    H = io.read(args.infile)
    sc = classify(H)
    pd = pendency(H)
    rec = {"k": H.k, "n": H.n, "m": H.m, "connected": sc.connected, "components": sc.components,
           "cyclomatic": sc.cyclomatic, "class": sc.describe(), "linear": sc.linear,
           "degree_sequence": list(degree_sequence(H).degrees),
           "pendent_vertices": len(pd.pendent_vertices), "pendent_edges": len(pd.pendent_edges),
           "non_pendent_vertices": pd.non_pendent_vertex_count}
    if sc.connected:
        rec["family"] = membership(H).value
        rec["family_tags"] = sorted(t.value for t in family_tags(H))
    out.emit("classify", rec)
    return 0


def cmd_bounds(args, out: Output) -> int:
    b = theorem_bounds(args.cls, args.k, args.m)
    hb = h_bounds(args.cls, args.k, args.m)
    rec = {"class": args.cls, "k": args.k, "m": args.m,
           "lower": b.lower, "upper": b.upper,
           "lower_witness": list(b.lower_witness), "upper_witness": list(b.upper_witness),
           "lower_expr": b.lower_expr, "upper_expr": b.upper_expr,
           "h_lower": hb.lower, "h_upper": hb.upper}
    out.emit("bounds", rec)
    return 0


def _verdict(r: ExtremalReport) -> str:
    if r.empty and r.passed:
        return "empty"
    return "pass" if r.passed else "fail"


def report_row(r: ExtremalReport) -> dict:
    mins = sorted({t for e in r.minimizers for t in (e.tags or ("None",))})
    maxs = sorted({t for e in r.maximizers for t in (e.tags or ("None",))})
    return {
        "class": r.cls.value, "k": r.k, "m": r.m, "n": r.n, "labeled_count": r.labeled_count,
        "min_I": r.min_I, "max_I": r.max_I, "min_h": r.min_h, "max_h": r.max_h,
        "bound_lower": r.bounds.lower if r.bounds else None, "bound_upper": r.bounds.upper if r.bounds else None,
        "verdict": _verdict(r) if r.bounds else "n/a",
        "extremizer_tags": f"min:{'|'.join(mins) or '-'};max:{'|'.join(maxs) or '-'}",
    }


def report_record(r: ExtremalReport) -> dict:
    def ex(items):
        return [{"edges": [list(e) for e in x.representative.edges], "labeled_count": x.labeled_count,
                 "tags": list(x.tags), "degrees": list(x.degrees)} for x in items]

    return {
        "row": report_row(r),
        "iso_class_count": r.iso_class_count,
        "checks": r.checks,
        "violation_counts": r.violation_counts,
        "minimizers": ex(r.minimizers),
        "maximizers": ex(r.maximizers),
        "counterexamples": {k: io.to_dict(H) for k, H in r.counterexamples.items()},
        "tag_counts": r.tag_counts,
        "notes": r.notes,
        "warnings": r.warnings,
    }


def _report_text(r: ExtremalReport, title: str) -> str:
    row = report_row(r)
    lines = [title]
    lines += [f"  {c}: {_cell(row[c])}" for c in REPORT_COLUMNS]
    if r.iso_class_count is not None:
        lines.append(f"  iso_class_count: {r.iso_class_count}")
    for name, ok in r.checks.items():
        lines.append(f"  check {name}: {'ok' if ok else 'FAILED'}")
    for label, items in (("minimizer", r.minimizers), ("maximizer", r.maximizers)):
        for e in items:
            lines.append(f"  {label} [{','.join(e.tags) or 'None'}] x{e.labeled_count} degrees={list(e.degrees)}"
                         f" edges={[list(x) for x in e.representative.edges]}")
    for note in r.notes:
        lines.append(f"  note: {note}")
    for w in r.warnings:
        lines.append(f"  warning: {w}")
    for key, H in r.counterexamples.items():
        lines.append(f"  counterexample ({key}):")
        lines += ["    " + s for s in io.serialize(H).splitlines()]
    return "\n".join(lines) + "\n"


def cmd_verify(args, out: Output) -> int:
    v = verify_theorem(args.theorem, args.k, args.m, jobs=args.jobs, max_space=args.max_space)
    r = v.report
    rec = {"theorem": args.theorem, "passed": v.passed, "empty": v.empty, **report_record(r)}
    if v.counterexample is not None:
        rec["counterexample"] = io.serialize(v.counterexample)
    out.emit("verify", rec, text=_report_text(r, f"{args.theorem} k={args.k} m={args.m}"),
             rows=[report_row(r)], columns=REPORT_COLUMNS)
    if out.fmt == "csv" and v.counterexample is not None:
        sys.stderr.write("# counterexample\n" + io.serialize(v.counterexample))
    return 0 if v.passed else 1


def cmd_report(args, out: Output) -> int:
    r = extremal_report(args.cls, args.k, args.m, args.t, jobs=args.jobs, max_space=args.max_space,
                        dedup_iso=args.dedup_iso)
    out.emit("report", report_record(r), text=_report_text(r, f"{args.cls} k={args.k} m={args.m} t={args.t}"),
             rows=[report_row(r)], columns=REPORT_COLUMNS)
    return 0


def cmd_enumerate(args, out: Output) -> int:
    c = CycleClass(args.cls).cyclomatic
    graphs = list(enumerate_class(args.k, args.m, c, max_space=args.max_space))
    rec: dict = {"class": args.cls, "k": args.k, "m": args.m, "labeled_count": len(graphs)}
    groups = dedup_isomorphic(graphs) if args.dedup_iso else None
    if groups is not None:
        rec["iso_class_count"] = len(groups)
    if args.count_only:
        out.emit("enumerate", rec)
        return 0
    items = groups if groups is not None else [(H, 1) for H in graphs]
    if args.fmt == "json":
        rec["instances"] = [{**io.to_dict(H), "multiplicity": c} for H, c in items]
        out.emit("enumerate", rec)
    elif args.fmt == "csv":
        rows = [{"index": i, "multiplicity": c, "edges": ";".join(",".join(map(str, e)) for e in H.edges)}
                for i, (H, c) in enumerate(items)]
        out.emit("enumerate", rec, rows=rows, columns=("index", "multiplicity", "edges"))
    else:
        parts = [f"# {key}: {val}" for key, val in rec.items()]
        for H, c in items:
            parts.append(("" if groups is None else f"# multiplicity {c}\n") + io.serialize(H).rstrip("\n"))
        out.emit("enumerate", rec, text="\n".join(parts) + "\n")
    return 0


GENERATORS = {
    "hyperstar": lambda m, k, seed: hyperstar(m, k),
    "loose-path": lambda m, k, seed: loose_path(m, k),
    **{t.value: (lambda t: lambda m, k, seed: family_member(t, m, k))(t) for t in FamilyTag if t is not FamilyTag.NONE},
    **{f"random-{c.value}": (lambda c: lambda m, k, seed: random_instance(c, k, m, seed))(c)
       for c in (CycleClass.SUPERTREE, CycleClass.UNICYCLIC, CycleClass.BICYCLIC)},
}


def _emit_graph(H, out: Output, kind: str, extra: dict | None = None) -> None:
    rec = {**(extra or {}), "hypergraph": io.to_dict(H)}
    if out.fmt == "text":
        head = "".join(f"# {k}: {_cell(v)}\n" for k, v in (extra or {}).items())
        out.emit(kind, rec, text=head + io.serialize(H))
    elif out.fmt == "csv":
        rows = [{"edge": i, "vertices": " ".join(map(str, e))} for i, e in enumerate(H.edges)]
        out.emit(kind, rec, rows=rows, columns=("edge", "vertices"))
    else:
        out.emit(kind, rec)


def cmd_generate(args, out: Output) -> int:
    H = GENERATORS[args.family](args.m, args.k, args.seed)
    _emit_graph(H, out, "generate", {"family": args.family})
    return 0


def _parse_move(text: str) -> tuple[int, int]:
    try:
        e, v = text.split(":")
        return int(e), int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected EDGE:SOURCE, got {text!r}") from None


def cmd_transform(args, out: Output) -> int:
    H = io.read(args.infile)
    if args.op == "move":
        H2 = move_edges(H, MoveSpec(args.target, tuple(args.move)))
    else:
        H2 = edge_release(H, args.edge, args.anchor)
    extra = {"operation": args.op, "h_before": h_value(H), "h_after": h_value(H2),
             "class_before": classify(H).describe(), "class_after": classify(H2).describe()}
    if classify(H2).connected:
        extra["class_preserved"] = class_closure_check(H, H2, args.op).preserved
    _emit_graph(H2, out, "transform", extra)
    return 0


# --- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="hyperentropy", description="Degree-based entropy of uniform hypergraphs.")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)
    classes = [c.value for c in (CycleClass.SUPERTREE, CycleClass.UNICYCLIC, CycleClass.BICYCLIC)]

    s = sub.add_parser("entropy", parents=[common], help="I_d^t and h of one hypergraph")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--t", type=float, default=1.0)
    s.set_defaults(func=cmd_entropy)

    s = sub.add_parser("classify", parents=[common], help="connectivity, cyclomatic class, families")
    s.add_argument("--in", dest="infile", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("bounds", parents=[common], help="closed-form entropy bounds for a class")
    s.add_argument("--class", dest="cls", choices=classes, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_bounds)

    for name, func in (("verify", cmd_verify), ("report", cmd_report)):
        s = sub.add_parser(name, parents=[common],
                           help="check a theorem by exhaustive enumeration" if name == "verify"
                           else "extremal report for a class")
        if name == "verify":
            s.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
        else:
            s.add_argument("--class", dest="cls", choices=classes, required=True)
            s.add_argument("--t", type=float, default=1.0)
            s.add_argument("--dedup-iso", action="store_true")
        s.add_argument("--k", type=int, required=True)
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--max-space", type=int, default=DEFAULT_MAX_SPACE)
        s.set_defaults(func=func)

    s = sub.add_parser("enumerate", parents=[common], help="list every labeled member of a class")
    s.add_argument("--class", dest="cls", choices=classes, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--dedup-iso", action="store_true")
    s.add_argument("--max-space", type=int, default=DEFAULT_MAX_SPACE)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("generate", parents=[common], help="build a named structure")
    s.add_argument("--family", choices=sorted(GENERATORS), required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("transform", parents=[common], help="edge moving / edge releasing")
    ops = s.add_subparsers(dest="op", required=True)
    mv = ops.add_parser("move", parents=[common])
    mv.add_argument("--in", dest="infile", required=True)
    mv.add_argument("--target", type=int, required=True)
    mv.add_argument("--move", type=_parse_move, action="append", required=True, metavar="EDGE:SOURCE")
    rl = ops.add_parser("release", parents=[common])
    rl.add_argument("--in", dest="infile", required=True)
    rl.add_argument("--edge", type=int, required=True)
    rl.add_argument("--anchor", type=int, required=True)
    s.set_defaults(func=cmd_transform)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.fmt)
    try:
        return args.func(args, out)
    except (HypergraphError, OSError) as exc:
        if args.fmt == "json":
            err = {"type": type(exc).__name__, "message": str(exc)}
            if getattr(exc, "line", None) is not None:
                err["line"] = exc.line
            print(json.dumps({"schema_version": SCHEMA_VERSION, "error": err}))
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
