"""Command-line front end.

Every command reads a model (file or inline parameters), runs one
computation, and emits a deterministic table or JSON document; repeated
runs are byte-identical.  Rationals are always exact strings, never
decimals.  Exit codes: 0 ok, 1 parse error, 2 validation error, 3 cap
exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .errors import CapExceeded, ParseError, ValidationError
from .group import FiniteMatrixGroup
from .models import (
    CohomologyTable,
    betti_torus,
    catalog_bv,
    catalog_wp,
    cohomology_point,
    format_degree,
    hodge_linear,
)
from .orbicurve import OrbiBundleData, classify_validate, euler_characteristic, glue_index_check
from .ring import (
    GradedRing,
    center_oracle,
    oracle_match,
    pairing_determinant,
    pairing_matrix,
    ring_linear,
    ring_point,
    ring_wp,
    verify_ring,
)
from .sectors import excess_rank, multi_sectors, obstruction_rank, sector_table
from .serialize import (
    detect_kind,
    format_rational,
    load_json,
    parse_group_doc,
    parse_rational,
    parse_torus_doc,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_VERIFY = 4


def _resolve_path(path: str) -> str:
    if os.path.exists(path):
        return path
    try:
        return catalog.path(path)
    except KeyError:
        raise ParseError(f"no such file or catalog entry: {path}")


def _cap(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("ORBCOH_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"ORBCOH_CAP must be an integer, got {env!r}")
    return None


def _load_group(path: str, cap: int | None) -> FiniteMatrixGroup:
    doc = load_json(_resolve_path(path))
    if detect_kind(doc) != "group":
        raise ValidationError(f"{path}: expected a group file (with a conductor)")
    return parse_group_doc(doc, cap=cap, where=path)


def _load_torus(path: str):
    doc = load_json(_resolve_path(path))
    if detect_kind(doc) != "torus":
        raise ValidationError(f"{path}: expected a torus file")
    return parse_torus_doc(doc, where=path)


def render_table(headers, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [len(h) for h in headers]
    for r in rows:
        for i, c in enumerate(r):
            widths[i] = max(widths[i], len(c))
    def fmt(r):
        return "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)


def emit(args, table_text: str, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        print(table_text)


def _table_output(table: CohomologyTable, args) -> None:
    lines = [table.model]
    rows = [[format_degree(d), dim] for d, dim in table.sorted_entries()]
    lines.append(render_table(["degree", "dim"], rows))
    lines.append(f"total  {table.total()}")
    if table.sectors:
        lines.append("")
        lines.append("sector breakdown")
        iotas = table.meta.get("sector_iota", {})
        rows = []
        for label, per in table.sectors.items():
            entries = " ".join(
                f"{format_degree(d)}:{dim}"
                for d, dim in sorted(per.items(), key=lambda kv: (Fraction(kv[0]) if not isinstance(kv[0], tuple) else kv[0],))
            )
            row = [label]
            if iotas:
                row.append(iotas.get(label, ""))
            row.append(entries or "-")
            rows.append(row)
        headers = ["sector", "iota", "entries"] if iotas else ["sector", "entries"]
        lines.append(render_table(headers, rows))
    emit(args, "\n".join(lines), table.to_json_dict())


def cmd_sectors(args) -> int:
    cap = _cap(args)
    group = _load_group(args.file, cap)
    if args.k == 1 and not args.product_one:
        secs = sector_table(group)
        rows = [
            [s.representative, s.size, s.centralizer_order, group.order_of[s.representative],
             format_degree(s.iota), s.fixed_dim, "yes" if s.is_untwisted else "no"]
            for s in secs
        ]
        text = "\n".join([
            f"sectors  |G| = {group.order}  n = {group.n}  conductor = {group.field.conductor}  SL = {'yes' if group.is_sl else 'no'}",
            render_table(["rep", "size", "centralizer", "order", "iota", "fixed_dim", "untwisted"], rows),
            f"total sectors: {len(secs)}",
        ])
        obj = {
            "group": {"order": group.order, "dimension": group.n,
                      "conductor": group.field.conductor, "sl": group.is_sl},
            "sectors": [
                {
                    "representative": s.representative,
                    "members": list(s.members),
                    "size": s.size,
                    "centralizer_order": s.centralizer_order,
                    "element_order": group.order_of[s.representative],
                    "iota": format_degree(s.iota),
                    "fixed_dim": s.fixed_dim,
                    "untwisted": s.is_untwisted,
                }
                for s in sector_table(group)
            ],
        }
        emit(args, text, obj)
        return EXIT_OK

    mss = multi_sectors(group, args.k, args.product_one, cap=cap)
    show_obstruction = args.k == 3 and args.product_one
    show_excess = args.k == 4 and args.product_one
    headers = ["rep", "size", "centralizer", "iotas", "joint_dim", "product"]
    if show_obstruction:
        headers.append("obstruction_rank")
    if show_excess:
        headers.append("excess_rank")
    rows = []
    recs = []
    for ms in mss:
        rep = ms.representative
        row = [
            "(" + ",".join(str(i) for i in rep) + ")",
            ms.tuple_class.size,
            ms.tuple_class.centralizer_order,
            ",".join(format_degree(x) for x in ms.iotas),
            ms.joint_fixed_dim,
            f"(g{group.conjugacy_classes()[ms.product_class].representative})",
        ]
        rec = {
            "representative": list(rep),
            "size": ms.tuple_class.size,
            "centralizer_order": ms.tuple_class.centralizer_order,
            "iotas": [format_degree(x) for x in ms.iotas],
            "joint_fixed_dim": ms.joint_fixed_dim,
            "product_class_representative": group.conjugacy_classes()[ms.product_class].representative,
        }
        if show_obstruction:
            rank = obstruction_rank(group, rep)
            row.append(rank)
            rec["obstruction_rank"] = rank
        if show_excess:
            rank = excess_rank(group, rep)
            row.append(rank)
            rec["excess_rank"] = rank
        rows.append(row)
        recs.append(rec)
    text = "\n".join([
        f"multi-sectors  k = {args.k}  product_one = {'yes' if args.product_one else 'no'}  |G| = {group.order}",
        render_table(headers, rows),
        f"total multi-sectors: {len(mss)}",
    ])
    obj = {
        "group": {"order": group.order, "dimension": group.n},
        "k": args.k,
        "product_one": args.product_one,
        "multi_sectors": recs,
    }
    emit(args, text, obj)
    return EXIT_OK


def cmd_betti(args) -> int:
    if args.model != "torus":
        raise ValidationError("betti supports --model torus")
    model = _load_torus(args.file)
    _table_output(betti_torus(model, cap=_cap(args)), args)
    return EXIT_OK


def cmd_hodge(args) -> int:
    if args.model != "linear":
        raise ValidationError("hodge supports --model linear")
    group = _load_group(args.file, _cap(args))
    _table_output(hodge_linear(group), args)
    return EXIT_OK


def cmd_cohomology(args) -> int:
    if args.model != "point":
        raise ValidationError("cohomology supports --model point")
    group = _load_group(args.file, _cap(args))
    _table_output(cohomology_point(group), args)
    return EXIT_OK


def _ring_for(args) -> GradedRing:
    if args.model == "wp":
        if args.d1 is None or args.d2 is None:
            raise ParseError("ring --model wp needs --d1 and --d2")
        return ring_wp(args.d1, args.d2)
    if args.file is None:
        raise ParseError(f"ring --model {args.model} needs a group file")
    group = _load_group(args.file, _cap(args))
    if args.model == "point":
        return ring_point(group)
    return ring_linear(group)


def _ring_text(ring: GradedRing) -> str:
    lines = [f"ring: {ring.model}"]
    rows = [[i, ring.basis[i], format_degree(ring.degrees[i])] for i in range(len(ring.basis))]
    lines.append(render_table(["idx", "basis", "degree"], rows))
    lines.append("")
    lines.append("nonzero products (unit row omitted)")
    prods = []
    for (i, j) in sorted(ring.structure):
        if i == ring.unit_index or j == ring.unit_index:
            continue
        terms = ring.structure[(i, j)]
        rhs = " + ".join(
            (f"{ring.basis[k]}" if c == 1 else f"{format_rational(c)} {ring.basis[k]}")
            for k, c in sorted(terms.items())
        )
        prods.append(f"{ring.basis[i]} * {ring.basis[j]} = {rhs}")
    lines.extend(prods if prods else ["(none)"])
    if ring.pairing is not None:
        lines.append("")
        lines.append("pairing matrix")
        lines.append(render_table(ring.basis, [[format_rational(x) for x in row] for row in ring.pairing]))
    return "\n".join(lines)


def cmd_ring(args) -> int:
    ring = _ring_for(args)
    oracle_line = None
    if args.oracle:
        if args.model != "point":
            raise ValidationError("--oracle applies to --model point")
        group = _load_group(args.file, _cap(args))
        if oracle_match(group):
            oracle_line = "oracle match: exact"
        else:
            oracle_line = "oracle match: MISMATCH"
    report = verify_ring(ring) if args.verify else None

    obj = ring.to_json_dict()
    text_parts = [_ring_text(ring)]
    if oracle_line:
        text_parts.append(oracle_line)
        obj["oracle_match"] = oracle_line.endswith("exact")
    if report is not None:
        text_parts.append("\n".join(report.lines()))
        obj["verify"] = [
            {"check": c.name, "ok": c.ok, "counterexample": c.counterexample}
            for c in report.checks
        ]
    emit(args, "\n\n".join(text_parts), obj)
    if oracle_line and not oracle_line.endswith("exact"):
        return EXIT_VERIFY
    if report is not None and not report.ok:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_pairing(args) -> int:
    if args.model == "wp":
        if args.d1 is None or args.d2 is None:
            raise ParseError("pairing --model wp needs --d1 and --d2")
        ring = ring_wp(args.d1, args.d2)
    elif args.model == "point":
        if args.file is None:
            raise ParseError("pairing --model point needs a group file")
        ring = ring_point(_load_group(args.file, _cap(args)))
    else:
        raise ValidationError("pairing supports --model point or wp")
    matrix = pairing_matrix(ring)
    det = pairing_determinant(ring)
    text = "\n".join([
        f"pairing: {ring.model}",
        render_table(ring.basis, [[format_rational(x) for x in row] for row in matrix]),
        f"determinant  {format_rational(det)}",
    ])
    obj = {
        "model": ring.model,
        "basis": ring.basis,
        "pairing": [[format_rational(x) for x in row] for row in matrix],
        "determinant": format_rational(det),
    }
    emit(args, text, obj)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.family == "bv":
        table = catalog_bv(args.r, args.a, args.delta)
    else:
        table = catalog_wp(args.d1, args.d2)
    _table_output(table, args)
    return EXIT_OK


def _parse_mark(text: str) -> tuple[int, tuple[int, ...]]:
    head, sep, tail = text.partition(":")
    if not sep:
        raise ParseError(f"mark {text!r} must look like m:e1,e2,...")
    try:
        m = int(head)
        exps = tuple(int(x) for x in tail.split(",") if x != "")
    except ValueError:
        raise ParseError(f"mark {text!r} must carry integers")
    if not exps:
        raise ParseError(f"mark {text!r} needs at least one exponent")
    return m, exps


def cmd_orbicurve(args) -> int:
    if args.action == "chi":
        marks = tuple(_parse_mark(m) for m in args.mark or [])
        data = OrbiBundleData(
            genus=args.genus,
            rank=args.rank,
            marks=marks,
            chern=parse_rational(args.c, "--c"),
        )
        result = classify_validate(data)
        chi = euler_characteristic(data)
        text = "\n".join([
            f"orbifold bundle  genus = {args.genus}  rank = {args.rank}  marks = {len(marks)}  c = {format_rational(data.chern)}",
            f"valid: yes",
            f"desing_chern  {result['desing_chern']}",
            f"chi  {chi}",
        ])
        obj = {
            "genus": args.genus,
            "rank": args.rank,
            "marks": [[m, list(e)] for m, e in marks],
            "c": format_rational(data.chern),
            "valid": True,
            "desing_chern": result["desing_chern"],
            "chi": chi,
        }
        emit(args, text, obj)
        return EXIT_OK

    group = _load_group(args.file, _cap(args))
    try:
        indices = tuple(int(x) for x in args.tuple.split(","))
    except ValueError:
        raise ParseError(f"--tuple {args.tuple!r} must be four comma-separated indices")
    if any(i < 0 or i >= group.order for i in indices):
        raise ValidationError(f"tuple indices must lie in [0, {group.order})")
    rep = glue_index_check(group, indices)
    text = "\n".join([
        f"glue check  tuple = ({args.tuple})  split g = {rep.splitting_element}",
        f"index identity  chi1 + chi2 = {rep.index_left}  vs  chi_glued + dim V^g = {rep.index_right}  "
        + ("OK" if rep.index_ok else "FAIL"),
        f"coker identity  coker1 + coker2 + rank nu = {rep.coker_left}  vs  coker_glued = {rep.coker_right}  "
        + ("OK" if rep.coker_ok else "FAIL"),
    ])
    obj = {
        "tuple": list(indices),
        "splitting_element": rep.splitting_element,
        "index_identity": {"left": rep.index_left, "right": rep.index_right, "ok": rep.index_ok},
        "coker_identity": {"left": rep.coker_left, "right": rep.coker_right, "ok": rep.coker_ok},
    }
    emit(args, text, obj)
    return EXIT_OK if rep.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=None, help="override enumeration caps")

    parser = argparse.ArgumentParser(prog="orbcoh", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sectors", parents=[common], help="twisted/multi-sector table")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--product-one", action="store_true", dest="product_one")
    p.set_defaults(func=cmd_sectors)

    p = sub.add_parser("betti", parents=[common], help="orbifold Betti table")
    p.add_argument("--model", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("hodge", parents=[common], help="orbifold Hodge table")
    p.add_argument("--model", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("cohomology", parents=[common], help="orbifold cohomology table")
    p.add_argument("--model", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("ring", parents=[common], help="cup-product ring")
    p.add_argument("--model", required=True, choices=("point", "linear", "wp"))
    p.add_argument("file", nargs="?")
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("pairing", parents=[common], help="pairing matrix")
    p.add_argument("--model", required=True, choices=("point", "wp"))
    p.add_argument("file", nargs="?")
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("catalog", parents=[common], help="closed-form families")
    fam = p.add_subparsers(dest="family", required=True)
    pb = fam.add_parser("bv", parents=[common])
    pb.add_argument("--r", type=int, required=True)
    pb.add_argument("--a", type=int, required=True)
    pb.add_argument("--delta", type=int, required=True)
    pw = fam.add_parser("wp", parents=[common])
    pw.add_argument("--d1", type=int, required=True)
    pw.add_argument("--d2", type=int, required=True)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("orbicurve", parents=[common], help="bundle index arithmetic")
    act = p.add_subparsers(dest="action", required=True)
    pc = act.add_parser("chi", parents=[common])
    pc.add_argument("--genus", type=int, required=True)
    pc.add_argument("--rank", type=int, required=True)
    pc.add_argument("--mark", action="append")
    pc.add_argument("--c", required=True)
    pg = act.add_parser("glue", parents=[common])
    pg.add_argument("file")
    pg.add_argument("--tuple", required=True)
    p.set_defaults(func=cmd_orbicurve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
