"""Command-line driver: a thin, single-threaded layer over the library.

Exit codes: 0 success, 1 validation or input failure, 2 usage error.
All output is deterministic given identical inputs; `--json` switches the
human-readable tables to machine-readable JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    CATALOG,
    MonoidHom,
    collapse_hom,
    sign_hom,
    sign_section,
    validate_algebra,
)
from .emergence import emergence_report, format_word, glue
from .graphs import change_labels
from .homology import decompose_cycle, feedback, find_relations, h0, loop_polarity, nat_chain, simple_loops
from .model_io import (
    ModelFile,
    ModelFormatError,
    export_dot,
    load_model,
    parse_algebra,
    save_model,
)
from .motifs import MOTIF_NAMES, builtin_motif, find_motifs
from .open_graphs import compose as compose_open
from .open_graphs import tensor as tensor_open
from .paths import grade


class CliError(Exception):
    pass


def _load(path) -> ModelFile:
    try:
        return load_model(path)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from None
    except ModelFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _graph_of(model: ModelFile, path) -> tuple:
    g = model.any_graph
    if g is None:
        raise CliError(f"{path}: file has no graph section")
    return g, model


def _open_of(model: ModelFile, path):
    if model.open_graph is None:
        raise CliError(f"{path}: file has no open_graph section")
    return model.open_graph


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_validate(args) -> int:
    failures = 0
    for path in args.files:
        try:
            model = _load(path)
        except CliError as exc:
            print(f"{path}: INVALID\n  {exc}")
            failures += 1
            continue
        problems = []
        for algebra in {id(a): a for a in (model.algebra, getattr(model.any_graph, "algebra", None)) if a}.values():
            report = validate_algebra(algebra)
            if not report.ok:
                problems.append(report.summary())
        if problems:
            print(f"{path}: INVALID")
            for text in problems:
                print("  " + text.replace("\n", "\n  "))
            failures += 1
        else:
            print(f"{path}: ok")
    return 1 if failures else 0


def _loop_rows(g, model: ModelFile):
    loops, truncated = simple_loops(g.graph)
    algebra = g.algebra
    has_sum = algebra.is_rig or algebra.flags.commutative
    is_sign = algebra == CATALOG["SIGN"]
    rows = []
    for loop in loops:
        polarity = loop_polarity(loop, g)
        polarity_text = algebra.label_text(polarity)
        tag = None
        if is_sign:
            tag = "reinforcing" if polarity_text == "+" else "balancing"
        rows.append(
            {
                "edges": [model.edge_ids[e] if model.edge_ids else f"e{e}" for e in loop.edges],
                "vertices": [g.graph.vertex_names[v] for v in loop.vertices(g.graph)],
                "polarity": polarity_text,
                "feedback": algebra.label_text(feedback(loop, g)) if has_sum else None,
                "tag": tag,
            }
        )
    return rows, truncated


def cmd_loops(args) -> int:
    model = _load(args.file)
    g, _ = _graph_of(model, args.file)
    rows, truncated = _loop_rows(g, model)
    if args.json:
        _emit_json({"loops": rows, "truncated": truncated})
        return 0
    print(f"{len(rows)} simple loop class(es)" + (" (truncated)" if truncated else ""))
    for i, row in enumerate(rows):
        cycle = " -> ".join(row["vertices"] + [row["vertices"][0]])
        parts = [f"loop {i}: edges [{', '.join(row['edges'])}]", cycle, f"polarity {row['polarity']}"]
        if row["feedback"] is not None:
            parts.append(f"feedback {row['feedback']}")
        if row["tag"]:
            parts.append(row["tag"])
        print("  " + "; ".join(parts))
    return 0


def cmd_motif(args) -> int:
    host_model = _load(args.host)
    host, _ = _graph_of(host_model, args.host)
    if args.motif in MOTIF_NAMES:
        motif = builtin_motif(args.motif)
    else:
        motif_model = _load(args.motif)
        motif, _ = _graph_of(motif_model, args.motif)
    try:
        matches, truncated = find_motifs(motif, host, args.max_path_len, args.max_results)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    payload = {
        "matches": [
            {
                "vertex_map": list(k.vertex_map),
                "edge_paths": [list(p.edges) for p in k.edge_map],
                "grades": [host.algebra.label_text(grade(p, host)) for p in k.edge_map],
            }
            for k in matches
        ],
        "truncated": truncated,
    }
    if not args.json:
        print(f"{len(matches)} match(es)" + (" (truncated)" if truncated else ""))
    _emit_json(payload)
    return 0


def _two_open_inputs(args):
    left_path = args.left if args.left else args.inputs[0] if args.inputs else None
    right_path = args.right if args.right else args.inputs[-1] if len(args.inputs) > 1 else None
    if not left_path or not right_path:
        raise CliError("need two open graphs: positional LEFT RIGHT or --left/--right")
    left = _open_of(_load(left_path), left_path)
    right = _open_of(_load(right_path), right_path)
    return left, right


def cmd_compose(args) -> int:
    left, right = _two_open_inputs(args)
    try:
        result = compose_open(left, right)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    save_model(ModelFile(open_graph=result), args.out)
    print(
        f"wrote {args.out}: {result.inner.graph.n_vertices} vertices, "
        f"{result.inner.graph.n_edges} edges"
    )
    return 0


def cmd_tensor(args) -> int:
    left, right = _two_open_inputs(args)
    try:
        result = tensor_open(left, right)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    save_model(ModelFile(open_graph=result), args.out)
    print(
        f"wrote {args.out}: {result.inner.graph.n_vertices} vertices, "
        f"{result.inner.graph.n_edges} edges"
    )
    return 0


def cmd_homology(args) -> int:
    model = _load(args.file)
    g, _ = _graph_of(model, args.file)
    loops, truncated = simple_loops(g.graph)
    try:
        relations = find_relations(loops, args.bound)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    zeroth = h0(g.graph, g.algebra) if (g.algebra.is_rig or g.algebra.flags.commutative) else None
    edge_name = (lambda e: model.edge_ids[e]) if model.edge_ids else (lambda e: f"e{e}")

    def loop_term(vector):
        return " + ".join(
            (f"{c}*" if c > 1 else "") + f"g{i}" for i, c in enumerate(vector) if c
        ) or "0"

    if args.json:
        _emit_json(
            {
                "h0_components": zeroth.count if zeroth else None,
                "generators": [[edge_name(e) for e in loop.edges] for loop in loops],
                "relations": [
                    {"lhs": list(r.lhs), "rhs": list(r.rhs)} for r in relations
                ],
                "truncated": truncated,
            }
        )
        return 0
    if zeroth:
        print(f"h0: {zeroth.description}")
    print(f"h1 generators ({len(loops)} simple loop class(es)):")
    for i, loop in enumerate(loops):
        print(f"  g{i}: [{', '.join(edge_name(e) for e in loop.edges)}]")
    print(f"relations at coefficient bound {args.bound}: {len(relations)}")
    for r in relations:
        print(f"  {loop_term(r.lhs)} = {loop_term(r.rhs)}")
    return 0


def cmd_emergence(args) -> int:
    left = _open_of(_load(args.left), args.left)
    right = _open_of(_load(args.right), args.right)
    try:
        glued = glue(left, right)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    report = emergence_report(glued)
    algebra = glued.composite.algebra
    rows = [
        {
            "edges": [f"e{e}" for e in row.loop.edges],
            "vertices": [glued.composite.graph.vertex_names[v] for v in row.loop.vertices(glued.composite.graph)],
            "status": "inherited" if row.inherited else "emergent",
            "grade_word": row.word,
            "polarity": algebra.label_text(row.polarity),
        }
        for row in report.rows
    ]
    if args.json:
        _emit_json(
            {
                "loops": rows,
                "inherited": report.inherited_count,
                "emergent": report.emergent_count,
                "truncated": report.truncated,
            }
        )
        return 0
    print(
        f"{len(rows)} loop(s): {report.emergent_count} emergent, "
        f"{report.inherited_count} inherited" + (" (truncated)" if report.truncated else "")
    )
    for row in rows:
        cycle = " -> ".join(row["vertices"] + [row["vertices"][0]])
        print(
            f"  [{row['status']}] {cycle}; word {format_word(row['grade_word'])}; "
            f"polarity {row['polarity']}"
        )
    return 0


_NAMED_HOMS = {"sign": sign_hom, "sign-section": sign_section}


def _resolve_hom(args, g) -> MonoidHom:
    if args.hom:
        if args.hom == "collapse":
            return collapse_hom(g.algebra)
        if args.hom in _NAMED_HOMS:
            return _NAMED_HOMS[args.hom]()
        raise CliError(f"unknown hom {args.hom!r}; known: collapse, sign, sign-section")
    try:
        with open(args.hom_file, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
        source = parse_algebra(obj["source"])
        target = parse_algebra(obj["target"])
        mapping = tuple(target.parse_label(v) for v in obj["map"])
        return MonoidHom(source, target, mapping=mapping, name="from-file")
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad hom file: {exc}") from None


def cmd_change_labels(args) -> int:
    model = _load(args.file)
    g, _ = _graph_of(model, args.file)
    hom = _resolve_hom(args, g)
    try:
        relabeled = change_labels(hom, g)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    out_model = ModelFile(
        graph=relabeled, vertex_ids=model.vertex_ids, edge_ids=model.edge_ids
    )
    save_model(out_model, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_decompose(args) -> int:
    model = _load(args.file)
    g, _ = _graph_of(model, args.file)
    try:
        raw = json.loads(args.chain)
    except json.JSONDecodeError as exc:
        raise CliError(f"bad --chain JSON: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise CliError("--chain must be a JSON object of edge id -> coefficient")
    edge_index = {eid: e for e, eid in enumerate(model.edge_ids)}
    coeffs = {}
    for eid, value in raw.items():
        if eid not in edge_index:
            raise CliError(f"unknown edge id {eid!r} in --chain")
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise CliError(f"coefficient of {eid!r} must be a natural number")
        coeffs[edge_index[eid]] = value
    try:
        parts = decompose_cycle(nat_chain(coeffs), g.graph)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    rows = [[model.edge_ids[e] for e in loop.edges] for loop in parts]
    if args.json:
        _emit_json({"parts": rows})
        return 0
    print(f"{len(rows)} loop(s) in the decomposition")
    for row in rows:
        print(f"  [{', '.join(row)}]")
    return 0


def cmd_export_dot(args) -> int:
    model = _load(args.file)
    g, _ = _graph_of(model, args.file)
    text = export_dot(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monograph", description="Analyze graphs with monoid-labeled edges."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check files against schema and algebra axioms")
    p.add_argument("files", nargs="+")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("loops", help="simple loop classes with polarity and feedback")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_loops)

    p = sub.add_parser("motif", help="find motif occurrences in a host graph")
    p.add_argument("--motif", required=True, help="builtin motif name or a model file")
    p.add_argument("--host", required=True)
    p.add_argument("--max-path-len", type=int, default=6)
    p.add_argument("--max-results", type=int, default=10000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_motif)

    for name, helptext, runner in (
        ("compose", "glue two open graphs output-to-input", cmd_compose),
        ("tensor", "set two open graphs side by side", cmd_tensor),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("inputs", nargs="*", metavar="FILE")
        p.add_argument("--left")
        p.add_argument("--right")
        p.add_argument("--out", required=True)
        p.set_defaults(run=runner)

    p = sub.add_parser("homology", help="components, loop generators and relations")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_homology)

    p = sub.add_parser("emergence", help="tag composite loops inherited or emergent")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_emergence)

    p = sub.add_parser("change-labels", help="relabel a graph through a homomorphism")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--hom", help="collapse, sign, or sign-section")
    group.add_argument("--hom-file")
    p.add_argument("--out", required=True)
    p.set_defaults(run=cmd_change_labels)

    p = sub.add_parser("decompose", help="split a circulation into simple loops")
    p.add_argument("file")
    p.add_argument("--chain", required=True, help='JSON object: {"edge id": coefficient}')
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("export-dot", help="emit Graphviz text")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(run=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
