"""Command-line surface.

Subcommands: ``feasible`` (profile enumeration for an algebra and a linear
polynomial), ``classify`` (invariants and shape recognition of an ingested
configuration file), ``family`` (standard configurations, optionally with
twist cohomology and smoothing-hypothesis checks), ``cohomology`` (twist
cohomology of an embedded configuration file) and ``check-config``
(validation only).

Output is a deterministic fixed-order table, or JSON with a stable field
order and a ``schema_version`` field when ``--format json`` is given (the
``SBCURVES_FORMAT`` environment variable sets the default).  Exit status:
0 ok, 2 usage, 3 file parse error, 4 invariant violation, 5 unsatisfiable
preconditions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .classify import enumerate_profiles
from .cohomology import smoothing_hypotheses, standard_embedding, twist_cohomology
from .configfile import load_config
from .constraints import AlgebraInvariants
from .errors import ConfigParseError, InvariantError, PreconditionError
from .lineconfig import complete, cube, disjoint_lines, is_pgon, ngon, report
from .numpoly import NumPoly

SCHEMA_VERSION = 1
FORMAT_ENV = "SBCURVES_FORMAT"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVARIANT = 4
EXIT_PRECONDITION = 5


class UsageError(ValueError):
    """Missing or inconsistent query fields."""


@dataclass(frozen=True)
class Query:
    """One CLI invocation, validated before dispatch."""

    command: str
    algebra: tuple | None = None  # (degree, index, exponent, division flag)
    poly: tuple | None = None  # (r, s)
    family_name: str | None = None
    family_size: int | None = None
    twists: tuple = ()
    config_path: str | None = None
    embed_dim: int | None = None
    smoothing: bool = False
    pgon: int | None = None
    output_format: str = "table"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_table(headers, rows) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [
        max([len(headers[i])] + [len(row[i]) for row in cells])
        for i in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths).rstrip(),
    ]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _points_cell(points) -> str:
    return "+".join(str(p) for p in points) if points else "-"


def _profile_doc(profile) -> dict:
    return {
        "narrative": profile.narrative.value,
        "curve_degree": profile.curve_degree,
        "h0": profile.h0,
        "h1": profile.h1,
        "chi": profile.chi(),
        "geom_connected": profile.geom_connected,
        "geom_reduced": profile.geom_reduced,
        "geom_irreducible": profile.geom_irreducible,
        "extra_point_degrees": list(profile.extra_point_degrees),
        "provenance": profile.provenance,
    }


def _report_doc(rep) -> dict:
    return {
        "degree": rep.degree,
        "h0": rep.h0,
        "h1": rep.h1,
        "edge_transitive": rep.edge_transitive,
        "vertex_single_orbit": rep.vertex_single_orbit,
    }


def _cohom_doc(rep) -> dict:
    return {"m": rep.m, "h0": rep.h0, "h1": rep.h1, "chi": rep.chi, "spans": rep.spans}


def _report_table(label_header, label, rep) -> str:
    return _render_table(
        [label_header, "degree", "h0", "h1", "edge_transitive", "vertex_single_orbit"],
        [[label, rep.degree, rep.h0, rep.h1, _yes(rep.edge_transitive), _yes(rep.vertex_single_orbit)]],
    )


def _cohom_table(reports) -> str:
    return _render_table(
        ["m", "h0", "h1", "chi", "spans"],
        [[r.m, r.h0, r.h1, r.chi, _yes(r.spans)] for r in reports],
    )


def _need(value, message):
    if value is None:
        raise UsageError(message)
    return value


def _cmd_feasible(query: Query):
    d, n, m, division = _need(query.algebra, "feasible needs --degree/--index/--exponent")
    r, s = _need(query.poly, "feasible needs --poly R,S")
    alg = AlgebraInvariants(d=d, n=n, m=m, is_division=division)
    poly = NumPoly(r, s)
    profiles = enumerate_profiles(alg, poly)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "feasible",
        "algebra": {"degree": d, "index": n, "exponent": m, "division": division},
        "poly": {"r": r, "s": s},
        "profile_count": len(profiles),
        "profiles": [_profile_doc(p) for p in profiles],
    }
    summary = f"{len(profiles)} admissible profile(s) for {poly} at index {n}"
    if not profiles:
        return doc, summary + " (constraints are jointly unsatisfiable)"
    table = _render_table(
        [
            "narrative",
            "degree",
            "h0",
            "h1",
            "chi",
            "connected",
            "reduced",
            "irreducible",
            "points",
            "provenance",
        ],
        [
            [
                p.narrative.value,
                p.curve_degree,
                p.h0,
                p.h1,
                p.chi(),
                _yes(p.geom_connected),
                _yes(p.geom_reduced),
                _yes(p.geom_irreducible),
                _points_cell(p.extra_point_degrees),
                p.provenance,
            ]
            for p in profiles
        ],
    )
    return doc, summary + "\n\n" + table


_FAMILIES = {
    "ngon": (ngon, True),
    "cube": (cube, True),
    "complete": (complete, True),
    "disjoint-lines": (disjoint_lines, False),
}


def _build_family(name, size):
    builder, sized = _FAMILIES[name]
    if sized:
        if size is None:
            raise UsageError(f"family {name!r} needs a size argument")
        return builder(size), f"{name}({size})"
    if size is not None:
        raise UsageError(f"family {name!r} takes no size argument")
    return builder(), name


def _cmd_family(query: Query):
    name = _need(query.family_name, "family needs a family name")
    if name not in _FAMILIES:
        raise UsageError(f"unknown family {name!r}")
    config, label = _build_family(name, query.family_size)
    rep = report(config)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "family",
        "family": name,
        "size": query.family_size,
        "report": _report_doc(rep),
    }
    sections = [_report_table("family", label, rep)]
    if query.twists or query.smoothing:
        dim = query.embed_dim if query.embed_dim is not None else len(config.vertices)
        embedded = standard_embedding(config, dim)
        doc["embedding"] = {"method": "standard", "ambient_dim": dim}
        if query.twists:
            reports = [twist_cohomology(embedded, m) for m in query.twists]
            doc["cohomology"] = [_cohom_doc(r) for r in reports]
            sections.append(_cohom_table(reports))
        if query.smoothing:
            sm = smoothing_hypotheses(embedded)
            doc["smoothing"] = {
                "h1_O_equals_1": sm.h1_O_equals_1,
                "h1_O1_vanishes": sm.h1_O1_vanishes,
                "nodal": sm.nodal,
            }
            sections.append(
                _render_table(
                    ["h1_O_equals_1", "h1_O1_vanishes", "nodal"],
                    [[_yes(sm.h1_O_equals_1), _yes(sm.h1_O1_vanishes), _yes(sm.nodal)]],
                )
            )
    return doc, "\n\n".join(sections)


def _cmd_classify(query: Query):
    path = _need(query.config_path, "classify needs a configuration file path")
    parsed = load_config(path)
    rep = report(parsed.config)
    p = query.pgon if query.pgon is not None else rep.degree
    pgon = is_pgon(parsed.config, p)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "path": str(path),
        "report": _report_doc(rep),
        "pgon_parameter": p,
        "is_pgon": pgon,
    }
    table = _render_table(
        ["degree", "h0", "h1", "edge_transitive", "vertex_single_orbit", f"pgon(p={p})"],
        [[rep.degree, rep.h0, rep.h1, _yes(rep.edge_transitive), _yes(rep.vertex_single_orbit), _yes(pgon)]],
    )
    return doc, table


def _cmd_cohomology(query: Query):
    path = _need(query.config_path, "cohomology needs a configuration file path")
    if not query.twists:
        raise UsageError("cohomology needs --twist M[,M...]")
    parsed = load_config(path)
    if parsed.embedded is None:
        raise PreconditionError(
            "twist cohomology needs an embedded configuration: add vertex coordinates"
        )
    reports = [twist_cohomology(parsed.embedded, m) for m in query.twists]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "cohomology",
        "path": str(path),
        "ambient_dim": parsed.embedded.ambient_dim,
        "cohomology": [_cohom_doc(r) for r in reports],
    }
    return doc, _cohom_table(reports)


def _cmd_check_config(query: Query):
    path = _need(query.config_path, "check-config needs a configuration file path")
    parsed = load_config(path)
    config = parsed.config
    ambient = parsed.embedded.ambient_dim if parsed.embedded else None
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "check-config",
        "path": str(path),
        "vertices": len(config.vertices),
        "edges": len(config.edges),
        "generators": len(config.action),
        "embedded": parsed.is_embedded,
        "ambient_dim": ambient,
    }
    table = _render_table(
        ["vertices", "edges", "generators", "embedded", "ambient_dim"],
        [[len(config.vertices), len(config.edges), len(config.action), _yes(parsed.is_embedded), ambient if ambient is not None else "-"]],
    )
    return doc, "ok\n\n" + table


_HANDLERS = {
    "feasible": _cmd_feasible,
    "classify": _cmd_classify,
    "family": _cmd_family,
    "cohomology": _cmd_cohomology,
    "check-config": _cmd_check_config,
}


def run(query: Query):
    """Execute one query; returns (exit status, rendered output)."""
    handler = _HANDLERS.get(query.command)
    if handler is None:
        return EXIT_USAGE, f"error: unknown command {query.command!r}"
    if query.output_format not in ("table", "json"):
        return EXIT_USAGE, f"error: unknown output format {query.output_format!r}"
    try:
        doc, table = handler(query)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except ConfigParseError as exc:
        return EXIT_PARSE, f"error: {exc}"
    except InvariantError as exc:
        return EXIT_INVARIANT, f"error: {exc}"
    except PreconditionError as exc:
        return EXIT_PRECONDITION, f"error: {exc}"
    if query.output_format == "json":
        return EXIT_OK, json.dumps(doc, indent=2)
    return EXIT_OK, table


def _int_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected R,S with integer entries, got {text!r}")
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected exact integers, got {text!r}") from None


def _int_list(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbcurves",
        description="Feasibility and classification of low-degree curves on Severi-Brauer varieties.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "json"),
        default=None,
        help=f"output format (default: ${FORMAT_ENV} or table)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    feasible = sub.add_parser(
        "feasible", parents=[common], help="enumerate admissible subscheme profiles"
    )
    feasible.add_argument("--degree", type=int, required=True, help="degree of the algebra")
    feasible.add_argument("--index", type=int, required=True, help="index of the algebra")
    feasible.add_argument("--exponent", type=int, required=True, help="exponent of the algebra")
    feasible.add_argument(
        "--division", action="store_true", help="the algebra is a division algebra"
    )
    feasible.add_argument(
        "--poly", type=_int_pair, required=True, metavar="R,S", help="linear polynomial R*t+S"
    )

    classify = sub.add_parser(
        "classify", parents=[common], help="invariants and shape of a configuration file"
    )
    classify.add_argument("config", help="configuration file path")
    classify.add_argument(
        "--pgon", type=int, default=None, help="test the p-gon shape for this p (default: edge count)"
    )

    family = sub.add_parser(
        "family", parents=[common], help="standard configuration families"
    )
    family.add_argument("name", choices=sorted(_FAMILIES), help="family name")
    family.add_argument("size", type=int, nargs="?", default=None, help="family size parameter")
    family.add_argument(
        "--embed",
        choices=("standard",),
        default="standard",
        help="embedding used for cohomology (vertices at standard basis vectors)",
    )
    family.add_argument(
        "--embed-dim", type=int, default=None, help="ambient dimension (default: vertex count)"
    )
    family.add_argument(
        "--cohomology", type=_int_list, default=(), metavar="M[,M...]", help="twists to compute"
    )
    family.add_argument(
        "--smoothing", action="store_true", help="check the smoothing hypotheses"
    )

    cohom = sub.add_parser(
        "cohomology", parents=[common], help="twist cohomology of an embedded configuration file"
    )
    cohom.add_argument("config", help="configuration file path (with coordinates)")
    cohom.add_argument(
        "--twist", type=_int_list, required=True, metavar="M[,M...]", help="twists to compute"
    )

    check = sub.add_parser(
        "check-config", parents=[common], help="validate a configuration file"
    )
    check.add_argument("config", help="configuration file path")
    return parser


def _query_from_args(args) -> Query:
    fmt = args.format
    if fmt is None:
        fmt = os.environ.get(FORMAT_ENV) or "table"
    command = args.command
    if command == "feasible":
        return Query(
            command=command,
            algebra=(args.degree, args.index, args.exponent, args.division),
            poly=args.poly,
            output_format=fmt,
        )
    if command == "classify":
        return Query(command=command, config_path=args.config, pgon=args.pgon, output_format=fmt)
    if command == "family":
        return Query(
            command=command,
            family_name=args.name,
            family_size=args.size,
            twists=tuple(args.cohomology),
            embed_dim=args.embed_dim,
            smoothing=args.smoothing,
            output_format=fmt,
        )
    if command == "cohomology":
        return Query(
            command=command, config_path=args.config, twists=tuple(args.twist), output_format=fmt
        )
    return Query(command=command, config_path=args.config, output_format=fmt)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_USAGE
    status, text = run(_query_from_args(args))
    stream = sys.stdout if status == EXIT_OK else sys.stderr
    if text:
        print(text, file=stream)
    return status


def console_main():
    raise SystemExit(main())
