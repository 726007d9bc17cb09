"""Command-line interface for the whole pipeline.

Subcommands cover sphere enumeration, the twenty short pure elements,
the Cayley complex, the fundamental polygon with its side pairings and
corner cycles, the induced presentation and its one-relator reduction,
certificate-checked isomorphism verification, SVG figures, and the
thirteen-point verification registry.  Reports serialize as
deterministic JSON (stable key order, no timestamps) or as plain-text
tables; exit codes are 0 for success, 1 for a failed check, 2 for an
inconclusive (budget-limited) outcome, and 64 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from importlib import metadata
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .action import standard_generators
from .cactus import j4_presentation, j4prime_presentation, project_to_symmetric
from .complex import build_ball, check_tiling
from .dirichlet import (
    EXACT_BUDGET,
    classify_identified_surface,
    dirichlet_polygon,
    poincare_presentation,
    side_pairings,
    vertex_cycles,
)
from .geometry import embed_ball, render_svg
from .grouptheory import (
    STANDARD_ELIMINATIONS,
    TrivialityCertificate,
    abelianization_invariants,
    alt_isomorphism_pair,
    hom_well_defined,
    surface_isomorphism_pair,
    tietze_eliminate,
    verify_mutual_inverse,
)
from .rewrite import DEFAULT_BUDGET, RewriteBudget, RewriteBudgetExceeded, sphere
from .verify import run_all
from .words import Presentation

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

try:
    VERSION = metadata.version("artifact")
except metadata.PackageNotFoundError:  # pragma: no cover - source checkout
    VERSION = "0.1.0"


class UsageError(Exception):
    """Bad flag values detected after parsing."""


@dataclass(frozen=True)
class RunReport:
    """One command execution: inputs, results, and bookkeeping.

    ``wall_time`` is informational only and never serialized, so
    reports for identical arguments are byte-identical.
    """

    command: str
    parameters: dict
    results: object
    wall_time: float
    version: str


# ---------------------------------------------------------------------------
# serialization helpers


def _presentation_dict(P: Presentation) -> dict:
    return {
        "generators": list(P.alphabet.names()),
        "relators": [str(r) for r in P.relators],
    }


def _abelianization_dict(invariants: Tuple[int, Tuple[int, ...]]) -> dict:
    free_rank, torsion = invariants
    return {"free_rank": free_rank, "torsion": list(torsion)}


def _abelianization_text(invariants: Tuple[int, Tuple[int, ...]]) -> str:
    free_rank, torsion = invariants
    parts = [f"Z^{free_rank}"] if free_rank else []
    parts += [f"Z/{t}" for t in torsion]
    return " x ".join(parts) if parts else "trivial"


def _certificate_dict(cert: Optional[TrivialityCertificate]) -> Optional[dict]:
    if cert is None:
        return None
    return {
        "word": str(cert.word),
        "moves": [
            {
                "kind": move.kind,
                "position": move.position,
                "letters": [[name, exp] for name, exp in move.letters],
            }
            for move in cert.moves
        ],
    }


def _verdict_dict(report, map_name: str) -> dict:
    return {
        "map": map_name,
        "verdict": report.verdict,
        "checks": [
            {
                "word": word,
                "oracle": oracle,
                "status": status,
                "certificate": _certificate_dict(cert),
            }
            for (word, oracle, status), cert in zip(
                report.details, report.certificates
            )
        ],
    }


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*row) for row in rows]
    return lines


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (parameters, results, exit code)


def _budget_from(args) -> RewriteBudget:
    slack = getattr(args, "budget_slack", None)
    if slack is None:
        return DEFAULT_BUDGET
    try:
        return RewriteBudget(slack=slack)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_sphere(args) -> Tuple[dict, dict, int]:
    budget = _budget_from(args)
    P = j4prime_presentation() if args.group == "j4p" else j4_presentation()
    words = sphere(P, args.length, budget)
    params = {
        "group": args.group,
        "length": args.length,
        "budget_slack": budget.slack,
    }
    results = {
        "count": len(words),
        "words": [str(w) for w in words],
    }
    return params, results, EXIT_OK


def _cmd_pure(args) -> Tuple[dict, dict, int]:
    gens = standard_generators()
    ordered = [f"g{i}" for i in range(1, 11)]
    elements = {name: gens[name] for name in ordered}
    for name in ordered:
        elements[name + "^-1"] = gens[name].inverse()
    rows = []
    for name, g in elements.items():
        partner = name[:-3] if name.endswith("^-1") else name + "^-1"
        rows.append(
            {
                "name": name,
                "word": str(g.j4p_form),
                "parity": g.parity,
                "inverse": partner,
                "image": str(project_to_symmetric(g.j4p_form, 4)),
            }
        )
    return {}, {"count": len(rows), "elements": rows}, EXIT_OK


def _cmd_complex(args) -> Tuple[dict, dict, int]:
    budget = _budget_from(args)
    P = j4prime_presentation()
    ball = build_ball(P, args.radius, budget)
    histogram: Dict[str, int] = {}
    for _, dist in ball.vertices.items():
        histogram[str(dist)] = histogram.get(str(dist), 0) + 1
    results = {
        "radius": args.radius,
        "vertex_count": len(ball.vertices),
        "edge_count": len(ball.edges),
        "face_count": len(ball.faces),
        "interior_count": len(ball.interior),
        "distance_histogram": histogram,
    }
    code = EXIT_OK
    if args.radius >= 3:
        report = check_tiling(ball)
        results["tiling"] = {
            "ok": report.ok,
            "failures": list(report.failures),
            "vertex_count": report.vertex_count,
            "interior_count": report.interior_count,
        }
        if not report.ok:
            code = EXIT_CHECK_FAILED
    params = {"radius": args.radius, "budget_slack": budget.slack}
    return params, results, code


def _dirichlet_results() -> dict:
    poly = dirichlet_polygon()
    pairings = side_pairings(poly)
    cycles = vertex_cycles(poly, pairings)
    surface = classify_identified_surface(poly, pairings)
    return {
        "corners": [
            {"label": str(label), "fifths": fifths}
            for label, fifths in zip(poly.labels, poly.angle_fifths)
        ],
        "side_kinds": list(poly.side_kinds),
        "pairings": [
            {
                "generator": row.generator,
                "source": [str(w) for w in row.source],
                "target": [str(w) for w in row.target],
            }
            for row in pairings
        ],
        "cycles": [
            {
                "generators": list(c.generators),
                "vertices": [str(v) for v in c.vertices],
                "fifths": list(c.fifths),
                "nu": c.nu,
                "angle_sum_fifths": sum(c.fifths),
            }
            for c in cycles
        ],
        "surface": {
            "euler_characteristic": surface.euler_characteristic,
            "orientable": surface.orientable,
            "name": surface.name,
        },
    }


def _cmd_dirichlet(args) -> Tuple[dict, dict, int]:
    return {}, _dirichlet_results(), EXIT_OK


def _cmd_presentation(args) -> Tuple[dict, dict, int]:
    poly = dirichlet_polygon()
    pairings = side_pairings(poly)
    cycles = vertex_cycles(poly, pairings)
    pres = poincare_presentation(pairings, cycles)
    results = _presentation_dict(pres)
    results["abelianization"] = _abelianization_dict(
        abelianization_invariants(pres)
    )
    return {}, results, EXIT_OK


def _cmd_tietze(args) -> Tuple[dict, dict, int]:
    poly = dirichlet_polygon()
    pairings = side_pairings(poly)
    cycles = vertex_cycles(poly, pairings)
    before = poincare_presentation(pairings, cycles)
    after = tietze_eliminate(before, STANDARD_ELIMINATIONS)
    results = {
        "before": _presentation_dict(before),
        "after": _presentation_dict(after),
        "eliminations": [list(pair) for pair in STANDARD_ELIMINATIONS],
        "abelianization_before": _abelianization_dict(
            abelianization_invariants(before)
        ),
        "abelianization_after": _abelianization_dict(
            abelianization_invariants(after)
        ),
    }
    return {}, results, EXIT_OK


def _cmd_isocheck(args) -> Tuple[dict, dict, int]:
    pair = alt_isomorphism_pair if args.which == "alt" else surface_isomorphism_pair
    f, g = pair()
    forward = hom_well_defined(f)
    backward = hom_well_defined(g)
    round_trips = verify_mutual_inverse(f, g)
    verdicts = [forward.verdict, backward.verdict, round_trips.verdict]
    if any(v == "refuted" for v in verdicts):
        overall, code = "refuted", EXIT_CHECK_FAILED
    elif any(v == "inconclusive" for v in verdicts):
        overall, code = "inconclusive", EXIT_INCONCLUSIVE
    else:
        overall, code = "verified", EXIT_OK
    results = {
        "which": args.which,
        "verdict": overall,
        "forward": _verdict_dict(forward, f.name or "f"),
        "backward": _verdict_dict(backward, g.name or "g"),
        "round_trips": _verdict_dict(
            round_trips, f"{f.name or 'f'}/{g.name or 'g'}"
        ),
    }
    return {"which": args.which}, results, code


_PALETTE = [f"hsl({i * 36}, 70%, 45%)" for i in range(10)]


def _render_layers(what: str) -> List[dict]:
    P = j4prime_presentation()
    ball = build_ball(P, 4, EXACT_BUDGET)
    emb = embed_ball(ball)
    identity = ball.identity()
    if what == "ball":
        inner = build_ball(P, 3, EXACT_BUDGET)
        return [
            {
                "kind": "segments",
                "segments": [(emb[u], emb[v]) for u, v, _ in inner.edges],
                "color": "steelblue",
                "width": 2,
            },
            {
                "kind": "points",
                "points": [
                    (emb[v], "e") if v == identity else emb[v]
                    for v in inner.vertices
                ],
                "color": "black",
            },
        ]
    if what == "tiling":
        return [
            {
                "kind": "segments",
                "segments": [(emb[u], emb[v]) for u, v, _ in ball.edges],
                "color": "black",
                "width": 1,
            },
            {"kind": "points", "points": [(emb[identity], "e")], "color": "red"},
        ]
    # the fundamental polygon over the tiling, paired sides sharing color
    poly = dirichlet_polygon()
    pairings = side_pairings(poly)
    side_color = {}
    for index, row in enumerate(pairings):
        side_color[frozenset(row.source)] = _PALETTE[index]
        side_color[frozenset(row.target)] = _PALETTE[index]
    colors = [
        side_color[frozenset(poly.side_words(i))] for i in range(poly.n_sides)
    ]
    return [
        {
            "kind": "segments",
            "segments": [(emb[u], emb[v]) for u, v, _ in ball.edges],
            "color": "#cccccc",
            "width": 1,
        },
        {"kind": "polygon", "polygon": poly.polygon, "side_colors": colors},
        {
            "kind": "points",
            "points": [(emb[identity], "e")],
            "color": "black",
        },
    ]


def _cmd_render(args) -> Tuple[dict, dict, int]:
    svg = render_svg(_render_layers(args.what))
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(svg)
    params = {"what": args.what, "svg": args.svg}
    results = {"what": args.what, "svg": args.svg, "svg_bytes": len(svg)}
    return params, results, EXIT_OK


def _cmd_verify_all(args) -> Tuple[dict, dict, int]:
    outcomes = run_all(args.tolerance)
    results = {
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "details": r.details,
            }
            for r in outcomes
        ],
        "passed": all(r.passed for r in outcomes),
    }
    code = EXIT_OK if results["passed"] else EXIT_CHECK_FAILED
    return {"tolerance": args.tolerance}, results, code


_HANDLERS: Dict[str, Callable] = {
    "sphere": _cmd_sphere,
    "pure": _cmd_pure,
    "complex": _cmd_complex,
    "dirichlet": _cmd_dirichlet,
    "presentation": _cmd_presentation,
    "tietze": _cmd_tietze,
    "isocheck": _cmd_isocheck,
    "render": _cmd_render,
    "verify-all": _cmd_verify_all,
}


# ---------------------------------------------------------------------------
# text rendering


def _text_sphere(report: RunReport) -> List[str]:
    lines = [
        f"group {report.parameters['group']} length "
        f"{report.parameters['length']}: {report.results['count']} elements"
    ]
    lines += report.results["words"]
    return lines


def _text_pure(report: RunReport) -> List[str]:
    rows = [
        (row["name"], row["word"], row["inverse"], row["image"])
        for row in report.results["elements"]
    ]
    return _table(("name", "word", "inverse", "image"), rows)


def _text_complex(report: RunReport) -> List[str]:
    r = report.results
    lines = [
        f"radius {r['radius']}: {r['vertex_count']} vertices, "
        f"{r['edge_count']} edges, {r['face_count']} faces, "
        f"{r['interior_count']} interior",
    ]
    if "tiling" in r:
        t = r["tiling"]
        status = "ok" if t["ok"] else "FAILED"
        lines.append(f"tiling check: {status}")
        lines += [f"  {msg}" for msg in t["failures"]]
    return lines


def _angle_text(fifths_sum: int) -> str:
    if fifths_sum % 5 == 0:
        return f"{fifths_sum // 5}π"
    return f"{fifths_sum}π/5"


def _text_dirichlet(report: RunReport) -> List[str]:
    r = report.results
    lines = ["side pairings:"]
    lines += _table(
        ("generator", "source", "target"),
        [
            (
                row["generator"],
                " , ".join(row["source"]),
                " , ".join(row["target"]),
            )
            for row in r["pairings"]
        ],
    )
    lines.append("")
    lines.append("corner cycles:")
    lines += _table(
        ("generators", "corners", "fifths", "angle sum"),
        [
            (
                " ".join(c["generators"]),
                " ; ".join(c["vertices"]),
                " ".join(str(f) for f in c["fifths"]),
                _angle_text(c["angle_sum_fifths"]),
            )
            for c in r["cycles"]
        ],
    )
    surf = r["surface"]
    lines.append("")
    lines.append(
        f"identified surface: {surf['name']} "
        f"(Euler characteristic {surf['euler_characteristic']}, "
        f"{'orientable' if surf['orientable'] else 'nonorientable'})"
    )
    return lines


def _presentation_text(data: dict) -> str:
    return (
        "< "
        + ", ".join(data["generators"])
        + " | "
        + ", ".join(data["relators"])
        + " >"
    )


def _text_presentation(report: RunReport) -> List[str]:
    inv = report.results["abelianization"]
    return [
        _presentation_text(report.results),
        "abelianization: "
        + _abelianization_text((inv["free_rank"], tuple(inv["torsion"]))),
    ]


def _text_tietze(report: RunReport) -> List[str]:
    r = report.results
    lines = ["before: " + _presentation_text(r["before"])]
    lines += [
        f"eliminate {name} = {word}" for name, word in r["eliminations"]
    ]
    lines.append("after:  " + _presentation_text(r["after"]))
    ab_before = r["abelianization_before"]
    ab_after = r["abelianization_after"]
    same = " (unchanged)" if ab_before == ab_after else " (CHANGED)"
    lines.append(
        "abelianization: "
        + _abelianization_text(
            (ab_before["free_rank"], tuple(ab_before["torsion"]))
        )
        + same
    )
    return lines


def _text_isocheck(report: RunReport) -> List[str]:
    r = report.results
    lines = [f"{r['which']}: {r['verdict']}"]
    for key in ("forward", "backward", "round_trips"):
        block = r[key]
        checked = len(block["checks"])
        trivial = sum(1 for c in block["checks"] if c["status"] == "TRIVIAL")
        lines.append(
            f"  {key} ({block['map']}): {block['verdict']} "
            f"[{trivial}/{checked} identities trivial]"
        )
    return lines


def _text_render(report: RunReport) -> List[str]:
    r = report.results
    return [f"wrote {r['svg']} ({r['svg_bytes']} bytes, {r['what']})"]


def _text_verify_all(report: RunReport) -> List[str]:
    lines = []
    for c in report.results["criteria"]:
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"[{mark}] {c['number']:>2} {c['name']}: {c['details']}")
    total = len(report.results["criteria"])
    good = sum(1 for c in report.results["criteria"] if c["passed"])
    lines.append(f"{good}/{total} criteria passed")
    return lines


_TEXT_RENDERERS: Dict[str, Callable[[RunReport], List[str]]] = {
    "sphere": _text_sphere,
    "pure": _text_pure,
    "complex": _text_complex,
    "dirichlet": _text_dirichlet,
    "presentation": _text_presentation,
    "tietze": _text_tietze,
    "isocheck": _text_isocheck,
    "render": _text_render,
    "verify-all": _text_verify_all,
}


def emit_report(report: RunReport, format: str = "json") -> bytes:
    """Serialize a report with stable field ordering; wall time is
    deliberately omitted so identical runs emit identical bytes."""
    if format == "json":
        if not report.command and not report.results:
            return b"{}\n"
        envelope = {
            "command": report.command,
            "parameters": report.parameters,
            "results": report.results,
            "version": report.version,
        }
        return (
            json.dumps(envelope, sort_keys=True, indent=2) + "\n"
        ).encode("utf-8")
    if format == "text":
        if not report.command and not report.results:
            return b""
        renderer = _TEXT_RENDERERS.get(report.command)
        if renderer is None:
            body = json.dumps(report.results, sort_keys=True, indent=2)
            return (body + "\n").encode("utf-8")
        return ("\n".join(renderer(report)) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {format!r}")


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report to this path")
    common.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="report format (default json)",
    )

    parser = _Parser(prog="cactus45", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sphere", parents=[common], help="enumerate one sphere")
    p.add_argument("--group", choices=("j4", "j4p"), default="j4p")
    p.add_argument("--length", type=_nonnegative_int, required=True)
    p.add_argument("--budget-slack", type=int, default=None)

    sub.add_parser(
        "pure", parents=[common], help="list the twenty short pure elements"
    )

    p = sub.add_parser(
        "complex", parents=[common], help="build and check a Cayley ball"
    )
    p.add_argument("--radius", type=_positive_int, default=3)
    p.add_argument("--budget-slack", type=int, default=None)

    sub.add_parser(
        "dirichlet",
        parents=[common],
        help="fundamental polygon, pairings, cycles, surface",
    )
    sub.add_parser(
        "presentation",
        parents=[common],
        help="presentation induced by the corner cycles",
    )
    sub.add_parser(
        "tietze",
        parents=[common],
        help="reduce the induced presentation to one relator",
    )

    p = sub.add_parser(
        "isocheck",
        parents=[common],
        help="verify one companion isomorphism pair",
    )
    p.add_argument("--which", choices=("alt", "surface"), required=True)

    p = sub.add_parser("render", parents=[common], help="draw an SVG figure")
    p.add_argument("--what", choices=("ball", "tiling", "dirichlet"), required=True)
    p.add_argument("--svg", required=True, help="output SVG path")

    p = sub.add_parser(
        "verify-all",
        parents=[common],
        help="run the thirteen-point verification registry",
    )
    p.add_argument("--tolerance", type=float, default=1e-6)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    handler = _HANDLERS[args.command]
    start = time.perf_counter()
    try:
        parameters, results, code = handler(args)
    except UsageError as exc:
        sys.stderr.write(f"cactus45 {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except RewriteBudgetExceeded as exc:
        sys.stderr.write(f"cactus45 {args.command}: inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    wall = time.perf_counter() - start

    report = RunReport(
        command=args.command,
        parameters=parameters,
        results=results,
        wall_time=wall,
        version=VERSION,
    )
    payload = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return code


if __name__ == "__main__":
    sys.exit(main())
