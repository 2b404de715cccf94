"""Command-line interface.

Exit codes, used consistently by every subcommand:

* 0 — success (analysis clean, witness found, all claims pass, ...)
* 1 — input error (unreadable file, malformed edge list, bad parameters)
* 2 — internal inconsistency (routes that must agree disagreed, claim FAIL)
* 3 — certified absence (detect found no witness on a Helly input)
* 4 — precondition warning (non-Helly input, enumeration budget exceeded)

Environment: HELLYMETRIC_THREADS sets the default worker count for the
hyperbolicity scan; HELLYMETRIC_HULL_BUDGET caps hull enumeration size.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .detect import (
    MaterializeError,
    NotHellyError,
    ObstructionWitness,
    detect_H1,
    detect_H1_or_H3,
    detect_H2,
)
from .distances import apsp, graph_power
from .families import build_obstruction
from .graphs import (
    Graph,
    GraphError,
    king_grid,
    load_graph,
    random_connected_graph,
    to_edge_list,
)
from .helly import MedianSearchError, is_helly
from .hull import HullBudgetError, hull
from .report import (
    build_analysis,
    family_to_dot,
    graph_to_dot,
    report_to_dict,
    verify_claims,
    witness_to_dict,
)

_THREADS_ENV = "HELLYMETRIC_THREADS"


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(_THREADS_ENV, "1")))
    except ValueError:
        return 1


def _read_graph(path: str) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    g = load_graph(text)
    return Graph(g.n, g.edges(), name=Path(path).stem)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    report = build_analysis(
        g, threads=args.threads, include_hull=not args.no_hull
    )

    lines = [
        f"graph: {report.name}  n={report.n} m={report.m} "
        f"diameter={report.diameter} radius={report.radius}",
        f"helly: {'yes' if report.is_helly else 'no'}"
        + (
            ""
            if report.helly_counterexample is None
            else "  counterexample disks: "
            + " ".join(
                f"B({c.center},{c.radius})" for c in report.helly_counterexample
            )
        ),
        "pseudo-modular: "
        + (
            "unknown (" + str(report.pseudo_modular_note) + ")"
            if report.is_pseudo_modular is None
            else ("yes" if report.is_pseudo_modular else "no")
        ),
        f"hyperbolicity: {report.hyperbolicity}  "
        f"quadruple={report.hyperbolicity_witness.quadruple} "
        f"pairing sums={report.hyperbolicity_witness.sums}",
        f"thinness: {report.thinness}  "
        f"endpoints={report.thinness_witness.endpoints} "
        f"slice={report.thinness_witness.slice_index} "
        f"pair={report.thinness_witness.pair} "
        f"distance={report.thinness_witness.distance}",
    ]
    if report.is_helly:
        assert report.hb_by_obstructions is not None
        assert report.hb_by_thinness is not None
        lines.append(
            f"routes: obstructions={report.hb_by_obstructions} "
            f"thinness={report.hb_by_thinness} "
            f"agree={'yes' if report.classifiers_agree else 'NO'}"
        )
        assert report.equivalents is not None
        lines.append(
            "equivalents: "
            + " ".join(f"{k}={v}" for k, v in report.equivalents.items())
        )
        assert report.probes is not None
        for t, w in report.probes:
            if w is None:
                lines.append(f"probe {t}: none")
            else:
                lines.append(
                    f"probe {t}: {w.family}({w.k},{w.l}) corners={w.corners}"
                )
    else:
        lines.append("routes: skipped (input is not Helly)")
    if report.hull is not None:
        if "skipped" in report.hull:
            lines.append(f"hull: skipped ({report.hull['skipped']})")
        else:
            checks = report.hull["checks"]
            assert isinstance(checks, dict)
            lines.append(
                f"hull: n={report.hull['n']} m={report.hull['m']} "
                + " ".join(f"{k}={v}" for k, v in checks.items())
            )
    lines.append(
        "timings: "
        + " ".join(f"{k}={v}ms" for k, v in report.timings_ms.items())
    )
    sys.stdout.write("\n".join(lines) + "\n")

    if args.json is not None:
        payload = json.dumps(report_to_dict(report), indent=2) + "\n"
        _emit(payload, args.json)

    if not report.is_helly:
        return 4
    if report.classifiers_agree is False:
        return 2
    return 0


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def cmd_generate(args: argparse.Namespace) -> int:
    fam = args.family
    if fam in ("h1", "h2", "h3"):
        if args.k is None:
            raise ValueError(f"--family {fam} requires --k")
        l = args.l if args.l is not None else args.k
        fg = build_obstruction(fam.upper(), args.k, l)
        if args.dot:
            _emit(family_to_dot(fg), args.output)
            return 0
        g = fg.graph
        header = [f"{g.name} n={g.n} m={g.m}"]
        for tag, cidx in zip("abcd", fg.corners):
            header.append(f"corner {tag}={cidx}")
        for vid, cell in enumerate(fg.cells):
            hx, hy = fg.host_cells()[vid]
            header.append(f"cell {vid} = ({cell[0]},{cell[1]}) host=({hx},{hy})")
        _emit(to_edge_list(g, header=header), args.output)
        return 0
    if fam == "king":
        if args.p is None:
            raise ValueError("--family king requires --p (and optionally --q)")
        q = args.q if args.q is not None else args.p
        g = king_grid(args.p, q)
        if args.dot:
            _emit(graph_to_dot(g), args.output)
            return 0
        header = [f"{g.name} n={g.n} m={g.m}"]
        assert g.vertex_labels is not None
        for vid, lab in enumerate(g.vertex_labels):
            header.append(f"cell {vid} = ({lab})")
        _emit(to_edge_list(g, header=header), args.output)
        return 0
    # random-hull: the injective hull of a seeded random connected graph
    if args.n is None:
        raise ValueError("--family random-hull requires --n")
    base = random_connected_graph(args.n, args.prob, args.seed)
    res = hull(base)
    g = res.graph
    if args.dot:
        _emit(graph_to_dot(g), args.output)
        return 0
    header = [
        f"{g.name} n={g.n} m={g.m}",
        f"base gnp(n={args.n}, prob={args.prob}, seed={args.seed})",
    ]
    _emit(to_edge_list(g, header=header), args.output)
    return 0


# ---------------------------------------------------------------------------
# detect
# ---------------------------------------------------------------------------

_DETECTORS = {
    "h1": detect_H1,
    "h2": detect_H2,
    "h1h3": detect_H1_or_H3,
    "h3": detect_H1_or_H3,
}


def _print_witness(w: ObstructionWitness, materialize_out: bool) -> None:
    sys.stdout.write(f"witness: family={w.family} k={w.k} l={w.l}\n")
    sys.stdout.write(
        "corners: "
        + " ".join(f"{tag}={v}" for tag, v in zip("xyzt", w.corners))
        + "\n"
    )
    if materialize_out:
        sys.stdout.write(
            f"materialized ({len(w.materialized)} vertices): "
            + " ".join(str(v) for v in w.materialized)
            + "\n"
        )


def cmd_detect(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    dm = apsp(g)
    helly = bool(is_helly(g, dm=dm))
    detector = _DETECTORS[args.family]

    witness: ObstructionWitness | None = None
    note: str | None = None
    if helly:
        witness = detector(g, args.k, dm=dm)
    else:
        sys.stdout.write(
            "warning: input is not Helly; a found witness is still sound, "
            "but absence certifies nothing\n"
        )
        try:
            witness = detector(g, args.k, dm=dm)
        except (MaterializeError, MedianSearchError) as exc:
            note = f"detector aborted on non-Helly structure: {exc}"
            sys.stdout.write(note + "\n")

    if witness is not None:
        _print_witness(witness, args.materialize)
    elif note is None:
        sys.stdout.write(
            "no witness"
            + (": certified absence at this threshold\n" if helly else "\n")
        )

    if args.json is not None:
        payload: dict[str, object] = {
            "is_helly": helly,
            "family_probe": args.family,
            "k": args.k,
            "fired": witness is not None,
            "witness": None
            if witness is None
            else witness_to_dict(witness, include_materialized=args.materialize),
            "note": note,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.json)

    if not helly:
        return 4
    return 0 if witness is not None else 3


# ---------------------------------------------------------------------------
# hull
# ---------------------------------------------------------------------------

def cmd_hull(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    dm = apsp(g)
    try:
        res = hull(g, dm=dm)
    except HullBudgetError as exc:
        sys.stderr.write(f"hull enumeration refused: {exc}\n")
        return 4
    hg = res.graph
    sidecar = {
        "n": hg.n,
        "functions": [list(f) for f in res.functions],
        "embedding": list(res.embedding),
    }
    header = [f"{hg.name} n={hg.n} m={hg.m}"]
    text = to_edge_list(hg, header=header)
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
        sys.stdout.write("# sidecar: " + json.dumps(sidecar) + "\n")
    else:
        Path(args.output).write_text(text, encoding="utf-8")
        Path(args.output + ".json").write_text(
            json.dumps(sidecar, indent=2) + "\n", encoding="utf-8"
        )
    return 0


# ---------------------------------------------------------------------------
# power
# ---------------------------------------------------------------------------

def cmd_power(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise ValueError("--k must be >= 1")
    g = _read_graph(args.path)
    pg = graph_power(g, args.k)
    header = [f"{g.name}^{args.k} n={pg.n} m={pg.m}"]
    _emit(to_edge_list(pg, header=header), args.output)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    results = verify_claims(g)
    width = max(len(r.claim) for r in results)
    for r in results:
        sys.stdout.write(f"{r.status:<4} {r.claim:<{width}}  {r.detail}\n")
    statuses = {r.status for r in results}
    if "FAIL" in statuses:
        return 2
    if "SKIP" in statuses:
        return 4
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hellymetric",
        description="Exact hyperbolicity, obstruction, and hull analysis "
        "for Helly graphs (edge-list inputs).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="run every analysis phase on a graph")
    pa.add_argument("path", help="edge-list file")
    pa.add_argument("--threads", type=int, default=_default_threads())
    pa.add_argument("--json", default=None, help="write a JSON report here ('-' for stdout)")
    pa.add_argument("--no-hull", action="store_true", help="skip the hull phase")
    pa.set_defaults(func=cmd_analyze)

    pg = sub.add_parser("generate", help="emit a named graph as an edge list")
    pg.add_argument(
        "--family",
        required=True,
        choices=("king", "h1", "h2", "h3", "random-hull"),
    )
    pg.add_argument("--k", type=int, default=None)
    pg.add_argument("--l", type=int, default=None)
    pg.add_argument("--p", type=int, default=None, help="king grid rows")
    pg.add_argument("--q", type=int, default=None, help="king grid columns")
    pg.add_argument("--n", type=int, default=None, help="random base graph size")
    pg.add_argument("--prob", type=float, default=0.3)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--dot", action="store_true", help="emit DOT instead")
    pg.add_argument("-o", "--output", default=None)
    pg.set_defaults(func=cmd_generate)

    pd = sub.add_parser("detect", help="run one obstruction probe")
    pd.add_argument("path")
    pd.add_argument("--family", required=True, choices=("h1", "h2", "h1h3", "h3"))
    pd.add_argument("--k", type=int, required=True)
    pd.add_argument(
        "--materialize",
        action="store_true",
        help="include the materialized vertex set in the output",
    )
    pd.add_argument("--json", default=None)
    pd.set_defaults(func=cmd_detect)

    ph = sub.add_parser("hull", help="compute the injective hull")
    ph.add_argument("path")
    ph.add_argument("-o", "--output", default=None)
    ph.set_defaults(func=cmd_hull)

    pp = sub.add_parser("power", help="emit the k-th power graph")
    pp.add_argument("path")
    pp.add_argument("--k", type=int, required=True)
    pp.add_argument("-o", "--output", default=None)
    pp.set_defaults(func=cmd_power)

    pv = sub.add_parser("verify", help="check the cross-route identities")
    pv.add_argument("path")
    pv.set_defaults(func=cmd_verify)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return int(args.func(args))
    except (OSError, GraphError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except NotHellyError as exc:
        sys.stderr.write(f"precondition: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
