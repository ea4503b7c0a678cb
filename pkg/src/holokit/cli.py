"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a mismatch (or a
technique does not apply), 2 on input errors, 3 on internal invariant failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import named as _catalog
from . import holonomy as hol
from .errors import HolokitError, InputError, NotChordalError, ResourceError
from .graphs import elimination_tower, kappa, lfs_exponents
from .io import load_arrangement, load_graph, load_matroid
from .lattice import REGION_CAVEAT, flats_lattice, os_hilbert_series, region_count


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(f"{self.prog}: {message}")


def _emit(out, args, payload, text: str) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _dims_text(dims) -> str:
    return "\n".join(f"d={d}: {v}" for d, v in enumerate(dims, start=1))


# ---------------------------------------------------------------------------
# handlers


def _matroid(args, out) -> int:
    m = load_matroid(args.source, validate=not args.no_validate)
    if args.action == "flats":
        lat = flats_lattice(m)
        lines = []
        for k, grp in enumerate(lat.by_rank):
            for f in grp:
                lines.append(f"rank {k}  mu={lat.mobius[f]:+d}  {{{', '.join(m.ground.labels(f))}}}")
        _emit(out, args, lat.to_json(), "\n".join(lines))
    elif args.action == "os-series":
        poly = os_hilbert_series(m)
        _emit(out, args, poly.to_json(), poly.text("z"))
    else:
        n = region_count(m)
        _emit(out, args, n, f"{n}\n({REGION_CAVEAT})")
    return 0


def _holonomy(args, out) -> int:
    h = hol.holonomy_presentation(load_arrangement(args.source, validate=not args.no_validate))
    D = args.max_degree
    if args.action == "present":
        lab = ", ".join(h.elements)
        lines = [f"generators: {lab}"]
        lines += [f"  {t}" for t in h.to_json()["relations_text"]]
        _emit(out, args, h.to_json(), "\n".join(lines))
    elif args.action == "dims":
        dims = hol.graded_dims(h, D, args.engine)
        _emit(out, args, dims.to_json(), _dims_text(dims))
    elif args.action == "series":
        s = hol.lcs_series(h, D, args.engine)
        _emit(out, args, s.to_json(), "computed: " + s.text("t"))
    else:
        rep = hol.decomposability(h, max(D, 2), args.engine)
        lines = [f"decomposable: {'yes' if rep.decomposable else 'no'}",
                 "dim I: " + ", ".join(map(str, rep.ideal_dims))]
        for x, y, z, b in rep.witnesses:
            lines.append(f"  [{x},[{y},{z}]] != 0   block ({' '.join(b)})")
        _emit(out, args, rep.to_json(), "\n".join(lines))
    return 0


def _graph(args, out) -> int:
    g = load_graph(args.source)
    if args.action == "lfs":
        ex = lfs_exponents(g)
        s = hol.lfs_series(g, args.max_degree)
        payload = {"kappa": kappa(g), "exponents": [[j, e] for j, e in ex], "series": list(s)}
        text = "\n".join([f"kappa: {kappa(g)}"] + [f"e_{j} = {e}" for j, e in ex]
                         + ["predicted: " + s.text("t")])
        _emit(out, args, payload, text)
        return 0
    try:
        ranks = elimination_tower(g)
    except NotChordalError as exc:
        _emit(out, args, {"chordal": False, "remaining": list(exc.remaining)}, f"not chordal: {exc}")
        return 1
    _emit(out, args, {"chordal": True, "ranks": ranks}, "ranks: " + ", ".join(map(str, ranks)))
    return 0


def _check_text(chk: hol.SeriesCheck) -> str:
    lines = ["computed:  " + chk.computed.text("t"), "predicted: " + chk.predicted.text("t")]
    if chk.ok:
        lines.append("match")
    else:
        lines.append(f"MISMATCH at degree {chk.first_mismatch}")
    return "\n".join(lines)


def _verify(args, out) -> int:
    D = args.max_degree
    if args.kind == "kohno":
        if args.n is None:
            raise InputError("verify kohno needs -n")
        h = hol.holonomy_presentation(_catalog.catalog(f"k{args.n}"))
        chk = hol.compare_series(hol.lcs_series(h, D, args.engine), hol.kohno_series(args.n, D))
    elif args.kind == "lfs":
        if args.source is None:
            raise InputError("verify lfs needs an edge file")
        g = load_graph(args.source)
        chk = hol.compare_series(hol.lcs_series(hol.graph_holonomy(g), D, args.engine), hol.lfs_series(g, D))
    else:
        if args.source is None or args.ranks is None:
            raise InputError("verify tower needs a source and --ranks")
        try:
            ranks = [int(r) for r in args.ranks.split(",") if r.strip()]
        except ValueError:
            raise InputError(f"--ranks must be comma-separated integers, got {args.ranks!r}") from None
        h = hol.holonomy_presentation(load_arrangement(args.source, validate=not args.no_validate))
        chk = hol.verify_tower(h, ranks, D, args.engine)
    _emit(out, args, chk.to_json(), _check_text(chk))
    return 0 if chk.ok else 1


def _scan(args, out) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        raise InputError(f"{args.directory!r} is not a directory")
    graphs = [(p.name, load_graph(str(p))) for p in sorted(root.iterdir()) if p.is_file()]
    entries = hol.exponent_scan(graphs)
    lines = []
    for e in entries:
        ex = " ".join(f"e{j}={v}" for j, v in e.exponents)
        flag = "  NEGATIVE" if e.negative else ("  non-positive" if e.flagged else "")
        lines.append(f"{e.name}: {ex}{flag}")
    _emit(out, args, {"entries": [e.to_json() for e in entries]}, "\n".join(lines) or "(no graphs)")
    return 0


def _catalog_list(args, out) -> int:
    _emit(out, args, {"names": _catalog.DESCRIPTIONS},
          "\n".join(f"{k:10s} {v}" for k, v in _catalog.DESCRIPTIONS.items()))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-validate", action="store_true", help="skip eager input validation")
    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("-D", "--max-degree", type=int, default=5)
    degree.add_argument("--engine", choices=hol.ENGINES, default="quotient")

    p = _Parser(prog="holokit", description="Matroids, Orlik-Solomon series and holonomy Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("matroid", parents=[common], help="flats lattice, OS series, region count")
    m.add_argument("action", choices=("flats", "os-series", "regions"))
    m.add_argument("source", help="matroid file, edge list, or catalog:NAME")
    m.set_defaults(func=_matroid)

    h = sub.add_parser("holonomy", parents=[common, degree], help="holonomy Lie algebra analyses")
    h.add_argument("action", choices=("present", "dims", "series", "decompose"))
    h.add_argument("source", help="arrangement/matroid file, edge list, or catalog:NAME")
    h.set_defaults(func=_holonomy)

    g = sub.add_parser("graph", parents=[common], help="graph arrangement predictions")
    g.add_argument("action", choices=("lfs", "tower"))
    g.add_argument("source", help="edge-list file")
    g.add_argument("-D", "--max-degree", type=int, default=5)
    g.set_defaults(func=_graph)

    v = sub.add_parser("verify", parents=[common, degree], help="compare engine series with predictions")
    v.add_argument("kind", choices=("kohno", "lfs", "tower"))
    v.add_argument("source", nargs="?")
    v.add_argument("-n", type=int)
    v.add_argument("--ranks")
    v.set_defaults(func=_verify)

    s = sub.add_parser("scan", parents=[common], help="exploratory scans")
    s.add_argument("what", choices=("exponents",))
    s.add_argument("directory")
    s.set_defaults(func=_scan)

    c = sub.add_parser("catalog", parents=[common], help="named arrangements")
    c.add_argument("what", choices=("list",))
    c.set_defaults(func=_catalog_list)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_degree", 1) < 1:
            raise InputError("--max-degree must be >= 1")
        return args.func(args, out)
    except (InputError, ResourceError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except HolokitError as exc:
        # invariant failures are bugs, kept apart from bad input
        err.write(f"internal error: {exc}\n")
        return 3
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
