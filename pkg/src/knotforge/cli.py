"""Command-line surface tying the modules into the tabulation experiments.

Outputs are UTF-8, newline-terminated, with stable field order; report
commands can write delimited files plus rendered figures side by side.
The KNOTFORGE_TOLERANCE environment variable overrides the 1e-9 height
tolerance on every float-path command.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import (
    KnotCatalog,
    KnotRecord,
    tabulate_L2,
    tabulate_by_crossing,
    two_bridge_count_rows,
)
from .exactmath import PiRational
from .fourier import FourierSpec, classify_fourier, random_sample_fourier
from .fourier import extract_diagram as fourier_diagram
from .lissajous import (
    LissajousSpec,
    classify_spec,
    crossing_count,
    enumerate_L_family,
    extract_diagram,
    region_report,
)
from .twobridge import canonical, crossing_number


def _emit(lines, out: str | None):
    text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _phase(value) -> PiRational | float:
    """JSON phase: a string "a/b" means (a/b)*pi, a number means radians."""
    if isinstance(value, str):
        return PiRational(Fraction(value))
    return float(value)


def _cmd_enumerate(args) -> int:
    if args.nz is None and not args.family:
        raise SystemExit("need --nz or --family")
    lines = []
    if args.nz is not None:
        for rec in region_report(args.nx, args.ny, args.nz, workers=args.workers):
            if args.exclude_unknot and rec["knot_id"] == "1/1":
                continue
            lines.append(json.dumps(rec, sort_keys=False))
    else:
        found = enumerate_L_family(args.nx, args.ny, window=args.window, workers=args.workers)
        rows = []
        for ident in found:
            cr = None
            if "/" in ident and not ident.startswith("pat:"):
                p, q = map(int, ident.split("/"))
                if p > 1:
                    cr = crossing_number(canonical(p, q))
            rows.append((cr if cr is not None else -1, ident))
        for cr, ident in sorted(rows):
            lines.append(
                json.dumps(
                    {
                        "frequencies": [args.nx, args.ny],
                        "knot_id": ident,
                        "crossing_number": None if cr < 0 else cr,
                    },
                    sort_keys=False,
                )
            )
    _emit(lines, args.out)
    return 0


def _cmd_sample_fourier(args) -> int:
    found = random_sample_fourier(
        args.ny,
        rng_seed=args.seed,
        batch_size=args.batch_size,
        max_batches=args.batches,
        zmax=args.zmax,
        amp_max=args.amp_max,
    )
    catalog = KnotCatalog(args.catalog) if args.catalog else None
    lines = []
    for spec, ident in found:
        p, q = map(int, ident.split("/"))
        rec = KnotRecord(
            identity=ident,
            family="fourier112",
            parameters={
                "nx": spec.nx,
                "ny": spec.ny,
                "nz1": spec.nz1,
                "nz2": spec.nz2,
                "phi_y": spec.phi_y,
                "phi_z1": spec.phi_z1,
                "phi_z2": spec.phi_z2,
                "amp": spec.amp,
            },
            crossing_number=crossing_number(canonical(p, q)),
            first_seen={"method": "random", "seed": args.seed},
        )
        if catalog is not None:
            catalog.upsert(rec)
        lines.append(rec.to_json())
    if catalog is not None:
        catalog.compact()
    _emit(lines, args.out)
    return 0


def _spec_from_json(payload: dict):
    family = payload.get("family", "lissajous")
    if family == "lissajous":
        return LissajousSpec(
            payload["nx"],
            payload["ny"],
            payload["nz"],
            _phase(payload["phi_y"]),
            _phase(payload["phi_z"]),
        )
    if family == "fourier112":
        return FourierSpec(
            nx=payload["nx"],
            ny=payload["ny"],
            phi_y=_as_radians(payload["phi_y"]),
            nz1=payload["nz1"],
            phi_z1=_as_radians(payload["phi_z1"]),
            nz2=payload["nz2"],
            phi_z2=_as_radians(payload["phi_z2"]),
            amp=float(payload.get("amp", 1.0)),
        )
    raise SystemExit(f"unknown family {family!r}")


def _as_radians(value) -> float:
    if isinstance(value, str):
        return float(Fraction(value)) * math.pi
    return float(value)


def _cmd_classify(args) -> int:
    raw = sys.stdin.read() if args.spec_json == "-" else Path(args.spec_json).read_text()
    spec = _spec_from_json(json.loads(raw))
    if isinstance(spec, FourierSpec):
        ident = classify_fourier(spec)
    else:
        ident = classify_spec(spec)
    print(ident)
    return 0


def _write_csv(path: Path | None, header: list[str], rows: list[list]):
    lines = [",".join(str(c) for c in header)]
    lines += [",".join(str(c) for c in row) for row in rows]
    _emit(lines, str(path) if path else None)


def _cmd_tabulate(args) -> int:
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    if args.table == 1:
        counts = tabulate_L2(args.ny_max, workers=args.workers)
        rows = [[ny, n] for ny, n in sorted(counts.items())]
        _write_csv(out_dir / "table1.csv" if out_dir else None, ["ny", "count"], rows)
        if out_dir:
            from .render import render_count_chart

            render_count_chart(
                {"ny": [r[0] for r in rows], "knots": [r[1] for r in rows]},
                out_dir / "table1.png",
                "distinct knots per ny (nx=2)",
            )
    elif args.table == 3:
        ny_list = args.ny or [3, 5, 7]
        grouped = tabulate_by_crossing(ny_list, workers=args.workers)
        rows = []
        for ny, by_cr in sorted(grouped.items()):
            for cr, idents in sorted(by_cr.items()):
                for ident in idents:
                    rows.append([ny, cr, ident])
        _write_csv(out_dir / "table3.csv" if out_dir else None, ["ny", "crossing", "p/q"], rows)
        if out_dir:
            from .render import render_count_chart

            per_cr: dict[int, int] = {}
            for _, cr, _i in rows:
                per_cr[cr] = per_cr.get(cr, 0) + 1
            render_count_chart(
                {
                    "crossing": sorted(per_cr),
                    "fractions": [per_cr[c] for c in sorted(per_cr)],
                },
                out_dir / "table3.png",
                f"fractions per crossing, ny in {ny_list}",
            )
    elif args.table == 6:
        data = two_bridge_count_rows(args.cr_max)
        rows = list(zip(data["crossing"], data["two_bridge"], data["delta_one_mod2"]))
        _write_csv(
            out_dir / "table6.csv" if out_dir else None,
            ["crossing", "two_bridge", "delta_one_mod2"],
            [list(r) for r in rows],
        )
        if out_dir:
            from .render import render_count_chart

            render_count_chart(data, out_dir / "table6.png", "2-bridge knots per crossing")
    else:
        raise SystemExit("supported tables: 1, 3, 6")
    return 0


def _cmd_render_torus(args) -> int:
    from .render import render_phase_torus

    legend = render_phase_torus(args.nx, args.ny, args.nz, args.out, workers=args.workers)
    print(f"wrote {args.out} with {len(legend)} knot types")
    return 0


def _cmd_export_dt(args) -> int:
    from .diagram import dt_code
    from .lissajous import classify_sample, decompose_phase_torus

    regions = decompose_phase_torus(args.nx, args.ny, args.nz)
    seen: set[str] = set()
    lines = []
    for reg in regions:
        u, v = reg.sample_units()
        ident = classify_sample(args.nx, args.ny, args.nz, u, v)
        if ident in seen:
            continue
        seen.add(ident)
        spec = LissajousSpec(args.nx, args.ny, args.nz, PiRational(u), PiRational(v))
        code = dt_code(extract_diagram(spec))
        if args.json:
            lines.append(
                json.dumps(
                    {
                        "dt": list(code.entries),
                        "knot_id": ident,
                        "frequencies": [args.nx, args.ny, args.nz],
                        "sample_point": [str(u), str(v)],
                    },
                    sort_keys=False,
                )
            )
        else:
            lines.append(code.knotscape_line())
    _emit(lines, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotforge", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate-lissajous", help="classify phase-torus faces")
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--nz", type=int)
    p.add_argument("--family", action="store_true", help="union over a sufficient nz window")
    p.add_argument("--window", choices=["stabilized", "paper"], default="stabilized")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--exclude-unknot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sample-fourier", help="random two-cosine-z parameter search")
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--batches", type=int, default=None)
    p.add_argument("--batch-size", type=int, default=10000)
    p.add_argument("--zmax", type=int, default=301)
    p.add_argument("--amp-max", type=float, default=2.0)
    p.add_argument("--catalog")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sample_fourier)

    p = sub.add_parser("classify", help="classify one spec from JSON")
    p.add_argument("--spec-json", required=True, help="path or - for stdin")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tabulate", help="reproduce a published table")
    p.add_argument("--paper-table", dest="table", type=int, required=True, choices=[1, 3, 6])
    p.add_argument("--ny-max", type=int, default=13)
    p.add_argument("--ny", type=int, nargs="*")
    p.add_argument("--cr-max", type=int, default=16)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-dir")
    p.set_defaults(func=_cmd_tabulate)

    p = sub.add_parser("render-torus", help="phase-torus figure with faces colored")
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--nz", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render_torus)

    p = sub.add_parser("export-dt", help="Dowker-Thistlethwaite codes, one per line")
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.add_argument("--nz", type=int, required=True)
    p.add_argument("--json", action="store_true", help="wrap codes with provenance")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export_dt)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
