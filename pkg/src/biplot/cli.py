"""Command line interface: analyze a CSV table, compare against baseline
methods, or run the embedded case studies."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import baselines, engine, report
from .data import DataTable, case_csv, load_case, parse_table, preprocess
from .engine import GAMMA_BY_TYPE
from .errors import InputError, NumericalError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def _analyze_table(table: DataTable, gamma: float, dims: int, scale: str):
    """Fit + quality + correlations + cosines for one table."""
    x, record = preprocess(table, scale)
    model = engine.fit_biplot(x, gamma=gamma, dims=dims,
                              row_labels=table.row_labels,
                              col_labels=table.col_labels,
                              preprocess_record=record, name=table.name)
    qual = engine.quality(model, x)
    corr = engine.pearson(table)
    cos = engine.column_cosines(model)
    warnings = []
    if np.isnan(cos).any():
        warnings.append("cosines undefined for zero-length column markers")
    rep = report.build_report(model, qual, corr, cos, warnings)
    return model, qual, rep


def _write(path: str, text: str):
    Path(path).write_text(text, encoding="utf-8")


def _cmd_analyze(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    table = parse_table(text, Path(args.input).stem)
    if args.gamma is not None:
        gamma = args.gamma
    else:
        gamma = GAMMA_BY_TYPE[args.type or "jk"]
    model, qual, rep = _analyze_table(table, gamma, args.dims, args.scale)
    if args.json:
        _write(args.json, rep.to_json())
    if args.svg:
        _write(args.svg, report.render_svg(model, qual))
    print(f"{table.name}: qr_overall = {qual.qr_overall:.4f} "
          f"({report.method_name(gamma)}, dims={model.dims}, scale={args.scale})")
    return EXIT_OK


def _compare_one(table: DataTable, method: str, out_dir: Path) -> dict:
    """Run one comparison method, write its report and SVG, return the
    summary entry."""
    stem = f"{_slug(table.name)}_{method}"
    if method == "jk":
        model, qual, rep = _analyze_table(table, 1.0, 2, "zscore")
        _write(out_dir / f"{stem}.json", rep.to_json())
        _write(out_dir / f"{stem}.svg", report.render_svg(model, qual))
        return {"method": "jk", "share_2d": qual.qr_overall}
    if method == "pca":
        scores = baselines.pca_map(table, 2)
        z, _ = preprocess(table, "zscore")
        res_model = engine.jk(z, 2, row_labels=table.row_labels,
                              col_labels=table.col_labels, name=table.name)
        shares = res_model.axis_variance_shares() * 100.0
        share = float(np.sum(res_model.axis_variance_shares()))
        doc = {"method": "pca", "scores": scores.tolist(),
               "row_labels": list(table.row_labels), "share_2d": share}
        _write(out_dir / f"{stem}.json", json.dumps(doc, sort_keys=True, indent=2) + "\n")
        _write(out_dir / f"{stem}.svg",
               report.render_scatter_svg(scores, table.row_labels,
                                         f"PCA | 2-D share {share * 100:.1f}%",
                                         (float(shares[0]), float(shares[1]))))
        return {"method": "pca", "share_2d": share}
    if method == "mds":
        z, _ = preprocess(table, "zscore")
        diff = z[:, None, :] - z[None, :, :]
        d = np.sqrt(np.sum(diff ** 2, axis=2))
        emb = baselines.classical_mds(d, 2)
        pos = 1.0 - emb.strain
        doc = {"method": "mds", "coords": emb.coords.tolist(),
               "eigenvalues": emb.eigenvalues.tolist(),
               "row_labels": list(table.row_labels),
               "strain": emb.strain, "share_2d": pos}
        _write(out_dir / f"{stem}.json", json.dumps(doc, sort_keys=True, indent=2) + "\n")
        _write(out_dir / f"{stem}.svg",
               report.render_scatter_svg(emb.coords, table.row_labels,
                                         f"Classical MDS | 2-D share {pos * 100:.1f}%"))
        return {"method": "mds", "share_2d": pos}
    if method == "ca":
        ca = baselines.correspondence_analysis(table, 2)
        share = float(np.sum(ca.inertias) / ca.total_inertia)
        doc = {"method": "ca", "row_coords": ca.row_coords.tolist(),
               "col_coords": ca.col_coords.tolist(),
               "inertias": ca.inertias.tolist(),
               "total_inertia": ca.total_inertia,
               "row_labels": list(table.row_labels),
               "col_labels": list(table.col_labels),
               "share_2d": share,
               "warnings": ["table mixes measurement units; chi-square "
                            "profiles may not be meaningful"]}
        _write(out_dir / f"{stem}.json", json.dumps(doc, sort_keys=True, indent=2) + "\n")
        shares = ca.inertias / ca.total_inertia * 100.0
        _write(out_dir / f"{stem}.svg",
               report.render_scatter_svg(ca.row_coords, table.row_labels,
                                         f"CA (symmetric) | 2-D share {share * 100:.1f}%",
                                         (float(shares[0]), float(shares[1])),
                                         col_coords=ca.col_coords,
                                         col_labels=table.col_labels))
        return {"method": "ca", "share_2d": share}
    raise InputError(f"unknown method {method!r}; choose from jk, pca, mds, ca")


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name.lower()).strip("_")[:40]


def _cmd_compare(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    table = parse_table(text, Path(args.input).stem)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise InputError("--methods must name at least one method")
    for m in methods:
        if m not in ("jk", "pca", "mds", "ca"):
            raise InputError(f"unknown method {m!r}; choose from jk, pca, mds, ca")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = [_compare_one(table, m, out_dir) for m in methods]
    _write(out_dir / f"{_slug(table.name)}_summary.json",
           json.dumps({"dataset": table.name, "methods": summary},
                      sort_keys=True, indent=2) + "\n")
    for entry in summary:
        print(f"{entry['method']}: 2-D share = {entry['share_2d']:.4f}")
    return EXIT_OK


def _cmd_case(args) -> int:
    table = load_case(args.case_id)
    if args.dump_csv:
        _write(args.dump_csv, case_csv(args.case_id))
        print(f"wrote {args.dump_csv}")
        return EXIT_OK
    model, qual, rep = _analyze_table(table, 1.0, 2, "zscore")
    if args.json:
        _write(args.json, rep.to_json())
    if args.svg:
        _write(args.svg, report.render_svg(model, qual))
    print(f"{table.name}: qr_overall = {qual.qr_overall:.4f} (jk, dims=2, scale=zscore)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biplot",
                                     description="SVD-based biplot analysis of labeled tables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="fit a biplot to a CSV table")
    p.add_argument("input")
    p.add_argument("--type", choices=("jk", "gh", "sqrt"))
    p.add_argument("--gamma", type=float)
    p.add_argument("--dims", type=int, default=2)
    p.add_argument("--scale", choices=("none", "center", "zscore"), default="zscore")
    p.add_argument("--json")
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("compare", help="compare biplot with PCA/MDS/CA panels")
    p.add_argument("input")
    p.add_argument("--methods", default="jk,pca,mds,ca")
    p.add_argument("--out", default=".")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("case", help="run or dump an embedded case study")
    p.add_argument("case_id", type=int, choices=(1, 2, 3))
    p.add_argument("--dump-csv")
    p.add_argument("--json")
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_case)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    if args.command == "analyze" and args.type is not None and args.gamma is not None:
        print("error: --type and --gamma are mutually exclusive", file=sys.stderr)
        return EXIT_INPUT
    if args.command == "analyze" and args.gamma is not None \
            and not 0.0 <= args.gamma <= 1.0:
        print(f"error: --gamma must lie in [0, 1], got {args.gamma}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
