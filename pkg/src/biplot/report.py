"""Serializable analysis reports and deterministic SVG rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .engine import BiplotModel, QualityReport
from .errors import InputError


@dataclass(frozen=True)
class AnalysisReport:
    """Complete, serializable result of one biplot analysis."""

    dataset: dict
    preprocess: dict
    method: dict
    singular_values: list
    row_markers: list
    col_markers: list
    quality: dict
    correlations: list
    cosines: list
    warnings: list

    def to_json(self) -> str:
        """Key-sorted JSON; floats keep their shortest round-trip form."""
        return json.dumps(self.__dict__, sort_keys=True, indent=2,
                          allow_nan=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls(**json.loads(text))


def _listify(a: np.ndarray) -> list:
    """Nested lists of floats; NaN survives the JSON round trip via json's
    NaN literal."""
    return np.asarray(a, dtype=float).tolist()


def method_name(gamma: float) -> str:
    if gamma == 1.0:
        return "jk"
    if gamma == 0.0:
        return "gh"
    if gamma == 0.5:
        return "sqrt"
    return "biplot"


def build_report(model: BiplotModel, quality: QualityReport,
                 correlations: np.ndarray, cosines: np.ndarray,
                 warnings: list[str] | None = None) -> AnalysisReport:
    """Assemble a report; all pieces must describe the same fitted model."""
    n, p = model.shape
    if quality.qr_rows.shape != (n,) or quality.qr_cols.shape != (p,):
        raise InputError("quality report does not match the model's dimensions")
    if np.shape(correlations) != (p, p):
        raise InputError(f"correlation matrix must be {p}x{p}, "
                         f"got {np.shape(correlations)}")
    if np.shape(cosines) != (p, p):
        raise InputError(f"cosine matrix must be {p}x{p}, got {np.shape(cosines)}")
    if len(model.row_labels) != n or len(model.col_labels) != p:
        raise InputError("label lists do not match the model's dimensions")
    return AnalysisReport(
        dataset={
            "name": model.name,
            "n_rows": n,
            "n_cols": p,
            "row_labels": list(model.row_labels),
            "col_labels": list(model.col_labels),
        },
        preprocess={
            "mode": model.preprocess.mode,
            "means": list(model.preprocess.means),
            "sds": list(model.preprocess.sds),
        },
        method={
            "name": method_name(model.gamma),
            "gamma": model.gamma,
            "dims": model.dims,
        },
        singular_values=_listify(model.sigma_all),
        row_markers=_listify(model.row_markers),
        col_markers=_listify(model.col_markers),
        quality={
            "qr_rows": _listify(quality.qr_rows),
            "qr_cols": _listify(quality.qr_cols),
            "qr_overall": quality.qr_overall,
            "residual_frobenius": quality.residual_frobenius,
        },
        correlations=_listify(correlations),
        cosines=_listify(cosines),
        warnings=list(warnings or []),
    )


@dataclass(frozen=True)
class PlotSpec:
    """Rendering parameters; ``vector_scale=None`` picks a scale so the
    longest column marker spans 40% of the plot half-width."""

    width: int = 800
    height: int = 600
    vector_scale: float | None = None
    show_labels: bool = True


def _fmt(v: float) -> str:
    """Fixed, locale-free coordinate formatting."""
    return f"{v:.3f}"


def render_svg(model: BiplotModel, quality: QualityReport,
               spec: PlotSpec = PlotSpec()) -> str:
    """Deterministic 2-D biplot: dots for rows, arrows from the origin for
    columns, axes annotated with variance shares."""
    if model.dims != 2:
        raise InputError(f"SVG rendering requires a 2-D model, got dims={model.dims}")
    if spec.vector_scale is not None and not spec.vector_scale > 0:
        raise InputError(f"vector_scale must be positive, got {spec.vector_scale}")
    A = model.row_markers
    B = model.col_markers

    row_extent = float(np.max(np.abs(A))) if A.size else 1.0
    col_extent = float(np.max(np.linalg.norm(B, axis=1))) if B.size else 1.0
    row_extent = row_extent or 1.0
    col_extent = col_extent or 1.0
    scale = spec.vector_scale if spec.vector_scale is not None \
        else 0.4 * row_extent / col_extent
    Bs = B * scale

    margin = 60.0
    half_w = spec.width / 2.0 - margin
    half_h = spec.height / 2.0 - margin
    extent = max(row_extent, float(np.max(np.abs(Bs))) if Bs.size else 0.0) or 1.0
    unit = min(half_w, half_h) / extent
    cx, cy = spec.width / 2.0, spec.height / 2.0

    def to_px(x, y):
        return cx + x * unit, cy - y * unit

    shares = model.axis_variance_shares() * 100.0
    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
               f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">')
    out.append(f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>')
    out.append(f'<line class="axis" x1="{_fmt(margin)}" y1="{_fmt(cy)}" '
               f'x2="{_fmt(spec.width - margin)}" y2="{_fmt(cy)}" stroke="#cccccc"/>')
    out.append(f'<line class="axis" x1="{_fmt(cx)}" y1="{_fmt(margin)}" '
               f'x2="{_fmt(cx)}" y2="{_fmt(spec.height - margin)}" stroke="#cccccc"/>')
    out.append(f'<text class="axis-label" x="{_fmt(spec.width - margin)}" '
               f'y="{_fmt(cy - 8)}" text-anchor="end" font-size="12">'
               f'Axis 1 ({shares[0]:.1f}%)</text>')
    out.append(f'<text class="axis-label" x="{_fmt(cx + 8)}" y="{_fmt(margin + 4)}" '
               f'font-size="12">Axis 2 ({shares[1]:.1f}%)</text>')

    for j in range(B.shape[0]):
        x, y = to_px(Bs[j, 0], Bs[j, 1])
        out.append(f'<line class="arrow" x1="{_fmt(cx)}" y1="{_fmt(cy)}" '
                   f'x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="#cc0000" '
                   f'stroke-width="1.5" marker-end="url(#head)"/>')
        if spec.show_labels:
            out.append(f'<text class="col-label" x="{_fmt(x + 4)}" y="{_fmt(y - 4)}" '
                       f'font-size="11" fill="#cc0000">{_escape(model.col_labels[j])}</text>')

    for i in range(A.shape[0]):
        x, y = to_px(A[i, 0], A[i, 1])
        out.append(f'<circle class="dot" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" '
                   f'fill="#003366"/>')
        if spec.show_labels:
            out.append(f'<text class="row-label" x="{_fmt(x + 5)}" y="{_fmt(y + 3)}" '
                       f'font-size="11" fill="#003366">{_escape(model.row_labels[i])}</text>')

    legend = (f'{method_name(model.gamma).upper()} biplot | '
              f'fit {quality.qr_overall * 100.0:.1f}% | vector scale x{scale:.4g}')
    out.append(f'<text class="legend" x="{_fmt(margin)}" '
               f'y="{_fmt(spec.height - margin / 2)}" font-size="12">{_escape(legend)}</text>')
    out.append('<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" '
               'refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="#cc0000"/>'
               '</marker></defs>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


def render_scatter_svg(coords: np.ndarray, labels: tuple[str, ...], title: str,
                       shares: tuple[float, float] | None = None,
                       spec: PlotSpec = PlotSpec(),
                       col_coords: np.ndarray | None = None,
                       col_labels: tuple[str, ...] | None = None) -> str:
    """Deterministic scatter panel for the baseline methods; an optional
    second point set (column coordinates) is drawn as squares."""
    pts = np.asarray(coords, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InputError(f"scatter rendering needs n x 2 coordinates, got {pts.shape}")
    all_pts = pts if col_coords is None else np.vstack([pts, col_coords])
    extent = float(np.max(np.abs(all_pts))) or 1.0
    margin = 60.0
    unit = (min(spec.width, spec.height) / 2.0 - margin) / extent
    cx, cy = spec.width / 2.0, spec.height / 2.0
    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
               f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">')
    out.append(f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>')
    out.append(f'<line class="axis" x1="{_fmt(margin)}" y1="{_fmt(cy)}" '
               f'x2="{_fmt(spec.width - margin)}" y2="{_fmt(cy)}" stroke="#cccccc"/>')
    out.append(f'<line class="axis" x1="{_fmt(cx)}" y1="{_fmt(margin)}" '
               f'x2="{_fmt(cx)}" y2="{_fmt(spec.height - margin)}" stroke="#cccccc"/>')
    if shares is not None:
        out.append(f'<text class="axis-label" x="{_fmt(spec.width - margin)}" '
                   f'y="{_fmt(cy - 8)}" text-anchor="end" font-size="12">'
                   f'Axis 1 ({shares[0]:.1f}%)</text>')
        out.append(f'<text class="axis-label" x="{_fmt(cx + 8)}" y="{_fmt(margin + 4)}" '
                   f'font-size="12">Axis 2 ({shares[1]:.1f}%)</text>')
    for i in range(pts.shape[0]):
        x, y = cx + pts[i, 0] * unit, cy - pts[i, 1] * unit
        out.append(f'<circle class="dot" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#003366"/>')
        if spec.show_labels:
            out.append(f'<text class="row-label" x="{_fmt(x + 5)}" y="{_fmt(y + 3)}" '
                       f'font-size="11" fill="#003366">{_escape(labels[i])}</text>')
    if col_coords is not None:
        cc = np.asarray(col_coords, dtype=float)
        for j in range(cc.shape[0]):
            x, y = cx + cc[j, 0] * unit, cy - cc[j, 1] * unit
            out.append(f'<rect class="col-dot" x="{_fmt(x - 3)}" y="{_fmt(y - 3)}" '
                       f'width="6" height="6" fill="#cc0000"/>')
            if spec.show_labels and col_labels is not None:
                out.append(f'<text class="col-label" x="{_fmt(x + 5)}" y="{_fmt(y + 3)}" '
                           f'font-size="11" fill="#cc0000">{_escape(col_labels[j])}</text>')
    out.append(f'<text class="legend" x="{_fmt(margin)}" '
               f'y="{_fmt(spec.height - margin / 2)}" font-size="12">{_escape(title)}</text>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
