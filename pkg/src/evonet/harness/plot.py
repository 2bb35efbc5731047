"""Dependency-free SVG line chart of a metrics CSV."""

from __future__ import annotations

import csv

from evonet.errors import DataError

SERIES = (("best", "#1b9e77"), ("mean", "#7570b3"), ("worst", "#d95f02"))
WIDTH, HEIGHT, MARGIN = 640, 400, 50


def read_metrics(path) -> dict[str, list[float]]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise DataError(f"{path}: no metrics rows")
    missing = {"gen", *(name for name, _ in SERIES)} - set(rows[0])
    if missing:
        raise DataError(f"{path}: missing columns {sorted(missing)}")
    try:
        return {k: [float(r[k]) for r in rows] for k in ("gen", *(n for n, _ in SERIES))}
    except ValueError as exc:
        raise DataError(f"{path}: {exc}") from None


def _scale(lo, hi, a, b):
    if hi == lo:  # single point or flat series: centre it
        return lambda v: (a + b) / 2
    return lambda v: a + (v - lo) / (hi - lo) * (b - a)


def render_svg(metrics: dict[str, list[float]]) -> str:
    gens = metrics["gen"]
    values = [v for name, _ in SERIES for v in metrics[name]]
    x_lo, x_hi = min(gens), max(gens)
    y_lo, y_hi = min(values), max(values)
    sx = _scale(x_lo, x_hi, MARGIN, WIDTH - MARGIN)
    sy = _scale(y_lo, y_hi, HEIGHT - MARGIN, MARGIN)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'data-x-min="{x_lo!r}" data-x-max="{x_hi!r}" data-y-min="{y_lo!r}" data-y-max="{y_hi!r}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<text x="{MARGIN}" y="{HEIGHT - 15}" font-size="12">{x_lo:g}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - 15}" font-size="12" '
        f'text-anchor="end">{x_hi:g} (generation)</text>',
        f'<text x="5" y="{HEIGHT - MARGIN}" font-size="12">{y_lo:.3g}</text>',
        f'<text x="5" y="{MARGIN}" font-size="12">{y_hi:.3g}</text>',
    ]
    for k, (name, colour) in enumerate(SERIES):
        pts = " ".join(f"{sx(g):.2f},{sy(v):.2f}" for g, v in zip(gens, metrics[name]))
        out.append(f'<polyline data-series="{name}" fill="none" stroke="{colour}" '
                   f'stroke-width="1.5" points="{pts}"/>')
        out.append(f'<text x="{WIDTH - MARGIN + 5}" y="{MARGIN + 15 * k}" font-size="12" '
                   f'fill="{colour}">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_metrics(metrics_path, out_path) -> None:
    svg = render_svg(read_metrics(metrics_path))
    with open(out_path, "w") as fh:
        fh.write(svg)
