"""SVG and matplotlib renderings of profiles and polygons."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

SVG_W, SVG_H = 800, 600
_MARGIN = 60


def svg_polyline(xs, ys, title: str = "", xlabel: str = "theta", ylabel: str = "f") -> str:
    """Self-contained SVG with axes box, labels and a single polyline."""
    xs, ys = list(map(float, xs)), list(map(float, ys))
    if not xs:
        raise ValueError("nothing to plot")
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1
    if y1 - y0 < 1e-12 * max(1.0, abs(y0)):
        y0, y1 = y0 - 0.5, y1 + 0.5
    w, h = SVG_W - 2 * _MARGIN, SVG_H - 2 * _MARGIN

    def px(x):
        return _MARGIN + (x - x0) / (x1 - x0) * w

    def py(y):
        return SVG_H - _MARGIN - (y - y0) / (y1 - y0) * h

    pts = " ".join(f"{px(x):.3f},{py(y):.3f}" for x, y in zip(xs, ys))
    return "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_W} {SVG_H}" width="{SVG_W}" height="{SVG_H}">',
            '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
            f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{w}" height="{h}" fill="none" stroke="#888"/>',
            f'<text x="{SVG_W / 2}" y="{_MARGIN / 2}" text-anchor="middle" font-family="sans-serif" font-size="16">{escape(title)}</text>',
            f'<text x="{SVG_W / 2}" y="{SVG_H - 15}" text-anchor="middle" font-family="sans-serif" font-size="13">{escape(xlabel)}</text>',
            f'<text x="15" y="{SVG_H / 2}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 15 {SVG_H / 2})">{escape(ylabel)}</text>',
            f'<text x="{_MARGIN}" y="{SVG_H - _MARGIN + 16}" font-family="monospace" font-size="11">{x0:.4g}</text>',
            f'<text x="{_MARGIN + w}" y="{SVG_H - _MARGIN + 16}" text-anchor="end" font-family="monospace" font-size="11">{x1:.4g}</text>',
            f'<text x="{_MARGIN - 4}" y="{SVG_H - _MARGIN}" text-anchor="end" font-family="monospace" font-size="11">{y0:.6g}</text>',
            f'<text x="{_MARGIN - 4}" y="{_MARGIN + 10}" text-anchor="end" font-family="monospace" font-size="11">{y1:.6g}</text>',
            f'<polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points="{pts}"/>',
            "</svg>",
            "",
        ]
    )


def profile_figure(rows, path, title: str = "translate profile"):
    """Line plot of f(theta) on [0, pi) with the extremes marked."""
    th = [r[0] for r in rows]
    f = [r[1] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(th, f, lw=1.2)
    ax.axhline(max(f), color="0.6", ls=":", lw=0.8)
    ax.axhline(min(f), color="0.6", ls=":", lw=0.8)
    ax.set_xlim(0, math.pi)
    ax.set_xlabel(r"$\theta$")
    ax.set_ylabel(r"$d(u)\,w(u^\perp)$")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def polygon_figure(P, path, title: str = ""):
    pts = [v.to_float() for v in P.vertices]
    xs = [p[0] for p in pts] + [pts[0][0]]
    ys = [p[1] for p in pts] + [pts[0][1]]
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.fill(xs, ys, alpha=0.25)
    ax.plot(xs, ys, "o-", ms=3)
    ax.set_aspect("equal")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
