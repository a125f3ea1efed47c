"""Deterministic SVG pictures of planar scenes."""
from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .geometry import ConvexBody, DimensionMismatch, ccw_ring

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


@dataclass(frozen=True)
class Layer:
    label: str
    body: ConvexBody
    color: str
    fill: bool = True
    dashed: bool = False


@dataclass
class Scene:
    """Bodies drawn bottom to top; all layers must be planar."""

    layers: list = field(default_factory=list)
    norm: object = None

    def add(self, label, body, fill=True, dashed=False, color=None):
        if body.dim != 2:
            raise DimensionMismatch("only planar bodies can be rendered")
        color = color or PALETTE[len(self.layers) % len(PALETTE)]
        self.layers.append(Layer(label, body, color, fill, dashed))
        return self


def _num(x) -> str:
    s = f"{float(x):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def to_svg(scene: Scene, size: int = 480, margin: float = 0.08) -> str:
    if not scene.layers:
        raise ValueError("a scene needs at least one layer")
    pts = [v for layer in scene.layers for v in layer.body.vertices]
    x0 = min(float(p[0]) for p in pts)
    x1 = max(float(p[0]) for p in pts)
    y0 = min(float(p[1]) for p in pts)
    y1 = max(float(p[1]) for p in pts)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = span * margin
    scale = size / (span + 2 * pad)
    legend_h = 18 * len(scene.layers) + 10

    def xy(p):
        return _num((float(p[0]) - x0 + pad) * scale), _num((y1 + pad - float(p[1])) * scale)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + legend_h}" '
        f'viewBox="0 0 {size} {size + legend_h}">',
        f'<rect x="0" y="0" width="{size}" height="{size + legend_h}" fill="white"/>',
    ]
    for layer in scene.layers:
        style = f'stroke="{layer.color}" stroke-width="2"'
        if layer.dashed:
            style += ' stroke-dasharray="6 4"'
        ring = ccw_ring(layer.body)
        label = escape(layer.label)
        if len(ring) == 1:
            x, y = xy(ring[0])
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{layer.color}"><title>{label}</title></circle>')
        elif len(ring) == 2:
            (ax, ay), (bx, by) = xy(ring[0]), xy(ring[1])
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {style}><title>{label}</title></line>')
        else:
            fill = f'fill="{layer.color}" fill-opacity="0.15"' if layer.fill else 'fill="none"'
            path = " ".join(f"{x},{y}" for x, y in map(xy, ring))
            out.append(f'<polygon points="{path}" {fill} {style}><title>{label}</title></polygon>')
    for i, layer in enumerate(scene.layers):
        y = size + 14 + 18 * i
        out.append(f'<rect x="10" y="{y - 10}" width="14" height="10" fill="{layer.color}"/>')
        out.append(f'<text x="30" y="{y}" font-family="sans-serif" font-size="12">{escape(layer.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
