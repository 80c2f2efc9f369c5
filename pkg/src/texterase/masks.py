"""Mask and image algebra: polygon rasterization, morphology, compositing.

Conventions used throughout the package:

* Images are float32 arrays of shape (H, W, 3) with values in [0, 1];
  masks are float32 arrays of shape (H, W) in [0, 1]. Binary masks contain
  only {0, 1}. Mask value 1 marks pixels to remove, 0 pixels to keep.
* Polygon vertices are (x, y) pixel coordinates with the origin at the
  top-left; the center of pixel (row, col) is the point (col, row).
* A pixel belongs to a polygon iff its center lies inside the polygon or
  exactly on its boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from scipy import ndimage


@dataclass(frozen=True)
class PolygonBox:
    """A polygonal region with ``kept=False`` once dropped by augmentation."""

    vertices: np.ndarray  # (N, 2) float64 array of (x, y), N >= 3
    kept: bool = True

    def __post_init__(self):
        verts = np.asarray(self.vertices, dtype=np.float64)
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
            raise ValueError("polygon needs at least 3 (x, y) vertices")
        object.__setattr__(self, "vertices", verts)

    def clipped(self, height: int, width: int) -> "PolygonBox":
        verts = self.vertices.copy()
        verts[:, 0] = np.clip(verts[:, 0], 0.0, float(width))
        verts[:, 1] = np.clip(verts[:, 1], 0.0, float(height))
        return replace(self, vertices=verts)


@dataclass
class AnnotatedSample:
    """One training example: image with text, text-free target, annotations."""

    input: np.ndarray
    target: np.ndarray
    boxes: list[PolygonBox] = field(default_factory=list)
    gt_text_mask: np.ndarray | None = None

    def __post_init__(self):
        if self.input.shape != self.target.shape:
            raise ValueError("input and target must share dimensions")
        if self.gt_text_mask is not None and self.gt_text_mask.shape != self.input.shape[:2]:
            raise ValueError("gt_text_mask must share spatial dimensions with input")


def complement(mask: np.ndarray) -> np.ndarray:
    """Elementwise 1 - mask."""
    return (1.0 - np.asarray(mask)).astype(mask.dtype, copy=False)


def _polygon_membership(vertices: np.ndarray, height: int, width: int) -> np.ndarray:
    """Boolean (H, W) grid of pixel centers inside-or-on-boundary of a polygon.

    Even-odd crossing test for the interior plus an explicit on-segment test
    so that boundary pixels are always included (fixed tie rule).
    """
    xs = np.arange(width, dtype=np.float64)
    ys = np.arange(height, dtype=np.float64)
    px = np.broadcast_to(xs[None, :], (height, width)).ravel()
    py = np.broadcast_to(ys[:, None], (height, width)).ravel()

    inside = np.zeros(px.shape, dtype=bool)
    on_edge = np.zeros(px.shape, dtype=bool)
    n = vertices.shape[0]
    for k in range(n):
        x1, y1 = vertices[k]
        x2, y2 = vertices[(k + 1) % n]
        dx, dy = x2 - x1, y2 - y1
        # on-segment: zero cross product and within the segment bounding box
        cross = (px - x1) * dy - (py - y1) * dx
        tol = 1e-9 * (abs(dx) + abs(dy) + 1.0)
        in_bbox = (
            (px >= min(x1, x2) - 1e-9)
            & (px <= max(x1, x2) + 1e-9)
            & (py >= min(y1, y2) - 1e-9)
            & (py <= max(y1, y2) + 1e-9)
        )
        on_edge |= (np.abs(cross) <= tol) & in_bbox
        # even-odd ray crossing toward +x; half-open rule avoids double counts
        straddles = (y1 > py) != (y2 > py)
        if dy != 0.0:
            x_at_py = x1 + (py - y1) * dx / dy
            inside ^= straddles & (px < x_at_py)
    return (inside | on_edge).reshape(height, width)


def rasterize_boxes(boxes: list[PolygonBox], height: int, width: int) -> np.ndarray:
    """Union of filled kept polygons as a binary (H, W) mask.

    Raises ValueError naming the offending box index when a kept polygon
    rasterizes to zero pixels after clipping.
    """
    out = np.zeros((height, width), dtype=np.float32)
    for idx, box in enumerate(boxes):
        if not box.kept:
            continue
        member = _polygon_membership(box.clipped(height, width).vertices, height, width)
        if not member.any():
            raise ValueError(f"box {idx} is degenerate: zero pixels after clipping")
        out[member] = 1.0
    return out


def pad_mask(mask: np.ndarray, n: int) -> np.ndarray:
    """Dilate a binary mask with a (2n+1) x (2n+1) square element.

    n >= max(H, W) turns any nonempty mask into the all-ones mask.
    """
    if n < 0:
        raise ValueError("padding factor must be >= 0")
    if n == 0:
        return mask.astype(np.float32, copy=True)
    grown = ndimage.maximum_filter(
        mask.astype(np.float32), size=2 * n + 1, mode="constant", cval=0.0
    )
    return grown.astype(np.float32, copy=False)


def dilate_disk(mask: np.ndarray, radius: int) -> np.ndarray:
    """Dilate a binary mask with the disk {(dx, dy): dx^2 + dy^2 <= r^2}."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius == 0:
        return mask.astype(np.float32, copy=True)
    dy, dx = np.ogrid[-radius : radius + 1, -radius : radius + 1]
    disk = (dx * dx + dy * dy) <= radius * radius
    grown = ndimage.binary_dilation(mask > 0.5, structure=disk, border_value=0)
    return grown.astype(np.float32)


def composite(predicted: np.ndarray, original: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """mask * predicted + (1 - mask) * original, with channel broadcast.

    At mask==0 the result is bit-identical to ``original``.
    """
    if predicted.shape != original.shape:
        raise ValueError("predicted and original must share dimensions")
    if mask.shape != predicted.shape[:2]:
        raise ValueError("mask must share spatial dimensions with the images")
    m = mask[..., None] if predicted.ndim == 3 else mask
    return (m * predicted + (1.0 - m) * original).astype(predicted.dtype, copy=False)


def filter_boxes(
    boxes: list[PolygonBox], drop_rate: float, rng: np.random.Generator
) -> list[PolygonBox]:
    """Independently mark each box kept=False with probability drop_rate."""
    if not 0.0 <= drop_rate <= 1.0:
        raise ValueError("drop_rate must be in [0, 1]")
    draws = rng.random(len(boxes))
    return [
        replace(box, kept=box.kept and bool(draws[i] >= drop_rate))
        for i, box in enumerate(boxes)
    ]
