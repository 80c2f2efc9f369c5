"""PNG and annotation-file I/O.

Mask PNGs are 8-bit grayscale with 255 = remove, 0 = keep. Polygon
annotations are JSON documents ``{"boxes": [{"points": [[x, y], ...]}, ...]}``
with pixel coordinates, origin top-left.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

from .masks import PolygonBox


def load_image(path) -> np.ndarray:
    """8-bit RGB PNG -> float32 (H, W, 3) in [0, 1] via v / 255."""
    with Image.open(path) as im:
        arr = np.asarray(im.convert("RGB"), dtype=np.float32)
    return arr / 255.0


def save_image(path, image: np.ndarray) -> None:
    arr = np.clip(np.rint(np.asarray(image) * 255.0), 0, 255).astype(np.uint8)
    Image.fromarray(arr, mode="RGB").save(path)


def load_mask(path) -> np.ndarray:
    """8-bit grayscale PNG -> float32 (H, W) in [0, 1]."""
    with Image.open(path) as im:
        arr = np.asarray(im.convert("L"), dtype=np.float32)
    return arr / 255.0


def save_mask(path, mask: np.ndarray) -> None:
    arr = np.clip(np.rint(np.asarray(mask) * 255.0), 0, 255).astype(np.uint8)
    Image.fromarray(arr, mode="L").save(path)


def load_boxes(path) -> list[PolygonBox]:
    doc = json.loads(Path(path).read_text())
    boxes = []
    for entry in doc["boxes"]:
        pts = np.asarray(entry["points"], dtype=np.float64)
        boxes.append(PolygonBox(vertices=pts, kept=bool(entry.get("kept", True))))
    return boxes


def save_boxes(path, boxes: list[PolygonBox]) -> None:
    doc = {"boxes": [{"points": box.vertices.tolist()} for box in boxes]}
    Path(path).write_text(json.dumps(doc, indent=2))
