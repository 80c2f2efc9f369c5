"""Synthetic dataset generation, refined-mask derivation, training augmentation,
and dataset directory I/O.

Dataset layout on disk: ``root/{input,target,boxes[,mask]}/NAME.{png,png,json,png}``.
When ``mask/`` is absent the pixel-level text mask is recovered from the
input/target difference restricted to the annotation boxes.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np
from scipy import ndimage

from . import fileio
from .glyphs import ALPHABET, GLYPH_HEIGHT, GLYPH_WIDTH, render_string
from .masks import (
    AnnotatedSample,
    PolygonBox,
    composite,
    filter_boxes,
    pad_mask,
    rasterize_boxes,
)

DIFF_THRESHOLD = 25  # 8-bit input/target difference level separating text from noise
BOX_DROP_RATE = 0.2
FULL_PAD_RATE = 0.1

# Backgrounds stay mid-range and text colors stay extreme so every rendered
# glyph pixel survives 8-bit quantization with a difference well above
# DIFF_THRESHOLD.
_BG_LO, _BG_HI = 0.35, 0.65
_TEXT_MARGIN = 0.15


@dataclass(frozen=True)
class SynthConfig:
    image_size: int = 256
    glyph_scale_range: tuple[int, int] = (8, 24)
    strings_per_image: tuple[int, int] = (1, 3)
    distractor_strings: tuple[int, int] = (0, 0)  # scene text that must be kept
    rotation_max_deg: float = 15.0
    background_kind: str = "noise"  # flat | gradient | noise
    seed: int = 0

    def __post_init__(self):
        if self.glyph_scale_range[0] < 4:
            raise ValueError("glyph scale must be >= 4 px")
        if self.glyph_scale_range[0] > self.glyph_scale_range[1]:
            raise ValueError("glyph_scale_range must be (lo, hi) with lo <= hi")
        if self.strings_per_image[0] < 1:
            raise ValueError("strings_per_image must be >= 1")
        if not 0 <= self.distractor_strings[0] <= self.distractor_strings[1]:
            raise ValueError("distractor_strings must be (lo, hi) with 0 <= lo <= hi")
        if not 0.0 <= self.rotation_max_deg <= 45.0:
            raise ValueError("rotation_max_deg must lie in [0, 45]")
        if self.background_kind not in ("flat", "gradient", "noise"):
            raise ValueError(f"unknown background kind {self.background_kind!r}")
        min_w = (2 * GLYPH_WIDTH + 1) * max(1, round(self.glyph_scale_range[0] / GLYPH_HEIGHT))
        if min_w + 2 > self.image_size or GLYPH_HEIGHT + 2 > self.image_size:
            raise ValueError("image_size cannot fit a single two-glyph string")


@dataclass
class AugmentedSample:
    """A training example after box filtering and mask padding."""

    input: np.ndarray
    coarse_mask: np.ndarray  # padded box mask fed to the generator
    box_mask: np.ndarray  # post-filtering boxes, zero padding
    target: np.ndarray
    gt_refined_mask: np.ndarray  # pixel-level text mask restricted to kept boxes
    pad_n: int


def _background(rng: np.random.Generator, size: int, kind: str) -> np.ndarray:
    if kind == "flat":
        color = rng.uniform(_BG_LO, _BG_HI, size=3)
        return np.broadcast_to(color, (size, size, 3)).astype(np.float32).copy()
    if kind == "gradient":
        c0 = rng.uniform(_BG_LO, _BG_HI, size=3)
        c1 = rng.uniform(_BG_LO, _BG_HI, size=3)
        t = np.linspace(0.0, 1.0, size, dtype=np.float32)
        vertical = rng.random() < 0.5
        ramp = np.broadcast_to(t[:, None] if vertical else t[None, :], (size, size))
        return (c0 + (c1 - c0) * ramp[..., None]).astype(np.float32)
    # smoothed uniform noise, rescaled into the mid-range band
    noise = rng.random((size, size, 3)).astype(np.float32)
    noise = ndimage.uniform_filter(noise, size=(5, 5, 1))
    lo, hi = noise.min(), noise.max()
    noise = (noise - lo) / max(hi - lo, 1e-6)
    return (_BG_LO + (_BG_HI - _BG_LO) * noise).astype(np.float32)


def _text_color(rng: np.random.Generator) -> np.ndarray:
    dark = rng.random() < 0.5
    if dark:
        return rng.uniform(0.0, _TEXT_MARGIN, size=3).astype(np.float32)
    return rng.uniform(1.0 - _TEXT_MARGIN, 1.0, size=3).astype(np.float32)


def _rotate_bitmap(bitmap: np.ndarray, angle_deg: float) -> np.ndarray:
    """Nearest-neighbor rotation of a boolean bitmap about its center."""
    if abs(angle_deg) < 1e-9:
        return bitmap
    h, w = bitmap.shape
    theta = math.radians(angle_deg)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    out_h = int(math.ceil(abs(h * cos_t) + abs(w * sin_t)))
    out_w = int(math.ceil(abs(w * cos_t) + abs(h * sin_t)))
    cy, cx = (h - 1) / 2.0, (w - 1) / 2.0
    oy, ox = (out_h - 1) / 2.0, (out_w - 1) / 2.0
    ii, jj = np.meshgrid(np.arange(out_h), np.arange(out_w), indexing="ij")
    # inverse mapping back into the source bitmap
    sx = cos_t * (jj - ox) + sin_t * (ii - oy) + cx
    sy = -sin_t * (jj - ox) + cos_t * (ii - oy) + cy
    si = np.rint(sy).astype(int)
    sj = np.rint(sx).astype(int)
    valid = (si >= 0) & (si < h) & (sj >= 0) & (sj < w)
    out = np.zeros((out_h, out_w), dtype=bool)
    out[valid] = bitmap[si[valid], sj[valid]]
    return out


def _quantize(image: np.ndarray) -> np.ndarray:
    """Snap to the 8-bit grid so in-memory samples equal their PNG round trip."""
    return (np.rint(np.clip(image, 0.0, 1.0) * 255.0) / 255.0).astype(np.float32)


def _random_string_patch(rng: np.random.Generator, config: SynthConfig, size: int):
    """Draw placement parameters for one string; None when nothing fits."""
    for _attempt in range(30):
        length = int(rng.integers(2, 7))
        height_px = int(rng.integers(config.glyph_scale_range[0], config.glyph_scale_range[1] + 1))
        scale = max(1, round(height_px / GLYPH_HEIGHT))
        text = "".join(rng.choice(list(ALPHABET), size=length))
        bitmap = render_string(text, scale=scale)
        r = config.rotation_max_deg
        bitmap = _rotate_bitmap(bitmap, float(rng.uniform(-r, r)))
        bh, bw = bitmap.shape
        if bh + 2 > size or bw + 2 > size:
            continue
        top = int(rng.integers(1, size - bh))
        left = int(rng.integers(1, size - bw))
        return bitmap, top, left, _text_color(rng)
    return None


def generate_sample(config: SynthConfig, index: int) -> AnnotatedSample:
    """Fully deterministic synthetic sample for (config.seed, index)."""
    rng = np.random.default_rng([config.seed, index])
    size = config.image_size
    target = _background(rng, size, config.background_kind)

    # distractors belong to the scene: painted into the target as well, so
    # they look like text but must survive erasure (no box, no mask entry)
    lo_d, hi_d = config.distractor_strings
    n_distractors = int(rng.integers(lo_d, hi_d + 1)) if hi_d > 0 else 0
    for _ in range(n_distractors):
        patch = _random_string_patch(rng, config, size)
        if patch is None:
            raise ValueError("synthetic config cannot fit a string into the image")
        bitmap, top, left, color = patch
        target[top : top + bitmap.shape[0], left : left + bitmap.shape[1]][bitmap] = color

    inp = target.copy()
    boxes: list[PolygonBox] = []
    n_strings = int(rng.integers(config.strings_per_image[0], config.strings_per_image[1] + 1))
    for _ in range(n_strings):
        patch = _random_string_patch(rng, config, size)
        if patch is None:
            raise ValueError("synthetic config cannot fit a string into the image")
        bitmap, top, left, color = patch
        inp[top : top + bitmap.shape[0], left : left + bitmap.shape[1]][bitmap] = color
        ys, xs = np.nonzero(bitmap)
        x0, x1 = left + xs.min(), left + xs.max()
        y0, y1 = top + ys.min(), top + ys.max()
        boxes.append(
            PolygonBox(np.array([[x0, y0], [x1, y0], [x1, y1], [x0, y1]], dtype=np.float64))
        )

    inp_q, target_q = _quantize(inp), _quantize(target)
    # deriving the mask from the quantized difference keeps it exact even
    # where removable text overwrites a distractor of a similar color
    gt_mask = derive_refined_mask(inp_q, target_q, boxes)
    return AnnotatedSample(input=inp_q, target=target_q, boxes=boxes, gt_text_mask=gt_mask)


def derive_refined_mask(
    input_img: np.ndarray,
    target_img: np.ndarray,
    boxes: list[PolygonBox],
    threshold: int = DIFF_THRESHOLD,
) -> np.ndarray:
    """Pixel-level text mask from the input/target difference.

    A pixel is text iff the max channel difference exceeds `threshold` 8-bit
    levels and the pixel lies inside the rasterized union of boxes.
    """
    if input_img.shape != target_img.shape:
        raise ValueError("input and target must share dimensions")
    if not 0 <= threshold <= 255:
        raise ValueError("threshold must be an 8-bit level")
    h, w = input_img.shape[:2]
    diff = 255.0 * np.abs(input_img.astype(np.float64) - target_img.astype(np.float64))
    if diff.ndim == 3:
        diff = diff.max(axis=2)
    union = rasterize_boxes(boxes, h, w) if boxes else np.zeros((h, w), np.float32)
    return ((diff > threshold) & (union > 0)).astype(np.float32)


def augment(sample: AnnotatedSample, rng: np.random.Generator) -> AugmentedSample:
    """Box filtering followed by mask padding.

    Dropped boxes keep their text: the training target reverts to the input
    inside dropped-box text pixels, and the pixel-level mask is restricted to
    kept boxes.
    """
    h, w = sample.input.shape[:2]
    filtered = filter_boxes(sample.boxes, BOX_DROP_RATE, rng)
    box_mask = rasterize_boxes(filtered, h, w)
    gt_mask = sample.gt_text_mask if sample.gt_text_mask is not None else np.zeros((h, w), np.float32)
    kept_gt = (gt_mask * box_mask).astype(np.float32)
    dropped_text = (gt_mask * (1.0 - box_mask)).astype(np.float32)
    target = composite(sample.input, sample.target, dropped_text)

    if rng.random() < FULL_PAD_RATE:
        pad_n = max(h, w)
    else:
        pad_n = int(rng.integers(0, max(h, w) // 2))
    coarse = pad_mask(box_mask, pad_n)

    return AugmentedSample(
        input=sample.input,
        coarse_mask=coarse,
        box_mask=box_mask,
        target=target,
        gt_refined_mask=kept_gt,
        pad_n=pad_n,
    )


def load_dataset(root) -> Iterator[AnnotatedSample]:
    """Yield samples from a dataset directory in sorted basename order."""
    root = Path(root)
    input_dir, target_dir = root / "input", root / "target"
    boxes_dir, mask_dir = root / "boxes", root / "mask"
    if not input_dir.is_dir() or not target_dir.is_dir() or not boxes_dir.is_dir():
        raise FileNotFoundError(f"{root} lacks input/, target/ or boxes/ directories")
    for png in sorted(input_dir.glob("*.png")):
        name = png.stem
        target_path = target_dir / f"{name}.png"
        boxes_path = boxes_dir / f"{name}.json"
        if not target_path.exists():
            raise FileNotFoundError(f"missing target image for {name}")
        if not boxes_path.exists():
            raise FileNotFoundError(f"missing box annotation for {name}")
        inp = fileio.load_image(png)
        tgt = fileio.load_image(target_path)
        boxes = fileio.load_boxes(boxes_path)
        mask_path = mask_dir / f"{name}.png"
        if mask_path.exists():
            gt = (fileio.load_mask(mask_path) > 0.5).astype(np.float32)
        else:
            gt = derive_refined_mask(inp, tgt, boxes, DIFF_THRESHOLD)
        yield AnnotatedSample(input=inp, target=tgt, boxes=boxes, gt_text_mask=gt)


def export_synthetic(config: SynthConfig, count: int, out_dir) -> None:
    """Materialize `count` synthetic samples in the standard dataset layout."""
    out = Path(out_dir)
    for sub in ("input", "target", "boxes", "mask"):
        (out / sub).mkdir(parents=True, exist_ok=True)
    for i in range(count):
        sample = generate_sample(config, i)
        name = f"{i:05d}"
        fileio.save_image(out / "input" / f"{name}.png", sample.input)
        fileio.save_image(out / "target" / f"{name}.png", sample.target)
        fileio.save_boxes(out / "boxes" / f"{name}.json", sample.boxes)
        fileio.save_mask(out / "mask" / f"{name}.png", sample.gt_text_mask)
    manifest = {"config": dataclasses.asdict(config), "count": count}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2))
