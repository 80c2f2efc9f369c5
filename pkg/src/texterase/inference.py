"""End-user erase pipeline over a trained generator.

The final composite replaces only pixels inside the dilated, binarized
refined mask intersected with the caller's coarse mask. The intersection
runs both before and after dilation, so pixels outside the coarse mask are
bit-identical to the input no matter what the network predicts.
"""

import dataclasses

import numpy as np
import torch

from .checkpoints import load_generator
from .masks import composite, dilate_disk, rasterize_boxes


@dataclasses.dataclass
class EraseRequest:
    image: np.ndarray
    polygons: list = None
    mask: np.ndarray = None
    erase_all: bool = False
    dilation_radius: int = 7
    mask_threshold: float = 0.5
    return_intermediates: bool = False

    def __post_init__(self):
        variants = (self.polygons is not None) + (self.mask is not None) + bool(self.erase_all)
        if variants != 1:
            raise ValueError("exactly one of polygons, mask, erase_all must be given")
        img = np.asarray(self.image)
        if img.ndim != 3 or img.shape[2] != 3:
            raise ValueError("image must be HxWx3")
        if self.dilation_radius < 0:
            raise ValueError("dilation_radius must be >= 0")


@dataclasses.dataclass
class EraseResult:
    composite_fine: np.ndarray
    erase_mask: np.ndarray
    refined_mask: np.ndarray = None
    coarse: np.ndarray = None
    coarse_composite: np.ndarray = None
    fine: np.ndarray = None
    attention_maps: list = None


def _coarse_mask(request, h, w):
    if request.erase_all:
        return np.ones((h, w), np.float32)
    if request.polygons is not None:
        return rasterize_boxes(request.polygons, h, w)
    mask = np.asarray(request.mask, np.float32)
    if mask.shape != (h, w):
        raise ValueError(f"mask shape {mask.shape} does not match image {(h, w)}")
    return (mask >= 0.5).astype(np.float32)


def _pad_to_multiple(arr, h4, w4):
    h, w = arr.shape[:2]
    if (h, w) == (h4, w4):
        return arr
    pad = [(0, h4 - h), (0, w4 - w)] + [(0, 0)] * (arr.ndim - 2)
    return np.pad(arr, pad, mode="reflect")


def erase(request, checkpoint):
    """Run the generator and composite the fine output over the input."""
    generator = checkpoint
    if isinstance(checkpoint, (str, bytes)) or hasattr(checkpoint, "__fspath__"):
        generator = load_generator(checkpoint)
    generator.eval()

    image = np.asarray(request.image, np.float32)
    h, w = image.shape[:2]
    coarse = _coarse_mask(request, h, w)
    h4 = -(-h // 4) * 4
    w4 = -(-w // 4) * 4
    img_in = _pad_to_multiple(image, h4, w4)
    mask_in = _pad_to_multiple(coarse, h4, w4)

    img_t = torch.from_numpy(img_in.transpose(2, 0, 1)[None].copy())
    mask_t = torch.from_numpy(mask_in[None, None].copy())
    with torch.no_grad():
        out = generator(img_t, mask_t)

    def crop_image(t):
        return np.ascontiguousarray(t[0].permute(1, 2, 0).numpy()[:h, :w].astype(np.float32))

    def crop_mask(t):
        return np.ascontiguousarray(t[0, 0].numpy()[:h, :w].astype(np.float32))

    refined = crop_mask(out.refined_mask)
    fine = crop_image(out.fine if out.fine is not None else out.coarse)
    hot = (refined >= request.mask_threshold).astype(np.float32) * coarse
    erase_mask = dilate_disk(hot, request.dilation_radius) * coarse
    result = EraseResult(composite_fine=composite(fine, image, erase_mask),
                         erase_mask=erase_mask)
    if request.return_intermediates:
        result.refined_mask = refined
        result.coarse = crop_image(out.coarse)
        result.coarse_composite = crop_image(out.coarse_composite)
        result.fine = fine
        # attention runs at quarter resolution; returned uncropped
        result.attention_maps = [np.ascontiguousarray(a[0, 0].numpy().astype(np.float32))
                                 for a in out.attention_maps]
    return result
