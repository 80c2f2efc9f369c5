"""Image- and mask-quality metrics plus dataset-level evaluation reports.

Images are HxWxC float arrays in [0, 1] (numpy side). psnr returns +inf for
identical images; aggregates are arithmetic means, so a dataset containing a
perfect reconstruction reports an infinite mean PSNR rather than hiding it.
"""

import dataclasses
import json
import math

import numpy as np
from scipy import ndimage

from .masks import composite, dilate_disk, rasterize_boxes, pad_mask

SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_K1 = 0.01
SSIM_K2 = 0.03


def _check_same_shape(a, b):
    if a.shape != b.shape:
        raise ValueError(f"shapes differ: {a.shape} vs {b.shape}")


def psnr(a, b):
    """10*log10(1/mse) on [0,1] images; +inf when the images are equal."""
    _check_same_shape(a, b)
    mse = float(np.mean((np.asarray(a, np.float64) - np.asarray(b, np.float64)) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(1.0 / mse)


def mse_mae_pct(a, b):
    _check_same_shape(a, b)
    diff = np.asarray(a, np.float64) - np.asarray(b, np.float64)
    return float(np.mean(diff ** 2) * 100.0), float(np.mean(np.abs(diff)) * 100.0)


def _gaussian_kernel(sigma, radius):
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-(x ** 2) / (2.0 * sigma * sigma))
    return k / k.sum()


def _blur(img, kernel):
    out = ndimage.correlate1d(img, kernel, axis=0, mode="reflect")
    return ndimage.correlate1d(out, kernel, axis=1, mode="reflect")


def _ssim_channel(x, y, kernel, radius):
    c1 = SSIM_K1 ** 2
    c2 = SSIM_K2 ** 2
    ux = _blur(x, kernel)
    uy = _blur(y, kernel)
    uxx = _blur(x * x, kernel)
    uyy = _blur(y * y, kernel)
    uxy = _blur(x * y, kernel)
    vx = uxx - ux * ux
    vy = uyy - uy * uy
    vxy = uxy - ux * uy
    s = ((2 * ux * uy + c1) * (2 * vxy + c2)) / ((ux * ux + uy * uy + c1) * (vx + vy + c2))
    # interior crop: every kept pixel saw a fully in-bounds window, so the
    # padding mode above cannot influence the score
    return s[radius:-radius, radius:-radius]


def ssim(a, b):
    """Mean local structural similarity, 11x11 Gaussian window, sigma 1.5,
    K1/K2 = 0.01/0.03, dynamic range 1, per channel then averaged."""
    _check_same_shape(a, b)
    if min(a.shape[0], a.shape[1]) < SSIM_WINDOW:
        raise ValueError(f"image sides must be >= {SSIM_WINDOW}")
    a = np.asarray(a, np.float64)
    b = np.asarray(b, np.float64)
    if a.ndim == 2:
        a = a[:, :, None]
        b = b[:, :, None]
    radius = SSIM_WINDOW // 2
    kernel = _gaussian_kernel(SSIM_SIGMA, radius)
    values = [float(np.mean(_ssim_channel(a[:, :, c], b[:, :, c], kernel, radius)))
              for c in range(a.shape[2])]
    return float(np.mean(values))


def mask_prf(pred, gt, threshold=0.5):
    """Precision/recall/F1 of pred binarized at threshold against a binary gt.

    Empty-denominator conventions: no predicted positives scores precision 1
    on an empty gt and 0 otherwise; an empty gt always scores recall 1.
    """
    _check_same_shape(pred, gt)
    hot = np.asarray(pred) >= threshold
    pos = np.asarray(gt) > 0.5
    tp = float(np.sum(hot & pos))
    fp = float(np.sum(hot & ~pos))
    fn = float(np.sum(~hot & pos))
    if tp + fp == 0:
        precision = 1.0 if not pos.any() else 0.0
    else:
        precision = tp / (tp + fp)
    recall = 1.0 if not pos.any() else tp / (tp + fn)
    f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
    return precision, recall, f1


def eval_dilation_radius(h, w):
    return int(round(7 * min(h, w) / 256))


VARIANTS = ("coarse", "coarse_composite", "fine", "fine_composite")


@dataclasses.dataclass
class EvalReport:
    pad: int
    threshold: float
    per_image: list
    aggregate: dict

    def to_json(self):
        return json.dumps(dataclasses.asdict(self), indent=2)

    def table(self):
        lines = [f"pad={self.pad} threshold={self.threshold} images={len(self.per_image)}",
                 f"{'variant':<18}{'PSNR':>9}{'SSIM':>9}{'MSE%':>9}{'MAE%':>9}"]
        for variant in VARIANTS:
            m = self.aggregate.get(variant)
            if m is None:
                continue
            lines.append(f"{variant:<18}{m['psnr']:>9.2f}{m['ssim']:>9.4f}"
                         f"{m['mse_pct']:>9.3f}{m['mae_pct']:>9.3f}")
        mask = self.aggregate["mask"]
        lines.append(f"mask precision {mask['precision']:.4f} recall {mask['recall']:.4f} "
                     f"f1 {mask['f1']:.4f}")
        return "\n".join(lines)


def _image_metrics(pred, target):
    mse_pct, mae_pct = mse_mae_pct(pred, target)
    return {"psnr": psnr(pred, target), "ssim": ssim(pred, target),
            "mse_pct": mse_pct, "mae_pct": mae_pct}


def _to_numpy_image(tensor):
    return np.ascontiguousarray(tensor[0].permute(1, 2, 0).numpy().astype(np.float32))


def evaluate(model, dataset, pad=0, threshold=0.5, dilation_radius=None):
    """Run the generator over a dataset and report the four output variants.

    model is a generator (or a checkpoint path), called per sample with the
    ground-truth boxes rasterized and padded by `pad`. Composited variants
    replace only the binarized, dilated refined-mask region of the input.
    """
    import torch

    from .checkpoints import load_generator

    dataset = list(dataset)
    if not dataset:
        raise ValueError("dataset is empty")
    if isinstance(model, (str, bytes)) or hasattr(model, "__fspath__"):
        model = load_generator(model)
    if hasattr(model, "eval"):
        model.eval()

    per_image = []
    for index, sample in enumerate(dataset):
        h, w = sample.input.shape[:2]
        box = rasterize_boxes(sample.boxes, h, w)
        coarse = pad_mask(box, pad)
        img_t = torch.from_numpy(sample.input.transpose(2, 0, 1)[None].copy())
        mask_t = torch.from_numpy(coarse[None, None].copy())
        with torch.no_grad():
            out = model(img_t, mask_t)
        refined = out.refined_mask[0, 0].numpy().astype(np.float32)
        radius = eval_dilation_radius(h, w) if dilation_radius is None else dilation_radius
        hot = dilate_disk((refined >= threshold).astype(np.float32), radius)
        record = {"index": index}
        record["coarse"] = _image_metrics(_to_numpy_image(out.coarse), sample.target)
        record["coarse_composite"] = _image_metrics(
            composite(_to_numpy_image(out.coarse), sample.input, hot), sample.target)
        if out.fine is not None:
            fine = _to_numpy_image(out.fine)
            record["fine"] = _image_metrics(fine, sample.target)
            record["fine_composite"] = _image_metrics(
                composite(fine, sample.input, hot), sample.target)
        p, r, f1 = mask_prf(refined, sample.gt_text_mask, threshold)
        record["mask"] = {"precision": p, "recall": r, "f1": f1}
        per_image.append(record)

    aggregate = {}
    for variant in VARIANTS:
        if variant not in per_image[0]:
            continue
        aggregate[variant] = {
            key: float(np.mean([rec[variant][key] for rec in per_image]))
            for key in ("psnr", "ssim", "mse_pct", "mae_pct")
        }
    aggregate["mask"] = {
        key: float(np.mean([rec["mask"][key] for rec in per_image]))
        for key in ("precision", "recall", "f1")
    }
    return EvalReport(pad=pad, threshold=threshold, per_image=per_image,
                      aggregate=aggregate)
