"""Training objectives for the text eraser.

Masks follow the same convention as elsewhere: values in [0, 1], 1 marks a
pixel to remove. Image tensors are NCHW in [0, 1]. All losses are plain
functions of tensors so they can be unit tested in float64.
"""

import math

import numpy as np
import torch
import torch.nn as nn
import torch.nn.functional as F

TVERSKY_EPS = 1e-6


class LossWeights:
    """Static weighting for the combined generator objective."""

    def __init__(self, alpha=0.1, beta=0.9, lambda_region=10.0, lambda_l1=2.5,
                 lambda_perc=0.05, lambda_style=12.5, lambda_adv_g=0.05,
                 mask_refine_enabled=True):
        weights = dict(alpha=alpha, beta=beta, lambda_region=lambda_region,
                       lambda_l1=lambda_l1, lambda_perc=lambda_perc,
                       lambda_style=lambda_style, lambda_adv_g=lambda_adv_g)
        for name, value in weights.items():
            if value < 0:
                raise ValueError(f"{name} must be >= 0")
        if alpha + beta <= 0:
            raise ValueError("alpha + beta must be positive")
        self.alpha = alpha
        self.beta = beta
        self.lambda_region = lambda_region
        self.lambda_l1 = lambda_l1
        self.lambda_perc = lambda_perc
        self.lambda_style = lambda_style
        self.lambda_adv_g = lambda_adv_g
        self.mask_refine_enabled = mask_refine_enabled


class FeatureExtractor(nn.Module):
    """Frozen multi-stage conv pyramid for perceptual and style losses.

    Stage i is a run of 3x3 conv + ReLU layers; every stage after the first
    is preceded by 2x2 max pooling, so stage i runs at stride 2**i. forward
    returns the list of per-stage activations (the maps just before each
    pooling, mirroring the usual five-block classification-net taps).

    Weights are never trained. By default they are seeded random; a weight
    archive (.npz with keys "stage{i}.conv{j}.weight" / ".bias", exported
    for [0, 1] RGB inputs) can be loaded for a pretrained extractor.
    """

    def __init__(self, stage_channels=(64, 128, 256, 512, 512),
                 convs_per_stage=(2, 2, 4, 4, 4), in_channels=3, seed=0):
        super().__init__()
        if len(stage_channels) != len(convs_per_stage):
            raise ValueError("stage_channels and convs_per_stage lengths differ")
        stages = []
        c_in = in_channels
        for c_out, n in zip(stage_channels, convs_per_stage):
            layers = []
            for j in range(n):
                layers.append(nn.Conv2d(c_in if j == 0 else c_out, c_out, 3, padding=1))
                layers.append(nn.ReLU(inplace=True))
            stages.append(nn.Sequential(*layers))
            c_in = c_out
        self.stages = nn.ModuleList(stages)
        self.pool = nn.MaxPool2d(2, 2)
        gen = torch.Generator().manual_seed(seed)
        for m in self.modules():
            if isinstance(m, nn.Conv2d):
                fan_in = m.in_channels * m.kernel_size[0] * m.kernel_size[1]
                m.weight.data = torch.randn(m.weight.shape, generator=gen) * math.sqrt(2.0 / fan_in)
                m.bias.data.zero_()
        self.requires_grad_(False)
        self.eval()

    def forward(self, x):
        feats = []
        for i, stage in enumerate(self.stages):
            if i > 0:
                x = self.pool(x)
            x = stage(x)
            feats.append(x)
        return feats

    def load_weights(self, path):
        archive = np.load(path)
        for i, stage in enumerate(self.stages):
            convs = [m for m in stage if isinstance(m, nn.Conv2d)]
            for j, conv in enumerate(convs):
                conv.weight.data = torch.from_numpy(archive[f"stage{i}.conv{j}.weight"]).float()
                conv.bias.data = torch.from_numpy(archive[f"stage{i}.conv{j}.bias"]).float()

    @classmethod
    def tiny(cls, seed=0):
        """Small instance for tests and CPU-bound training runs."""
        return cls(stage_channels=(4, 6), convs_per_stage=(1, 1), seed=seed)


def tversky_loss(pred, gt, alpha=0.1, beta=0.9, eps=TVERSKY_EPS):
    """Recall-weighted overlap loss between a soft mask and a binary one.

    (alpha*FP + beta*FN) / (TP + alpha*FP + beta*FN + eps). The eps sits in
    the denominator only, so two empty masks score 0, not 0/0.
    """
    if pred.shape != gt.shape:
        raise ValueError(f"mask shapes differ: {tuple(pred.shape)} vs {tuple(gt.shape)}")
    tp = (pred * gt).sum()
    fp = (pred * (1 - gt)).sum()
    fn = ((1 - pred) * gt).sum()
    num = alpha * fp + beta * fn
    return num / (tp + num + eps)


def region_weight_mask(box_mask, lambda_region=10.0):
    """lambda inside the box mask, 1 outside."""
    return lambda_region * box_mask + (1 - box_mask)


def weighted_l1(pred, gt, m_w):
    if pred.shape != gt.shape:
        raise ValueError(f"image shapes differ: {tuple(pred.shape)} vs {tuple(gt.shape)}")
    return (gt * m_w - pred * m_w).abs().mean()


def _resize_weight(m_w, size):
    if m_w.shape[-2:] == size:
        return m_w
    return F.interpolate(m_w, size=size, mode="nearest")


def weighted_perceptual(pred, gt, box_mask, fx, lambda_region=10.0):
    """Sum over stages of mean |weighted feature difference|.

    The region weights are resized to each stage's resolution by nearest
    neighbor and applied to both the gt and pred activations.
    """
    m_w = region_weight_mask(box_mask, lambda_region)
    total = pred.new_zeros(())
    for a, b in zip(fx(gt), fx(pred)):
        w = _resize_weight(m_w, a.shape[-2:])
        total = total + (a * w - b * w).abs().mean()
    return total


def _gram(x):
    b, c, h, w = x.shape
    flat = x.reshape(b, c, h * w)
    return torch.bmm(flat, flat.transpose(1, 2))


def weighted_style(pred, gt, box_mask, fx, lambda_region=10.0):
    """Sum over stages of mean |Gram(weighted gt) - Gram(weighted pred)| entry.

    Gram matrices are normalized by C*H*W before the distance, so the term
    stays O(1)-comparable with the other losses across widths and does not
    swamp the mask-refine gradient on the shared trunk.
    """
    m_w = region_weight_mask(box_mask, lambda_region)
    total = pred.new_zeros(())
    for a, b in zip(fx(gt), fx(pred)):
        w = _resize_weight(m_w, a.shape[-2:])
        c, h, wd = a.shape[1:]
        diff = (_gram(a * w) - _gram(b * w)).abs().mean(dim=(1, 2))
        total = total + diff.mean() / (c * h * wd)
    return total


def hinge_g(score_maps):
    """Generator hinge term: negative sum of mean patch scores."""
    if not score_maps:
        raise ValueError("hinge_g needs at least one score map")
    total = -score_maps[0].mean()
    for m in score_maps[1:]:
        total = total - m.mean()
    return total


def hinge_d(real_map, fake_maps):
    """Discriminator hinge: push real scores above +1, fakes below -1."""
    if not fake_maps:
        raise ValueError("hinge_d needs at least one fake score map")
    total = F.relu(1 - real_map).mean()
    for m in fake_maps:
        total = total + F.relu(1 + m).mean()
    return total


def total_generator_loss(mask_refine, l1, perceptual, style, adv_g, weights=None):
    """Weighted sum of the generator terms.

    The mask-refine term is dropped (not just zeroed) when the branch is
    disabled; all parts are still checked for finiteness.
    """
    if weights is None:
        weights = LossWeights()
    parts = {"mask_refine": mask_refine, "l1": l1, "perceptual": perceptual,
             "style": style, "adv_g": adv_g}
    for name, value in parts.items():
        if not bool(torch.isfinite(torch.as_tensor(value)).all()):
            raise ValueError(f"non-finite {name} loss component")
    total = (weights.lambda_l1 * l1 + weights.lambda_perc * perceptual
             + weights.lambda_style * style + weights.lambda_adv_g * adv_g)
    if weights.mask_refine_enabled:
        total = total + mask_refine
    return total
