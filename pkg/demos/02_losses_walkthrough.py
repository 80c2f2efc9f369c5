"""Walk through the loss stack on a hand-made 8x8 case.

Shows how the Tversky trade-off punishes misses harder than false alarms,
and how the region weight concentrates the reconstruction losses on text.
"""

import torch

from texterase.losses import FeatureExtractor, LossWeights, hinge_d, hinge_g, \
    region_weight_mask, total_generator_loss, tversky_loss, weighted_l1, \
    weighted_perceptual, weighted_style

torch.manual_seed(0)

gt = torch.zeros(1, 1, 8, 8)
gt[..., 2:6, 2:6] = 1.0

# a miss (predicting nothing) costs far more than over-predicting,
# because beta=0.9 weighs false negatives 9x false positives
miss = torch.zeros_like(gt)
over = torch.ones_like(gt)
print(f"tversky(all-zero pred) = {tversky_loss(miss, gt, 0.1, 0.9).item():.4f}")
print(f"tversky(all-one  pred) = {tversky_loss(over, gt, 0.1, 0.9).item():.4f}")

# reconstruction losses weigh text pixels 10x background
target = torch.rand(1, 3, 8, 8)
pred = target + 0.05
m_w = region_weight_mask(gt)
print(f"region weights: inside {m_w.max().item():.0f}, outside {m_w.min().item():.0f}")
print(f"weighted_l1 (uniform 0.05 error) = {weighted_l1(pred, target, m_w).item():.4f}")

# perceptual and style compare frozen random conv features of the
# weighted images; any fixed filter bank works for relative comparisons
fx = FeatureExtractor.tiny(seed=3)
print(f"weighted_perceptual = {weighted_perceptual(pred, target, gt, fx).item():.4f}")
print(f"weighted_style      = {weighted_style(pred, target, gt, fx).item():.6f}")

# hinge pair: the critic wants real maps above +1 and fakes below -1
real = torch.full((1, 1, 3, 3), 1.5)
fake = torch.full((1, 1, 3, 3), -0.5)
print(f"hinge_d(real at 1.5, fake at -0.5) = {hinge_d(real, [fake]).item():.4f}")
print(f"hinge_g(fake at -0.5)              = {hinge_g([fake]).item():.4f}")

total = total_generator_loss(
    mask_refine=tversky_loss(over, gt, 0.1, 0.9),
    l1=weighted_l1(pred, target, m_w),
    perceptual=weighted_perceptual(pred, target, gt, fx),
    style=weighted_style(pred, target, gt, fx),
    adv_g=hinge_g([fake]),
    weights=LossWeights())
print(f"total generator loss = {total.item():.4f}")
