"""Adversarial training loop.

Each step runs one discriminator update on detached generator outputs, then
one generator update against the refreshed discriminator. All stochastic
choices (batch indices, augmentation, the gt-mask replacement draw) come
from numpy generators seeded with (seed, step), so a resumed run replays
the exact stream of an uninterrupted one.
"""

import dataclasses
import json

import numpy as np
import torch

from .checkpoints import load_checkpoint, restore_optimizer, save_checkpoint
from .data import augment
from .losses import (
    FeatureExtractor,
    LossWeights,
    hinge_d,
    hinge_g,
    region_weight_mask,
    total_generator_loss,
    tversky_loss,
    weighted_l1,
    weighted_perceptual,
    weighted_style,
)
from .networks import Discriminator, Generator, GeneratorConfig

ABLATIONS = ("full", "no_mask_refine_branch", "no_attention", "no_mask_refine_loss")


@dataclasses.dataclass
class TrainConfig:
    image_size: int = 256
    batch_size: int = 8
    g_lr: float = 1e-4
    d_lr_multiplier: float = 5.0
    adam_beta1: float = 0.0
    adam_beta2: float = 0.9
    lr_drop_factor: float = 10.0
    max_lr_drops: int = 2
    plateau_window: int = 5000
    plateau_min_rel_improvement: float = 0.01
    max_steps: int = 200_000
    seed: int = 0
    ablation: str = "full"
    loss_weights: LossWeights = dataclasses.field(default_factory=LossWeights)

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.g_lr <= 0:
            raise ValueError("g_lr must be positive")
        if not 0 <= self.max_lr_drops <= 2:
            raise ValueError("max_lr_drops must be in [0, 2]")
        if self.ablation not in ABLATIONS:
            raise ValueError(f"unknown ablation {self.ablation!r}")
        if self.image_size % 4:
            raise ValueError("image_size must be divisible by 4")

    def to_dict(self):
        d = dataclasses.asdict(self)
        d["loss_weights"] = dict(self.loss_weights.__dict__)
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if isinstance(d.get("loss_weights"), dict):
            d["loss_weights"] = LossWeights(**d["loss_weights"])
        return cls(**d)


@dataclasses.dataclass
class TrainState:
    step: int = 0
    g_lr_current: float = 1e-4
    drops_applied: int = 0
    loss_history: list = dataclasses.field(default_factory=list)
    rng_state: dict = dataclasses.field(default_factory=dict)


def gt_replace_prob(step):
    """Probability of feeding the fine branch the ground-truth mask."""
    if step < 0:
        raise ValueError("step must be >= 0")
    return max(1.0 - 0.1 * (step // 2000), 0.1)


def build_generator_config(ablation, base_channels=64):
    use_mr = ablation != "no_mask_refine_branch"
    use_attn = use_mr and ablation != "no_attention"
    return GeneratorConfig(base_channels=base_channels, use_mask_refine=use_mr,
                           use_attention=use_attn)


def batch_to_tensors(batch):
    def images(key):
        x = np.stack([getattr(s, key) for s in batch]).transpose(0, 3, 1, 2)
        return torch.from_numpy(np.ascontiguousarray(x, dtype=np.float32))

    def masks(key):
        x = np.stack([getattr(s, key) for s in batch])[:, None]
        return torch.from_numpy(np.ascontiguousarray(x, dtype=np.float32))

    return {
        "input": images("input"), "target": images("target"),
        "coarse": masks("coarse_mask"), "box": masks("box_mask"),
        "gt_mask": masks("gt_refined_mask"),
    }


class Trainer:
    def __init__(self, config, dataset, generator=None, discriminator=None,
                 feature_extractor=None):
        if not dataset:
            raise ValueError("dataset is empty")
        self.config = config
        self.dataset = list(dataset)
        torch.manual_seed(config.seed)
        self.generator = generator or Generator(build_generator_config(config.ablation))
        self.discriminator = discriminator or Discriminator()
        self.fx = feature_extractor or FeatureExtractor()
        mr_on = (config.loss_weights.mask_refine_enabled
                 and config.ablation not in ("no_mask_refine_branch", "no_mask_refine_loss"))
        w = config.loss_weights
        self.weights = LossWeights(w.alpha, w.beta, w.lambda_region, w.lambda_l1,
                                   w.lambda_perc, w.lambda_style, w.lambda_adv_g,
                                   mask_refine_enabled=mr_on)
        self.state = TrainState(g_lr_current=config.g_lr, rng_state={"seed": config.seed})
        betas = (config.adam_beta1, config.adam_beta2)
        self.g_opt = torch.optim.Adam(self.generator.parameters(), lr=config.g_lr, betas=betas)
        self.d_opt = torch.optim.Adam(self.discriminator.parameters(),
                                      lr=config.g_lr * config.d_lr_multiplier, betas=betas)

    @classmethod
    def resume(cls, path, dataset, feature_extractor=None):
        bundle = load_checkpoint(path)
        if bundle["manifest"]["train_config"] is None:
            raise ValueError("checkpoint was saved without a train config")
        config = TrainConfig.from_dict(bundle["manifest"]["train_config"])
        trainer = cls(config, dataset, generator=bundle["generator"],
                      discriminator=bundle["discriminator"],
                      feature_extractor=feature_extractor)
        saved = bundle["manifest"]["state"]
        trainer.state = TrainState(step=saved["step"], g_lr_current=saved["g_lr_current"],
                                   drops_applied=saved["drops_applied"],
                                   loss_history=bundle["loss_history"],
                                   rng_state=saved["rng_state"])
        restore_optimizer(trainer.g_opt, bundle, "g")
        restore_optimizer(trainer.d_opt, bundle, "d")
        trainer._set_lrs(trainer.state.g_lr_current)
        return trainer

    def save(self, path):
        save_checkpoint(path, self.generator, self.discriminator, self.g_opt,
                        self.d_opt, self.state, self.config)

    def _set_lrs(self, g_lr):
        self.state.g_lr_current = g_lr
        for group in self.g_opt.param_groups:
            group["lr"] = g_lr
        for group in self.d_opt.param_groups:
            group["lr"] = g_lr * self.config.d_lr_multiplier

    def make_batch(self, step):
        rng = np.random.default_rng([self.config.seed, step])
        idx = rng.integers(0, len(self.dataset), self.config.batch_size)
        return [augment(self.dataset[i], rng) for i in idx]

    def train_step(self, batch):
        """One discriminator update then one generator update.

        Raises on non-finite losses; the step is not rolled back, training
        should stop.
        """
        cfg = self.config
        step = self.state.step
        t = batch_to_tensors(batch)
        rng = np.random.default_rng([cfg.seed, step, 1])
        replace_p = gt_replace_prob(step)
        use_gt = bool(rng.random() < replace_p)
        override = t["gt_mask"] if use_gt else None

        out = self.generator(t["input"], t["coarse"], gt_mask_override=override)
        fakes = [out.coarse, out.coarse_composite]
        if out.fine is not None:
            fakes += [out.fine, out.fine_composite]

        self.d_opt.zero_grad(set_to_none=True)
        d_loss = hinge_d(self.discriminator(t["box"], t["target"]),
                         [self.discriminator(t["box"], f.detach()) for f in fakes])
        if not torch.isfinite(d_loss):
            raise ValueError("non-finite discriminator loss")
        d_loss.backward()
        self.d_opt.step()

        m_w = region_weight_mask(t["box"], self.weights.lambda_region)
        zero = t["input"].new_zeros(())
        mr_loss = zero
        if self.generator.mr is not None:
            mr_loss = tversky_loss(out.refined_mask, t["gt_mask"],
                                   self.weights.alpha, self.weights.beta)
        preds = [out.coarse] + ([out.fine] if out.fine is not None else [])
        l1 = sum((weighted_l1(p, t["target"], m_w) for p in preds), zero)
        perc = sum((weighted_perceptual(p, t["target"], t["box"], self.fx,
                                        self.weights.lambda_region) for p in preds), zero)
        style = sum((weighted_style(p, t["target"], t["box"], self.fx,
                                    self.weights.lambda_region) for p in preds), zero)
        adv_g = hinge_g([self.discriminator(t["box"], f) for f in fakes])
        g_loss = total_generator_loss(mr_loss, l1, perc, style, adv_g, self.weights)

        self.g_opt.zero_grad(set_to_none=True)
        self.discriminator.zero_grad(set_to_none=True)
        g_loss.backward()
        self.g_opt.step()

        total = float(g_loss.detach())
        self.state.loss_history.append(total)
        del self.state.loss_history[:-2 * cfg.plateau_window]
        self.state.step = step + 1
        return {
            "step": step, "L_MR": float(mr_loss.detach()), "L_L1": float(l1.detach()),
            "L_perc": float(perc.detach()), "L_style": float(style.detach()),
            "L_advG": float(adv_g.detach()), "L_D": float(d_loss.detach()),
            "L_G": total, "g_lr": self.state.g_lr_current, "gt_replace_p": replace_p,
        }

    def maybe_drop_lr(self):
        """Windowed-median plateau test; at most max_lr_drops drops."""
        cfg = self.config
        w = cfg.plateau_window
        h = self.state.loss_history
        if self.state.drops_applied >= cfg.max_lr_drops or len(h) < 2 * w:
            return False
        prev = float(np.median(h[-2 * w:-w]))
        cur = float(np.median(h[-w:]))
        if prev - cur >= cfg.plateau_min_rel_improvement * abs(prev):
            return False
        self.state.drops_applied += 1
        self._set_lrs(cfg.g_lr / cfg.lr_drop_factor ** self.state.drops_applied)
        self.state.loss_history.clear()
        return True

    def train(self, steps, metrics_path=None, checkpoint_path=None, checkpoint_every=0,
              log_every=0):
        stream = open(metrics_path, "a") if metrics_path else None
        try:
            for _ in range(steps):
                batch = self.make_batch(self.state.step)
                metrics = self.train_step(batch)
                self.maybe_drop_lr()
                if stream:
                    stream.write(json.dumps(metrics) + "\n")
                if log_every and metrics["step"] % log_every == 0:
                    print(f"step {metrics['step']}: L_G {metrics['L_G']:.4f} "
                          f"L_D {metrics['L_D']:.4f} lr {metrics['g_lr']:.2e}")
                if checkpoint_path and checkpoint_every and \
                        self.state.step % checkpoint_every == 0:
                    self.save(checkpoint_path)
        finally:
            if stream:
                stream.close()
        if checkpoint_path:
            self.save(checkpoint_path)
        return self.state
