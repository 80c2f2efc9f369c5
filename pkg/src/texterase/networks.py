"""Generator and discriminator networks.

The generator is three branches over a shared trunk. The trunk downsamples
the (image + coarse mask) stack by 4 and runs the two shared residual
blocks. The mask-refine and coarse-inpaint branches each run four more
dilated residual blocks and upsample back to input resolution; four sigmoid
attention gates read the mask branch and multiply the inputs of the
corresponding coarse-branch blocks. The fine branch is the same topology at
half width, fed with the coarse composite stacked with a mask (ground truth
during scheduled replacement, otherwise the refined mask, detached).

Tensors are NCHW float in [0, 1]; masks are single-channel.
"""

import dataclasses

import torch
import torch.nn as nn
import torch.nn.functional as F
from torch.nn.utils import spectral_norm


@dataclasses.dataclass(frozen=True)
class GeneratorConfig:
    base_channels: int = 64
    residual_blocks_per_branch: int = 6
    shared_residual_blocks: int = 2
    attention_blocks: int = 4
    dilation: int = 2
    use_mask_refine: bool = True
    use_attention: bool = True
    use_fine_branch: bool = True

    def __post_init__(self):
        if self.shared_residual_blocks + self.attention_blocks != self.residual_blocks_per_branch:
            raise ValueError("shared + attended blocks must equal residual_blocks_per_branch")
        if self.base_channels < 2 or self.base_channels % 2:
            raise ValueError("base_channels must be even and >= 2")
        if self.use_attention and not self.use_mask_refine:
            raise ValueError("attention gates need the mask-refine branch")


@dataclasses.dataclass(frozen=True)
class DiscriminatorConfig:
    channel_widths: tuple = (64, 128, 256, 512, 1)
    kernel: int = 4
    leaky_slope: float = 0.2
    spectral_norm: bool = True

    def __post_init__(self):
        if len(self.channel_widths) != 5 or self.channel_widths[-1] != 1:
            raise ValueError("expected five widths ending in a 1-channel score map")


@dataclasses.dataclass
class GeneratorOutputs:
    refined_mask: torch.Tensor
    coarse: torch.Tensor
    coarse_composite: torch.Tensor
    fine: torch.Tensor
    fine_composite: torch.Tensor
    attention_maps: list


def composite_tensors(pred, original, mask):
    """mask * pred + (1 - mask) * original, broadcasting the 1ch mask."""
    return mask * pred + (1 - mask) * original


def parameter_count(module):
    return sum(p.numel() for p in module.parameters() if p.requires_grad)


def midsection_receptive_field(blocks, dilation):
    """Receptive field of a stack of residual blocks (two 3x3 convs each,
    the first dilated)."""
    return 1 + blocks * (2 * dilation + 2)


def _init_conv(m):
    nn.init.normal_(m.weight, 0.0, 0.02)
    if m.bias is not None:
        nn.init.zeros_(m.bias)
    return m


class ResidualBlock(nn.Module):
    """Reflection-padded residual block: dilated 3x3 conv then plain 3x3."""

    def __init__(self, dim, dilation=2):
        super().__init__()
        self.body = nn.Sequential(
            nn.ReflectionPad2d(dilation),
            _init_conv(nn.Conv2d(dim, dim, 3, dilation=dilation)),
            nn.InstanceNorm2d(dim),
            nn.ReLU(True),
            nn.ReflectionPad2d(1),
            _init_conv(nn.Conv2d(dim, dim, 3)),
            nn.InstanceNorm2d(dim),
        )

    def forward(self, x):
        return x + self.body(x)


def _front_end(in_ch, c):
    return nn.Sequential(
        nn.ReflectionPad2d(3),
        _init_conv(nn.Conv2d(in_ch, c, 7)),
        nn.InstanceNorm2d(c),
        nn.ReLU(True),
        _init_conv(nn.Conv2d(c, 2 * c, 4, stride=2, padding=1)),
        nn.InstanceNorm2d(2 * c),
        nn.ReLU(True),
        _init_conv(nn.Conv2d(2 * c, 4 * c, 4, stride=2, padding=1)),
        nn.InstanceNorm2d(4 * c),
        nn.ReLU(True),
    )


def _back_end(c4, out_ch):
    c2, c = c4 // 2, c4 // 4
    return nn.Sequential(
        _init_conv(nn.ConvTranspose2d(c4, c2, 4, stride=2, padding=1)),
        nn.InstanceNorm2d(c2),
        nn.ReLU(True),
        _init_conv(nn.ConvTranspose2d(c2, c, 4, stride=2, padding=1)),
        nn.InstanceNorm2d(c),
        nn.ReLU(True),
        nn.ReflectionPad2d(3),
        _init_conv(nn.Conv2d(c, out_ch, 7)),
    )


class _Branch(nn.Module):
    """Residual mid-section plus upsampling tail for the mask/coarse branches."""

    def __init__(self, c4, blocks, dilation, out_ch):
        super().__init__()
        self.blocks = nn.ModuleList(ResidualBlock(c4, dilation) for _ in range(blocks))
        self.tail = _back_end(c4, out_ch)


class _AttentionGate(nn.Module):
    def __init__(self, c4):
        super().__init__()
        self.body = nn.Sequential(
            nn.ReflectionPad2d(1),
            _init_conv(nn.Conv2d(c4, c4 // 2, 3)),
            nn.InstanceNorm2d(c4 // 2),
            nn.ReLU(True),
            nn.ReflectionPad2d(1),
            _init_conv(nn.Conv2d(c4 // 2, 1, 3)),
            nn.InstanceNorm2d(1),
            nn.Sigmoid(),
        )

    def forward(self, x):
        return self.body(x)


class _FineNet(nn.Module):
    """Standalone encoder/residual/decoder refiner at half base width."""

    def __init__(self, c, blocks, dilation):
        super().__init__()
        self.head = _front_end(4, c)
        self.blocks = nn.ModuleList(ResidualBlock(4 * c, dilation) for _ in range(blocks))
        self.tail = _back_end(4 * c, 3)

    def forward(self, x):
        x = self.head(x)
        for block in self.blocks:
            x = block(x)
        return self.tail(x)


class Generator(nn.Module):
    def __init__(self, config=None):
        super().__init__()
        self.config = config or GeneratorConfig()
        cfg = self.config
        c4 = 4 * cfg.base_channels
        trunk = [_front_end(4, cfg.base_channels)]
        trunk += [ResidualBlock(c4, cfg.dilation) for _ in range(cfg.shared_residual_blocks)]
        self.trunk = nn.Sequential(*trunk)
        n = cfg.attention_blocks
        self.ci = _Branch(c4, n, cfg.dilation, 3)
        self.mr = _Branch(c4, n, cfg.dilation, 1) if cfg.use_mask_refine else None
        if cfg.use_attention:
            self.attn = nn.ModuleDict({str(i + 1): _AttentionGate(c4) for i in range(n)})
        else:
            self.attn = None
        if cfg.use_fine_branch:
            self.fi = _FineNet(cfg.base_channels // 2, cfg.residual_blocks_per_branch, cfg.dilation)
        else:
            self.fi = None

    def forward(self, image, coarse_mask, gt_mask_override=None):
        if image.dim() != 4 or image.shape[1] != 3:
            raise ValueError("expected a 3-channel NCHW image")
        if coarse_mask.shape != (image.shape[0], 1) + image.shape[2:]:
            raise ValueError("coarse mask must be 1-channel and match the image size")
        if image.shape[2] % 4 or image.shape[3] % 4:
            raise ValueError("spatial dims must be divisible by 4")
        if gt_mask_override is not None and gt_mask_override.shape != coarse_mask.shape:
            raise ValueError("override mask must match the coarse mask size")

        h = self.trunk(torch.cat([image, coarse_mask], dim=1))
        m = h
        c = h
        attention = []
        for i in range(self.config.attention_blocks):
            if self.mr is not None:
                m = self.mr.blocks[i](m)
            if self.attn is not None:
                gate = self.attn[str(i + 1)](m)
                attention.append(gate)
                c = c * gate
            c = self.ci.blocks[i](c)

        if self.mr is not None:
            refined = torch.sigmoid(self.mr.tail(m))
        else:
            refined = coarse_mask
        coarse = (torch.tanh(self.ci.tail(c)) + 1) / 2
        coarse_comp = composite_tensors(coarse, image, refined)

        fine = fine_comp = None
        if self.fi is not None:
            fi_mask = gt_mask_override if gt_mask_override is not None else refined.detach()
            fine = (torch.tanh(self.fi(torch.cat([coarse_comp, fi_mask], dim=1))) + 1) / 2
            fine_comp = composite_tensors(fine, image, refined)
        return GeneratorOutputs(refined, coarse, coarse_comp, fine, fine_comp, attention)


class Discriminator(nn.Module):
    """Patch critic; the box mask is resized and stacked onto the input of
    every layer past the first."""

    def __init__(self, config=None):
        super().__init__()
        self.config = config or DiscriminatorConfig()
        cfg = self.config
        w = cfg.channel_widths
        k = cfg.kernel

        def sn(conv):
            return spectral_norm(_init_conv(conv)) if cfg.spectral_norm else _init_conv(conv)

        strides = (2, 2, 2, 1, 1)
        in_chs = (3, w[0] + 1, w[1] + 1, w[2] + 1, w[3] + 1)
        layers = []
        for i in range(5):
            conv = sn(nn.Conv2d(in_chs[i], w[i], k, stride=strides[i], padding=1))
            if i < 4:
                layers.append(nn.Sequential(conv, nn.LeakyReLU(cfg.leaky_slope, inplace=True)))
            else:
                layers.append(conv)
        self.layers = nn.ModuleList(layers)

    def forward(self, box_mask, image):
        if box_mask.shape[-2:] != image.shape[-2:]:
            raise ValueError("mask and image sizes differ")
        x = self.layers[0](image)
        for layer in self.layers[1:]:
            m = F.interpolate(box_mask, size=x.shape[-2:], mode="nearest")
            x = layer(torch.cat([x, m], dim=1))
        return x
