"""Checkpoint archive: a zip holding tensors.npz plus manifest.json.

The npz keys are the flat parameter names ("generator.trunk.0.1.weight",
"discriminator.layers.0.0.weight_orig", "optim_g.3.exp_avg", ...). The
manifest records {schema_version, step, generator_config,
discriminator_config, train_config, state, optim} so a run can resume
exactly: optimizer moments and spectral-norm power-iteration vectors ride
along with the weights.
"""

import dataclasses
import io
import json
import zipfile

import numpy as np
import torch

from .networks import Discriminator, DiscriminatorConfig, Generator, GeneratorConfig

SCHEMA_VERSION = 1


def _module_arrays(prefix, module, arrays):
    for name, tensor in module.state_dict().items():
        arrays[f"{prefix}.{name}"] = tensor.detach().cpu().numpy()


def _module_state(prefix, arrays):
    out = {}
    for key in arrays.files:
        if key.startswith(prefix + "."):
            out[key[len(prefix) + 1:]] = torch.from_numpy(np.array(arrays[key]))
    return out


def _optim_arrays(prefix, opt, arrays):
    sd = opt.state_dict()
    for idx, entry in sd["state"].items():
        for key, val in entry.items():
            if torch.is_tensor(val):
                val = val.detach().cpu().numpy()
            arrays[f"{prefix}.{idx}.{key}"] = np.asarray(val)
    return sd["param_groups"]


def _optim_state(prefix, arrays, param_groups):
    state = {}
    for key in arrays.files:
        if not key.startswith(prefix + "."):
            continue
        idx, field = key[len(prefix) + 1:].split(".", 1)
        arr = np.array(arrays[key])
        if field == "step":
            value = torch.tensor(float(arr))
        else:
            value = torch.from_numpy(arr)
        state.setdefault(int(idx), {})[field] = value
    return {"state": state, "param_groups": param_groups}


def save_checkpoint(path, generator, discriminator=None, g_opt=None, d_opt=None,
                    state=None, train_config=None):
    arrays = {}
    _module_arrays("generator", generator, arrays)
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "step": 0 if state is None else state.step,
        "generator_config": dataclasses.asdict(generator.config),
        "discriminator_config": None,
        "train_config": None if train_config is None else train_config.to_dict(),
        "state": None,
        "optim": {},
    }
    if discriminator is not None:
        _module_arrays("discriminator", discriminator, arrays)
        manifest["discriminator_config"] = dataclasses.asdict(discriminator.config)
    if g_opt is not None:
        manifest["optim"]["g"] = _optim_arrays("optim_g", g_opt, arrays)
    if d_opt is not None:
        manifest["optim"]["d"] = _optim_arrays("optim_d", d_opt, arrays)
    if state is not None:
        manifest["state"] = {
            "step": state.step,
            "g_lr_current": state.g_lr_current,
            "drops_applied": state.drops_applied,
            "rng_state": state.rng_state,
        }
        arrays["state.loss_history"] = np.asarray(state.loss_history, dtype=np.float64)
    buf = io.BytesIO()
    np.savez(buf, **arrays)
    with zipfile.ZipFile(path, "w", zipfile.ZIP_STORED) as zf:
        zf.writestr("manifest.json", json.dumps(manifest, indent=1))
        zf.writestr("tensors.npz", buf.getvalue())


def load_checkpoint(path):
    """Returns a dict with the manifest, rebuilt networks, and raw arrays."""
    try:
        zf = zipfile.ZipFile(path)
    except (zipfile.BadZipFile, FileNotFoundError, IsADirectoryError) as exc:
        raise ValueError(f"unreadable checkpoint archive: {exc}") from exc
    with zf:
        try:
            manifest = json.loads(zf.read("manifest.json"))
            raw = zf.read("tensors.npz")
        except (KeyError, json.JSONDecodeError) as exc:
            raise ValueError(f"corrupted checkpoint manifest: {exc}") from exc
    version = manifest.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported checkpoint schema {version!r}, expected {SCHEMA_VERSION}")
    try:
        arrays = np.load(io.BytesIO(raw))
    except Exception as exc:
        raise ValueError(f"corrupted checkpoint tensors: {exc}") from exc

    generator = Generator(GeneratorConfig(**manifest["generator_config"]))
    generator.load_state_dict(_module_state("generator", arrays))
    discriminator = None
    if manifest["discriminator_config"] is not None:
        dcfg = dict(manifest["discriminator_config"])
        dcfg["channel_widths"] = tuple(dcfg["channel_widths"])
        discriminator = Discriminator(DiscriminatorConfig(**dcfg))
        discriminator.load_state_dict(_module_state("discriminator", arrays))
    out = {
        "manifest": manifest,
        "generator": generator,
        "discriminator": discriminator,
        "arrays": arrays,
    }
    if manifest.get("state") is not None:
        out["loss_history"] = [float(v) for v in arrays["state.loss_history"]]
    return out


def load_generator(path):
    """Weights-only load for inference."""
    bundle = load_checkpoint(path)
    gen = bundle["generator"]
    gen.eval()
    return gen


def restore_optimizer(opt, bundle, which):
    groups = bundle["manifest"]["optim"].get(which)
    if groups is None:
        raise ValueError(f"checkpoint has no {which!r} optimizer state")
    opt.load_state_dict(_optim_state(f"optim_{which}", bundle["arrays"], groups))
