"""Command line entry points: train, eval, infer, synth-data, make-masks, serve."""

import argparse
import dataclasses
import json
import pathlib
import sys

import torch

from . import fileio
from .checkpoints import load_generator
from .data import DIFF_THRESHOLD, SynthConfig, derive_refined_mask, export_synthetic, \
    generate_sample, load_dataset
from .evaluation import evaluate
from .inference import EraseRequest, erase
from .losses import FeatureExtractor
from .networks import Discriminator, DiscriminatorConfig, Generator
from .training import TrainConfig, Trainer, build_generator_config


def _pair(text):
    parts = [int(v) for v in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected LO,HI")
    return tuple(parts)


def _feature_extractor(args):
    fx = FeatureExtractor.tiny() if args.features == "tiny" else FeatureExtractor()
    if getattr(args, "feature_weights", None):
        fx.load_weights(args.feature_weights)
    return fx


def cmd_train(args):
    if args.config:
        config = TrainConfig.from_dict(json.loads(pathlib.Path(args.config).read_text()))
    else:
        config = TrainConfig()
    overrides = config.to_dict()
    for name in ("image_size", "batch_size", "seed", "ablation"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    config = TrainConfig.from_dict(overrides)

    if args.data:
        data = list(load_dataset(args.data))
    else:
        synth = SynthConfig(image_size=config.image_size, seed=config.seed)
        data = [generate_sample(synth, i) for i in range(args.synth)]

    if args.resume:
        trainer = Trainer.resume(args.resume, data, feature_extractor=_feature_extractor(args))
    else:
        torch.manual_seed(config.seed)
        c = args.base_channels
        gen = Generator(build_generator_config(config.ablation, base_channels=c))
        disc = Discriminator(DiscriminatorConfig(channel_widths=(c, 2 * c, 4 * c, 8 * c, 1)))
        trainer = Trainer(config, data, generator=gen, discriminator=disc,
                          feature_extractor=_feature_extractor(args))
    steps = args.steps if args.steps is not None else config.max_steps
    trainer.train(steps, metrics_path=args.metrics, checkpoint_path=args.out,
                  checkpoint_every=args.checkpoint_every, log_every=args.log_every)
    print(f"trained to step {trainer.state.step}, checkpoint at {args.out}")
    return 0


def cmd_eval(args):
    generator = load_generator(args.checkpoint)
    data = list(load_dataset(args.data))
    pads = [int(v) for v in args.pads.split(",")]
    reports = [evaluate(generator, data, pad=pad, threshold=args.threshold) for pad in pads]
    for report in reports:
        print(report.table())
        print()
    if args.out:
        payload = {"reports": [dataclasses.asdict(r) for r in reports]}
        pathlib.Path(args.out).write_text(json.dumps(payload, indent=2))
    return 0


def cmd_infer(args):
    image = fileio.load_image(args.image)
    request = EraseRequest(
        image=image,
        polygons=fileio.load_boxes(args.boxes) if args.boxes else None,
        mask=fileio.load_mask(args.mask) if args.mask else None,
        erase_all=args.all,
        dilation_radius=args.dilation_radius,
        mask_threshold=args.threshold,
        return_intermediates=bool(args.intermediates),
    )
    result = erase(request, args.checkpoint)
    fileio.save_image(args.out, result.composite_fine)
    if args.intermediates:
        outdir = pathlib.Path(args.intermediates)
        outdir.mkdir(parents=True, exist_ok=True)
        fileio.save_mask(outdir / "refined_mask.png", result.refined_mask)
        fileio.save_mask(outdir / "erase_mask.png", result.erase_mask)
        fileio.save_image(outdir / "coarse.png", result.coarse)
        fileio.save_image(outdir / "coarse_composite.png", result.coarse_composite)
        fileio.save_image(outdir / "fine.png", result.fine)
        for i, att in enumerate(result.attention_maps, start=1):
            fileio.save_mask(outdir / f"attention_{i}.png", att)
    print(f"wrote {args.out}")
    return 0


def cmd_synth_data(args):
    config = SynthConfig(image_size=args.size, glyph_scale_range=args.scales,
                         strings_per_image=args.strings,
                         distractor_strings=args.distractors,
                         rotation_max_deg=args.rotation,
                         background_kind=args.background, seed=args.seed)
    export_synthetic(config, args.n, args.out)
    print(f"wrote {args.n} samples to {args.out}")
    return 0


def cmd_make_masks(args):
    root = pathlib.Path(args.data)
    mask_dir = root / "mask"
    mask_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    for path in sorted((root / "input").glob("*.png")):
        target = root / "target" / path.name
        boxes = root / "boxes" / (path.stem + ".json")
        for required in (target, boxes):
            if not required.exists():
                raise FileNotFoundError(f"missing {required.name} for {path.name}")
        mask = derive_refined_mask(fileio.load_image(path), fileio.load_image(target),
                                   fileio.load_boxes(boxes), args.threshold)
        fileio.save_mask(mask_dir / path.name, mask)
        count += 1
    print(f"wrote {count} masks to {mask_dir}")
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    app = create_app(args.checkpoint, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="texterase",
                                     description="scene text removal toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model")
    p.add_argument("--config", help="JSON file of training settings")
    p.add_argument("--data", help="dataset directory (input/target/boxes[/mask])")
    p.add_argument("--synth", type=int, default=16,
                   help="train on N in-memory synthetic samples when --data is absent")
    p.add_argument("--steps", type=int,
                   help="steps to run this invocation (adds on top when resuming)")
    p.add_argument("--image-size", dest="image_size", type=int)
    p.add_argument("--batch-size", dest="batch_size", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--ablation", choices=("full", "no_mask_refine_branch",
                                          "no_attention", "no_mask_refine_loss"))
    p.add_argument("--base-channels", type=int, default=64)
    p.add_argument("--features", choices=("full", "tiny"), default="full")
    p.add_argument("--feature-weights", help="npz archive of extractor weights")
    p.add_argument("--resume", help="checkpoint to continue from")
    p.add_argument("--out", required=True, help="checkpoint path to write")
    p.add_argument("--metrics", help="JSON-lines metrics stream path")
    p.add_argument("--checkpoint-every", type=int, default=0)
    p.add_argument("--log-every", type=int, default=100)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a checkpoint on a dataset")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--pads", default="0", help="comma-separated pad sizes")
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("infer", help="erase text from one image")
    p.add_argument("--image", required=True)
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--out", required=True)
    region = p.add_mutually_exclusive_group(required=True)
    region.add_argument("--mask", help="8-bit mask PNG, 255 marks removal regions")
    region.add_argument("--boxes", help="polygon JSON file")
    region.add_argument("--all", action="store_true", help="erase all text")
    p.add_argument("--dilation-radius", type=int, default=7)
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--intermediates", help="directory for intermediate outputs")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("synth-data", help="write a synthetic dataset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scales", type=_pair, default=(8, 24))
    p.add_argument("--strings", type=_pair, default=(1, 3))
    p.add_argument("--distractors", type=_pair, default=(0, 0),
                   help="scene-text strings per image that must be kept")
    p.add_argument("--rotation", type=float, default=15.0,
                   help="max string rotation in degrees")
    p.add_argument("--background", choices=("noise", "flat", "gradient"), default="noise")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth_data)

    p = sub.add_parser("make-masks", help="derive pixel masks for input/target pairs")
    p.add_argument("--data", required=True)
    p.add_argument("--threshold", type=int, default=DIFF_THRESHOLD)
    p.set_defaults(func=cmd_make_masks)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory of built UI assets to serve at /")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 130
    except Exception as exc:  # single-line, machine-parsable failure report
        print(f"error: {exc}", file=sys.stderr)
        return 1
