"""Command-line surface: wavesr <command> [flags].

Commands: list-wavelets, decompose, reconstruct, iqa, sr-train, sr-apply,
sweep.  All reports are CSV with a header row; exit code 0 on success,
nonzero with a one-line diagnostic on error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .families import get_wavelet, list_wavelets
from .filterbank import dwt2d, idwt2d, read_subbands, write_subbands
from .ghm import (GhmFilterSet, ghm_decompose, ghm_reconstruct,
                  read_ghm_subbands, write_ghm_subbands)
from .grid import Image, to_luma
from .metrics import DEFAULT_METRICS, compute_metric
from .network import load_model, predict_sr, save_model
from .pipeline import (DatasetSpec, load_image, save_image, sweep_wavelets,
                       train_method)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavesr",
        description="Wavelet-domain single-image super resolution toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-wavelets", help="print all registered wavelet names")

    p = sub.add_parser("decompose", help="write a subband file for an image")
    p.add_argument("--in", dest="src", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--wavelet", help="single-level wavelet name")
    g.add_argument("--ghm", action="store_true",
                   help="use the 16-band multiwavelet")
    p.add_argument("--out", required=True)

    p = sub.add_parser("reconstruct", help="invert a subband file back to an image")
    p.add_argument("--in", dest="src", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("iqa", help="score a test image against a reference")
    p.add_argument("--ref", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--metrics", default=",".join(DEFAULT_METRICS),
                   help="comma-separated metric names")

    p = sub.add_parser("sr-train", help="train a residual model on a dataset")
    p.add_argument("--data", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--wavelet")
    g.add_argument("--ghm", action="store_true")
    p.add_argument("--scale", type=float, default=2.0)
    p.add_argument("--epochs", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--glob", default="*.png")
    p.add_argument("--patch-size", type=int, default=32)
    p.add_argument("--stride", type=int, default=0)
    p.add_argument("--batch", type=int, default=16)
    p.add_argument("--lr", type=float, default=0.01)
    p.add_argument("--limit", type=int, default=None,
                   help="use at most this many training images")

    p = sub.add_parser("sr-apply", help="super-resolve one image with a model")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="src", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--scale", type=float, default=2.0)

    p = sub.add_parser("sweep", help="train+score every method, emit a CSV table")
    p.add_argument("--data", required=True, help="training image directory")
    p.add_argument("--test", required=True, help="evaluation image directory")
    p.add_argument("--out", required=True)
    p.add_argument("--glob", default="*.png")
    p.add_argument("--scale", type=float, default=2.0)
    p.add_argument("--epochs", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--patch-size", type=int, default=32)
    p.add_argument("--stride", type=int, default=0)
    p.add_argument("--batch", type=int, default=16)
    p.add_argument("--lr", type=float, default=0.01)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--names", default=None,
                   help="comma-separated method subset (default: all + ghm)")
    return parser


def _luma_plane(img: Image) -> np.ndarray:
    return (to_luma(img) if img.channels == 3 else img).plane()


def _cmd_list_wavelets(_args) -> int:
    for name in list_wavelets():
        print(name)
    return 0


def _cmd_decompose(args) -> int:
    plane = _luma_plane(load_image(args.src))
    with open(args.out, "wb") as fp:
        if args.ghm:
            write_ghm_subbands(ghm_decompose(plane), fp)
        else:
            write_subbands(dwt2d(plane, get_wavelet(args.wavelet)), fp)
    return 0


def _cmd_reconstruct(args) -> int:
    with open(args.src, "rb") as fp:
        head = fp.readline()
        fp.seek(0)
        header = json.loads(head)
        if header.get("transform") == "ghm":
            plane = ghm_reconstruct(read_ghm_subbands(fp))
        else:
            bands = read_subbands(fp)
            plane = idwt2d(bands, get_wavelet(bands.wavelet))
    save_image(Image(np.clip(plane, 0.0, 255.0)), args.out)
    return 0


def _cmd_iqa(args) -> int:
    ref = load_image(args.ref)
    test = load_image(args.test)
    names = [m.strip() for m in args.metrics.split(",") if m.strip()]
    print("metric,value")
    for name in names:
        score = compute_metric(name, ref, test)
        print(f"{name},{score.value!r}")
    return 0


def _cmd_sr_train(args) -> int:
    name = "ghm" if args.ghm else args.wavelet
    spec = DatasetSpec(root=args.data, glob=args.glob,
                       scale_factor=args.scale, patch_size=args.patch_size,
                       stride=args.stride)
    _, net, trace = train_method(name, spec, epochs=args.epochs,
                                 batch=args.batch, lr=args.lr,
                                 seed=args.seed, limit=args.limit)
    with open(args.out, "wb") as fp:
        save_model(net, fp, transform_name=name, seed=args.seed)
    print(f"trained {name}: first-epoch loss {trace[0]!r}, "
          f"final-epoch loss {trace[-1]!r}")
    return 0


def _cmd_sr_apply(args) -> int:
    with open(args.model, "rb") as fp:
        net, manifest = load_model(fp)
    name = manifest.get("transform", "")
    transform = GhmFilterSet() if name == "ghm" else get_wavelet(name)
    out = predict_sr(load_image(args.src), net, transform, scale=args.scale)
    save_image(out, args.out)
    return 0


def _cmd_sweep(args) -> int:
    train_spec = DatasetSpec(root=args.data, glob=args.glob,
                             scale_factor=args.scale,
                             patch_size=args.patch_size, stride=args.stride)
    test_spec = DatasetSpec(root=args.test, glob=args.glob,
                            scale_factor=args.scale,
                            patch_size=args.patch_size, stride=args.stride)
    names = ([n.strip() for n in args.names.split(",") if n.strip()]
             if args.names else None)
    report = sweep_wavelets(train_spec, test_spec, epochs=args.epochs,
                            batch=args.batch, lr=args.lr, seed=args.seed,
                            names=names, limit=args.limit)
    with open(args.out, "w", newline="") as fp:
        fp.write(report.to_csv())
    print(f"wrote {args.out}: {len(report.methods)} methods x "
          f"{len(report.metrics)} metrics")
    return 0


_COMMANDS = {
    "list-wavelets": _cmd_list_wavelets,
    "decompose": _cmd_decompose,
    "reconstruct": _cmd_reconstruct,
    "iqa": _cmd_iqa,
    "sr-train": _cmd_sr_train,
    "sr-apply": _cmd_sr_apply,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BrokenPipeError:
        return 0
    except Exception as exc:  # noqa: BLE001 - single-line CLI diagnostics
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
