"""Dataset handling, degradation model, experiment harness, and image I/O.

The harness reproduces the sweep protocol: train one residual model per
registered wavelet (plus the 16-band multiwavelet) under an identical
seed/budget, score each against a bicubic baseline with the seven quality
measures, and emit a CSV table of methods x metrics.  Everything is
deterministic for a fixed seed: repeated runs produce byte-identical CSV.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image as PilImage

from .families import get_wavelet, list_wavelets
from .ghm import GhmFilterSet
from .grid import Image, bicubic_resize, resize_to, to_luma
from .metrics import DEFAULT_METRICS, METRICS, compute_metric
from .network import (Network, bands_to_tensor, predict_sr, train,
                      _decompose, _residual_indices)

__all__ = [
    "DatasetSpec",
    "IqaReport",
    "evaluate_dataset",
    "extract_patches",
    "load_image",
    "make_lr_pair",
    "make_training_set",
    "save_image",
    "sweep_wavelets",
]


# ----------------------------------------------------------------------
# image I/O: PNG (via Pillow) and PGM/PPM (P2/P3/P5/P6)
# ----------------------------------------------------------------------

def load_image(path) -> Image:
    """Load an 8-bit PNG/PGM/PPM file as a real-valued image."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix in (".pgm", ".ppm", ".pnm"):
        return _load_pnm(path)
    if suffix == ".png":
        return _load_png(path)
    raise ValueError(f"unsupported format {suffix!r}")


def _load_png(path: Path) -> Image:
    with PilImage.open(path) as im:
        if im.mode in ("I", "I;16", "I;16B", "I;16L", "F"):
            raise ValueError("unsupported bit depth")
        if im.mode == "P":
            im = im.convert("RGB")
        if im.mode == "LA":
            im = im.convert("L")
        if im.mode == "RGBA":
            im = im.convert("RGB")
        if im.mode not in ("L", "RGB"):
            raise ValueError(f"unsupported PNG mode {im.mode!r}")
        arr = np.asarray(im, dtype=np.float64)
    return Image(arr)


def _load_pnm(path: Path) -> Image:
    data = path.read_bytes()
    if len(data) < 2 or data[0:1] != b"P" or data[1:2] not in b"2356":
        raise ValueError("corrupt or unsupported PNM file")
    magic = data[:2].decode()
    # header tokens with '#' comments stripped; binary payload follows the
    # single whitespace byte after the maxval token
    tokens = []
    pos = 2
    while len(tokens) < 3:
        m = re.match(rb"(?:\s+|#[^\n]*\n)*([0-9]+)", data[pos:])
        if not m:
            raise ValueError("corrupt or unsupported PNM file")
        tokens.append(int(m.group(1)))
        pos += m.end()
    width, height, maxval = tokens
    if width <= 0 or height <= 0:
        raise ValueError("corrupt or unsupported PNM file")
    if maxval > 255:
        raise ValueError("unsupported bit depth")
    channels = 3 if magic in ("P3", "P6") else 1
    count = width * height * channels
    if magic in ("P2", "P3"):
        values = data[pos:].split()
        if len(values) < count:
            raise ValueError("corrupt or unsupported PNM file")
        arr = np.array(values[:count], dtype=np.float64)
    else:
        payload = data[pos + 1: pos + 1 + count]
        if len(payload) != count:
            raise ValueError("corrupt or unsupported PNM file")
        arr = np.frombuffer(payload, dtype=np.uint8).astype(np.float64)
    arr = arr.reshape(height, width, channels)
    return Image(arr)


def save_image(img: Image, path) -> None:
    """Quantize to 8 bit (clamp + round) and write PNG/PGM/PPM."""
    path = Path(path)
    arr = np.clip(np.rint(img.data * (255.0 / img.range)), 0, 255)
    arr = arr.astype(np.uint8)
    suffix = path.suffix.lower()
    if suffix == ".png":
        pil = PilImage.fromarray(arr[:, :, 0] if arr.shape[2] == 1 else arr)
        pil.save(path)
        return
    if suffix in (".pgm", ".ppm", ".pnm"):
        if arr.shape[2] == 1:
            header = f"P5\n{arr.shape[1]} {arr.shape[0]}\n255\n"
        else:
            header = f"P6\n{arr.shape[1]} {arr.shape[0]}\n255\n"
        path.write_bytes(header.encode() + arr.tobytes())
        return
    raise ValueError(f"unsupported format {suffix!r}")


# ----------------------------------------------------------------------
# dataset plumbing
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DatasetSpec:
    """Where the images live and how they are cut into training patches."""

    root: str
    glob: str = "*.png"
    scale_factor: float = 2.0
    patch_size: int = 32
    stride: int = 0  # 0 means "= patch_size"

    def __post_init__(self):
        # scale 1 is allowed for evaluation-only specs (input == truth)
        if self.scale_factor < 1.0:
            raise ValueError("scale_factor must be >= 1")
        if self.patch_size < 8 or self.patch_size % 2:
            raise ValueError("patch_size must be even and >= 8")
        if self.stride == 0:
            object.__setattr__(self, "stride", self.patch_size)
        if self.stride < 1:
            raise ValueError("stride must be positive")

    def paths(self) -> list[Path]:
        found = sorted(Path(self.root).glob(self.glob))
        if not found:
            raise FileNotFoundError(
                f"no files matching {self.glob!r} under {self.root!r}")
        return found


def make_lr_pair(hr: Image, scale: float) -> tuple[Image, Image]:
    """(degraded-then-upscaled input, ground truth); input dims = hr dims."""
    if scale < 1.0:
        raise ValueError("scale must be >= 1")
    if scale == 1.0:
        return bicubic_resize(hr, 1.0), hr
    lr = bicubic_resize(hr, 1.0 / scale)
    return resize_to(lr, hr.height, hr.width), hr


def extract_patches(pair: tuple[Image, Image],
                    spec: DatasetSpec) -> list[tuple[np.ndarray, np.ndarray]]:
    """Aligned luma patch pairs on the stride grid, row-major order."""
    inp, hr = pair
    if inp.data.shape != hr.data.shape:
        raise ValueError("pair dimensions do not match")
    a = to_luma(inp).plane() if inp.channels == 3 else inp.plane()
    b = to_luma(hr).plane() if hr.channels == 3 else hr.plane()
    ps, st = spec.patch_size, spec.stride
    h, w = a.shape
    if h < ps or w < ps:
        raise ValueError("image smaller than the patch size")
    out = []
    for i in range(0, h - ps + 1, st):
        for j in range(0, w - ps + 1, st):
            out.append((a[i:i + ps, j:j + ps], b[i:i + ps, j:j + ps]))
    return out


def make_training_set(spec: DatasetSpec, transform,
                      limit: int | None = None):
    """Decomposed (inputs, targets) tensors for every patch in the dataset.

    Coefficients are normalized by the signal range; targets hold the
    channels the network predicts (all but the leading approximation bands).
    """
    xs, ys = [], []
    paths = spec.paths()
    if limit is not None:
        paths = paths[:limit]
    for path in paths:
        hr = load_image(path)
        pair = make_lr_pair(hr, spec.scale_factor)
        for lo, hi in extract_patches(pair, spec):
            xs.append(bands_to_tensor(_decompose(lo / 255.0, transform)))
            ys.append(bands_to_tensor(_decompose(hi / 255.0, transform)))
    inputs = np.stack(xs)
    targets_full = np.stack(ys)
    n_in = inputs.shape[1]
    n_out = 3 if n_in == 4 else 16
    idx = _residual_indices(n_in, n_out)
    return inputs, targets_full[:, idx]


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class IqaReport:
    """Method x metric score table with per-image columns.

    ``rows`` maps (method, metric) -> tuple of per-image values; ``errors``
    maps a method name to a one-line failure message.
    """

    methods: tuple
    metrics: tuple
    images: tuple
    rows: dict
    errors: dict = field(default_factory=dict)

    def __post_init__(self):
        for key, values in self.rows.items():
            if len(values) != len(self.images):
                raise ValueError(f"row {key} has the wrong image count")

    def mean(self, method: str, metric: str) -> float:
        values = self.rows[(method, metric)]
        return math.fsum(values) / len(values)

    def value(self, method: str, metric: str, image: str) -> float:
        return self.rows[(method, metric)][self.images.index(image)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["method", "metric", "mean", *self.images])
        for method in self.methods:
            if method in self.errors:
                writer.writerow([method, "error", self.errors[method],
                                 *[""] * len(self.images)])
                continue
            for metric in self.metrics:
                values = self.rows[(method, metric)]
                writer.writerow([method, metric, repr(self.mean(method, metric)),
                                 *[repr(v) for v in values]])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "IqaReport":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header[:3] != ["method", "metric", "mean"]:
            raise ValueError("not a score-report CSV")
        images = tuple(header[3:])
        methods: list[str] = []
        metrics: list[str] = []
        rows: dict = {}
        errors: dict = {}
        for rec in reader:
            method, metric = rec[0], rec[1]
            if method not in methods:
                methods.append(method)
            if metric == "error":
                errors[method] = rec[2]
                continue
            if metric not in metrics:
                metrics.append(metric)
            values = tuple(float(v) for v in rec[3:])
            mean = float(rec[2])
            if values and math.isfinite(mean):
                check = math.fsum(values) / len(values)
                if not (math.isinf(check) or abs(check - mean) <= 1e-12 *
                        max(1.0, abs(mean))):
                    raise ValueError("row mean does not match its values")
            rows[(method, metric)] = values
        return cls(methods=tuple(methods), metrics=tuple(metrics),
                   images=images, rows=rows, errors=errors)


# ----------------------------------------------------------------------
# evaluation and the sweep
# ----------------------------------------------------------------------

def _predict_for_method(inp: Image, lr: Image, method) -> Image:
    """method: "bicubic" or (transform, Network)."""
    if method == "bicubic":
        return inp
    transform, net = method
    out = predict_sr(inp, net, transform, scale=1.0)
    return out


def evaluate_dataset(method, spec: DatasetSpec,
                     metrics=None) -> IqaReport:
    """Score one method over a dataset; per-image luma scores plus means.

    ``method`` is "bicubic" or a (transform, Network) pair.
    """
    metrics = list(metrics or DEFAULT_METRICS)
    for name in metrics:
        if name not in METRICS:
            raise KeyError(f"unknown metric {name!r}")
    paths = spec.paths()
    images = tuple(p.name for p in paths)
    per_metric: dict[str, list[float]] = {m: [] for m in metrics}
    for path in paths:
        hr = load_image(path)
        inp, truth = make_lr_pair(hr, spec.scale_factor)
        pred = _predict_for_method(inp, None, method)
        ref = to_luma(truth) if truth.channels == 3 else truth
        test = to_luma(pred) if pred.channels == 3 else pred
        for m in metrics:
            per_metric[m].append(compute_metric(m, ref, test).value)
    name = method if isinstance(method, str) else "model"
    rows = {(name, m): tuple(per_metric[m]) for m in metrics}
    return IqaReport(methods=(name,), metrics=tuple(metrics), images=images,
                     rows=rows)


def _merge_reports(parts: list[IqaReport], errors: dict,
                   method_names: list[str]) -> IqaReport:
    images = parts[0].images if parts else ()
    metrics = parts[0].metrics if parts else ()
    rows: dict = {}
    by_name = {}
    for rep in parts:
        by_name[rep.methods[0]] = rep
    ordered = []
    for name in method_names:
        if name in errors:
            ordered.append(name)
            continue
        rep = by_name[name]
        for metric in rep.metrics:
            rows[(name, metric)] = rep.rows[(rep.methods[0], metric)]
        ordered.append(name)
    return IqaReport(methods=tuple(ordered), metrics=tuple(metrics),
                     images=images, rows=rows, errors=dict(errors))


def _transform_by_name(name: str):
    if name == "ghm":
        return GhmFilterSet()
    return get_wavelet(name)


def train_method(name: str, train_spec: DatasetSpec, epochs: int = 50,
                 batch: int = 16, lr: float = 0.01, seed: int = 0,
                 limit: int | None = None) -> tuple:
    """Train one residual model for a named transform; returns
    (transform, network, loss trace)."""
    transform = _transform_by_name(name)
    inputs, targets = make_training_set(train_spec, transform, limit=limit)
    n_in = inputs.shape[1]
    net = Network.standard(n_in, targets.shape[1], seed=seed)
    net, trace = train(net, inputs, targets, epochs=epochs, batch=batch,
                       lr=lr, seed=seed)
    return transform, net, trace


def sweep_wavelets(train_spec: DatasetSpec, test_spec: DatasetSpec,
                   metrics=None, epochs: int = 50, batch: int = 16,
                   lr: float = 0.01, seed: int = 0,
                   names=None, limit: int | None = None) -> IqaReport:
    """The full method sweep: bicubic baseline, every registered wavelet,
    then the 16-band multiwavelet — one row per method, identical budget.

    Per-method training/evaluation failures become row-level errors instead
    of aborting the sweep.
    """
    metrics = list(metrics or DEFAULT_METRICS)
    wavelet_names = list(names) if names is not None else (
        list_wavelets() + ["ghm"])
    method_names = ["bicubic"] + wavelet_names
    parts = [evaluate_dataset("bicubic", test_spec, metrics)]
    # keep the baseline's method label
    base = parts[0]
    parts[0] = IqaReport(methods=("bicubic",), metrics=base.metrics,
                         images=base.images,
                         rows={("bicubic", m): base.rows[("bicubic", m)]
                               for m in base.metrics})
    errors: dict = {}
    for name in wavelet_names:
        try:
            transform, net, _ = train_method(
                name, train_spec, epochs=epochs, batch=batch, lr=lr,
                seed=seed, limit=limit)
            rep = evaluate_dataset((transform, net), test_spec, metrics)
            rows = {(name, m): rep.rows[("model", m)] for m in rep.metrics}
            parts.append(IqaReport(methods=(name,), metrics=rep.metrics,
                                   images=rep.images, rows=rows))
        except Exception as exc:  # noqa: BLE001 - row-level error reporting
            errors[name] = f"{type(exc).__name__}: {exc}"
    return _merge_reports(parts, errors, method_names)
