"""Dense 2D image containers and the convolution / resampling / color primitives.

Samples are double precision everywhere; quantization to 8 bit happens only
at file I/O.  All functions are pure: inputs are never mutated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "BoundaryMode",
    "Image",
    "Kernel2D",
    "bicubic_resize",
    "conv2d",
    "dyadic_downsample",
    "dyadic_upsample",
    "from_luma",
    "pad_to_even",
    "to_luma",
]

# BT.601 luma weights
_LUMA_R, _LUMA_G, _LUMA_B = 0.299, 0.587, 0.114


class BoundaryMode(enum.Enum):
    """How samples beyond the image border are obtained."""

    PERIODIC = "periodic"
    SYMMETRIC = "symmetric"
    ZERO = "zero"


@dataclass(frozen=True)
class Image:
    """A 2D grid of real samples, 1 or 3 channels, channel-last.

    ``range`` is the nominal maximum signal value (255 for 8-bit sources).
    """

    data: np.ndarray  # (H, W, C) float64
    range: float = 255.0

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float64)
        if arr.ndim == 2:
            arr = arr[:, :, None]
        if arr.ndim != 3 or arr.shape[2] not in (1, 3):
            raise ValueError(f"image must be (H, W, 1|3), got shape {arr.shape}")
        if arr.shape[0] == 0 or arr.shape[1] == 0:
            raise ValueError("image must be non-empty")
        if not np.isfinite(arr).all():
            raise ValueError("image contains non-finite samples")
        object.__setattr__(self, "data", arr)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    def plane(self, c: int = 0) -> np.ndarray:
        """One channel as a 2D array (a view, do not mutate)."""
        return self.data[:, :, c]


@dataclass(frozen=True)
class Kernel2D:
    """A small dense filter kernel, applied with correlation semantics."""

    taps: np.ndarray  # (rows, cols) float64

    def __post_init__(self):
        arr = np.atleast_2d(np.asarray(self.taps, dtype=np.float64))
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("kernel must be a non-empty 2D array")
        if not np.isfinite(arr).all():
            raise ValueError("kernel contains non-finite taps")
        object.__setattr__(self, "taps", arr)

    @property
    def rows(self) -> int:
        return self.taps.shape[0]

    @property
    def cols(self) -> int:
        return self.taps.shape[1]


def _as_plane(src) -> np.ndarray:
    arr = np.asarray(src.data[:, :, 0] if isinstance(src, Image) else src,
                     dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2D plane")
    return arr


def extend(plane: np.ndarray, pad: tuple[int, int, int, int],
           mode: BoundaryMode) -> np.ndarray:
    """Pad a plane by (top, bottom, left, right) samples per ``mode``.

    Raises if the requested extension exceeds what the source can supply
    (symmetric reflection cannot extend past one mirrored copy).
    """
    top, bot, left, right = pad
    h, w = plane.shape
    if mode is BoundaryMode.ZERO:
        return np.pad(plane, ((top, bot), (left, right)), mode="constant")
    if mode is BoundaryMode.PERIODIC:
        # np.pad "wrap" handles pads larger than the extent
        return np.pad(plane, ((top, bot), (left, right)), mode="wrap")
    if mode is BoundaryMode.SYMMETRIC:
        if max(top, bot) > h or max(left, right) > w:
            raise ValueError("kernel exceeds extent")
        return np.pad(plane, ((top, bot), (left, right)), mode="symmetric")
    raise ValueError(f"unknown boundary mode {mode!r}")


def conv2d(src, k, mode: BoundaryMode = BoundaryMode.PERIODIC,
           step: int = 1) -> np.ndarray:
    """Strided 2D correlation of a plane with a kernel.

    Correlation semantics: the kernel is *not* flipped.  The kernel is
    anchored at the top-left of each window, windows start at multiples of
    ``step``, and the source is extended at the bottom/right per ``mode`` so
    the output has shape ``ceil(src_shape / step)``.
    """
    plane = _as_plane(src)
    taps = k.taps if isinstance(k, Kernel2D) else np.atleast_2d(
        np.asarray(k, dtype=np.float64))
    if step < 1:
        raise ValueError("step must be >= 1")
    h, w = plane.shape
    kr, kc = taps.shape
    out_h = -(-h // step)
    out_w = -(-w // step)
    pad_b = max(0, (out_h - 1) * step + kr - h)
    pad_r = max(0, (out_w - 1) * step + kc - w)
    ext = extend(plane, (0, pad_b, 0, pad_r), mode)
    win = np.lib.stride_tricks.sliding_window_view(ext, (kr, kc))
    win = win[::step, ::step]
    return np.einsum("hwij,ij->hw", win, taps)


def dyadic_downsample(src, axis: int) -> np.ndarray:
    """Keep even-indexed samples along ``axis`` (0 = rows, 1 = cols)."""
    plane = _as_plane(src)
    if plane.shape[axis] % 2 != 0:
        raise ValueError("extent along axis must be even; pad first")
    return plane[::2] if axis == 0 else plane[:, ::2]


def dyadic_upsample(src, axis: int) -> np.ndarray:
    """Insert zeros at odd indices along ``axis``; inverse of downsampling."""
    plane = _as_plane(src)
    h, w = plane.shape
    if axis == 0:
        out = np.zeros((2 * h, w))
        out[::2] = plane
    else:
        out = np.zeros((h, 2 * w))
        out[:, ::2] = plane
    return out


def pad_to_even(plane: np.ndarray, multiple: int = 2) -> np.ndarray:
    """Symmetric-pad bottom/right so both extents divide ``multiple``."""
    h, w = plane.shape
    pad_b = (-h) % multiple
    pad_r = (-w) % multiple
    if pad_b == 0 and pad_r == 0:
        return plane
    return np.pad(plane, ((0, pad_b), (0, pad_r)), mode="symmetric")


def _cubic_weight(t: np.ndarray, a: float = -0.5) -> np.ndarray:
    """Keys cubic kernel; a = -0.5 is Catmull-Rom."""
    t = np.abs(t)
    w = np.where(
        t <= 1.0,
        (a + 2.0) * t**3 - (a + 3.0) * t**2 + 1.0,
        np.where(t < 2.0, a * t**3 - 5.0 * a * t**2 + 8.0 * a * t - 4.0 * a, 0.0),
    )
    return w


def _resize_axis(arr: np.ndarray, out_n: int, axis: int) -> np.ndarray:
    n = arr.shape[axis]
    factor = out_n / n
    # center-aligned sample positions; clamp (replicate) at the borders
    x = (np.arange(out_n) + 0.5) / factor - 0.5
    base = np.floor(x).astype(int)
    frac = x - base
    idx = base[:, None] + np.arange(-1, 3)[None, :]          # (out_n, 4)
    w = _cubic_weight(frac[:, None] - np.arange(-1, 3)[None, :])
    w = w / w.sum(axis=1, keepdims=True)                     # partition of unity
    idx = np.clip(idx, 0, n - 1)
    moved = np.moveaxis(arr, axis, 0)
    out = np.einsum("of,of...->o...", w, moved[idx])
    return np.moveaxis(out, 0, axis)


def bicubic_resize(src: Image, factor: float) -> Image:
    """Catmull-Rom bicubic resize by a positive real factor."""
    if factor <= 0:
        raise ValueError("factor must be positive")
    out_h = round(src.height * factor)
    out_w = round(src.width * factor)
    if out_h == 0 or out_w == 0:
        raise ValueError("output dimension would be zero")
    out = _resize_axis(src.data, out_h, 0)
    out = _resize_axis(out, out_w, 1)
    return Image(out, range=src.range)


def resize_to(src: Image, out_h: int, out_w: int) -> Image:
    """Bicubic resize to an exact output size."""
    if out_h <= 0 or out_w <= 0:
        raise ValueError("output dimension would be zero")
    out = _resize_axis(src.data, out_h, 0)
    out = _resize_axis(out, out_w, 1)
    return Image(out, range=src.range)


def to_luma(src: Image) -> Image:
    """BT.601 luma plane of a 3-channel image."""
    if src.channels != 3:
        raise ValueError("to_luma expects a 3-channel image")
    r, g, b = src.data[:, :, 0], src.data[:, :, 1], src.data[:, :, 2]
    y = _LUMA_R * r + _LUMA_G * g + _LUMA_B * b
    return Image(y[:, :, None], range=src.range)


def chroma_planes(src: Image) -> tuple[np.ndarray, np.ndarray]:
    """BT.601 color-difference planes (Cb, Cr) of a 3-channel image."""
    if src.channels != 3:
        raise ValueError("chroma_planes expects a 3-channel image")
    r, g, b = src.data[:, :, 0], src.data[:, :, 1], src.data[:, :, 2]
    y = _LUMA_R * r + _LUMA_G * g + _LUMA_B * b
    return b - y, r - y


def from_luma(y: Image, chroma: tuple[np.ndarray, np.ndarray]) -> Image:
    """Rebuild RGB from a luma plane and (Cb, Cr) color-difference planes."""
    if y.channels != 1:
        raise ValueError("from_luma expects a 1-channel luma image")
    cb, cr = chroma
    yp = y.data[:, :, 0]
    if cb.shape != yp.shape or cr.shape != yp.shape:
        raise ValueError("chroma plane dimensions do not match luma")
    r = yp + cr
    b = yp + cb
    g = (yp - _LUMA_R * r - _LUMA_B * b) / _LUMA_G
    return Image(np.stack([r, g, b], axis=2), range=y.range)
