"""Single-level 1D/2D discrete wavelet decomposition and reconstruction.

Analysis uses correlation semantics: ``approx[n] = sum_i dec_lo[i] *
x[2n - anchor + i]`` with the signal extended per the boundary mode.  For
periodic and zero modes the anchor is 0 (trailing extension only); symmetric
mode reflects about the boundary samples on both sides and anchors each
filter near its center so the critically sampled analysis operator stays
invertible.  Periodic-mode synthesis is the classical upsample-and-filter
form with a fixed per-bank circular shift; symmetric and zero modes invert
the assembled analysis operator directly (cached per signal length), which
pins perfect reconstruction without per-family boundary algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .grid import BoundaryMode, pad_to_even

__all__ = [
    "FilterBank",
    "SubbandSet",
    "dwt1d",
    "dwt2d",
    "idwt1d",
    "idwt2d",
    "read_subbands",
    "write_subbands",
]


@dataclass(frozen=True)
class FilterBank:
    """Decomposition/reconstruction filter pairs for one single-level wavelet.

    ``synthesis_shift`` is the circular delay of the periodic
    analysis-synthesis cascade, compensated inside :func:`idwt1d`.
    """

    name: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray
    orthogonal: bool
    synthesis_shift: int = 0
    default_mode: BoundaryMode = BoundaryMode.PERIODIC
    # analysis filter anchors used by symmetric (whole-sample reflect)
    # extension; None means "filter center"
    sym_anchor: tuple[int, int] | None = None

    def anchors(self, mode: BoundaryMode) -> tuple[int, int]:
        """(lowpass, highpass) window anchors for the given boundary mode."""
        if mode is not BoundaryMode.SYMMETRIC:
            return 0, 0
        if self.sym_anchor is not None:
            return self.sym_anchor
        return (self.dec_lo.size - 1) // 2, (self.dec_hi.size - 1) // 2

    def __post_init__(self):
        for attr in ("dec_lo", "dec_hi", "rec_lo", "rec_hi"):
            taps = np.asarray(getattr(self, attr), dtype=np.float64)
            if taps.ndim != 1 or taps.size == 0:
                raise ValueError(f"{attr} must be a non-empty 1D tap array")
            if not np.isfinite(taps).all():
                raise ValueError(f"{attr} contains non-finite taps")
            taps.setflags(write=False)
            object.__setattr__(self, attr, taps)

    @property
    def cache_key(self) -> bytes:
        return b"".join(t.tobytes() for t in
                        (self.dec_lo, self.dec_hi, self.rec_lo, self.rec_hi))


@dataclass(frozen=True)
class SubbandSet:
    """The four 2D-DWT output bands plus provenance.

    Band naming: first letter is the filter applied along rows (width axis),
    second along columns (height axis); e.g. ``lh`` is row-lowpass,
    column-highpass.
    """

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray
    wavelet: str
    src_height: int
    src_width: int

    def __post_init__(self):
        shape = self.ll.shape
        for name in ("lh", "hl", "hh"):
            if getattr(self, name).shape != shape:
                raise ValueError("subband dimensions are inconsistent")

    @property
    def band_height(self) -> int:
        return self.ll.shape[0]

    @property
    def band_width(self) -> int:
        return self.ll.shape[1]

    def bands(self) -> tuple[np.ndarray, ...]:
        return self.ll, self.lh, self.hl, self.hh


def _extend_rows(arr: np.ndarray, pad: int, mode: BoundaryMode) -> np.ndarray:
    """Extend each row (axis 1) at its end by ``pad`` samples."""
    if pad == 0:
        return arr
    if mode is BoundaryMode.PERIODIC:
        reps = -(-pad // arr.shape[1])
        tail = np.tile(arr, (1, reps))[:, :pad]
        return np.concatenate([arr, tail], axis=1)
    if mode is BoundaryMode.ZERO:
        return np.pad(arr, ((0, 0), (0, pad)), mode="constant")
    raise ValueError(f"unknown boundary mode {mode!r}")


def _analyze_rows(arr: np.ndarray, taps: np.ndarray,
                  mode: BoundaryMode, anchor: int = 0) -> np.ndarray:
    """Stride-2 correlation of every row with ``taps`` anchored at ``anchor``."""
    n = arr.shape[1]
    out_n = -(-n // 2)
    if mode is BoundaryMode.SYMMETRIC:
        # whole-sample reflection on both sides; windows start at 2k - anchor
        pad_r = max(0, (out_n - 1) * 2 + taps.size - anchor - n)
        ext = np.pad(arr, ((0, 0), (anchor, pad_r)), mode="reflect")
    else:
        pad = max(0, (out_n - 1) * 2 + taps.size - n)
        ext = _extend_rows(arr, pad, mode)
    win = np.lib.stride_tricks.sliding_window_view(ext, taps.size, axis=1)
    return win[:, ::2] @ taps


def _synthesize_rows_periodic(approx: np.ndarray, detail: np.ndarray,
                              fb: FilterBank) -> np.ndarray:
    """Conv-form periodic synthesis on every row; output length 2*len."""
    m = 2 * approx.shape[1]
    up = np.zeros((approx.shape[0], m))
    up[:, ::2] = approx
    up_d = np.zeros_like(up)
    up_d[:, ::2] = detail

    def circ_corr(rows, taps):
        pad = taps.size - 1
        reps = -(-pad // m) if m else 0
        ext = np.concatenate([rows] + [rows] * reps, axis=1)[:, :m + pad]
        win = np.lib.stride_tricks.sliding_window_view(ext, taps.size, axis=1)
        return win @ taps

    y = circ_corr(up, fb.rec_lo) + circ_corr(up_d, fb.rec_hi)
    return np.roll(y, fb.synthesis_shift, axis=1)


_INVERSE_CACHE: dict[tuple, np.ndarray] = {}


def _analysis_inverse(fb: FilterBank, n: int, mode: BoundaryMode) -> np.ndarray:
    """Inverse of the length-n analysis operator (columns: [approx; detail])."""
    a_lo, a_hi = fb.anchors(mode)
    key = (fb.cache_key, n, mode, a_lo, a_hi)
    inv = _INVERSE_CACHE.get(key)
    if inv is None:
        eye = np.eye(n)
        a = _analyze_rows(eye, fb.dec_lo, mode, a_lo)
        d = _analyze_rows(eye, fb.dec_hi, mode, a_hi)
        op = np.concatenate([a, d], axis=1).T  # maps x -> [a; d]
        inv = np.linalg.inv(op)
        _INVERSE_CACHE[key] = inv
    return inv


def dwt1d(signal, fb: FilterBank,
          mode: BoundaryMode | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Single-level analysis: (approx, detail), each of length ceil(N/2).

    Odd-length signals are symmetric-padded by one sample first.
    """
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim != 1 or x.size < 2:
        raise ValueError("signal must be 1D with length >= 2")
    mode = mode or fb.default_mode
    if x.size % 2:
        x = np.concatenate([x, x[-1:]])
    rows = x[None, :]
    a_lo, a_hi = fb.anchors(mode)
    return (_analyze_rows(rows, fb.dec_lo, mode, a_lo)[0],
            _analyze_rows(rows, fb.dec_hi, mode, a_hi)[0])


def idwt1d(approx, detail, fb: FilterBank,
           mode: BoundaryMode | None = None,
           out_len: int | None = None) -> np.ndarray:
    """Single-level synthesis, cropped to ``out_len`` samples."""
    a = np.asarray(approx, dtype=np.float64)
    d = np.asarray(detail, dtype=np.float64)
    if a.shape != d.shape or a.ndim != 1:
        raise ValueError("approx and detail lengths must match")
    mode = mode or fb.default_mode
    if out_len is None:
        out_len = 2 * a.size
    y = _synthesize_block(a[None, :], d[None, :], fb, mode)[0]
    return y[:out_len]


def _synthesize_block(a: np.ndarray, d: np.ndarray, fb: FilterBank,
                      mode: BoundaryMode) -> np.ndarray:
    if mode is BoundaryMode.PERIODIC:
        return _synthesize_rows_periodic(a, d, fb)
    inv = _analysis_inverse(fb, 2 * a.shape[1], mode)
    coeffs = np.concatenate([a, d], axis=1)
    return coeffs @ inv.T


def dwt2d(img, fb: FilterBank,
          mode: BoundaryMode | None = None) -> SubbandSet:
    """Separable 2D analysis: rows first, then columns, four output bands."""
    from .grid import Image
    plane = img.plane() if isinstance(img, Image) else np.asarray(img, dtype=np.float64)
    if plane.ndim != 2 or plane.size == 0:
        raise ValueError("expected a non-empty 2D plane")
    mode = mode or fb.default_mode
    src_h, src_w = plane.shape
    plane = pad_to_even(plane)
    a_lo, a_hi = fb.anchors(mode)
    lo_w = _analyze_rows(plane, fb.dec_lo, mode, a_lo)
    hi_w = _analyze_rows(plane, fb.dec_hi, mode, a_hi)
    ll = _analyze_rows(lo_w.T, fb.dec_lo, mode, a_lo).T
    lh = _analyze_rows(lo_w.T, fb.dec_hi, mode, a_hi).T
    hl = _analyze_rows(hi_w.T, fb.dec_lo, mode, a_lo).T
    hh = _analyze_rows(hi_w.T, fb.dec_hi, mode, a_hi).T
    return SubbandSet(ll=ll, lh=lh, hl=hl, hh=hh, wavelet=fb.name,
                      src_height=src_h, src_width=src_w)


def idwt2d(bands: SubbandSet, fb: FilterBank,
           mode: BoundaryMode | None = None) -> np.ndarray:
    """Inverse of :func:`dwt2d`; output has the original source dimensions."""
    mode = mode or fb.default_mode
    lo_w = _synthesize_block(bands.ll.T, bands.lh.T, fb, mode).T
    hi_w = _synthesize_block(bands.hl.T, bands.hh.T, fb, mode).T
    plane = _synthesize_block(lo_w, hi_w, fb, mode)
    return plane[:bands.src_height, :bands.src_width]


# --- serialization: JSON header line + float32 planes (LL, LH, HL, HH) ---

def write_subbands(bands: SubbandSet, fp) -> None:
    header = {
        "wavelet": bands.wavelet,
        "src_height": bands.src_height,
        "src_width": bands.src_width,
        "band_height": bands.band_height,
        "band_width": bands.band_width,
    }
    fp.write(json.dumps(header, sort_keys=True).encode() + b"\n")
    for band in bands.bands():
        fp.write(band.astype("<f4").tobytes())


def read_subbands(fp) -> SubbandSet:
    header = json.loads(_read_line(fp))
    bh, bw = header["band_height"], header["band_width"]
    planes = []
    for _ in range(4):
        raw = fp.read(4 * bh * bw)
        if len(raw) != 4 * bh * bw:
            raise ValueError("truncated subband payload")
        planes.append(np.frombuffer(raw, dtype="<f4").reshape(bh, bw)
                      .astype(np.float64))
    return SubbandSet(ll=planes[0], lh=planes[1], hl=planes[2], hh=planes[3],
                      wavelet=header["wavelet"],
                      src_height=header["src_height"],
                      src_width=header["src_width"])


def _read_line(fp) -> bytes:
    buf = bytearray()
    while True:
        ch = fp.read(1)
        if not ch or ch == b"\n":
            return bytes(buf)
        buf.extend(ch)
