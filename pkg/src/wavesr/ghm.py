"""Multiplicity-2 (GHM) multiwavelet decomposition into 16 subbands.

The transform runs a 2-channel vector filter bank over a vector-valued
signal obtained by pairing adjacent samples through an invertible 2x2
prefilter.  Analysis is correlation with the four 2x2 kernel blocks at
stride 2 under periodic extension; synthesis applies the cached exact
inverse of the assembled analysis operator, so perfect reconstruction
holds by construction.

In 2D the bank is applied separably (rows, then columns), turning one
plane into a 4x4 grid of quarter-per-side subbands.  Grid layout:
``bands[i][j]`` holds column-transform channel ``i`` of row-transform
channel ``j``, with channel order [a1, a2, d1, d2] (two approximation
channels first); the top-left 2x2 quadrant is therefore the
approximation-type block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .grid import pad_to_even

__all__ = [
    "GhmFilterSet",
    "GhmSubbands",
    "ghm_decompose",
    "ghm_postfilter",
    "ghm_prefilter",
    "ghm_reconstruct",
    "read_ghm_subbands",
    "write_ghm_subbands",
]

_SQRT2 = np.sqrt(2.0)

# 2x4 kernel matrices of the multiplicity-2 bank; each is two adjacent
# 2x2 blocks of the lowpass (h) / highpass (g) matrix impulse response.
_H1 = np.array([
    [3.0 / (5.0 * _SQRT2), 4.0 / 5.0, 3.0 / (5.0 * _SQRT2), 0.0],
    [-1.0 / 20.0, -3.0 / (10.0 * _SQRT2), 9.0 / 20.0, 1.0 / _SQRT2],
])
_G1 = np.array([
    [-1.0 / 20.0, -3.0 / (10.0 * _SQRT2), 9.0 / 20.0, -1.0 / _SQRT2],
    [1.0 / (10.0 * _SQRT2), 3.0 / 10.0, -9.0 / (10.0 * _SQRT2), 0.0],
])
_H2 = np.array([
    [0.0, 0.0, 0.0, 0.0],
    [9.0 / 20.0, -3.0 / (10.0 * _SQRT2), -1.0 / 20.0, 0.0],
])
_G2 = np.array([
    [9.0 / 20.0, -3.0 / (10.0 * _SQRT2), -1.0 / 20.0, 0.0],
    [9.0 / (10.0 * _SQRT2), -3.0 / 10.0, -1.0 / (10.0 * _SQRT2), 0.0],
])

# The bank's highpass annihilates (and its lowpass preserves, up to sqrt(2))
# only the vector direction [1, 1/sqrt(2)], so the default prefilter maps a
# constant scalar signal onto that direction; detail bands of constants then
# vanish as expected.
_DEFAULT_PREFILTER = np.array([[1.0, 0.0], [0.0, 1.0 / _SQRT2]])

BAND_CHANNELS = ("a1", "a2", "d1", "d2")
_LAYOUT_VERSION = 1


@dataclass(frozen=True)
class GhmFilterSet:
    """The four 2x4 kernel matrices plus the sample-pairing prefilter."""

    h1: np.ndarray = field(default_factory=lambda: _H1.copy())
    g1: np.ndarray = field(default_factory=lambda: _G1.copy())
    h2: np.ndarray = field(default_factory=lambda: _H2.copy())
    g2: np.ndarray = field(default_factory=lambda: _G2.copy())
    prefilter: np.ndarray = field(default_factory=lambda: _DEFAULT_PREFILTER.copy())

    def __post_init__(self):
        for attr in ("h1", "g1", "h2", "g2"):
            m = np.asarray(getattr(self, attr), dtype=np.float64)
            if m.shape != (2, 4):
                raise ValueError(f"{attr} must be a 2x4 matrix")
            m.setflags(write=False)
            object.__setattr__(self, attr, m)
        p = np.asarray(self.prefilter, dtype=np.float64)
        if p.shape != (2, 2):
            raise ValueError("prefilter must be a 2x2 matrix")
        if abs(np.linalg.det(p)) < 1e-12:
            raise ValueError("prefilter must be invertible")
        p.setflags(write=False)
        object.__setattr__(self, "prefilter", p)

    def blocks(self) -> tuple[np.ndarray, np.ndarray]:
        """(lowpass, highpass) as stacks of four 2x2 kernel blocks."""
        h = np.stack([self.h1[:, :2], self.h1[:, 2:],
                      self.h2[:, :2], self.h2[:, 2:]])
        g = np.stack([self.g1[:, :2], self.g1[:, 2:],
                      self.g2[:, :2], self.g2[:, 2:]])
        return h, g

    @property
    def cache_key(self) -> bytes:
        return b"".join(np.ascontiguousarray(m).tobytes() for m in
                        (self.h1, self.g1, self.h2, self.g2, self.prefilter))


@dataclass(frozen=True)
class GhmSubbands:
    """4x4 grid of subband planes plus the source dimensions.

    ``bands[i][j]``: column-transform channel ``i`` of row-transform channel
    ``j``; channels ordered [a1, a2, d1, d2].
    """

    bands: tuple[tuple[np.ndarray, ...], ...]
    src_height: int
    src_width: int

    def __post_init__(self):
        if len(self.bands) != 4 or any(len(row) != 4 for row in self.bands):
            raise ValueError("bands must form a 4x4 grid")
        shape = self.bands[0][0].shape
        for row in self.bands:
            for plane in row:
                if plane.shape != shape:
                    raise ValueError("subband dimensions are inconsistent")

    @property
    def band_height(self) -> int:
        return self.bands[0][0].shape[0]

    @property
    def band_width(self) -> int:
        return self.bands[0][0].shape[1]

    def planes(self):
        """All 16 planes in row-major grid order."""
        return [plane for row in self.bands for plane in row]

    def approximation_mask(self) -> np.ndarray:
        """Boolean 4x4 grid marking the approximation-type quadrant."""
        mask = np.zeros((4, 4), dtype=bool)
        mask[:2, :2] = True
        return mask


def ghm_prefilter(signal, filters: GhmFilterSet | None = None) -> np.ndarray:
    """Pair adjacent samples into 2-vectors: out[n] = P @ [x[2n], x[2n+1]]."""
    filters = filters or GhmFilterSet()
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("signal must be 1D and non-empty")
    if x.size % 2:
        raise ValueError("signal length must be even")
    return x.reshape(-1, 2) @ filters.prefilter.T


def ghm_postfilter(vectors, filters: GhmFilterSet | None = None) -> np.ndarray:
    """Exact inverse of :func:`ghm_prefilter`."""
    filters = filters or GhmFilterSet()
    v = np.asarray(vectors, dtype=np.float64)
    if v.ndim != 2 or v.shape[1] != 2:
        raise ValueError("expected an (n, 2) vector sequence")
    return (v @ np.linalg.inv(filters.prefilter).T).reshape(-1)


def _forward_rows(arr: np.ndarray, filters: GhmFilterSet) -> list[np.ndarray]:
    """Transform every row; returns the 4 channel planes, each width/4.

    Row length must divide 4.  Vector sequence v[m] = P [x[2m], x[2m+1]];
    channel outputs a[n] = sum_k Hk v[2n+k], d[n] = sum_k Gk v[2n+k] with
    periodic extension.
    """
    r, n = arr.shape
    v = arr.reshape(r, n // 2, 2) @ filters.prefilter.T   # (r, m, 2)
    m = n // 2
    ext = np.concatenate([v, v[:, :3, :]], axis=1)
    h, g = filters.blocks()
    a = np.zeros((r, m // 2, 2))
    d = np.zeros((r, m // 2, 2))
    for k in range(4):
        win = ext[:, k:k + m:2, :]
        a += win @ h[k].T
        d += win @ g[k].T
    return [a[:, :, 0], a[:, :, 1], d[:, :, 0], d[:, :, 1]]


_GHM_INVERSE_CACHE: dict[tuple[bytes, int], np.ndarray] = {}


def _row_inverse(filters: GhmFilterSet, n: int) -> np.ndarray:
    """Inverse of the length-n row analysis operator (channels stacked)."""
    key = (filters.cache_key, n)
    inv = _GHM_INVERSE_CACHE.get(key)
    if inv is None:
        op = np.concatenate(_forward_rows(np.eye(n), filters), axis=1).T
        inv = np.linalg.inv(op)
        _GHM_INVERSE_CACHE[key] = inv
    return inv


def _inverse_rows(channels: list[np.ndarray],
                  filters: GhmFilterSet) -> np.ndarray:
    coeffs = np.concatenate(channels, axis=1)
    inv = _row_inverse(filters, coeffs.shape[1])
    return coeffs @ inv.T


def ghm_decompose(plane, filters: GhmFilterSet | None = None) -> GhmSubbands:
    """Separable 16-band analysis of one plane (rows first, then columns)."""
    filters = filters or GhmFilterSet()
    from .grid import Image
    arr = plane.plane() if isinstance(plane, Image) else np.asarray(
        plane, dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2D plane")
    src_h, src_w = arr.shape
    arr = pad_to_even(arr, multiple=4)
    row_ch = _forward_rows(arr, filters)                    # 4 x (H, W/4)
    grid = []
    for j in range(4):
        col_ch = _forward_rows(row_ch[j].T, filters)        # 4 x (W/4, H/4)
        grid.append([c.T for c in col_ch])                  # col-channel i
    # grid[j][i] -> bands[i][j]
    bands = tuple(tuple(grid[j][i] for j in range(4)) for i in range(4))
    return GhmSubbands(bands=bands, src_height=src_h, src_width=src_w)


def ghm_reconstruct(subbands: GhmSubbands,
                    filters: GhmFilterSet | None = None) -> np.ndarray:
    """Exact inverse of :func:`ghm_decompose`, cropped to the source dims."""
    filters = filters or GhmFilterSet()
    row_ch = []
    for j in range(4):
        cols = [subbands.bands[i][j].T for i in range(4)]
        row_ch.append(_inverse_rows(cols, filters).T)
    plane = _inverse_rows(row_ch, filters)
    return plane[:subbands.src_height, :subbands.src_width]


# --- serialization: JSON header line + 16 float32 planes in grid order ---

def write_ghm_subbands(subbands: GhmSubbands, fp) -> None:
    header = {
        "transform": "ghm",
        "layout_version": _LAYOUT_VERSION,
        "channel_order": list(BAND_CHANNELS),
        "src_height": subbands.src_height,
        "src_width": subbands.src_width,
        "band_height": subbands.band_height,
        "band_width": subbands.band_width,
    }
    fp.write(json.dumps(header, sort_keys=True).encode() + b"\n")
    for plane in subbands.planes():
        fp.write(plane.astype("<f4").tobytes())


def read_ghm_subbands(fp) -> GhmSubbands:
    from .filterbank import _read_line
    header = json.loads(_read_line(fp))
    if header.get("transform") != "ghm":
        raise ValueError("not a 16-band multiwavelet file")
    if header.get("layout_version") != _LAYOUT_VERSION:
        raise ValueError("unsupported subband layout version")
    bh, bw = header["band_height"], header["band_width"]
    planes = []
    for _ in range(16):
        raw = fp.read(4 * bh * bw)
        if len(raw) != 4 * bh * bw:
            raise ValueError("truncated subband payload")
        planes.append(np.frombuffer(raw, dtype="<f4").reshape(bh, bw)
                      .astype(np.float64))
    bands = tuple(tuple(planes[4 * i + j] for j in range(4)) for i in range(4))
    return GhmSubbands(bands=bands, src_height=header["src_height"],
                       src_width=header["src_width"])
