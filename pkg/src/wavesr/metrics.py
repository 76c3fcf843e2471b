"""Full-reference image quality measures.

Seven reportable measures: psnr, ssim (mean SSIM), fsim, gsm, mad, srsim,
vif; plus mse as a building block.  Color images are scored on their BT.601
luma plane, except mse/psnr which average over whatever channels they are
given.  Every public function accepts :class:`~wavesr.grid.Image` instances
or bare 2D arrays (bare arrays assume a 255 signal range).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import gaussian_filter, uniform_filter

from .grid import Image, to_luma

__all__ = [
    "DEFAULT_METRICS",
    "IqaScore",
    "METRICS",
    "SsimParams",
    "compute_metric",
    "fsim",
    "gsm",
    "mad",
    "mad_blend",
    "mse",
    "mssim",
    "psnr",
    "srsim",
    "ssim_window",
    "vif",
]


@dataclass(frozen=True)
class IqaScore:
    """One measured quality value and its orientation."""

    metric: str
    value: float
    higher_is_better: bool


def _as_image(x) -> Image:
    return x if isinstance(x, Image) else Image(np.asarray(x, dtype=np.float64))


def _check_dims(x: Image, xhat: Image) -> None:
    if x.data.shape != xhat.data.shape:
        raise ValueError("image dimensions/channels do not match")


def _luma_pair(x, xhat) -> tuple[np.ndarray, np.ndarray, float]:
    """Validated (plane, plane, peak) on luma for multi-channel inputs."""
    a, b = _as_image(x), _as_image(xhat)
    _check_dims(a, b)
    if a.channels == 3:
        a, b = to_luma(a), to_luma(b)
    return a.plane(), b.plane(), a.range


# ----------------------------------------------------------------------
# mse / psnr
# ----------------------------------------------------------------------

def mse(x, xhat) -> float:
    """Mean squared error over all pixels and channels.

    Accumulated with correctly-rounded summation so the value is independent
    of traversal order.
    """
    a, b = _as_image(x), _as_image(xhat)
    _check_dims(a, b)
    diff = a.data - b.data
    diff2 = diff * diff
    return math.fsum(diff2.ravel()) / diff2.size


def psnr(x, xhat) -> float:
    """Peak signal-to-noise ratio in dB; +inf sentinel for identical inputs."""
    err = mse(x, xhat)
    peak = _as_image(x).range
    if err == 0.0:
        return math.inf
    return float(10.0 * np.log10(peak * peak / err))


# ----------------------------------------------------------------------
# SSIM
# ----------------------------------------------------------------------

def _gaussian_window(size: int, sigma: float) -> np.ndarray:
    r = np.arange(size) - (size - 1) / 2.0
    g = np.exp(-(r * r) / (2.0 * sigma * sigma))
    w = np.outer(g, g)
    return w / w.sum()


@dataclass(frozen=True)
class SsimParams:
    """Window weights and the two stabilizing constants of the SSIM score."""

    window: np.ndarray
    alpha: float
    beta: float

    def __post_init__(self):
        w = np.asarray(self.window, dtype=np.float64)
        if w.ndim != 2 or w.size == 0 or w.sum() <= 0:
            raise ValueError("window must be a non-empty 2D weight mask")
        w = w / w.sum()
        w.setflags(write=False)
        object.__setattr__(self, "window", w)
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("stabilizers must be positive")

    @classmethod
    def default(cls, peak: float = 255.0, size: int = 11, sigma: float = 1.5,
                k1: float = 0.01, k2: float = 0.03) -> "SsimParams":
        return cls(window=_gaussian_window(size, sigma),
                   alpha=(k1 * peak) ** 2, beta=(k2 * peak) ** 2)


def ssim_window(x, xhat, params: SsimParams) -> float:
    """SSIM of one window pair using the weighted moments of ``params``."""
    a = np.asarray(x, dtype=np.float64)
    b = np.asarray(xhat, dtype=np.float64)
    w = params.window
    if a.shape != w.shape or b.shape != w.shape:
        raise ValueError("window dimensions do not match the weight mask")
    mu_a = float((w * a).sum())
    mu_b = float((w * b).sum())
    var_a = float((w * (a - mu_a) ** 2).sum())
    var_b = float((w * (b - mu_b) ** 2).sum())
    cov = float((w * (a - mu_a) * (b - mu_b)).sum())
    al, be = params.alpha, params.beta
    return ((2 * mu_a * mu_b + al) * (2 * cov + be) /
            ((mu_a**2 + mu_b**2 + al) * (var_a + var_b + be)))


def mssim(x, xhat, params: SsimParams | None = None) -> float:
    """Mean SSIM over every (valid) sliding window position."""
    a, b, peak = _luma_pair(x, xhat)
    p = params or SsimParams.default(peak)
    wh, ww = p.window.shape
    if a.shape[0] < wh or a.shape[1] < ww:
        raise ValueError("image smaller than the SSIM window")
    w = p.window
    wins_a = np.lib.stride_tricks.sliding_window_view(a, (wh, ww))
    wins_b = np.lib.stride_tricks.sliding_window_view(b, (wh, ww))
    mu_a = np.einsum("hwij,ij->hw", wins_a, w)
    mu_b = np.einsum("hwij,ij->hw", wins_b, w)
    m2_a = np.einsum("hwij,ij->hw", wins_a * wins_a, w)
    m2_b = np.einsum("hwij,ij->hw", wins_b * wins_b, w)
    m_ab = np.einsum("hwij,ij->hw", wins_a * wins_b, w)
    var_a = m2_a - mu_a**2
    var_b = m2_b - mu_b**2
    cov = m_ab - mu_a * mu_b
    al, be = p.alpha, p.beta
    scores = ((2 * mu_a * mu_b + al) * (2 * cov + be) /
              ((mu_a**2 + mu_b**2 + al) * (var_a + var_b + be)))
    return float(scores.mean())


# ----------------------------------------------------------------------
# GSM
# ----------------------------------------------------------------------

_GSM_KERNELS = [np.array(k, dtype=np.float64) for k in (
    [[0, 0, 0, 0, 0],
     [1, 3, 8, 3, 1],
     [0, 0, 0, 0, 0],
     [-1, -3, -8, -3, -1],
     [0, 0, 0, 0, 0]],
    [[0, 0, 1, 0, 0],
     [0, 8, 3, 0, 0],
     [1, 3, 0, -3, -1],
     [0, 0, -3, -8, 0],
     [0, 0, -1, 0, 0]],
    [[0, 0, 1, 0, 0],
     [0, 0, 3, 8, 0],
     [-1, -3, 0, 3, 1],
     [0, -8, -3, 0, 0],
     [0, 0, -1, 0, 0]],
    [[0, 1, 0, -1, 0],
     [0, 3, 0, -3, 0],
     [0, 8, 0, -8, 0],
     [0, 3, 0, -3, 0],
     [0, 1, 0, -1, 0]],
)]


def _gsm_gradient(plane: np.ndarray) -> np.ndarray:
    """Per-pixel gradient value: max over kernels of mean(|window * k|)."""
    ext = np.pad(plane, 2, mode="symmetric")
    wins = np.lib.stride_tricks.sliding_window_view(ext, (5, 5))
    g = None
    for k in _GSM_KERNELS:
        resp = np.abs(wins * k).mean(axis=(2, 3))
        g = resp if g is None else np.maximum(g, resp)
    return g


def gsm(x, xhat) -> float:
    """Gradient-similarity score, mean-pooled over pixels."""
    a, b, peak = _luma_pair(x, xhat)
    if min(a.shape) < 5:
        raise ValueError("image too small for the 5x5 gradient kernels")
    ga = _gsm_gradient(a)
    gb = _gsm_gradient(b)
    top = np.maximum(np.maximum(ga, gb), 1e-12)
    d = np.abs(ga - gb) / top
    c = 1e-4 * peak * peak
    scores = (2.0 * (1.0 - d) + c) / (1.0 + (1.0 - d) ** 2 + c)
    return float(scores.mean())


# ----------------------------------------------------------------------
# log-Gabor filter bank (shared by fsim, srsim weighting, mad)
# ----------------------------------------------------------------------

_BANK_CACHE: dict[tuple, list[list[np.ndarray]]] = {}


def _loggabor_bank(shape: tuple[int, int], nscale: int = 4, norient: int = 4,
                   min_wavelength: float = 6.0, mult: float = 2.0,
                   sigma_onf: float = 0.55) -> list[list[np.ndarray]]:
    """Frequency-domain log-Gabor filters, indexed [scale][orientation]."""
    key = (shape, nscale, norient, min_wavelength, mult, sigma_onf)
    bank = _BANK_CACHE.get(key)
    if bank is not None:
        return bank
    h, w = shape
    fy = np.fft.fftfreq(h)[:, None]
    fx = np.fft.fftfreq(w)[None, :]
    radius = np.sqrt(fx * fx + fy * fy)
    radius[0, 0] = 1.0
    theta = np.arctan2(-fy, fx)
    sin_t, cos_t = np.sin(theta), np.cos(theta)
    sigma_theta = (np.pi / norient) / 1.2
    bank = []
    log_sig2 = 2.0 * np.log(sigma_onf) ** 2
    for s in range(nscale):
        f0 = 1.0 / (min_wavelength * mult**s)
        radial = np.exp(-(np.log(radius / f0)) ** 2 / log_sig2)
        radial[0, 0] = 0.0
        row = []
        for o in range(norient):
            angle = o * np.pi / norient
            ds = sin_t * np.cos(angle) - cos_t * np.sin(angle)
            dc = cos_t * np.cos(angle) + sin_t * np.sin(angle)
            dtheta = np.abs(np.arctan2(ds, dc))
            spread = np.exp(-(dtheta**2) / (2.0 * sigma_theta**2))
            row.append(radial * spread)
        bank.append(row)
    _BANK_CACHE[key] = bank
    return bank


def _gabor_responses(plane: np.ndarray) -> list[list[np.ndarray]]:
    """Complex spatial responses (even = real, odd = imag) per filter."""
    f = np.fft.fft2(plane)
    bank = _loggabor_bank(plane.shape)
    return [[np.fft.ifft2(f * filt) for filt in row] for row in bank]


def _phase_congruency(plane: np.ndarray) -> np.ndarray:
    """Simplified phase-congruency map in [0, 1]."""
    resp = _gabor_responses(plane)
    norient = len(resp[0])
    energy_total = np.zeros(plane.shape)
    amp_total = np.zeros(plane.shape)
    for o in range(norient):
        sum_e = np.zeros(plane.shape)
        sum_o = np.zeros(plane.shape)
        for row in resp:
            sum_e += row[o].real
            sum_o += row[o].imag
            amp_total += np.abs(row[o])
        energy_total += np.sqrt(sum_e**2 + sum_o**2)
    return energy_total / (amp_total + 1e-8)


# ----------------------------------------------------------------------
# FSIM
# ----------------------------------------------------------------------

_SCHARR_X = np.array([[3.0, 0.0, -3.0],
                      [10.0, 0.0, -10.0],
                      [3.0, 0.0, -3.0]]) / 16.0
_SCHARR_Y = _SCHARR_X.T


def _gradient_magnitude(plane: np.ndarray) -> np.ndarray:
    ext = np.pad(plane, 1, mode="symmetric")
    wins = np.lib.stride_tricks.sliding_window_view(ext, (3, 3))
    gx = np.einsum("hwij,ij->hw", wins, _SCHARR_X)
    gy = np.einsum("hwij,ij->hw", wins, _SCHARR_Y)
    return np.sqrt(gx * gx + gy * gy)


def fsim(x, xhat) -> float:
    """Feature similarity: phase-congruency and gradient similarity pooled
    with the per-pixel maximum phase congruency as weight."""
    a, b, peak = _luma_pair(x, xhat)
    if min(a.shape) < 8:
        raise ValueError("image too small for the log-Gabor filter bank")
    pc1 = _phase_congruency(a)
    pc2 = _phase_congruency(b)
    g1 = _gradient_magnitude(a)
    g2 = _gradient_magnitude(b)
    t1 = 0.85
    t2 = 160.0 * (peak / 255.0) ** 2
    s_pc = (2 * pc1 * pc2 + t1) / (pc1**2 + pc2**2 + t1)
    s_g = (2 * g1 * g2 + t2) / (g1**2 + g2**2 + t2)
    weight = np.maximum(pc1, pc2)
    denom = float(weight.sum())
    if denom < 1e-12:
        return float((s_pc * s_g).mean())
    return float((s_pc * s_g * weight).sum() / denom)


# ----------------------------------------------------------------------
# SR-SIM
# ----------------------------------------------------------------------

def _spectral_saliency(plane: np.ndarray) -> np.ndarray:
    """Spectral-residual visual saliency map (Gaussian-smoothed)."""
    if np.ptp(plane) == 0.0:
        return np.full(plane.shape, 1.0 / plane.size)
    f = np.fft.fft2(plane)
    amp = np.abs(f) + 1e-12
    log_amp = np.log(amp)
    resid = log_amp - uniform_filter(log_amp, size=3, mode="wrap")
    sal = np.abs(np.fft.ifft2(np.exp(resid) * f / amp)) ** 2
    return gaussian_filter(sal, sigma=2.5, mode="nearest")


def srsim(x, xhat) -> float:
    """Spectral-residual similarity, saliency-weighted pooling."""
    a, b, peak = _luma_pair(x, xhat)
    if min(a.shape) < 8:
        raise ValueError("image too small for the saliency computation")
    v1 = _spectral_saliency(a)
    v2 = _spectral_saliency(b)
    g1 = _gradient_magnitude(a)
    g2 = _gradient_magnitude(b)
    c1 = 0.40
    c2 = 225.0 * (peak / 255.0) ** 2
    s_v = (2 * v1 * v2 + c1) / (v1**2 + v2**2 + c1)
    s_g = (2 * g1 * g2 + c2) / (g1**2 + g2**2 + c2)
    scores = s_v * np.sqrt(np.maximum(s_g, 0.0))
    weight = np.maximum(v1, v2)
    denom = float(weight.sum())
    if denom < 1e-12:
        return float(scores.mean())
    return float((scores * weight).sum() / denom)


# ----------------------------------------------------------------------
# MAD
# ----------------------------------------------------------------------

def mad_blend(d_lum: float, d_gabor: float, gamma: float) -> float:
    """Blend the two distortion estimates: d_lum^gamma * d_gabor^(1-gamma)."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError("gamma must lie in [0, 1]")
    if d_lum < 0 or d_gabor < 0:
        raise ValueError("distortion estimates must be non-negative")
    return float(d_lum**gamma * d_gabor ** (1.0 - gamma))


def mad(x, xhat, gamma: float | None = None) -> float:
    """Most-apparent-distortion estimate (0 for identical inputs; higher
    means more distortion).

    ``gamma`` overrides the adaptive blend, which otherwise weights the
    luminance term more as the images get closer (high-quality regime).
    """
    a, b, peak = _luma_pair(x, xhat)
    if min(a.shape) < 8:
        raise ValueError("image too small for the log-Gabor filter bank")
    # visible-distortion map on perceived (gamma-decoded) luminance
    pa = np.power(np.maximum(a, 0.0) / peak, 2.2)
    pb = np.power(np.maximum(b, 0.0) / peak, 2.2)
    local_mse = uniform_filter((pa - pb) ** 2, size=8, mode="nearest")
    d_lum = 100.0 * float(np.sqrt(local_mse.mean()))
    # filter-response differences across the log-Gabor bank
    ra = _gabor_responses(a / peak)
    rb = _gabor_responses(b / peak)
    acc = 0.0
    count = 0
    for row_a, row_b in zip(ra, rb):
        for fa, fb in zip(row_a, row_b):
            acc += float(np.mean((np.abs(fa) - np.abs(fb)) ** 2))
            count += 1
    d_gabor = 100.0 * math.sqrt(acc / count)
    if gamma is None:
        gamma = 1.0 / (1.0 + 0.467 * d_lum**0.130)
    return mad_blend(d_lum, d_gabor, gamma)


# ----------------------------------------------------------------------
# VIF (pixel-domain, multi-scale)
# ----------------------------------------------------------------------

def vif(x, xhat, nscale: int = 4) -> float:
    """Pixel-domain visual information fidelity.

    Identical inputs score exactly 1; a zero-variance (constant) reference
    is an error unless the inputs are identical.
    """
    a, b, peak = _luma_pair(x, xhat)
    if np.array_equal(a, b):
        return 1.0
    if np.ptp(a) == 0.0:
        raise ValueError("zero-variance reference")
    sigma_nsq = 2.0 * (peak / 255.0) ** 2
    num = 0.0
    den = 0.0
    ra, rb = a, b
    for scale in range(1, nscale + 1):
        n = 2 ** (nscale - scale + 1) + 1
        sd = n / 5.0
        if scale > 1:
            ra = gaussian_filter(ra, sd, mode="nearest")[::2, ::2]
            rb = gaussian_filter(rb, sd, mode="nearest")[::2, ::2]
        mu1 = gaussian_filter(ra, sd, mode="nearest")
        mu2 = gaussian_filter(rb, sd, mode="nearest")
        var1 = gaussian_filter(ra * ra, sd, mode="nearest") - mu1**2
        var2 = gaussian_filter(rb * rb, sd, mode="nearest") - mu2**2
        cov = gaussian_filter(ra * rb, sd, mode="nearest") - mu1 * mu2
        var1 = np.maximum(var1, 0.0)
        var2 = np.maximum(var2, 0.0)
        g = cov / (var1 + 1e-10)
        sv2 = var2 - g * cov
        g = np.where(var1 < 1e-10, 0.0, g)
        sv2 = np.where(var1 < 1e-10, var2, sv2)
        sv2 = np.maximum(sv2, 1e-10)
        num += float(np.log10(1.0 + g * g * var1 / (sv2 + sigma_nsq)).sum())
        den += float(np.log10(1.0 + var1 / sigma_nsq).sum())
    if den == 0.0:
        raise ValueError("zero-variance reference")
    return num / den


# ----------------------------------------------------------------------
# registry
# ----------------------------------------------------------------------

METRICS: dict[str, tuple] = {
    "mse": (mse, False),
    "psnr": (psnr, True),
    "ssim": (mssim, True),
    "fsim": (fsim, True),
    "gsm": (gsm, True),
    "mad": (mad, False),
    "srsim": (srsim, True),
    "vif": (vif, True),
}

# the seven reported table columns
DEFAULT_METRICS = ["psnr", "ssim", "fsim", "gsm", "mad", "srsim", "vif"]


def compute_metric(name: str, ref, test) -> IqaScore:
    """Score one image pair under a named measure."""
    try:
        fn, higher = METRICS[name]
    except KeyError:
        valid = ", ".join(sorted(METRICS))
        raise KeyError(f"unknown metric {name!r}; valid names: {valid}") from None
    return IqaScore(metric=name, value=float(fn(ref, test)),
                    higher_is_better=higher)
