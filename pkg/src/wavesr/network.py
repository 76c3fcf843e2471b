"""From-scratch residual CNN over wavelet subbands.

Tensors are plain numpy arrays shaped (batch, channels, height, width) in
double precision.  Convolutions are 3x3 with zero padding 1 (spatial dims
preserved).  The network predicts coefficient residuals which are added to
the corresponding input bands; training minimizes the squared error between
the corrected coefficients and the target coefficients, averaged over the
batch.  All randomness flows through a single seeded generator, so training
is bit-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import numpy as np

from .filterbank import FilterBank, SubbandSet, dwt2d, idwt2d
from .ghm import GhmFilterSet, GhmSubbands, ghm_decompose, ghm_reconstruct
from .grid import Image, bicubic_resize, chroma_planes, from_luma, to_luma

__all__ = [
    "AdamState",
    "ConvLayer",
    "Network",
    "adam_init",
    "adam_step",
    "bands_to_tensor",
    "conv_forward",
    "l2_loss",
    "load_model",
    "network_backward",
    "network_forward",
    "predict_sr",
    "save_model",
    "tensor_to_bands",
    "train",
]

_KSIZE = 3
_HIDDEN = 64
_DEPTH = 10
_MODEL_VERSION = 1


def _check_tensor(x: np.ndarray, name: str = "tensor") -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 4:
        raise ValueError(f"{name} must be 4D (batch, channels, height, width)")
    if not np.isfinite(x).all():
        raise ValueError(f"{name} contains non-finite values")
    return x


@dataclass(frozen=True)
class ConvLayer:
    """One 3x3 convolution with bias and an optional ReLU."""

    weights: np.ndarray  # (out_ch, in_ch, 3, 3)
    bias: np.ndarray     # (out_ch,)
    activation: str      # "relu" | "linear"

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        b = np.asarray(self.bias, dtype=np.float64)
        if w.ndim != 4 or w.shape[2:] != (_KSIZE, _KSIZE):
            raise ValueError("weights must be (out_ch, in_ch, 3, 3)")
        if b.shape != (w.shape[0],):
            raise ValueError("bias must be one value per output channel")
        if self.activation not in ("relu", "linear"):
            raise ValueError("activation must be 'relu' or 'linear'")
        w.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "bias", b)

    @property
    def in_channels(self) -> int:
        return self.weights.shape[1]

    @property
    def out_channels(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class Network:
    """Ordered stack of conv layers predicting band residuals."""

    layers: tuple

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise ValueError("network needs at least one layer")
        for prev, cur in zip(layers, layers[1:]):
            if cur.in_channels != prev.out_channels:
                raise ValueError("layer channel chaining is inconsistent")
        object.__setattr__(self, "layers", layers)

    @property
    def input_bands(self) -> int:
        return self.layers[0].in_channels

    @property
    def output_bands(self) -> int:
        return self.layers[-1].out_channels

    @classmethod
    def standard(cls, input_bands: int, output_bands: int,
                 seed: int = 0) -> "Network":
        """The 10-layer topology: 9 hidden ReLU layers of 64 filters plus a
        linear output layer, He-initialized from ``seed``."""
        rng = np.random.default_rng(seed)
        dims = [input_bands] + [_HIDDEN] * (_DEPTH - 1) + [output_bands]
        layers = []
        for i in range(_DEPTH):
            fan_in = dims[i] * _KSIZE * _KSIZE
            w = rng.standard_normal((dims[i + 1], dims[i], _KSIZE, _KSIZE))
            w *= np.sqrt(2.0 / fan_in)
            act = "relu" if i < _DEPTH - 1 else "linear"
            layers.append(ConvLayer(w, np.zeros(dims[i + 1]), act))
        return cls(tuple(layers))

    def parameters(self) -> list[np.ndarray]:
        out = []
        for layer in self.layers:
            out.append(layer.weights)
            out.append(layer.bias)
        return out

    def with_parameters(self, params: list[np.ndarray]) -> "Network":
        layers = []
        for i, layer in enumerate(self.layers):
            layers.append(ConvLayer(params[2 * i], params[2 * i + 1],
                                    layer.activation))
        return Network(tuple(layers))


def _windows(x: np.ndarray) -> np.ndarray:
    """Zero-padded 3x3 sliding windows: (B, C, H, W, 3, 3)."""
    padded = np.pad(x, ((0, 0), (0, 0), (1, 1), (1, 1)))
    return np.lib.stride_tricks.sliding_window_view(padded, (_KSIZE, _KSIZE),
                                                    axis=(2, 3))


def conv_forward(x, layer: ConvLayer) -> np.ndarray:
    """Same-size 3x3 correlation plus bias, then the layer activation."""
    x = _check_tensor(x, "input")
    if x.shape[1] != layer.in_channels:
        raise ValueError("input channel count does not match the layer")
    pre = np.einsum("bchwij,ocij->bohw", _windows(x), layer.weights,
                    optimize=True)
    pre += layer.bias[None, :, None, None]
    if layer.activation == "relu":
        return np.maximum(pre, 0.0)
    return pre


def network_forward(x, net: Network) -> np.ndarray:
    """Composition of all layers."""
    out, _ = _forward_cached(_check_tensor(x, "input"), net)
    return out


def _forward_cached(x: np.ndarray, net: Network):
    """Forward pass keeping each layer's input and post-activation output."""
    acts = [x]
    cur = x
    for layer in net.layers:
        cur = conv_forward(cur, layer)
        acts.append(cur)
    return cur, acts


def l2_loss(pred_residual, input_bands, target_bands) -> float:
    """Squared error between corrected and target coefficients, averaged
    over the batch dimension."""
    p = _check_tensor(pred_residual, "pred_residual")
    i = _check_tensor(input_bands, "input_bands")
    t = _check_tensor(target_bands, "target_bands")
    if not (p.shape == i.shape == t.shape):
        raise ValueError("residual/input/target shapes do not match")
    diff = t - (i + p)
    return float(np.sum(diff * diff) / p.shape[0])


def network_backward(net: Network, acts: list[np.ndarray],
                     grad_out: np.ndarray) -> list[np.ndarray]:
    """Exact gradients of a scalar loss w.r.t. every parameter.

    ``acts`` is the activation cache from :func:`_forward_cached`;
    ``grad_out`` is d(loss)/d(network output).  Returns gradients in
    ``Network.parameters()`` order.
    """
    if len(acts) != len(net.layers) + 1:
        raise ValueError("activation cache does not match the network")
    grads: list[np.ndarray] = []
    grad = np.asarray(grad_out, dtype=np.float64)
    for idx in range(len(net.layers) - 1, -1, -1):
        layer = net.layers[idx]
        x_in, x_out = acts[idx], acts[idx + 1]
        if layer.activation == "relu":
            grad = grad * (x_out > 0.0)
        gw = np.einsum("bohw,bchwij->ocij", grad, _windows(x_in),
                       optimize=True)
        gb = grad.sum(axis=(0, 2, 3))
        # gradient w.r.t. the layer input: correlate with flipped kernels
        flipped = layer.weights[:, :, ::-1, ::-1]
        grad = np.einsum("bohwij,ocij->bchw", _windows(grad), flipped,
                         optimize=True)
        grads.append(gb)
        grads.append(gw)
    grads.reverse()
    return grads


# ----------------------------------------------------------------------
# Adam
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AdamState:
    """Bias-corrected Adam accumulators for one parameter list."""

    step: int
    m: tuple
    v: tuple
    lr: float = 0.01
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8


def adam_init(params: list[np.ndarray], lr: float = 0.01, beta1: float = 0.9,
              beta2: float = 0.999, eps: float = 1e-8) -> AdamState:
    zeros = tuple(np.zeros_like(p) for p in params)
    return AdamState(step=0, m=zeros,
                     v=tuple(np.zeros_like(p) for p in params),
                     lr=lr, beta1=beta1, beta2=beta2, eps=eps)


def adam_step(params: list[np.ndarray], grads: list[np.ndarray],
              state: AdamState) -> tuple[list[np.ndarray], AdamState]:
    """One standard bias-corrected Adam update; pure (returns new state)."""
    if len(params) != len(grads) or len(params) != len(state.m):
        raise ValueError("parameter/gradient/state shapes do not match")
    t = state.step + 1
    b1, b2 = state.beta1, state.beta2
    new_p, new_m, new_v = [], [], []
    for p, g, m, v in zip(params, grads, state.m, state.v):
        if p.shape != g.shape:
            raise ValueError("parameter/gradient shapes do not match")
        m = b1 * m + (1.0 - b1) * g
        v = b2 * v + (1.0 - b2) * (g * g)
        m_hat = m / (1.0 - b1**t)
        v_hat = v / (1.0 - b2**t)
        new_p.append(p - state.lr * m_hat / (np.sqrt(v_hat) + state.eps))
        new_m.append(m)
        new_v.append(v)
    return new_p, replace(state, step=t, m=tuple(new_m), v=tuple(new_v))


# ----------------------------------------------------------------------
# training
# ----------------------------------------------------------------------

def _residual_indices(in_bands: int, out_bands: int) -> np.ndarray:
    """Default mapping from output channels to input band channels: the
    last ``out_bands`` input channels (detail bands follow the
    approximation bands in both band layouts)."""
    if out_bands > in_bands:
        raise ValueError("cannot predict more bands than the input carries")
    return np.arange(in_bands - out_bands, in_bands)


def train(net: Network, inputs, targets, epochs: int = 50,
          batch: int = 16, lr: float = 0.01, seed: int = 0,
          residual_idx=None) -> tuple[Network, list[float]]:
    """Mini-batch Adam training; returns the trained network and the
    per-epoch mean loss trace.

    ``inputs`` is (N, input_bands, H, W); ``targets`` is
    (N, output_bands, H, W) holding the target coefficients for the
    predicted channels.
    """
    x = _check_tensor(inputs, "inputs")
    y = _check_tensor(targets, "targets")
    if x.shape[0] == 0:
        raise ValueError("dataset is empty")
    if x.shape[0] != y.shape[0]:
        raise ValueError("inputs/targets counts do not match")
    if x.shape[1] != net.input_bands or y.shape[1] != net.output_bands:
        raise ValueError("dataset band layout does not match the network")
    idx = (np.asarray(residual_idx) if residual_idx is not None
           else _residual_indices(net.input_bands, net.output_bands))
    rng = np.random.default_rng(seed)
    params = net.parameters()
    state = adam_init(params, lr=lr)
    trace: list[float] = []
    n = x.shape[0]
    for _ in range(epochs):
        order = rng.permutation(n)
        epoch_loss = 0.0
        for start in range(0, n, batch):
            sel = order[start:start + batch]
            xb, yb = x[sel], y[sel]
            base = xb[:, idx]
            cur = net.with_parameters(params)
            pred, acts = _forward_cached(xb, cur)
            loss = l2_loss(pred, base, yb)
            grad_out = 2.0 * (base + pred - yb) / xb.shape[0]
            grads = network_backward(cur, acts, grad_out)
            params, state = adam_step(params, grads, state)
            epoch_loss += loss * len(sel)
        trace.append(epoch_loss / n)
    return net.with_parameters(params), trace


# ----------------------------------------------------------------------
# band packing and end-to-end inference
# ----------------------------------------------------------------------

def bands_to_tensor(bands) -> np.ndarray:
    """Stack subbands into a (channels, H, W) array.

    Single-level order: [ll, lh, hl, hh]; 16-band order: grid row-major.
    """
    if isinstance(bands, SubbandSet):
        return np.stack(bands.bands())
    if isinstance(bands, GhmSubbands):
        return np.stack(bands.planes())
    raise TypeError("expected a SubbandSet or GhmSubbands")


def tensor_to_bands(tensor: np.ndarray, template):
    """Inverse of :func:`bands_to_tensor`, reusing the template's dims."""
    t = np.asarray(tensor, dtype=np.float64)
    if isinstance(template, SubbandSet):
        if t.shape[0] != 4:
            raise ValueError("expected 4 channels for a single-level set")
        return SubbandSet(ll=t[0], lh=t[1], hl=t[2], hh=t[3],
                          wavelet=template.wavelet,
                          src_height=template.src_height,
                          src_width=template.src_width)
    if isinstance(template, GhmSubbands):
        if t.shape[0] != 16:
            raise ValueError("expected 16 channels for a multiwavelet set")
        grid = tuple(tuple(t[4 * i + j] for j in range(4)) for i in range(4))
        return GhmSubbands(bands=grid, src_height=template.src_height,
                           src_width=template.src_width)
    raise TypeError("expected a SubbandSet or GhmSubbands template")


def _decompose(plane: np.ndarray, transform):
    if isinstance(transform, FilterBank):
        return dwt2d(plane, transform)
    if isinstance(transform, GhmFilterSet):
        return ghm_decompose(plane, transform)
    raise TypeError("transform must be a FilterBank or GhmFilterSet")


def _reconstruct(bands, transform) -> np.ndarray:
    if isinstance(transform, FilterBank):
        return idwt2d(bands, transform)
    return ghm_reconstruct(bands, transform)


def predict_sr(lr_image: Image, net: Network, transform,
               scale: float = 2.0, residual_idx=None) -> Image:
    """Super-resolve one image: bicubic upscale, decompose, predict and add
    coefficient residuals, inverse transform, clamp.

    Color inputs are processed on luma; chroma is bicubic-upscaled and
    reattached.
    """
    up = bicubic_resize(lr_image, scale) if scale != 1.0 else lr_image
    if up.channels == 3:
        work = to_luma(up)
        chroma = chroma_planes(up)
    else:
        work, chroma = up, None
    peak = work.range
    bands = _decompose(work.plane() / peak, transform)
    tensor = bands_to_tensor(bands)
    expected = 4 if isinstance(transform, FilterBank) else 16
    if net.input_bands != expected or tensor.shape[0] != expected:
        raise ValueError("network band layout does not match the transform")
    residual = network_forward(tensor[None], net)[0]
    idx = (np.asarray(residual_idx) if residual_idx is not None
           else _residual_indices(net.input_bands, net.output_bands))
    corrected = tensor.copy()
    corrected[idx] += residual
    plane = _reconstruct(tensor_to_bands(corrected, bands), transform) * peak
    out = np.clip(plane, 0.0, peak)
    result = Image(out, range=peak)
    if chroma is not None:
        result = from_luma(result, chroma)
        result = Image(np.clip(result.data, 0.0, peak), range=peak)
    return result


# ----------------------------------------------------------------------
# model serialization: JSON manifest line + float32 parameter blob
# ----------------------------------------------------------------------

def save_model(net: Network, fp, transform_name: str = "",
               seed: int | None = None) -> None:
    manifest = {
        "version": _MODEL_VERSION,
        "transform": transform_name,
        "input_bands": net.input_bands,
        "output_bands": net.output_bands,
        "seed": seed,
        "layers": [
            {"out": l.out_channels, "in": l.in_channels,
             "activation": l.activation}
            for l in net.layers
        ],
    }
    fp.write(json.dumps(manifest, sort_keys=True).encode() + b"\n")
    for layer in net.layers:
        fp.write(layer.weights.astype("<f4").tobytes())
        fp.write(layer.bias.astype("<f4").tobytes())


def load_model(fp) -> tuple[Network, dict]:
    from .filterbank import _read_line
    manifest = json.loads(_read_line(fp))
    if manifest.get("version") != _MODEL_VERSION:
        raise ValueError("unsupported model version")
    layers = []
    for spec in manifest["layers"]:
        out_ch, in_ch = spec["out"], spec["in"]
        nw = out_ch * in_ch * _KSIZE * _KSIZE
        raw = fp.read(4 * nw)
        if len(raw) != 4 * nw:
            raise ValueError("truncated model payload")
        w = np.frombuffer(raw, dtype="<f4").reshape(out_ch, in_ch,
                                                    _KSIZE, _KSIZE)
        raw = fp.read(4 * out_ch)
        if len(raw) != 4 * out_ch:
            raise ValueError("truncated model payload")
        b = np.frombuffer(raw, dtype="<f4")
        layers.append(ConvLayer(w.astype(np.float64), b.astype(np.float64),
                                spec["activation"]))
    return Network(tuple(layers)), manifest
