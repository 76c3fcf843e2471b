"""Wavelet-domain single-image super resolution toolkit.

Subpackages/modules:

- :mod:`wavesr.grid` — image containers, convolution, resizing, color.
- :mod:`wavesr.filterbank` — single-level 1D/2D DWT and its inverse.
- :mod:`wavesr.families` — the registry of named filter banks.
- :mod:`wavesr.ghm` — the 16-band multiplicity-2 multiwavelet transform.
- :mod:`wavesr.metrics` — seven full-reference quality measures.
- :mod:`wavesr.network` — from-scratch residual CNN, Adam, inference.
- :mod:`wavesr.pipeline` — datasets, degradation, reports, the sweep.
- :mod:`wavesr.cli` — the ``wavesr`` command-line entry point.
"""

from .families import get_wavelet, list_wavelets, verify_filterbank
from .filterbank import FilterBank, SubbandSet, dwt1d, dwt2d, idwt1d, idwt2d
from .ghm import (GhmFilterSet, GhmSubbands, ghm_decompose, ghm_postfilter,
                  ghm_prefilter, ghm_reconstruct)
from .grid import BoundaryMode, Image, Kernel2D, bicubic_resize, conv2d
from .metrics import (DEFAULT_METRICS, IqaScore, SsimParams, compute_metric,
                      fsim, gsm, mad, mse, mssim, psnr, srsim, ssim_window,
                      vif)
from .network import (AdamState, ConvLayer, Network, adam_step, conv_forward,
                      l2_loss, load_model, network_forward, predict_sr,
                      save_model, train)
from .pipeline import (DatasetSpec, IqaReport, evaluate_dataset,
                       extract_patches, load_image, make_lr_pair, save_image,
                       sweep_wavelets)

__version__ = "0.1.0"

__all__ = [
    "AdamState", "BoundaryMode", "ConvLayer", "DEFAULT_METRICS",
    "DatasetSpec", "FilterBank", "GhmFilterSet", "GhmSubbands", "Image",
    "IqaReport", "IqaScore", "Kernel2D", "Network", "SsimParams",
    "SubbandSet", "adam_step", "bicubic_resize", "compute_metric",
    "conv2d", "conv_forward", "dwt1d", "dwt2d", "evaluate_dataset",
    "extract_patches", "fsim", "get_wavelet", "ghm_decompose",
    "ghm_postfilter", "ghm_prefilter", "ghm_reconstruct", "gsm", "idwt1d",
    "idwt2d", "l2_loss", "list_wavelets", "load_image", "load_model",
    "mad", "make_lr_pair", "mse", "mssim", "network_forward", "predict_sr",
    "psnr", "save_image", "save_model", "srsim", "ssim_window",
    "sweep_wavelets", "train", "verify_filterbank", "vif",
]
