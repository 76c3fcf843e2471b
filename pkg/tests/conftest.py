"""Shared fixtures: deterministic synthetic images and on-disk toy datasets."""

import numpy as np
import pytest

from wavesr.grid import Image
from wavesr.pipeline import save_image


def textured_plane(h, w, seed=0):
    """A deterministic 'natural-looking' plane in [0, 255]: smooth shading,
    oriented edges, and a little noise."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:h, 0:w].astype(np.float64)
    base = (120.0
            + 50.0 * np.sin(xx / 5.0) * np.cos(yy / 7.0)
            + 30.0 * np.sin((xx + 2.0 * yy) / 4.0)
            + 20.0 * np.sign(np.sin(xx / 9.0) + np.cos(yy / 11.0)))
    base += rng.normal(0.0, 2.0, size=(h, w))
    return np.clip(base, 0.0, 255.0)


def sharp_plane(h, w, seed=0):
    """Edge-rich plane used for the desk-scale training probes."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:h, 0:w].astype(np.float64)
    base = (120.0
            + 50.0 * np.sin(xx / 3.0) * np.cos(yy / 4.0)
            + 30.0 * np.sin((xx + 2.0 * yy) / 2.5)
            + 25.0 * np.sign(np.sin(xx / 5.0) + np.cos(yy / 7.0)))
    base += rng.normal(0.0, 2.0, size=(h, w))
    return np.clip(base, 0.0, 255.0)


def smooth_plane(h, w, seed=0):
    """Low-frequency plane where bicubic degradation is mild."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:h, 0:w].astype(np.float64)
    base = (128.0
            + 55.0 * np.sin(xx / 6.0) * np.cos(yy / 9.0)
            + 25.0 * np.sin((xx + 2.0 * yy) / 4.5)
            + 20.0 * np.cos(xx * yy / 400.0))
    base += rng.normal(0.0, 1.5, size=(h, w))
    return np.clip(base, 0.0, 255.0)


def _write_dataset(root, planes):
    root.mkdir(parents=True, exist_ok=True)
    for i, plane in enumerate(planes):
        save_image(Image(plane), root / f"t{i:02d}.png")
    return root


@pytest.fixture(scope="session")
def natural96():
    """One 96x96 textured plane, quantized like a file-loaded image."""
    return np.rint(textured_plane(96, 96, seed=7))


@pytest.fixture(scope="session")
def sharp32_dir(tmp_path_factory):
    """10 sharp 32x32 training/eval images on disk."""
    root = tmp_path_factory.mktemp("sharp32")
    return _write_dataset(root, [sharp_plane(32, 32, seed=s)
                                 for s in range(10)])


@pytest.fixture(scope="session")
def smooth16_dir(tmp_path_factory):
    """10 smooth 16x16 training/eval images on disk."""
    root = tmp_path_factory.mktemp("smooth16")
    return _write_dataset(root, [smooth_plane(16, 16, seed=s)
                                 for s in range(10)])


@pytest.fixture(scope="session")
def smooth32_dir(tmp_path_factory):
    """10 smooth 32x32 training/eval images on disk."""
    root = tmp_path_factory.mktemp("smooth32")
    return _write_dataset(root, [smooth_plane(32, 32, seed=s)
                                 for s in range(10)])
