"""Image container, convolution, resampling, and color primitives."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavesr.grid import (BoundaryMode, Image, Kernel2D, bicubic_resize,
                         chroma_planes, conv2d, dyadic_downsample,
                         dyadic_upsample, extend, from_luma, pad_to_even,
                         resize_to, to_luma)


def conv2d_oracle(plane, taps, mode, step):
    """Brute-force strided correlation with bottom/right extension."""
    h, w = plane.shape
    kr, kc = taps.shape
    out_h = -(-h // step)
    out_w = -(-w // step)
    pad_b = max(0, (out_h - 1) * step + kr - h)
    pad_r = max(0, (out_w - 1) * step + kc - w)
    pad_mode = {BoundaryMode.PERIODIC: "wrap", BoundaryMode.ZERO: "constant",
                BoundaryMode.SYMMETRIC: "symmetric"}[mode]
    ext = np.pad(plane, ((0, pad_b), (0, pad_r)), mode=pad_mode)
    out = np.zeros((out_h, out_w))
    for i in range(out_h):
        for j in range(out_w):
            acc = 0.0
            for a in range(kr):
                for b in range(kc):
                    acc += taps[a, b] * ext[i * step + a, j * step + b]
            out[i, j] = acc
    return out


class TestImage:
    def test_2d_input_gets_a_channel_axis(self):
        img = Image(np.zeros((4, 5)))
        assert img.data.shape == (4, 5, 1)
        assert (img.height, img.width, img.channels) == (4, 5, 1)

    def test_three_channels(self):
        img = Image(np.zeros((2, 3, 3)))
        assert img.channels == 3

    def test_plane_returns_one_channel(self):
        data = np.arange(24, dtype=float).reshape(2, 4, 3)
        img = Image(data)
        assert np.array_equal(img.plane(2), data[:, :, 2])

    @pytest.mark.parametrize("bad", [np.zeros((2, 2, 2)), np.zeros((0, 3)),
                                     np.zeros(5), np.zeros((1, 2, 3, 4))])
    def test_rejects_bad_shapes(self, bad):
        with pytest.raises(ValueError):
            Image(bad)

    def test_rejects_non_finite(self):
        data = np.zeros((3, 3))
        data[1, 1] = np.nan
        with pytest.raises(ValueError):
            Image(data)

    def test_default_range(self):
        assert Image(np.zeros((2, 2))).range == 255.0


class TestKernel2D:
    def test_1d_taps_promoted(self):
        assert Kernel2D(np.array([1.0, 2.0])).taps.shape == (1, 2)

    def test_rejects_empty_and_non_finite(self):
        with pytest.raises(ValueError):
            Kernel2D(np.zeros((0, 2)))
        with pytest.raises(ValueError):
            Kernel2D(np.array([[np.inf]]))


class TestConv2d:
    @pytest.mark.parametrize("mode", list(BoundaryMode))
    @pytest.mark.parametrize("step", [1, 2, 3])
    @pytest.mark.parametrize("kshape", [(1, 1), (2, 3), (3, 3), (5, 4)])
    def test_matches_loop_oracle(self, mode, step, kshape):
        rng = np.random.default_rng(hash((mode.value, step, kshape)) % 2**32)
        plane = rng.standard_normal((7, 9))
        taps = rng.standard_normal(kshape)
        got = conv2d(plane, Kernel2D(taps), mode=mode, step=step)
        want = conv2d_oracle(plane, taps, mode, step)
        assert got.shape == want.shape
        assert np.max(np.abs(got - want)) < 1e-12

    def test_identity_kernel(self):
        plane = np.arange(12, dtype=float).reshape(3, 4)
        out = conv2d(plane, Kernel2D(np.array([[1.0]])))
        assert np.array_equal(out, plane)

    def test_accepts_image_input(self):
        plane = np.arange(16, dtype=float).reshape(4, 4)
        out = conv2d(Image(plane), Kernel2D(np.array([[1.0]])))
        assert np.array_equal(out, plane)

    def test_output_shape_is_ceil_div(self):
        out = conv2d(np.zeros((5, 7)), Kernel2D(np.ones((3, 3))), step=2)
        assert out.shape == (3, 4)

    def test_rejects_bad_step(self):
        with pytest.raises(ValueError):
            conv2d(np.zeros((4, 4)), Kernel2D(np.ones((2, 2))), step=0)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**31 - 1))
    def test_linearity(self, seed):
        rng = np.random.default_rng(seed)
        x = rng.standard_normal((6, 6))
        y = rng.standard_normal((6, 6))
        k = Kernel2D(rng.standard_normal((3, 3)))
        lhs = conv2d(2.0 * x + y, k)
        rhs = 2.0 * conv2d(x, k) + conv2d(y, k)
        assert np.max(np.abs(lhs - rhs)) < 1e-10


class TestExtend:
    def test_symmetric_rejects_oversized_pad(self):
        with pytest.raises(ValueError, match="kernel exceeds extent"):
            extend(np.zeros((3, 3)), (4, 0, 0, 0), BoundaryMode.SYMMETRIC)

    def test_periodic_wraps(self):
        plane = np.array([[1.0, 2.0], [3.0, 4.0]])
        out = extend(plane, (0, 0, 0, 3), BoundaryMode.PERIODIC)
        assert np.array_equal(out[0], [1, 2, 1, 2, 1])

    def test_zero_pads_zeros(self):
        out = extend(np.ones((2, 2)), (1, 0, 0, 1), BoundaryMode.ZERO)
        assert out[0].sum() == 0.0 and out[1, 2] == 0.0


class TestDyadic:
    def test_down_then_up_keeps_even_samples(self):
        x = np.arange(24, dtype=float).reshape(4, 6)
        down = dyadic_downsample(x, axis=1)
        up = dyadic_upsample(down, axis=1)
        assert np.array_equal(up[:, ::2], x[:, ::2])
        assert np.all(up[:, 1::2] == 0.0)

    def test_rows_axis(self):
        x = np.arange(8, dtype=float).reshape(4, 2)
        assert np.array_equal(dyadic_downsample(x, axis=0), x[::2])

    def test_odd_extent_rejected(self):
        with pytest.raises(ValueError):
            dyadic_downsample(np.zeros((3, 4)), axis=0)


class TestPadToEven:
    @pytest.mark.parametrize("shape,multiple,expected", [
        ((4, 4), 2, (4, 4)),
        ((5, 4), 2, (6, 4)),
        ((5, 7), 4, (8, 8)),
        ((3, 3), 4, (4, 4)),
    ])
    def test_shapes(self, shape, multiple, expected):
        out = pad_to_even(np.ones(shape), multiple)
        assert out.shape == expected

    def test_padding_mirrors_the_border(self):
        x = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]])
        out = pad_to_even(x)
        assert np.array_equal(out[3], x[2])  # symmetric: last row repeats


class TestResize:
    def test_constant_image_stays_constant(self):
        img = Image(np.full((8, 8), 42.0))
        for factor in (0.5, 1.5, 2.0, 3.0):
            out = bicubic_resize(img, factor)
            assert np.max(np.abs(out.data - 42.0)) < 1e-12

    def test_factor_one_is_identity(self):
        plane = np.random.default_rng(0).uniform(0, 255, (9, 7))
        out = bicubic_resize(Image(plane), 1.0)
        assert np.max(np.abs(out.plane() - plane)) < 1e-12

    def test_output_dimensions(self):
        out = bicubic_resize(Image(np.zeros((10, 6))), 2.0)
        assert (out.height, out.width) == (20, 12)
        out = bicubic_resize(Image(np.zeros((10, 6))), 0.5)
        assert (out.height, out.width) == (5, 3)

    def test_linear_ramp_reproduced_in_the_interior(self):
        # the Catmull-Rom kernel reproduces degree-1 polynomials exactly
        x = np.tile(np.arange(16, dtype=float), (16, 1))
        out = bicubic_resize(Image(x), 2.0).plane()
        expected = (np.arange(32) + 0.5) / 2.0 - 0.5
        assert np.max(np.abs(out[8, 4:-4] - expected[4:-4])) < 1e-10

    def test_rejects_non_positive_factor(self):
        with pytest.raises(ValueError):
            bicubic_resize(Image(np.zeros((4, 4))), 0.0)

    def test_resize_to_exact_dims(self):
        out = resize_to(Image(np.zeros((7, 5))), 13, 4)
        assert (out.height, out.width) == (13, 4)

    def test_preserves_signal_range(self):
        img = Image(np.zeros((4, 4)), range=1.0)
        assert bicubic_resize(img, 2.0).range == 1.0


class TestColor:
    def test_luma_weights(self):
        rgb = np.zeros((1, 1, 3))
        rgb[0, 0] = [100.0, 200.0, 50.0]
        y = to_luma(Image(rgb)).plane()[0, 0]
        assert abs(y - (0.299 * 100 + 0.587 * 200 + 0.114 * 50)) < 1e-12

    def test_luma_chroma_roundtrip(self):
        rng = np.random.default_rng(3)
        img = Image(rng.uniform(0, 255, (6, 5, 3)))
        back = from_luma(to_luma(img), chroma_planes(img))
        assert np.max(np.abs(back.data - img.data)) < 1e-9

    def test_to_luma_requires_color(self):
        with pytest.raises(ValueError):
            to_luma(Image(np.zeros((2, 2))))

    def test_from_luma_requires_single_channel(self):
        with pytest.raises(ValueError):
            from_luma(Image(np.zeros((2, 2, 3))),
                      (np.zeros((2, 2)), np.zeros((2, 2))))

    def test_from_luma_checks_chroma_dims(self):
        with pytest.raises(ValueError):
            from_luma(Image(np.zeros((2, 2))),
                      (np.zeros((3, 3)), np.zeros((3, 3))))
