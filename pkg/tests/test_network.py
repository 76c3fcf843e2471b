"""Residual CNN: convolution, backprop, Adam, training, and inference."""

import io

import numpy as np
import pytest

from wavesr.families import get_wavelet
from wavesr.ghm import GhmFilterSet, ghm_decompose
from wavesr.filterbank import dwt2d
from wavesr.grid import Image, bicubic_resize
from wavesr.network import (AdamState, ConvLayer, Network, adam_init,
                            adam_step, bands_to_tensor, conv_forward,
                            l2_loss, load_model, network_backward,
                            network_forward, predict_sr, save_model,
                            tensor_to_bands, train, _forward_cached,
                            _residual_indices)
from tests.conftest import sharp_plane


def conv_forward_oracle(x, layer):
    """Direct 6-loop 3x3 zero-padded correlation."""
    b, c, h, w = x.shape
    oc = layer.out_channels
    padded = np.zeros((b, c, h + 2, w + 2))
    padded[:, :, 1:-1, 1:-1] = x
    out = np.zeros((b, oc, h, w))
    for n in range(b):
        for o in range(oc):
            for i in range(h):
                for j in range(w):
                    acc = layer.bias[o]
                    for ci in range(c):
                        for a in range(3):
                            for bb in range(3):
                                acc += (layer.weights[o, ci, a, bb] *
                                        padded[n, ci, i + a, j + bb])
                    out[n, o, i, j] = acc
    if layer.activation == "relu":
        out = np.maximum(out, 0.0)
    return out


def toy_net(seed=0):
    rng = np.random.default_rng(seed)
    dims = [(5, 2), (4, 5), (2, 4)]
    layers = []
    for i, (oc, ic) in enumerate(dims):
        act = "linear" if i == len(dims) - 1 else "relu"
        layers.append(ConvLayer(0.3 * rng.standard_normal((oc, ic, 3, 3)),
                                0.1 * rng.standard_normal(oc), act))
    return Network(tuple(layers))


def loss_and_grads(net, x, y):
    idx = _residual_indices(net.input_bands, net.output_bands)
    base = x[:, idx]
    pred, acts = _forward_cached(x, net)
    loss = l2_loss(pred, base, y)
    grad_out = 2.0 * (base + pred - y) / x.shape[0]
    return loss, network_backward(net, acts, grad_out)


class TestConvLayer:
    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            ConvLayer(np.zeros((2, 3, 5, 5)), np.zeros(2), "relu")
        with pytest.raises(ValueError):
            ConvLayer(np.zeros((2, 3, 3, 3)), np.zeros(3), "relu")
        with pytest.raises(ValueError):
            ConvLayer(np.zeros((2, 3, 3, 3)), np.zeros(2), "tanh")

    def test_channel_properties(self):
        layer = ConvLayer(np.zeros((6, 3, 3, 3)), np.zeros(6), "linear")
        assert (layer.in_channels, layer.out_channels) == (3, 6)


class TestNetwork:
    def test_standard_topology(self):
        net = Network.standard(4, 3, seed=0)
        assert len(net.layers) == 10
        assert net.input_bands == 4 and net.output_bands == 3
        assert all(l.out_channels == 64 for l in net.layers[:-1])
        assert all(l.activation == "relu" for l in net.layers[:-1])
        assert net.layers[-1].activation == "linear"
        assert all(np.all(l.bias == 0.0) for l in net.layers)

    def test_init_is_seeded(self):
        a = Network.standard(4, 3, seed=5)
        b = Network.standard(4, 3, seed=5)
        c = Network.standard(4, 3, seed=6)
        assert np.array_equal(a.layers[0].weights, b.layers[0].weights)
        assert not np.array_equal(a.layers[0].weights, c.layers[0].weights)

    def test_rejects_inconsistent_chaining(self):
        l1 = ConvLayer(np.zeros((5, 2, 3, 3)), np.zeros(5), "relu")
        l2 = ConvLayer(np.zeros((3, 4, 3, 3)), np.zeros(3), "linear")
        with pytest.raises(ValueError):
            Network((l1, l2))

    def test_parameter_roundtrip(self):
        net = toy_net()
        params = net.parameters()
        assert len(params) == 6
        rebuilt = net.with_parameters(params)
        for a, b in zip(net.layers, rebuilt.layers):
            assert np.array_equal(a.weights, b.weights)


class TestConvForward:
    @pytest.mark.parametrize("seed", range(3))
    def test_matches_loop_oracle(self, seed):
        rng = np.random.default_rng(seed)
        x = rng.standard_normal((2, 3, 4, 5))
        for act in ("relu", "linear"):
            layer = ConvLayer(rng.standard_normal((4, 3, 3, 3)),
                              rng.standard_normal(4), act)
            got = conv_forward(x, layer)
            assert np.max(np.abs(got - conv_forward_oracle(x, layer))) < 1e-12

    def test_delta_kernel_passes_through(self):
        x = np.random.default_rng(1).standard_normal((1, 1, 6, 6))
        w = np.zeros((1, 1, 3, 3))
        w[0, 0, 1, 1] = 1.0
        out = conv_forward(x, ConvLayer(w, np.zeros(1), "linear"))
        assert np.max(np.abs(out - x)) < 1e-15

    def test_relu_clamps_negative_preactivations(self):
        x = np.ones((1, 1, 4, 4))
        layer = ConvLayer(np.zeros((1, 1, 3, 3)), np.array([-5.0]), "relu")
        assert np.all(conv_forward(x, layer) == 0.0)

    def test_zero_input_zero_bias_stays_zero(self):
        net = Network.standard(4, 3, seed=0)
        out = network_forward(np.zeros((1, 4, 8, 8)), net)
        assert np.all(out == 0.0)

    def test_batch_independence(self):
        net = toy_net()
        x = np.random.default_rng(2).standard_normal((3, 2, 6, 6))
        full = network_forward(x, net)
        for n in range(3):
            single = network_forward(x[n:n + 1], net)
            assert np.max(np.abs(full[n] - single[0])) < 1e-12

    def test_rejects_wrong_channel_count(self):
        layer = ConvLayer(np.zeros((2, 3, 3, 3)), np.zeros(2), "relu")
        with pytest.raises(ValueError):
            conv_forward(np.zeros((1, 4, 5, 5)), layer)

    def test_rejects_non_4d_or_non_finite(self):
        layer = ConvLayer(np.zeros((2, 3, 3, 3)), np.zeros(2), "relu")
        with pytest.raises(ValueError):
            conv_forward(np.zeros((3, 5, 5)), layer)
        bad = np.zeros((1, 3, 5, 5))
        bad[0, 0, 0, 0] = np.nan
        with pytest.raises(ValueError):
            conv_forward(bad, layer)


class TestLoss:
    def test_zero_residual_value(self):
        rng = np.random.default_rng(3)
        i = rng.standard_normal((2, 3, 4, 4))
        t = rng.standard_normal((2, 3, 4, 4))
        want = float(np.sum((t - i) ** 2) / 2)
        assert abs(l2_loss(np.zeros_like(i), i, t) - want) < 1e-12

    def test_zero_iff_corrected_equals_target(self):
        rng = np.random.default_rng(4)
        i = rng.standard_normal((2, 2, 3, 3))
        p = rng.standard_normal((2, 2, 3, 3))
        assert l2_loss(p, i, i + p) == 0.0
        assert l2_loss(p, i, i + p + 0.1) > 0.0

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            l2_loss(np.zeros((1, 2, 3, 3)), np.zeros((1, 2, 3, 3)),
                    np.zeros((1, 3, 3, 3)))


class TestBackward:
    def test_zero_output_gradient_gives_zero_parameter_gradients(self):
        net = toy_net()
        x = np.random.default_rng(5).standard_normal((2, 2, 5, 5))
        _, acts = _forward_cached(x, net)
        grads = network_backward(net, acts, np.zeros_like(acts[-1]))
        assert all(np.all(g == 0.0) for g in grads)

    def test_gradient_matches_finite_differences(self):
        net = toy_net(seed=7)
        rng = np.random.default_rng(8)
        x = rng.standard_normal((2, 2, 6, 6))
        y = rng.standard_normal((2, 2, 6, 6))
        _, grads = loss_and_grads(net, x, y)
        params = net.parameters()
        h = 1e-5
        sample_rng = np.random.default_rng(9)
        checked = 0
        for _ in range(50):
            pi = int(sample_rng.integers(len(params)))
            flat_idx = int(sample_rng.integers(params[pi].size))
            plus = [p.copy() for p in params]
            minus = [p.copy() for p in params]
            plus[pi].ravel()[flat_idx] += h
            minus[pi].ravel()[flat_idx] -= h
            lp, _ = loss_and_grads(net.with_parameters(plus), x, y)
            lm, _ = loss_and_grads(net.with_parameters(minus), x, y)
            fd = (lp - lm) / (2 * h)
            an = grads[pi].ravel()[flat_idx]
            denom = max(abs(fd), abs(an), 1e-8)
            assert abs(fd - an) / denom < 1e-4, (pi, flat_idx, fd, an)
            checked += 1
        assert checked == 50

    def test_cache_length_validated(self):
        net = toy_net()
        with pytest.raises(ValueError):
            network_backward(net, [np.zeros((1, 2, 4, 4))],
                             np.zeros((1, 2, 4, 4)))


class TestAdam:
    def test_zero_gradient_keeps_parameters(self):
        params = [np.ones((2, 2)), np.ones(3)]
        state = adam_init(params)
        new_p, new_s = adam_step(params, [np.zeros((2, 2)), np.zeros(3)],
                                 state)
        assert all(np.array_equal(a, b) for a, b in zip(params, new_p))
        assert new_s.step == 1 and state.step == 0

    def test_first_step_size_is_lr(self):
        # bias correction makes the first update exactly lr * sign(grad)
        params = [np.array([1.0])]
        state = adam_init(params, lr=0.05)
        new_p, _ = adam_step(params, [np.array([3.0])], state)
        assert abs(new_p[0][0] - (1.0 - 0.05 * 3.0 / (3.0 + 1e-8))) < 1e-12

    def test_minimizes_a_quadratic(self):
        params = [np.array([5.0])]
        state = adam_init(params, lr=0.1)
        for _ in range(500):
            params, state = adam_step(params, [2.0 * params[0]], state)
        assert abs(params[0][0]) < 1e-3

    def test_shape_mismatch_rejected(self):
        params = [np.zeros((2, 2))]
        state = adam_init(params)
        with pytest.raises(ValueError):
            adam_step(params, [np.zeros(3)], state)
        with pytest.raises(ValueError):
            adam_step(params, [], state)


class TestTraining:
    def test_residual_indices(self):
        assert np.array_equal(_residual_indices(4, 3), [1, 2, 3])
        assert np.array_equal(_residual_indices(16, 16), np.arange(16))
        with pytest.raises(ValueError):
            _residual_indices(3, 4)

    def test_learns_a_zero_residual_dataset(self):
        rng = np.random.default_rng(0)
        x = rng.standard_normal((10, 4, 8, 8)) * 0.05
        y = x[:, 1:].copy()  # target == input: the net must predict zero
        net = Network.standard(4, 3, seed=0)
        trained, trace = train(net, x, y, epochs=50, batch=2, lr=0.001,
                               seed=0)
        assert trace[-1] < 1e-6
        assert trace[-1] < trace[0]

    def test_training_is_deterministic(self):
        rng = np.random.default_rng(1)
        x = rng.standard_normal((6, 4, 8, 8)) * 0.2
        y = rng.standard_normal((6, 3, 8, 8)) * 0.2
        net = Network.standard(4, 3, seed=2)
        t1, trace1 = train(net, x, y, epochs=3, batch=2, seed=3)
        t2, trace2 = train(net, x, y, epochs=3, batch=2, seed=3)
        assert trace1 == trace2
        for a, b in zip(t1.parameters(), t2.parameters()):
            assert np.array_equal(a, b)

    def test_rejects_bad_datasets(self):
        net = Network.standard(4, 3, seed=0)
        with pytest.raises(ValueError):
            train(net, np.zeros((0, 4, 8, 8)), np.zeros((0, 3, 8, 8)))
        with pytest.raises(ValueError):
            train(net, np.zeros((2, 4, 8, 8)), np.zeros((3, 3, 8, 8)))
        with pytest.raises(ValueError):
            train(net, np.zeros((2, 5, 8, 8)), np.zeros((2, 3, 8, 8)))


class TestBandPacking:
    def test_single_level_roundtrip(self):
        bands = dwt2d(np.random.default_rng(2).uniform(0, 1, (16, 16)),
                      get_wavelet("db2"))
        tensor = bands_to_tensor(bands)
        assert tensor.shape == (4, 8, 8)
        back = tensor_to_bands(tensor, bands)
        assert np.array_equal(back.ll, bands.ll)
        assert back.wavelet == "db2"

    def test_multiwavelet_roundtrip(self):
        bands = ghm_decompose(np.random.default_rng(3).uniform(0, 1, (16, 16)))
        tensor = bands_to_tensor(bands)
        assert tensor.shape == (16, 4, 4)
        back = tensor_to_bands(tensor, bands)
        for a, b in zip(back.planes(), bands.planes()):
            assert np.array_equal(a, b)

    def test_type_errors(self):
        with pytest.raises(TypeError):
            bands_to_tensor(np.zeros((4, 4)))
        with pytest.raises(TypeError):
            tensor_to_bands(np.zeros((4, 2, 2)), "haar")


class TestPredictSr:
    @pytest.mark.parametrize("transform,n_in", [
        (get_wavelet("haar"), 4),
        (get_wavelet("bior2.6"), 4),
        (GhmFilterSet(), 16),
    ])
    def test_zero_network_equals_bicubic(self, transform, n_in):
        zero = Network(tuple([ConvLayer(np.zeros((n_in - 1 if n_in == 4 else 16,
                                                  n_in, 3, 3)),
                                        np.zeros(n_in - 1 if n_in == 4 else 16),
                                        "linear")]))
        img = Image(sharp_plane(24, 24, seed=1))
        baseline = bicubic_resize(img, 2.0)
        out = predict_sr(img, zero, transform, scale=2.0)
        want = np.clip(baseline.plane(), 0.0, 255.0)
        assert np.max(np.abs(out.plane() - want)) < 1e-6

    def test_scale_one_zero_network_is_identity(self):
        net = Network(tuple([ConvLayer(np.zeros((3, 4, 3, 3)), np.zeros(3),
                                       "linear")]))
        img = Image(sharp_plane(16, 16, seed=2))
        out = predict_sr(img, net, get_wavelet("haar"), scale=1.0)
        assert np.max(np.abs(out.plane() - img.plane())) < 1e-9

    def test_color_path_keeps_three_channels(self):
        net = Network(tuple([ConvLayer(np.zeros((3, 4, 3, 3)), np.zeros(3),
                                       "linear")]))
        rgb = np.stack([sharp_plane(16, 16, seed=s) for s in range(3)],
                       axis=2)
        out = predict_sr(Image(rgb), net, get_wavelet("haar"), scale=2.0)
        assert (out.height, out.width, out.channels) == (32, 32, 3)
        assert out.data.min() >= 0.0 and out.data.max() <= 255.0

    def test_band_layout_mismatch_rejected(self):
        net = Network.standard(16, 16, seed=0)
        with pytest.raises(ValueError):
            predict_sr(Image(np.zeros((16, 16))), net, get_wavelet("haar"))


class TestSerialization:
    def test_roundtrip(self):
        net = Network.standard(4, 3, seed=4)
        buf = io.BytesIO()
        save_model(net, buf, transform_name="db2", seed=4)
        buf.seek(0)
        loaded, manifest = load_model(buf)
        assert manifest["transform"] == "db2" and manifest["seed"] == 4
        assert loaded.input_bands == 4 and loaded.output_bands == 3
        for a, b in zip(net.layers, loaded.layers):
            assert np.array_equal(a.weights.astype("<f4"),
                                  b.weights.astype("<f4"))
            assert a.activation == b.activation

    def test_loaded_model_predicts_like_the_original(self):
        net = Network.standard(4, 3, seed=5)
        buf = io.BytesIO()
        save_model(net, buf)
        buf.seek(0)
        loaded, _ = load_model(buf)
        x = np.random.default_rng(6).standard_normal((1, 4, 8, 8)) * 0.1
        a = network_forward(x, net)
        b = network_forward(x, loaded)
        assert np.max(np.abs(a - b)) < 1e-5  # float32 storage

    def test_truncated_payload_rejected(self):
        net = Network.standard(4, 3, seed=0)
        buf = io.BytesIO()
        save_model(net, buf)
        clipped = io.BytesIO(buf.getvalue()[:-100])
        with pytest.raises(ValueError, match="truncated"):
            load_model(clipped)

    def test_unknown_version_rejected(self):
        buf = io.BytesIO(b'{"version": 99, "layers": []}\n')
        with pytest.raises(ValueError, match="version"):
            load_model(buf)
