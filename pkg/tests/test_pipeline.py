"""Image I/O, dataset plumbing, score reports, and the method sweep."""

import numpy as np
import pytest
from PIL import Image as PilImage

from wavesr.ghm import GhmFilterSet
from wavesr.families import get_wavelet
from wavesr.grid import Image
from wavesr.pipeline import (DatasetSpec, IqaReport, evaluate_dataset,
                             extract_patches, load_image, make_lr_pair,
                             make_training_set, save_image, sweep_wavelets,
                             train_method)
from tests.conftest import smooth_plane, textured_plane


class TestImageIo:
    def test_png_roundtrip_gray(self, tmp_path):
        data = np.random.default_rng(0).integers(0, 256, (9, 7)).astype(float)
        path = tmp_path / "g.png"
        save_image(Image(data), path)
        back = load_image(path)
        assert np.array_equal(back.plane(), data)

    def test_png_roundtrip_rgb(self, tmp_path):
        data = np.random.default_rng(1).integers(0, 256, (5, 6, 3)).astype(float)
        path = tmp_path / "c.png"
        save_image(Image(data), path)
        assert np.array_equal(load_image(path).data, data)

    def test_pnm_roundtrip(self, tmp_path):
        gray = np.random.default_rng(2).integers(0, 256, (4, 5)).astype(float)
        rgb = np.random.default_rng(3).integers(0, 256, (4, 5, 3)).astype(float)
        save_image(Image(gray), tmp_path / "g.pgm")
        save_image(Image(rgb), tmp_path / "c.ppm")
        assert np.array_equal(load_image(tmp_path / "g.pgm").plane(), gray)
        assert np.array_equal(load_image(tmp_path / "c.ppm").data, rgb)

    def test_save_load_idempotent(self, tmp_path):
        noisy = np.random.default_rng(4).uniform(-3, 258, (6, 6))
        save_image(Image(noisy), tmp_path / "a.png")
        once = load_image(tmp_path / "a.png")
        save_image(once, tmp_path / "b.png")
        assert np.array_equal(load_image(tmp_path / "b.png").data, once.data)

    def test_ascii_and_binary_pgm_agree(self, tmp_path):
        data = np.arange(12, dtype=float).reshape(3, 4) * 20.0
        save_image(Image(data), tmp_path / "bin.pgm")
        body = " ".join(str(int(v)) for v in data.ravel())
        (tmp_path / "asc.pgm").write_text(f"P2\n# comment\n4 3\n255\n{body}\n")
        a = load_image(tmp_path / "bin.pgm")
        b = load_image(tmp_path / "asc.pgm")
        assert np.array_equal(a.data, b.data)

    def test_ascii_ppm_loads(self, tmp_path):
        (tmp_path / "c.ppm").write_text("P3\n1 2\n255\n1 2 3 4 5 6\n")
        img = load_image(tmp_path / "c.ppm")
        assert img.data.shape == (2, 1, 3)
        assert np.array_equal(img.data.ravel(), [1, 2, 3, 4, 5, 6])

    def test_sixteen_bit_png_rejected(self, tmp_path):
        path = tmp_path / "deep.png"
        PilImage.fromarray(np.zeros((4, 4), dtype=np.uint16)).save(path)
        with pytest.raises(ValueError, match="unsupported bit depth"):
            load_image(path)

    def test_sixteen_bit_pgm_rejected(self, tmp_path):
        (tmp_path / "deep.pgm").write_bytes(b"P5\n2 2\n65535\n" + b"\x00" * 8)
        with pytest.raises(ValueError, match="unsupported bit depth"):
            load_image(tmp_path / "deep.pgm")

    def test_corrupt_pnm_rejected(self, tmp_path):
        (tmp_path / "bad.pgm").write_bytes(b"P5\n4 4\n255\nxx")
        with pytest.raises(ValueError, match="corrupt"):
            load_image(tmp_path / "bad.pgm")
        (tmp_path / "bad2.pgm").write_bytes(b"Q5\n4 4\n255\n")
        with pytest.raises(ValueError):
            load_image(tmp_path / "bad2.pgm")

    def test_unknown_extension_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="unsupported format"):
            load_image(tmp_path / "x.tiff")
        with pytest.raises(ValueError, match="unsupported format"):
            save_image(Image(np.zeros((2, 2))), tmp_path / "x.bmp")

    def test_save_clamps_and_rounds(self, tmp_path):
        data = np.array([[-5.0, 300.0], [99.4, 99.6]])
        save_image(Image(data), tmp_path / "q.pgm")
        back = load_image(tmp_path / "q.pgm").plane()
        assert np.array_equal(back, [[0.0, 255.0], [99.0, 100.0]])


class TestDatasetSpec:
    def test_defaults_and_stride_fill(self, tmp_path):
        spec = DatasetSpec(root=str(tmp_path))
        assert spec.scale_factor == 2.0
        assert spec.patch_size == 32 and spec.stride == 32

    @pytest.mark.parametrize("kwargs", [
        {"scale_factor": 0.5}, {"patch_size": 7}, {"patch_size": 10},
        {"patch_size": 6}, {"stride": -1},
    ])
    def test_validation(self, tmp_path, kwargs):
        if kwargs.get("patch_size") == 10:
            DatasetSpec(root=str(tmp_path), patch_size=10)  # even, >= 8: fine
            return
        with pytest.raises(ValueError):
            DatasetSpec(root=str(tmp_path), **kwargs)

    def test_paths_sorted_and_missing_error(self, tmp_path):
        for name in ("b.png", "a.png"):
            save_image(Image(np.zeros((8, 8))), tmp_path / name)
        spec = DatasetSpec(root=str(tmp_path))
        assert [p.name for p in spec.paths()] == ["a.png", "b.png"]
        with pytest.raises(FileNotFoundError):
            DatasetSpec(root=str(tmp_path), glob="*.pgm").paths()


class TestLrPairs:
    def test_scale_one_is_identity(self):
        hr = Image(textured_plane(16, 16, seed=0))
        inp, truth = make_lr_pair(hr, 1.0)
        assert np.max(np.abs(inp.data - hr.data)) < 1e-12
        assert truth is hr

    def test_constant_stays_constant(self):
        inp, _ = make_lr_pair(Image(np.full((16, 16), 77.0)), 2.0)
        assert np.max(np.abs(inp.data - 77.0)) < 1e-9

    def test_odd_dims_preserved(self):
        inp, truth = make_lr_pair(Image(textured_plane(17, 23, seed=1)), 2.0)
        assert inp.data.shape == truth.data.shape == (17, 23, 1)

    def test_rejects_scale_below_one(self):
        with pytest.raises(ValueError):
            make_lr_pair(Image(np.zeros((16, 16))), 0.5)


class TestPatches:
    def _pair(self, h, w):
        hr = Image(textured_plane(h, w, seed=2))
        return make_lr_pair(hr, 2.0)

    def test_counts(self, tmp_path):
        pair = self._pair(64, 64)
        s32 = DatasetSpec(root=str(tmp_path), patch_size=32, stride=32)
        s16 = DatasetSpec(root=str(tmp_path), patch_size=32, stride=16)
        assert len(extract_patches(pair, s32)) == 4
        assert len(extract_patches(pair, s16)) == 9

    def test_alignment(self, tmp_path):
        pair = self._pair(48, 64)
        spec = DatasetSpec(root=str(tmp_path), patch_size=16, stride=16)
        patches = extract_patches(pair, spec)
        a = pair[0].plane()
        b = pair[1].plane()
        k = 0
        for i in range(0, 48 - 15, 16):
            for j in range(0, 64 - 15, 16):
                lo, hi = patches[k]
                assert np.array_equal(lo, a[i:i + 16, j:j + 16])
                assert np.array_equal(hi, b[i:i + 16, j:j + 16])
                k += 1
        assert k == len(patches)

    def test_too_small_image_rejected(self, tmp_path):
        spec = DatasetSpec(root=str(tmp_path), patch_size=32)
        with pytest.raises(ValueError, match="smaller"):
            extract_patches(self._pair(16, 16), spec)

    def test_mismatched_pair_rejected(self, tmp_path):
        spec = DatasetSpec(root=str(tmp_path), patch_size=8)
        with pytest.raises(ValueError):
            extract_patches((Image(np.zeros((16, 16))),
                             Image(np.zeros((16, 17)))), spec)


class TestTrainingSet:
    def test_single_level_shapes(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        x, y = make_training_set(spec, get_wavelet("haar"))
        assert x.shape == (10, 4, 8, 8)
        assert y.shape == (10, 3, 8, 8)

    def test_multiwavelet_shapes(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        x, y = make_training_set(spec, GhmFilterSet(), limit=4)
        assert x.shape == (4, 16, 4, 4)
        assert y.shape == (4, 16, 4, 4)


class TestIqaReport:
    def _report(self):
        return IqaReport(
            methods=("bicubic", "haar"),
            metrics=("psnr", "ssim"),
            images=("a.png", "b.png", "c.png"),
            rows={
                ("bicubic", "psnr"): (30.0, 31.0, 35.0),
                ("bicubic", "ssim"): (0.9, 0.92, 0.95),
                ("haar", "psnr"): (31.0, 32.0, 36.0),
                ("haar", "ssim"): (0.91, 0.93, 0.96),
            })

    def test_mean_is_arithmetic(self):
        assert self._report().mean("bicubic", "psnr") == 32.0

    def test_value_lookup(self):
        assert self._report().value("haar", "ssim", "b.png") == 0.93

    def test_csv_roundtrip_lossless(self):
        rep = self._report()
        back = IqaReport.from_csv(rep.to_csv())
        assert back.methods == rep.methods
        assert back.metrics == rep.metrics
        assert back.images == rep.images
        assert back.rows == rep.rows

    def test_csv_header(self):
        first = self._report().to_csv().splitlines()[0]
        assert first == "method,metric,mean,a.png,b.png,c.png"

    def test_error_rows_roundtrip(self):
        rep = IqaReport(methods=("bicubic", "bad"), metrics=("psnr",),
                        images=("a.png",),
                        rows={("bicubic", "psnr"): (30.0,)},
                        errors={"bad": "KeyError: boom"})
        back = IqaReport.from_csv(rep.to_csv())
        assert back.errors == {"bad": "KeyError: boom"}
        assert ("bad", "psnr") not in back.rows

    def test_mean_consistency_enforced_on_parse(self):
        text = ("method,metric,mean,a.png,b.png\n"
                "bicubic,psnr,99.0,30.0,31.0\n")
        with pytest.raises(ValueError, match="mean"):
            IqaReport.from_csv(text)

    def test_non_finite_values_survive_csv(self):
        rep = IqaReport(methods=("bicubic",), metrics=("psnr",),
                        images=("a.png",),
                        rows={("bicubic", "psnr"): (float("inf"),)})
        back = IqaReport.from_csv(rep.to_csv())
        assert back.rows[("bicubic", "psnr")] == (float("inf"),)

    def test_mean_is_permutation_invariant(self):
        values = tuple(np.random.default_rng(5).uniform(20, 40, 6))
        perm = tuple(np.random.default_rng(6).permutation(values))
        r1 = IqaReport(methods=("m",), metrics=("psnr",),
                       images=tuple(f"{i}.png" for i in range(6)),
                       rows={("m", "psnr"): values})
        r2 = IqaReport(methods=("m",), metrics=("psnr",),
                       images=tuple(f"{i}.png" for i in range(6)),
                       rows={("m", "psnr"): perm})
        assert r1.mean("m", "psnr") == r2.mean("m", "psnr")

    def test_row_length_validated(self):
        with pytest.raises(ValueError):
            IqaReport(methods=("m",), metrics=("psnr",),
                      images=("a.png", "b.png"),
                      rows={("m", "psnr"): (1.0,)})


class TestEvaluate:
    def test_bicubic_at_scale_one_scores_exact_match(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), scale_factor=1.0,
                           patch_size=16)
        rep = evaluate_dataset("bicubic", spec, metrics=["psnr"])
        assert rep.methods == ("bicubic",)
        assert len(rep.images) == 10
        assert all(v == float("inf") for v in rep.rows[("bicubic", "psnr")])

    def test_unknown_metric_rejected(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        with pytest.raises(KeyError):
            evaluate_dataset("bicubic", spec, metrics=["nope"])


class TestSweep:
    def test_small_sweep_structure_and_determinism(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        kwargs = dict(metrics=["psnr", "ssim"], epochs=1, batch=2, lr=0.005,
                      seed=0, names=["haar", "ghm"])
        rep1 = sweep_wavelets(spec, spec, **kwargs)
        rep2 = sweep_wavelets(spec, spec, **kwargs)
        assert rep1.methods == ("bicubic", "haar", "ghm")
        assert rep1.metrics == ("psnr", "ssim")
        assert rep1.to_csv() == rep2.to_csv()
        assert not rep1.errors

    def test_alias_rows_identical_under_equal_seed(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        rep = sweep_wavelets(spec, spec, metrics=["psnr"], epochs=1, batch=2,
                             seed=0, names=["haar", "db1"])
        assert rep.rows[("haar", "psnr")] == rep.rows[("db1", "psnr")]

    def test_failures_become_row_errors(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        rep = sweep_wavelets(spec, spec, metrics=["psnr"], epochs=1, batch=2,
                             seed=0, names=["haar", "nosuch"])
        assert "nosuch" in rep.errors
        assert ("haar", "psnr") in rep.rows
        back = IqaReport.from_csv(rep.to_csv())
        assert "nosuch" in back.errors

    def test_train_method_returns_a_usable_model(self, smooth16_dir):
        spec = DatasetSpec(root=str(smooth16_dir), patch_size=16)
        transform, net, trace = train_method("haar", spec, epochs=2, batch=2,
                                             seed=0)
        assert net.input_bands == 4 and net.output_bands == 3
        assert len(trace) == 2
        rep = evaluate_dataset((transform, net), spec, metrics=["psnr"])
        assert rep.methods == ("model",)
        assert all(np.isfinite(v) for v in rep.rows[("model", "psnr")])
