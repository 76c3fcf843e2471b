"""Named filter-bank registry and its self-verification."""

import numpy as np
import pytest

from wavesr.families import (SWEEP_NAMES, PrReport, get_wavelet,
                             list_wavelets, verify_filterbank)
from wavesr.grid import BoundaryMode


class TestRegistry:
    def test_name_count(self):
        names = list_wavelets()
        assert len(names) == 36
        assert names == sorted(names)

    def test_expected_families_present(self):
        names = set(list_wavelets())
        assert {"haar", "db1", "db2", "db20", "sym2", "sym15", "coif1",
                "coif5", "bior2.6", "rbio2.6", "rbio3.5"} <= names

    def test_haar_is_db1(self):
        haar, db1 = get_wavelet("haar"), get_wavelet("db1")
        assert np.array_equal(haar.dec_lo, db1.dec_lo)
        assert np.array_equal(haar.rec_hi, db1.rec_hi)
        assert haar.name == "haar" and db1.name == "db1"

    def test_unknown_name(self):
        with pytest.raises(KeyError, match="unknown wavelet"):
            get_wavelet("db99")

    def test_lookup_is_cached(self):
        assert get_wavelet("sym4") is get_wavelet("sym4")

    def test_sweep_names_cover_the_registry(self):
        assert SWEEP_NAMES == list_wavelets()

    def test_default_modes_by_family(self):
        assert get_wavelet("db4").default_mode is BoundaryMode.PERIODIC
        assert get_wavelet("sym6").default_mode is BoundaryMode.PERIODIC
        assert get_wavelet("coif3").default_mode is BoundaryMode.PERIODIC
        assert get_wavelet("bior2.6").default_mode is BoundaryMode.SYMMETRIC
        assert get_wavelet("rbio3.1").default_mode is BoundaryMode.SYMMETRIC


class TestCoefficients:
    def test_db2_matches_the_classic_table(self):
        # correlation convention stores the classic taps reversed
        s3 = np.sqrt(3.0)
        classic = np.array([1.0 + s3, 3.0 + s3, 3.0 - s3, 1.0 - s3])
        classic /= 4.0 * np.sqrt(2.0)
        assert np.max(np.abs(get_wavelet("db2").dec_lo - classic[::-1])) < 1e-12

    def test_haar_taps(self):
        fb = get_wavelet("haar")
        s = 1.0 / np.sqrt(2.0)
        assert np.allclose(fb.dec_lo, [s, s], atol=1e-15)
        assert np.allclose(np.abs(fb.dec_hi), [s, s], atol=1e-15)

    def test_lowpass_sums_to_sqrt2(self):
        for name in list_wavelets():
            fb = get_wavelet(name)
            assert abs(fb.dec_lo.sum() - np.sqrt(2.0)) < 1e-10, name
            assert abs(fb.dec_hi.sum()) < 1e-10, name

    def test_reverse_biorthogonal_swaps_the_lowpass_pair(self):
        for order in ("2.6",):
            fwd = get_wavelet(f"bior{order}")
            rev = get_wavelet(f"rbio{order}")
            assert np.allclose(fwd.dec_lo, rev.rec_lo, atol=1e-12)
            assert np.allclose(fwd.rec_lo, rev.dec_lo, atol=1e-12)

    def test_orthogonal_flag(self):
        assert get_wavelet("db7").orthogonal
        assert get_wavelet("coif2").orthogonal
        assert not get_wavelet("bior2.6").orthogonal
        assert not get_wavelet("rbio2.8").orthogonal

    def test_orthogonal_double_shift_identity(self):
        for name in ("db2", "db6", "sym8", "coif3"):
            h = get_wavelet(name).dec_lo
            assert abs(h @ h - 1.0) < 1e-10, name
            for lag in range(1, h.size // 2):
                assert abs(h[: h.size - 2 * lag] @ h[2 * lag:]) < 1e-10, name


class TestVerification:
    def test_every_bank_verifies(self):
        for name in list_wavelets():
            report = verify_filterbank(get_wavelet(name))
            assert report.ok(), (name, report)

    def test_report_thresholds(self):
        good = PrReport(max_roundtrip_error=1e-12, lowpass_sum_error=0.0,
                        highpass_sum_error=0.0, orthogonality_error=None)
        assert good.ok()
        assert not PrReport(1e-3, 0.0, 0.0).ok()
        assert not PrReport(1e-12, 1e-3, 0.0).ok()
        assert not PrReport(1e-12, 0.0, 0.0, orthogonality_error=1e-3).ok()
