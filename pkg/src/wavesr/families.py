"""Registry of the single-level wavelet filter banks used by the sweep.

The coefficient tables live in :mod:`wavesr._coeffs` as literals generated
offline (see tools/gen_coeffs.py); correctness is enforced at test time by
:func:`verify_filterbank` rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._coeffs import COEFFS
from .filterbank import FilterBank, dwt1d, idwt1d
from .grid import BoundaryMode

__all__ = [
    "PrReport",
    "SWEEP_NAMES",
    "get_wavelet",
    "list_wavelets",
    "verify_filterbank",
]

# haar is the db1 filter under its traditional name; both are registered so
# the sweep can emit both rows.
_ALIASES = {"haar": "db1"}

# biorthogonal families default to their natural symmetric extension;
# orthogonal families use periodization (exact critical sampling).
_MODE_BY_FAMILY = {
    "db": BoundaryMode.PERIODIC,
    "sym": BoundaryMode.PERIODIC,
    "coif": BoundaryMode.PERIODIC,
    "bior": BoundaryMode.SYMMETRIC,
    "rbio": BoundaryMode.SYMMETRIC,
}

_BANK_CACHE: dict[str, FilterBank] = {}


def list_wavelets() -> list[str]:
    """All registered names, sorted; haar and db1 both appear."""
    return sorted(COEFFS.keys() | _ALIASES.keys())


# sweep order mirrors the experiment tables: every registered single-level
# name plus the multiwavelet method
SWEEP_NAMES = list_wavelets()


def get_wavelet(name: str) -> FilterBank:
    """Look up a registered filter bank by name."""
    key = _ALIASES.get(name, name)
    if key not in COEFFS:
        valid = ", ".join(list_wavelets())
        raise KeyError(f"unknown wavelet {name!r}; valid names: {valid}")
    cached = _BANK_CACHE.get(name)
    if cached is None:
        (family, orthogonal, dec_lo, dec_hi, rec_lo, rec_hi,
         shift, sym_anchor) = COEFFS[key]
        cached = FilterBank(
            name=name,
            dec_lo=np.array(dec_lo),
            dec_hi=np.array(dec_hi),
            rec_lo=np.array(rec_lo),
            rec_hi=np.array(rec_hi),
            orthogonal=orthogonal,
            synthesis_shift=shift,
            default_mode=_MODE_BY_FAMILY[family],
            sym_anchor=sym_anchor,
        )
        _BANK_CACHE[name] = cached
    return cached


@dataclass(frozen=True)
class PrReport:
    """Self-check magnitudes for one filter bank (all should be tiny)."""

    max_roundtrip_error: float
    lowpass_sum_error: float
    highpass_sum_error: float
    orthogonality_error: float | None = None

    def ok(self, roundtrip_tol: float = 1e-8, sum_tol: float = 1e-10,
           orth_tol: float = 1e-10) -> bool:
        if self.max_roundtrip_error >= roundtrip_tol:
            return False
        if self.lowpass_sum_error >= sum_tol or self.highpass_sum_error >= sum_tol:
            return False
        if self.orthogonality_error is not None and self.orthogonality_error >= orth_tol:
            return False
        return True


def verify_filterbank(fb: FilterBank, probe_len: int = 64,
                      n_probes: int = 4, seed: int = 0) -> PrReport:
    """Measure round-trip error, tap-sum identities, and (for orthogonal
    banks) double-shift orthogonality of the decomposition lowpass."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_probes):
        x = rng.standard_normal(probe_len)
        a, d = dwt1d(x, fb)
        y = idwt1d(a, d, fb, out_len=probe_len)
        worst = max(worst, float(np.max(np.abs(y - x))))

    lo_err = abs(float(fb.dec_lo.sum()) - np.sqrt(2.0))
    hi_err = abs(float(fb.dec_hi.sum()))

    orth_err = None
    if fb.orthogonal:
        h = fb.dec_lo
        errs = [abs(float(h @ h) - 1.0)]
        for l in range(1, h.size // 2):
            errs.append(abs(float(h[: h.size - 2 * l] @ h[2 * l:])))
        orth_err = max(errs)

    return PrReport(max_roundtrip_error=worst, lowpass_sum_error=lo_err,
                    highpass_sum_error=hi_err, orthogonality_error=orth_err)
