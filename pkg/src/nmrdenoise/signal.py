"""Synthetic FID generation, calibrated noise injection, and the FID -> spectrum pipeline.

An FID (free induction decay) is modeled as a sum of damped complex
exponentials.  Noise is circular complex Gaussian, rescaled after drawing so
the realized FID-domain SNR hits the requested level exactly.  Spectra are the
real part of the unitary DFT of the FID, normalized to zero mean and unit
standard deviation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, InvalidArgumentError

__all__ = [
    "PeakParams",
    "NoiseSpec",
    "synth_fid",
    "add_noise",
    "fid_to_spectrum",
    "normalize",
    "random_peaks",
]


@dataclass(frozen=True)
class PeakParams:
    """One damped complex exponential (a Lorentzian line after FT).

    frequency is in cycles per sample within [-0.5, 0.5); decay_rate is the
    per-sample damping coefficient.
    """

    amplitude: float
    frequency: float
    decay_rate: float
    phase: float = 0.0

    def __post_init__(self):
        vals = (self.amplitude, self.frequency, self.decay_rate, self.phase)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidArgumentError("peak parameters must be finite")
        if self.amplitude < 0:
            raise InvalidArgumentError(f"amplitude must be >= 0, got {self.amplitude}")
        if self.decay_rate < 0:
            raise InvalidArgumentError(f"decay_rate must be >= 0, got {self.decay_rate}")
        if not -0.5 <= self.frequency < 0.5:
            raise InvalidArgumentError(
                f"frequency must lie in [-0.5, 0.5), got {self.frequency}"
            )


@dataclass(frozen=True)
class NoiseSpec:
    """Target FID-domain input SNR (dB) and RNG seed."""

    input_snr_db: float
    seed: int = 0

    def __post_init__(self):
        if not math.isfinite(self.input_snr_db):
            raise InvalidArgumentError("input_snr_db must be finite")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidArgumentError("seed must fit in an unsigned 64-bit integer")


def synth_fid(peaks, n):
    """Build a clean FID of length n as a sum of damped complex exponentials.

    samples[t] = sum_k amp_k * exp(i*phase_k) * exp((i*2*pi*freq_k - decay_k) * t)
    """
    peaks = list(peaks)
    if not peaks:
        raise InvalidArgumentError("peak list must be nonempty")
    n = int(n)
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    t = np.arange(n)
    out = np.zeros(n, dtype=np.complex128)
    for p in peaks:
        if not isinstance(p, PeakParams):
            p = PeakParams(*p)
        out += p.amplitude * np.exp(1j * p.phase) * np.exp(
            (2j * np.pi * p.frequency - p.decay_rate) * t
        )
    return out


def _as_fid(fid):
    x = np.asarray(fid, dtype=np.complex128)
    if x.ndim != 1:
        raise InvalidArgumentError("FID must be one-dimensional")
    if not np.all(np.isfinite(x.real)) or not np.all(np.isfinite(x.imag)):
        raise InvalidArgumentError("FID contains non-finite samples")
    return x


def add_noise(fid, spec: NoiseSpec):
    """Add circular complex Gaussian noise at an exact FID-domain SNR.

    The noise vector is drawn from a counter-based generator keyed by
    spec.seed (Box-Muller on uniform pairs), then rescaled so that
    20*log10(||x|| / ||e||) equals spec.input_snr_db exactly.

    Returns (noisy_fid, sigma) where sigma is the realized per-component
    (real/imag channel) standard deviation of the scaled noise.
    """
    x = _as_fid(fid)
    n = x.size
    x_norm = np.linalg.norm(x)
    if x_norm == 0.0:
        raise InvalidArgumentError("cannot calibrate noise against a zero-energy FID")
    rng = np.random.Generator(np.random.Philox(key=int(spec.seed)))
    u1 = rng.random(n)
    u2 = rng.random(n)
    # Box-Muller in polar form; 1 - u1 in (0, 1] keeps the log finite.
    e = np.sqrt(-2.0 * np.log1p(-u1)) * np.exp(2j * np.pi * u2)
    target_norm = x_norm * 10.0 ** (-spec.input_snr_db / 20.0)
    e *= target_norm / np.linalg.norm(e)
    sigma = np.linalg.norm(e) / math.sqrt(2 * n)
    return x + e, float(sigma)


def normalize(values):
    """Affine-rescale a real sequence to zero mean and unit (population) std."""
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise InvalidArgumentError("expected a one-dimensional sequence")
    if not np.all(np.isfinite(v)):
        raise InvalidArgumentError("sequence contains non-finite values")
    std = v.std()
    if std == 0.0:
        raise DegenerateInputError("zero-variance input cannot be normalized")
    return (v - v.mean()) / std


def fid_to_spectrum(fid):
    """Unitary DFT of the FID, real part, then zero-mean/unit-std normalization."""
    x = _as_fid(fid)
    n = x.size
    if n < 8:
        raise InvalidArgumentError(f"FID too short for a spectrum, need n >= 8, got {n}")
    spec = np.fft.fft(x) / math.sqrt(n)
    return normalize(spec.real)


def random_peaks(rng, n_peaks=None, freq_margin=0.02, min_separation=0.01):
    """Draw a random peak list for synthetic spectra.

    Peak counts default to 3..30; decay rates span 0.001..0.05 per sample.
    Frequencies keep min_separation apart so distinct lines stay resolvable.
    """
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    if n_peaks is None:
        n_peaks = int(rng.integers(3, 31))
    if n_peaks < 1:
        raise InvalidArgumentError("n_peaks must be positive")
    lo, hi = -0.5 + freq_margin, 0.5 - freq_margin
    freqs = []
    while len(freqs) < n_peaks:
        f = float(rng.uniform(lo, hi))
        if all(abs(f - g) >= min_separation for g in freqs):
            freqs.append(f)
    peaks = []
    for f in freqs:
        peaks.append(
            PeakParams(
                amplitude=float(rng.uniform(0.2, 1.0)),
                frequency=f,
                decay_rate=float(rng.uniform(0.001, 0.05)),
                phase=float(rng.uniform(0.0, 2.0 * np.pi)),
            )
        )
    return peaks
