"""Reconstruction quality metrics: output SNR in dB and RMSE."""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidArgumentError

__all__ = ["snr_db", "rmse", "SNR_DB_CAP"]

# Perfect reconstructions are +inf in-memory; serialized reports cap at this
# value to keep CSV/JSON numeric.
SNR_DB_CAP = 300.0


def _pair(reference, estimate):
    r = np.asarray(reference, dtype=np.float64)
    e = np.asarray(estimate, dtype=np.float64)
    if r.shape != e.shape or r.ndim != 1:
        raise InvalidArgumentError("reference and estimate must be 1D and equal length")
    if not (np.all(np.isfinite(r)) and np.all(np.isfinite(e))):
        raise InvalidArgumentError("metric inputs must be finite")
    return r, e


def snr_db(reference, estimate):
    """20*log10(||reference|| / ||estimate - reference||); +inf for a zero error."""
    r, e = _pair(reference, estimate)
    ref_norm = np.linalg.norm(r)
    if ref_norm == 0.0:
        raise InvalidArgumentError("reference signal must be nonzero")
    err_norm = np.linalg.norm(e - r)
    if err_norm == 0.0:
        return math.inf
    return float(20.0 * math.log10(ref_norm / err_norm))


def rmse(reference, estimate):
    """Root-mean-square error between two equal-length signals."""
    r, e = _pair(reference, estimate)
    return float(np.sqrt(np.mean((e - r) ** 2)))
