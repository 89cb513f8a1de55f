"""Hankel low-rank (Cadzow) signal enhancement for FIDs.

A length-n FID maps to an L x (n-L+1) Hankel matrix; FIDs that are short sums
of exponentials give low-rank embeddings.  Cadzow enhancement alternates
rank-r SVD truncation with anti-diagonal averaging back to Hankel structure.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import InvalidArgumentError

__all__ = ["build_hankel", "hankel_to_fid", "cadzow_denoise", "estimate_rank"]


def _as_complex_vector(fid):
    x = np.asarray(fid, dtype=np.complex128)
    if x.ndim != 1 or x.size < 3:
        raise InvalidArgumentError("FID must be 1D with length >= 3")
    if not np.all(np.isfinite(x.real)) or not np.all(np.isfinite(x.imag)):
        raise InvalidArgumentError("FID contains non-finite samples")
    return x


def build_hankel(fid, L):
    """Hankel embedding H[i, j] = fid[i + j] of shape L x (n - L + 1)."""
    x = _as_complex_vector(fid)
    n = x.size
    L = int(L)
    if not 2 <= L <= n - 1:
        raise InvalidArgumentError(f"window L must satisfy 2 <= L <= n-1, got L={L}, n={n}")
    return sliding_window_view(x, n - L + 1).copy()


def hankel_to_fid(H):
    """Average anti-diagonals back to a vector; exact left-inverse of build_hankel."""
    H = np.asarray(H, dtype=np.complex128)
    if H.ndim != 2 or min(H.shape) < 1:
        raise InvalidArgumentError("expected a 2D matrix")
    L, M = H.shape
    n = L + M - 1
    t = (np.arange(L)[:, None] + np.arange(M)[None, :]).ravel()
    counts = np.bincount(t, minlength=n)
    flat = H.ravel()
    sums = np.bincount(t, weights=flat.real, minlength=n) + 1j * np.bincount(
        t, weights=flat.imag, minlength=n
    )
    return sums / counts


def _truncate_rank(H, rank):
    u, s, vh = np.linalg.svd(H, full_matrices=False)
    return (u[:, :rank] * s[:rank]) @ vh[:rank, :]


def cadzow_denoise(fid, rank, iterations=10, window=None):
    """Alternate rank-r truncation and Hankel averaging for a fixed iteration count.

    window defaults to floor(n/2) + 1 (a near-square embedding).  A full-rank
    request is an exact no-op.
    """
    x = _as_complex_vector(fid)
    n = x.size
    L = int(window) if window is not None else n // 2 + 1
    if not 2 <= L <= n - 1:
        raise InvalidArgumentError(f"window L must satisfy 2 <= L <= n-1, got L={L}")
    M = n - L + 1
    rank = int(rank)
    if not 1 <= rank <= min(L, M):
        raise InvalidArgumentError(f"rank must satisfy 1 <= rank <= {min(L, M)}, got {rank}")
    iterations = int(iterations)
    if iterations < 1:
        raise InvalidArgumentError("iterations must be >= 1")
    if rank == min(L, M):
        return x.copy()
    out = x
    for _ in range(iterations):
        H = build_hankel(out, L)
        out = hankel_to_fid(_truncate_rank(H, rank))
    return out


def estimate_rank(fid, window=None, gap=0.05):
    """Count singular values of the Hankel embedding above gap * sigma_1."""
    x = _as_complex_vector(fid)
    n = x.size
    L = int(window) if window is not None else n // 2 + 1
    H = build_hankel(x, L)
    s = np.linalg.svd(H, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > gap * s[0]))
