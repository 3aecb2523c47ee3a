"""Pure-numpy implementations of the hot kernels.

Same signatures as ``_kernels_numba``; selected via MIXSEQ_BACKEND=numpy or
used as the fallback when numba is unavailable.
"""

from __future__ import annotations

import numpy as np


def conv_same_forward(kernel: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Per-channel 1-D convolution with centered zero padding.

    z[c, i] = sum_j kernel[c, j] * x[c, i + j - (k-1)//2], out-of-range
    columns read as zero. kernel is (D, k) with k odd, x is (D, N).
    """
    d, k = kernel.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    xp = np.zeros((d, n + k - 1))
    xp[:, c0 : c0 + n] = x
    z = np.zeros((d, n))
    for j in range(k):
        z += kernel[:, j : j + 1] * xp[:, j : j + n]
    return z


def conv_same_backward(kernel: np.ndarray, x: np.ndarray, dz: np.ndarray):
    """Gradients of conv_same_forward w.r.t. kernel and input."""
    d, k = kernel.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    xp = np.zeros((d, n + k - 1))
    xp[:, c0 : c0 + n] = x
    dzp = np.zeros((d, n + k - 1))
    dzp[:, c0 : c0 + n] = dz
    dkernel = np.zeros((d, k))
    dx = np.zeros((d, n))
    for j in range(k):
        dkernel[:, j] = np.sum(dz * xp[:, j : j + n], axis=1)
        dx += kernel[:, j : j + 1] * dzp[:, k - 1 - j : k - 1 - j + n]
    return dkernel, dx


def strided_conv_forward(w: np.ndarray, x: np.ndarray, stride: int) -> np.ndarray:
    """Cross-channel strided 1-D convolution, centered zero padding.

    w is (Dout, Din, k) with k odd, x is (Din, N); output column i covers
    input columns stride*i - (k-1)//2 .. stride*i + (k-1)//2 and the output
    has ceil(N / stride) columns.
    """
    dout, din, k = w.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    t_out = -(-n // stride)
    xp = np.zeros((din, n + k - 1))
    xp[:, c0 : c0 + n] = x
    z = np.zeros((dout, t_out))
    last = stride * (t_out - 1)
    for j in range(k):
        z += w[:, :, j] @ xp[:, j : j + last + 1 : stride]
    return z


def strided_conv_backward(w: np.ndarray, x: np.ndarray, dz: np.ndarray, stride: int):
    dout, din, k = w.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    t_out = dz.shape[1]
    xp = np.zeros((din, n + k - 1))
    xp[:, c0 : c0 + n] = x
    dw = np.zeros_like(w)
    dxp = np.zeros_like(xp)
    last = stride * (t_out - 1)
    for j in range(k):
        cols = xp[:, j : j + last + 1 : stride]
        dw[:, :, j] = dz @ cols.T
        dxp[:, j : j + last + 1 : stride] += w[:, :, j].T @ dz
    return dw, dxp[:, c0 : c0 + n]


def ctc_alpha(logp: np.ndarray, ext: np.ndarray) -> np.ndarray:
    """Log-space forward recursion over the blank-extended label sequence.

    logp is (V, T) log scores, ext the extended labels (blank interleaved,
    blank id 0). Returns the (S, T) table of prefix-path log masses.
    """
    s_len = ext.shape[0]
    t_len = logp.shape[1]
    em = logp[ext, :]
    alpha = np.full((s_len, t_len), -np.inf)
    alpha[0, 0] = em[0, 0]
    if s_len > 1:
        alpha[1, 0] = em[1, 0]
    can_skip = np.zeros(s_len, dtype=bool)
    can_skip[2:] = (ext[2:] != 0) & (ext[2:] != ext[:-2])
    for t in range(1, t_len):
        prev = alpha[:, t - 1]
        acc = prev.copy()
        acc[1:] = np.logaddexp(acc[1:], prev[:-1])
        two = np.full(s_len, -np.inf)
        two[2:] = prev[:-2]
        acc = np.where(can_skip, np.logaddexp(acc, two), acc)
        alpha[:, t] = acc + em[:, t]
    return alpha


def ctc_beta(logp: np.ndarray, ext: np.ndarray) -> np.ndarray:
    """Log-space backward recursion; emission at t is included in beta."""
    s_len = ext.shape[0]
    t_len = logp.shape[1]
    em = logp[ext, :]
    beta = np.full((s_len, t_len), -np.inf)
    beta[s_len - 1, t_len - 1] = em[s_len - 1, t_len - 1]
    if s_len > 1:
        beta[s_len - 2, t_len - 1] = em[s_len - 2, t_len - 1]
    can_skip = np.zeros(s_len, dtype=bool)
    can_skip[: s_len - 2] = (ext[2:] != 0) & (ext[2:] != ext[:-2])
    for t in range(t_len - 2, -1, -1):
        nxt = beta[:, t + 1]
        acc = nxt.copy()
        acc[:-1] = np.logaddexp(acc[:-1], nxt[1:])
        two = np.full(s_len, -np.inf)
        two[: s_len - 2] = nxt[2:]
        acc = np.where(can_skip, np.logaddexp(acc, two), acc)
        beta[:, t] = acc + em[:, t]
    return beta
