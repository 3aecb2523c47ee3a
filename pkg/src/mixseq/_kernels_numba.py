"""Numba-jitted implementations of the hot kernels.

Loop-level twins of ``_kernels_numpy``; the docstrings there are the
contract. Import fails cleanly when numba is not installed, in which case
the backend falls back to the numpy kernels.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def conv_same_forward(kernel, x):
    d, k = kernel.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    z = np.zeros((d, n))
    for c in range(d):
        for i in range(n):
            acc = 0.0
            for j in range(k):
                src = i + j - c0
                if 0 <= src < n:
                    acc += kernel[c, j] * x[c, src]
            z[c, i] = acc
    return z


@njit(cache=True)
def conv_same_backward(kernel, x, dz):
    d, k = kernel.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    dkernel = np.zeros((d, k))
    dx = np.zeros((d, n))
    for c in range(d):
        for i in range(n):
            g = dz[c, i]
            for j in range(k):
                src = i + j - c0
                if 0 <= src < n:
                    dkernel[c, j] += g * x[c, src]
                    dx[c, src] += g * kernel[c, j]
    return dkernel, dx


@njit(cache=True)
def strided_conv_forward(w, x, stride):
    dout, din, k = w.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    t_out = (n + stride - 1) // stride
    z = np.zeros((dout, t_out))
    for i in range(t_out):
        base = stride * i - c0
        for j in range(k):
            src = base + j
            if 0 <= src < n:
                for o in range(dout):
                    acc = 0.0
                    for c in range(din):
                        acc += w[o, c, j] * x[c, src]
                    z[o, i] += acc
    return z


@njit(cache=True)
def strided_conv_backward(w, x, dz, stride):
    dout, din, k = w.shape
    n = x.shape[1]
    c0 = (k - 1) // 2
    t_out = dz.shape[1]
    dw = np.zeros((dout, din, k))
    dx = np.zeros((din, n))
    for i in range(t_out):
        base = stride * i - c0
        for j in range(k):
            src = base + j
            if 0 <= src < n:
                for o in range(dout):
                    g = dz[o, i]
                    for c in range(din):
                        dw[o, c, j] += g * x[c, src]
                        dx[c, src] += g * w[o, c, j]
    return dw, dx


@njit(cache=True, inline="always")
def _logaddexp(a, b):
    if a < b:
        a, b = b, a
    if b == -np.inf:
        return a
    return a + math.log1p(math.exp(b - a))


@njit(cache=True)
def ctc_alpha(logp, ext):
    s_len = ext.shape[0]
    t_len = logp.shape[1]
    alpha = np.full((s_len, t_len), -np.inf)
    alpha[0, 0] = logp[ext[0], 0]
    if s_len > 1:
        alpha[1, 0] = logp[ext[1], 0]
    for t in range(1, t_len):
        for s in range(s_len):
            acc = alpha[s, t - 1]
            if s >= 1:
                acc = _logaddexp(acc, alpha[s - 1, t - 1])
            if s >= 2 and ext[s] != 0 and ext[s] != ext[s - 2]:
                acc = _logaddexp(acc, alpha[s - 2, t - 1])
            alpha[s, t] = acc + logp[ext[s], t]
    return alpha


@njit(cache=True)
def ctc_beta(logp, ext):
    s_len = ext.shape[0]
    t_len = logp.shape[1]
    beta = np.full((s_len, t_len), -np.inf)
    beta[s_len - 1, t_len - 1] = logp[ext[s_len - 1], t_len - 1]
    if s_len > 1:
        beta[s_len - 2, t_len - 1] = logp[ext[s_len - 2], t_len - 1]
    for t in range(t_len - 2, -1, -1):
        for s in range(s_len):
            acc = beta[s, t + 1]
            if s + 1 < s_len:
                acc = _logaddexp(acc, beta[s + 1, t + 1])
            if s + 2 < s_len and ext[s + 2] != 0 and ext[s + 2] != ext[s]:
                acc = _logaddexp(acc, beta[s + 2, t + 1])
            beta[s, t] = acc + logp[ext[s], t]
    return beta
