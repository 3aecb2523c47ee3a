"""Discrete Fourier transforms for arbitrary lengths and circular convolution.

Conventions: the forward transform is unnormalized,
X[k] = sum_n x[n] exp(-2*pi*i*k*n/N); the inverse carries the 1/N factor.
``fft`` uses iterative radix-2 Cooley-Tukey for power-of-two lengths and the
Bluestein chirp-z algorithm otherwise (internally a power-of-two transform of
size >= 2N-1), so every sequence is processed at its true length rather than
padded to a power of two. ``dft_naive`` is the O(N^2) evaluation of the
defining sum and serves as the oracle for the fast path.

All transforms operate along the last axis, so a (D, N) matrix is D
independent length-N transforms.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "dft_naive",
    "fft",
    "ifft",
    "circular_convolve",
    "circular_convolve_naive",
    "circular_correlate",
]

_IMAG_TOL = 1e-9


def dft_naive(x) -> np.ndarray:
    """Direct O(N^2) evaluation of the forward transform (the oracle)."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[-1]
    if n == 0:
        raise ValueError("empty input")
    idx = np.arange(n, dtype=np.int64)
    # angles reduced mod N in exact integer arithmetic before the complex exp
    phase = (idx[:, None] * idx[None, :]) % n
    w = np.exp((-2j * np.pi / n) * phase)
    return x @ w.T


def _bit_reverse_indices(n: int) -> np.ndarray:
    levels = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(levels):
        rev = (rev << 1) | ((idx >> b) & 1)
    return rev


def _fft_pow2(x: np.ndarray) -> np.ndarray:
    """Iterative radix-2 butterflies along the last axis; len must be 2^m."""
    n = x.shape[-1]
    if n == 1:
        return x.copy()
    y = x[..., _bit_reverse_indices(n)].copy()
    size = 2
    while size <= n:
        half = size // 2
        tw = np.exp((-2j * np.pi / size) * np.arange(half))
        blocks = y.reshape(y.shape[:-1] + (n // size, size))
        even = blocks[..., :half].copy()
        odd = blocks[..., half:] * tw
        blocks[..., :half] = even + odd
        blocks[..., half:] = even - odd
        size *= 2
    return y


def _ifft_pow2(x: np.ndarray) -> np.ndarray:
    return np.conj(_fft_pow2(np.conj(x))) / x.shape[-1]


def fft(x) -> np.ndarray:
    """Fast forward transform along the last axis, any length >= 1."""
    x = np.ascontiguousarray(np.asarray(x, dtype=np.complex128))
    n = x.shape[-1]
    if n == 0:
        raise ValueError("empty input")
    if n & (n - 1) == 0:
        return _fft_pow2(x)
    # Bluestein: X_k = c_k * (a (*) b)_k with a_n = x_n c_n, b_n = conj(c_|n|),
    # c_n = exp(-i*pi*n^2/N); the linear convolution runs in a 2^m transform.
    idx = np.arange(n, dtype=np.int64)
    chirp = np.exp((-1j * np.pi / n) * ((idx * idx) % (2 * n)))
    m = 1 << (2 * n - 1).bit_length()
    a = np.zeros(x.shape[:-1] + (m,), dtype=np.complex128)
    a[..., :n] = x * chirp
    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1 :] = np.conj(chirp[1:])[::-1]
    conv = _ifft_pow2(_fft_pow2(a) * _fft_pow2(b))
    return chirp * conv[..., :n]


def ifft(x) -> np.ndarray:
    """Inverse transform along the last axis (1/N normalization)."""
    x = np.asarray(x, dtype=np.complex128)
    return np.conj(fft(np.conj(x))) / x.shape[-1]


def _real_part(z: np.ndarray, what: str) -> np.ndarray:
    residue = float(np.max(np.abs(z.imag))) if z.size else 0.0
    if residue > _IMAG_TOL:
        raise ArithmeticError(
            f"{what}: imaginary residue {residue:.3e} exceeds {_IMAG_TOL}"
        )
    return np.ascontiguousarray(z.real)


def _pad_rows(k: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(k.shape[:-1] + (n,))
    out[..., : k.shape[-1]] = k
    return out


def circular_convolve(x, k) -> np.ndarray:
    """Circular convolution z[i] = sum_j k[j] * x[(i-j) mod N].

    x has length N (last axis), k length n <= N; computed as
    ifft(fft(x) * fft(zero-pad(k, N))) with the imaginary residue checked
    against 1e-9 before it is dropped.
    """
    x = np.asarray(x, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    n = x.shape[-1]
    if k.shape[-1] > n:
        raise ValueError(
            f"kernel length {k.shape[-1]} exceeds signal length {n}"
        )
    z = ifft(fft(x) * fft(_pad_rows(k, n)))
    return _real_part(z, "circular_convolve")


def circular_convolve_naive(x, k) -> np.ndarray:
    """Direct O(N*n) evaluation of the circular sum (the oracle)."""
    x = np.asarray(x, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    if x.ndim != 1 or k.ndim != 1:
        raise ValueError("oracle operates on single vectors")
    n = x.shape[0]
    if k.shape[0] > n:
        raise ValueError(f"kernel length {k.shape[0]} exceeds signal length {n}")
    z = np.zeros(n)
    for i in range(n):
        acc = 0.0
        for j in range(k.shape[0]):
            acc += k[j] * x[(i - j) % n]
        z[i] = acc
    return z


def circular_correlate(a, b) -> np.ndarray:
    """Circular correlation c[m] = sum_i a[i] * b[(i-m) mod N].

    Adjoint companion of :func:`circular_convolve` (both arguments length N
    on the last axis); used by the convolution backward passes.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape[-1] != b.shape[-1]:
        raise ValueError(f"length mismatch: {a.shape[-1]} vs {b.shape[-1]}")
    z = ifft(fft(a) * np.conj(fft(b)))
    return _real_part(z, "circular_correlate")
