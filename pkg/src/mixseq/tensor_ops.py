"""Dense tensor arithmetic and deterministic random number generation.

All values in this package are C-contiguous float64 ``numpy`` arrays of rank
1 to 3. The helpers here add the strict shape checking the rest of the code
relies on: every operation validates its operands and raises
:class:`ShapeError` naming the offending shapes instead of broadcasting.

Randomness comes from :class:`Rng`, a SplitMix64 counter generator. The
stream depends only on the seed and draw order, so identical seeds give
identical tensors on every platform.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "ShapeError",
    "Rng",
    "as_tensor",
    "matmul",
    "transpose",
    "ew_add",
    "ew_mul",
    "pad_tokens",
    "rand_uniform",
]


class ShapeError(ValueError):
    """Raised when operand shapes are incompatible with an operation."""


def as_tensor(data) -> np.ndarray:
    """Coerce ``data`` to a contiguous float64 array of rank 1-3."""
    arr = np.ascontiguousarray(np.asarray(data, dtype=np.float64))
    if arr.ndim == 0 or arr.ndim > 3:
        raise ShapeError(f"rank must be 1-3, got shape {arr.shape}")
    return arr


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of a (M,K) by (K,N) tensor."""
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul needs rank-2 operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul inner extents disagree: {a.shape} x {b.shape}")
    return a @ b


def transpose(a: np.ndarray) -> np.ndarray:
    if a.ndim != 2:
        raise ShapeError(f"transpose needs rank 2, got shape {a.shape}")
    return np.ascontiguousarray(a.T)


def _check_same_shape(a: np.ndarray, b: np.ndarray, op: str) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"{op} needs identical shapes, got {a.shape} and {b.shape}")


def ew_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_shape(a, b, "add")
    return a + b


def ew_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_shape(a, b, "mul")
    return a * b


def pad_tokens(a: np.ndarray, target: int, value: float = 0.0) -> np.ndarray:
    """Extend a (D,N) tensor to (D,target) columns, filling with ``value``."""
    if a.ndim != 2:
        raise ShapeError(f"pad_tokens needs rank 2, got shape {a.shape}")
    n = a.shape[1]
    if target < n:
        raise ShapeError(f"pad target {target} smaller than current width {n}")
    out = np.full((a.shape[0], target), value, dtype=np.float64)
    out[:, :n] = a
    return out


# SplitMix64 constants.
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = 0xFFFFFFFFFFFFFFFF


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


class Rng:
    """Deterministic SplitMix64 generator.

    Output i of a given seed is mix64(seed + (i+1) * GAMMA); the instance
    only tracks how many values have been drawn, so the stream is a pure
    function of (seed, draw index). Instances are single-owner: concurrent
    users should each hold their own seeded instance (see :meth:`child`).
    """

    def __init__(self, seed: int):
        self._seed = np.uint64(int(seed) & _U64)
        self._drawn = 0

    def _raw(self, n: int) -> np.ndarray:
        start = self._drawn + 1
        self._drawn += n
        idx = np.arange(start, start + n, dtype=np.uint64)
        return _mix64(self._seed + idx * _GAMMA)

    def uniform(self, shape, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
        """I.i.d. uniform draws in [lo, hi)."""
        if not lo < hi:
            raise ValueError(f"uniform needs lo < hi, got [{lo}, {hi})")
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        n = int(np.prod(shape)) if shape else 1
        u = (self._raw(n) >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)
        vals = lo + u * (hi - lo)
        # guard against rounding up onto the open bound
        vals = np.where(vals >= hi, np.nextafter(hi, lo), vals)
        return vals.reshape(shape)

    def normal(self, shape, sigma: float = 1.0) -> np.ndarray:
        """Standard Box-Muller normals scaled by sigma."""
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        n = int(np.prod(shape)) if shape else 1
        pairs = (n + 1) // 2
        u1 = 1.0 - self.uniform(pairs)  # (0, 1], keeps log finite
        u2 = self.uniform(pairs)
        r = np.sqrt(-2.0 * np.log(u1))
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(2.0 * np.pi * u2)
        out[1::2] = r * np.sin(2.0 * np.pi * u2)
        return (sigma * out[:n]).reshape(shape)

    def integers(self, lo: int, hi: int, n: int) -> np.ndarray:
        """n uniform integers in [lo, hi)."""
        if not lo < hi:
            raise ValueError(f"integers needs lo < hi, got [{lo}, {hi})")
        u = self.uniform((n,))
        return (lo + np.floor(u * (hi - lo))).astype(np.int64)

    def child(self, tag: int) -> "Rng":
        """Independent stream derived from this seed and an integer tag."""
        z = _mix64(np.asarray(self._seed + np.uint64(tag & _U64) * _GAMMA))
        return Rng(int(z))


def rand_uniform(rng: Rng, shape, lo: float, hi: float) -> np.ndarray:
    """Uniform tensor in [lo, hi); advances ``rng``."""
    return rng.uniform(shape, lo, hi)
