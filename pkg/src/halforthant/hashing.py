"""Counter-based 64-bit hashing for reproducible, order-independent sampling.

Every random quantity in this library is a pure function of a 64-bit seed and
integer coordinates (or a counter index).  Values can therefore be recomputed
at any time, in any order, on any number of threads, without storing generator
state.  Two independent hash domains are kept: the *site* domain backs the
random environments, the *aux* domain backs auxiliary uniforms (walker steps,
path marks) so that reusing an environment seed never correlates with them.

The scalar and vectorised code paths must produce bit-identical values; the
test suite asserts this.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_DIGEST_INIT = 0x243F6A8885A308D3
_SITE_WHITEN = 0x5851F42D4C957F2D
_AUX_WHITEN = 0xD6E8FEB86659FD93
_DERIVE_WHITEN = 0xA0761D6478BD642F
_INV_2_53 = float(2.0**-53)

# Odd multipliers, one per coordinate axis, extended on demand.
_AXIS_MULT: list[int] = [_GOLDEN]


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a Python int (mod 2^64)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _axis_mult(j: int) -> int:
    while len(_AXIS_MULT) <= j:
        _AXIS_MULT.append(mix64(_AXIS_MULT[-1]) | 1)
    return _AXIS_MULT[j]


def site_digest(coords) -> int:
    """Seed-independent digest of one lattice point."""
    h = _DIGEST_INIT
    for j, c in enumerate(coords):
        h = mix64(h ^ ((int(c) & MASK64) * _axis_mult(j) & MASK64))
    return h


def seed_key(seed: int) -> int:
    return mix64((int(seed) & MASK64) ^ _SITE_WHITEN)


def site_uniform(seed: int, coords) -> float:
    """Uniform in [0,1) attached to one lattice point, 53-bit precision."""
    return (mix64(seed_key(seed) ^ site_digest(coords)) >> 11) * _INV_2_53


def _mix64_arr(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def site_digest_array(coords: np.ndarray) -> np.ndarray:
    """Vectorised ``site_digest``; ``coords`` has shape (..., d), integer."""
    c = np.asarray(coords, dtype=np.int64).astype(np.uint64)
    h = np.full(c.shape[:-1], _DIGEST_INIT, dtype=np.uint64)
    for j in range(c.shape[-1]):
        h = _mix64_arr(h ^ (c[..., j] * np.uint64(_axis_mult(j))))
    return h


def site_uniform_array(seed, coords: np.ndarray, digests: np.ndarray | None = None) -> np.ndarray:
    """Vectorised ``site_uniform``.

    ``seed`` may be a scalar or an array broadcastable against the leading
    shape of ``coords``; precomputed ``digests`` (from ``site_digest_array``)
    can be supplied to amortise multi-seed sweeps over a fixed box.
    """
    if digests is None:
        digests = site_digest_array(coords)
    if np.isscalar(seed) or isinstance(seed, (int, np.integer)):
        key = np.uint64(seed_key(int(seed)))
    else:
        s = np.asarray(seed, dtype=np.int64).astype(np.uint64)
        key = _mix64_arr(s ^ np.uint64(_SITE_WHITEN))
    h = _mix64_arr(key ^ digests)
    return (h >> np.uint64(11)).astype(np.float64) * _INV_2_53


def aux_uniform(seed: int, index: int) -> float:
    """Uniform in [0,1) from the auxiliary stream, keyed by (seed, index)."""
    k = mix64((int(seed) & MASK64) ^ _AUX_WHITEN)
    return (mix64(k ^ ((int(index) & MASK64) * _GOLDEN & MASK64)) >> 11) * _INV_2_53


def aux_uniform_array(seed, index) -> np.ndarray:
    """Vectorised ``aux_uniform``; ``seed`` and ``index`` broadcast together."""
    if np.isscalar(seed) or isinstance(seed, (int, np.integer)):
        key = np.uint64(mix64((int(seed) & MASK64) ^ _AUX_WHITEN))
    else:
        s = np.asarray(seed, dtype=np.int64).astype(np.uint64)
        key = _mix64_arr(s ^ np.uint64(_AUX_WHITEN))
    idx = np.asarray(index, dtype=np.int64).astype(np.uint64)
    h = _mix64_arr(key ^ (idx * np.uint64(_GOLDEN)))
    return (h >> np.uint64(11)).astype(np.float64) * _INV_2_53


def derive_seed(seed: int, *indices: int) -> int:
    """Derive a child seed from a master seed and integer indices.

    Used for seed banks: bank member i of master s is ``derive_seed(s, i)``.
    """
    h = mix64((int(seed) & MASK64) ^ _DERIVE_WHITEN)
    for i in indices:
        h = mix64(h ^ ((int(i) & MASK64) * _GOLDEN & MASK64))
    return h
