"""Coupled random environments on finite boxes of Z^d.

Each site of Z^d is independently a *half* site with probability p (outgoing
arrows only to the d positive neighbours x + e_i) or a *full* site (arrows to
all 2d neighbours x +- e_i).  Sites are decided by comparing a per-site
uniform U(x), a pure function of (seed, coordinates), against p; sharing the
seed across values of p yields the natural monotone coupling: the half-site
set can only grow with p.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .hashing import MASK64, site_digest_array, site_uniform, site_uniform_array
from .lattice import LatticePath

ENV_DUMP_MAGIC = b"HOEN"
ENV_DUMP_VERSION = 1


class SiteKind(enum.Enum):
    FULL = "full"
    HALF = "half"


@dataclass(frozen=True)
class EnvConfig:
    """Model parameters plus the box of materialisable sites (|x|_inf <= radius)."""

    dimension: int
    p: float
    radius: int
    seed: int

    def __post_init__(self):
        if self.dimension < 2:
            raise ConfigError("dimension must be >= 2")
        if not (0.0 <= self.p <= 1.0):
            raise ConfigError("p must lie in [0, 1]")
        if self.radius < 1:
            raise ConfigError("box radius must be >= 1")
        object.__setattr__(self, "seed", int(self.seed) & MASK64)


class Environment:
    """Lazily evaluated arrow configuration; values are pure in (seed, x).

    Nothing is materialised up front: ``site_kind`` hashes on demand, and the
    vectorised ``half_mask`` serves hot loops.  Both must agree bit-for-bit.
    """

    def __init__(self, config: EnvConfig):
        self.config = config

    @classmethod
    def create(cls, dimension: int, p: float, radius: int, seed: int) -> "Environment":
        return cls(EnvConfig(dimension, p, radius, seed))

    @property
    def dimension(self) -> int:
        return self.config.dimension

    @property
    def p(self) -> float:
        return self.config.p

    @property
    def radius(self) -> int:
        return self.config.radius

    @property
    def seed(self) -> int:
        return self.config.seed

    def site_uniform(self, x) -> float:
        if len(x) != self.dimension:
            raise ValueError("coordinate arity mismatch")
        return site_uniform(self.seed, x)

    def is_half(self, x) -> bool:
        # Strict comparison: p = 0 is all-full, p = 1 all-half, coupling tie-free.
        return self.site_uniform(x) < self.p

    def site_kind(self, x) -> SiteKind:
        return SiteKind.HALF if self.is_half(x) else SiteKind.FULL

    def half_mask(self, coords: np.ndarray, digests: np.ndarray | None = None) -> np.ndarray:
        """Vectorised site kinds: True where half. ``coords`` shape (..., d)."""
        return site_uniform_array(self.seed, coords, digests=digests) < self.p

    def out_steps(self, x) -> tuple[tuple[int, ...], ...]:
        """Available outgoing unit steps at x; always contains every +e_i."""
        d = self.dimension
        pos = tuple(tuple(1 if j == i else 0 for j in range(d)) for i in range(d))
        if self.is_half(x):
            return pos
        neg = tuple(tuple(-1 if j == i else 0 for j in range(d)) for i in range(d))
        return pos + neg


def is_consistent(env: Environment, path: LatticePath) -> bool:
    """True iff every step of the path follows an arrow present at its
    departure site.  Positive-axis steps are always consistent; negative steps
    require a full departure site."""
    if path.dimension != env.dimension:
        raise ValueError("path/environment dimension mismatch")
    if len(path) == 0:
        return True
    neg = path.steps < 0
    if not np.any(neg):
        return True
    departures = path.positions()[:-1][neg]
    return not bool(np.any(env.half_mask(departures)))


def box_coords(radius: int, d: int) -> np.ndarray:
    """All lattice points of [-radius, radius]^d, row-major, shape (m, d)."""
    side = 2 * radius + 1
    grids = np.meshgrid(*([np.arange(-radius, radius + 1)] * d), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def half_bitmap(env: Environment, radius: int | None = None) -> np.ndarray:
    """Boolean half-site mask over [-R, R]^d as a d-dimensional array."""
    r = env.radius if radius is None else radius
    if r > env.radius:
        raise ConfigError("requested box exceeds environment radius")
    side = 2 * r + 1
    coords = box_coords(r, env.dimension)
    return env.half_mask(coords).reshape((side,) * env.dimension)


def write_env_dump(env: Environment, path) -> None:
    """One bit per site (1 = half), row-major over [-R, R]^d.

    32-byte little-endian header: magic "HOEN", version u16, d u16, R u32,
    p f64, seed u64, 4 reserved zero bytes.
    """
    header = struct.pack(
        "<4sHHIdQ4x",
        ENV_DUMP_MAGIC,
        ENV_DUMP_VERSION,
        env.dimension,
        env.radius,
        env.p,
        env.seed,
    )
    bits = np.packbits(half_bitmap(env).ravel().astype(np.uint8))
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(bits.tobytes())


def read_env_dump(path):
    """Inverse of ``write_env_dump``: returns (EnvConfig, half-site bool array)."""
    with open(path, "rb") as fh:
        raw = fh.read()
    magic, version, d, radius, p, seed = struct.unpack("<4sHHIdQ4x", raw[:32])
    if magic != ENV_DUMP_MAGIC:
        raise ValueError("not an environment dump")
    if version != ENV_DUMP_VERSION:
        raise ValueError(f"unsupported dump version {version}")
    side = 2 * radius + 1
    n_sites = side**d
    bits = np.unpackbits(np.frombuffer(raw[32:], dtype=np.uint8), count=n_sites)
    cfg = EnvConfig(d, p, radius, seed)
    return cfg, bits.astype(bool).reshape((side,) * d)
