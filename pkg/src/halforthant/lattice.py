"""Lattice paths on Z^d with signed-axis step codes.

A step is stored as a signed axis code: +k for +e_k, -k for -e_k (1-based, so
code 0 is never valid).  Codes keep paths compact and make "is this one of the
positive steps" checks trivial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

# d = 2 conventions: E = +e1, W = -e1, N = +e2, S = -e2.
E, W, N, S = 1, -1, 2, -2

_AXIS_LETTER = {1: "E", -1: "W", 2: "N", -2: "S"}
_LETTER_AXIS = {v: k for k, v in _AXIS_LETTER.items()}
_TOKEN_RE = re.compile(r"[ENWS]|[+-]\d+")


def step_vector(code: int, d: int) -> tuple[int, ...]:
    axis = abs(code) - 1
    if code == 0 or axis >= d:
        raise ValueError(f"step code {code} invalid in dimension {d}")
    v = [0] * d
    v[axis] = 1 if code > 0 else -1
    return tuple(v)


def steps_to_offsets(codes: np.ndarray, d: int) -> np.ndarray:
    """(ell,) step codes -> (ell, d) unit step vectors."""
    codes = np.asarray(codes, dtype=np.int8)
    out = np.zeros((len(codes), d), dtype=np.int64)
    if len(codes):
        axes = np.abs(codes).astype(np.int64) - 1
        if np.any((codes == 0) | (axes >= d)):
            raise ValueError("invalid step code for dimension")
        out[np.arange(len(codes)), axes] = np.sign(codes)
    return out


@dataclass(frozen=True)
class LatticePath:
    """Finite nearest-neighbour path: a start point and a step-code sequence."""

    start: tuple[int, ...]
    steps: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int8))

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(int(c) for c in self.start))
        codes = np.asarray(self.steps, dtype=np.int8)
        object.__setattr__(self, "steps", codes)
        d = len(self.start)
        if len(codes) and (np.any(codes == 0) or np.any(np.abs(codes) > d)):
            raise ValueError("step codes must be nonzero signed axes within dimension")

    @property
    def dimension(self) -> int:
        return len(self.start)

    def __len__(self) -> int:
        return int(len(self.steps))

    @property
    def length(self) -> int:
        return len(self)

    def positions(self) -> np.ndarray:
        """(ell+1, d) array of visited points, start first."""
        offs = steps_to_offsets(self.steps, self.dimension)
        pos = np.empty((len(self) + 1, self.dimension), dtype=np.int64)
        pos[0] = self.start
        if len(self):
            np.cumsum(offs, axis=0, out=pos[1:])
            pos[1:] += pos[0]
        return pos

    @property
    def endpoint(self) -> tuple[int, ...]:
        offs = steps_to_offsets(self.steps, self.dimension)
        return tuple(int(c) for c in np.asarray(self.start) + offs.sum(axis=0))

    def b_count(self) -> int:
        """Number of steps in {+e1, -e2} (the 'east or south' steps, d = 2)."""
        if self.dimension != 2:
            raise ValueError("b_count is a d = 2 statistic")
        return int(np.count_nonzero((self.steps == E) | (self.steps == S)))

    def serialize(self) -> str:
        """CSV-safe ASCII form: 'x1,...,xd:EWNS+3-3...'."""
        toks = []
        for c in self.steps.tolist():
            toks.append(_AXIS_LETTER.get(c, f"{c:+d}"))
        return ",".join(str(c) for c in self.start) + ":" + "".join(toks)

    @classmethod
    def deserialize(cls, text: str) -> "LatticePath":
        head, _, body = text.partition(":")
        start = tuple(int(t) for t in head.split(",") if t != "")
        codes = [_LETTER_AXIS.get(t, None) or int(t) for t in _TOKEN_RE.findall(body)]
        return cls(start, np.asarray(codes, dtype=np.int8))


def loop_erase(path: LatticePath) -> LatticePath:
    """Forward loop-erasure: keep the first visit of every point.

    Scanning from the start, whenever the walk returns to an already kept
    point the intervening loop is dropped.  Endpoints are preserved and any
    kept step was a step of the input, so consistency is inherited.
    """
    pos = path.positions()
    kept_index: dict[tuple[int, ...], int] = {tuple(pos[0]): 0}
    kept_steps: list[int] = []
    kept_pts: list[tuple[int, ...]] = [tuple(pos[0])]
    for j, code in enumerate(path.steps.tolist()):
        pt = tuple(int(c) for c in pos[j + 1])
        if pt in kept_index:
            cut = kept_index[pt]
            for q in kept_pts[cut + 1:]:
                del kept_index[q]
            del kept_pts[cut + 1:]
            del kept_steps[cut:]
        else:
            kept_steps.append(code)
            kept_pts.append(pt)
            kept_index[pt] = len(kept_pts) - 1
    return LatticePath(path.start, np.asarray(kept_steps, dtype=np.int8))
