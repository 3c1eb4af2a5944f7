"""Finite-atom measure spaces, atom subsets and simple functions.

The model replaces a general measure space by a finite list of positive
atom masses ``w_0, ..., w_{n-1}``.  Measurable sets of positive measure
become nonempty bitsets over atom indices, and integrable functions
become per-atom value vectors carrying the weighted l1 norm

    ||f||  =  sum_i |f_i| * w_i.

Everything is exactly computable, which is the point: norm identities
that are asymptotic statements on atomless spaces become finite checks
here, and atomless behaviour is recovered by refining every atom into
equal-mass children (see :func:`refine`).

All values are immutable after construction and safe to share between
workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySetError, ModelError, ParameterError, SpaceMismatchError

__all__ = [
    "MeasureSpace",
    "AtomSet",
    "L1Fun",
    "mass",
    "norm1",
    "normalized_indicator",
    "mask",
    "refine",
    "push_forward",
]


@dataclass(frozen=True)
class MeasureSpace:
    """Atom masses ``w_i > 0``; index ``i`` names the i-th atom.

    Total mass must be finite.  Spaces compare by value, so two spaces
    with the same weights are interchangeable.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        ws = tuple(float(x) for x in self.weights)
        if len(ws) == 0:
            raise ModelError("a measure space needs at least one atom")
        arr = np.asarray(ws, dtype=float)
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
            raise ModelError("atom masses must be strictly positive and finite")
        if not np.isfinite(arr.sum()):
            raise ModelError("total mass must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "_w", arr)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def w(self) -> np.ndarray:
        """Read-only weight vector."""
        return self._w  # type: ignore[attr-defined]

    @property
    def total(self) -> float:
        return float(self.w.sum())

    @staticmethod
    def uniform(n: int) -> "MeasureSpace":
        """n equal atoms of mass 1/n (total mass one)."""
        if n < 1:
            raise ParameterError("uniform space needs n >= 1")
        return MeasureSpace((1.0 / n,) * n)

    def full_set(self) -> "AtomSet":
        return AtomSet(self, (1 << self.n) - 1)

    def empty_set(self) -> "AtomSet":
        return AtomSet(self, 0)


def _require_same_space(a, b) -> None:
    if a.space is not b.space and a.space != b.space:
        raise SpaceMismatchError("values live on different measure spaces")


def _require_space(space: MeasureSpace, x) -> None:
    if x.space is not space and x.space != space:
        raise SpaceMismatchError("value does not live on the given measure space")


@dataclass(frozen=True)
class AtomSet:
    """Subset of atoms as a bitmask; bit ``i`` set means atom ``i`` belongs.

    Stands in for the measurable sets of positive measure when nonempty.
    """

    space: MeasureSpace
    bits: int

    def __post_init__(self):
        b = int(self.bits)
        if b < 0 or b >= (1 << self.space.n):
            raise ModelError(f"bitmask {self.bits:#x} out of range for {self.space.n} atoms")
        object.__setattr__(self, "bits", b)

    @staticmethod
    def from_indices(space: MeasureSpace, indices) -> "AtomSet":
        b = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < space.n:
                raise ModelError(f"atom index {i} out of range for {space.n} atoms")
            b |= 1 << i
        return AtomSet(space, b)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.member_mask())

    def member_mask(self) -> np.ndarray:
        n = self.space.n
        raw = self.bits.to_bytes((n + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits[:n].astype(bool)

    def complement(self) -> "AtomSet":
        return AtomSet(self.space, ((1 << self.space.n) - 1) ^ self.bits)

    def issubset(self, other: "AtomSet") -> bool:
        _require_same_space(self, other)
        return self.bits & ~other.bits == 0

    def __or__(self, other: "AtomSet") -> "AtomSet":
        _require_same_space(self, other)
        return AtomSet(self.space, self.bits | other.bits)

    def __and__(self, other: "AtomSet") -> "AtomSet":
        _require_same_space(self, other)
        return AtomSet(self.space, self.bits & other.bits)

    def __sub__(self, other: "AtomSet") -> "AtomSet":
        _require_same_space(self, other)
        return AtomSet(self.space, self.bits & ~other.bits)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.space.n and bool((self.bits >> i) & 1)

    def hex(self) -> str:
        width = max(1, (self.space.n + 3) // 4)
        return f"0x{self.bits:0{width}X}"


@dataclass(frozen=True, eq=False)
class L1Fun:
    """Simple function: one real value per atom, weighted l1 norm."""

    space: MeasureSpace
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).copy()
        if v.shape != (self.space.n,):
            raise ModelError(
                f"value vector of shape {v.shape} does not fit {self.space.n} atoms"
            )
        if not np.all(np.isfinite(v)):
            raise ModelError("function values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @staticmethod
    def zero(space: MeasureSpace) -> "L1Fun":
        return L1Fun(space, np.zeros(space.n))


def mass(space: MeasureSpace, B: AtomSet) -> float:
    """Measure of ``B``: the sum of its atom masses (0 for the empty set)."""
    _require_same_space(B, _SpaceHolder(space))
    if B.is_empty:
        return 0.0
    return float(space.w[B.member_mask()].sum())


class _SpaceHolder:
    # adapter so the space-vs-carrier check reads uniformly
    __slots__ = ("space",)

    def __init__(self, space: MeasureSpace):
        self.space = space


def norm1(f: L1Fun) -> float:
    """Weighted l1 norm ``sum_i |f_i| w_i``."""
    return float(np.abs(f.values) @ f.space.w)


def normalized_indicator(space: MeasureSpace, B: AtomSet) -> L1Fun:
    """The unit-norm indicator ``chi_B / mu(B)``.

    Raises EmptySetError for empty ``B``: only sets of positive measure
    have one.
    """
    _require_same_space(B, _SpaceHolder(space))
    if B.is_empty:
        raise EmptySetError("normalized indicator needs positive measure")
    m = B.member_mask()
    vals = np.where(m, 1.0 / float(space.w[m].sum()), 0.0)
    return L1Fun(space, vals)


def mask(f: L1Fun, B: AtomSet) -> L1Fun:
    """Pointwise product ``chi_B * f``: keep f on B, zero elsewhere."""
    _require_same_space(f, B)
    return L1Fun(f.space, np.where(B.member_mask(), f.values, 0.0))


def refine(space: MeasureSpace, k: int) -> tuple[MeasureSpace, list[list[int]]]:
    """Split every atom into ``k`` equal-mass children.

    Returns the refined space and the child map (parent index to the
    list of its child indices).  Total mass is preserved; any function
    pushed forward through the map keeps its norm.
    """
    if int(k) != k or k < 1:
        raise ParameterError("refinement factor must be an integer >= 1")
    k = int(k)
    child_w = np.repeat(space.w / k, k)
    refined = MeasureSpace(tuple(child_w))
    childmap = [list(range(i * k, (i + 1) * k)) for i in range(space.n)]
    return refined, childmap


def push_forward(f: L1Fun, refined: MeasureSpace, childmap: list[list[int]]) -> L1Fun:
    """Transport ``f`` to a refined space: each child inherits its parent value."""
    if sum(len(c) for c in childmap) != refined.n:
        raise ModelError("child map does not cover the refined space")
    vals = np.empty(refined.n)
    for parent, children in enumerate(childmap):
        vals[children] = f.values[parent]
    return L1Fun(refined, vals)
