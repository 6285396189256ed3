"""Exact linear algebra over GF(2) for edge colors, spans and ranks.

A color is a vector with coordinates over the basis x0..xn, stored as an
integer bit mask whose bit i holds the coefficient of x_i.  String literals
are written most-significant-first with x0 leftmost, so "0110" means
x1 + x2.  Subspaces keep a canonical reduced row echelon basis (pivot
columns ascending), making subspace equality plain sequence equality.

All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidModulus


@dataclass(frozen=True, order=True)
class ColorVector:
    """A vector of GF(2)^width; bit i of ``mask`` is the x_i coefficient."""

    mask: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"vector width must be >= 1, got {self.width}")
        if self.mask < 0 or self.mask >> self.width:
            raise ValueError(f"mask {self.mask:#b} does not fit width {self.width}")

    @classmethod
    def from_string(cls, text: str) -> "ColorVector":
        """Parse a '0'/'1' string, leftmost character = x0 coefficient."""
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"color literal must be a nonempty 0/1 string, got {text!r}")
        mask = 0
        for i, c in enumerate(text):
            if c == "1":
                mask |= 1 << i
        return cls(mask, len(text))

    @classmethod
    def unit(cls, i: int, width: int) -> "ColorVector":
        """The basis vector x_i."""
        if not 0 <= i < width:
            raise ValueError(f"unit index {i} out of range for width {width}")
        return cls(1 << i, width)

    @classmethod
    def zero(cls, width: int) -> "ColorVector":
        return cls(0, width)

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def __add__(self, other: "ColorVector") -> "ColorVector":
        if self.width != other.width:
            raise DimensionMismatch(
                f"cannot add vectors of widths {self.width} and {other.width}"
            )
        return ColorVector(self.mask ^ other.mask, self.width)

    def coeff(self, i: int) -> int:
        return (self.mask >> i) & 1

    def __str__(self) -> str:
        return "".join("1" if self.coeff(i) else "0" for i in range(self.width))

    def __repr__(self) -> str:
        return f"ColorVector({str(self)!r})"


def _pivot(mask: int) -> int:
    """Lowest set bit; the pivot column of a reduced row."""
    return mask & -mask


def _reduce_mask(mask: int, basis: Sequence[int]) -> int:
    """Reduce ``mask`` against a reduced-echelon basis (pivots ascending)."""
    for row in basis:
        if mask & _pivot(row):
            mask ^= row
    return mask


def _rref(masks: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced row echelon basis of the span of ``masks``."""
    basis: list[int] = []
    for mask in masks:
        reduced = _reduce_mask(mask, basis)
        if reduced == 0:
            continue
        piv = _pivot(reduced)
        basis = [row ^ reduced if row & piv else row for row in basis]
        basis.append(reduced)
        basis.sort(key=_pivot)
    return tuple(basis)


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^width with its canonical reduced basis.

    Two Subspaces are equal iff their canonical bases are identical, so the
    dataclass equality/hash is the subspace equality.
    """

    basis: tuple[int, ...]
    width: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vectors(self) -> tuple[ColorVector, ...]:
        return tuple(ColorVector(m, self.width) for m in self.basis)

    def contains_mask(self, mask: int) -> bool:
        return _reduce_mask(mask, self.basis) == 0

    def __le__(self, other: "Subspace") -> bool:
        if self.width != other.width:
            raise DimensionMismatch(
                f"cannot compare subspaces of widths {self.width} and {other.width}"
            )
        return all(other.contains_mask(m) for m in self.basis)

    def __str__(self) -> str:
        if not self.basis:
            return "Span()"
        return "Span(" + ", ".join(str(v) for v in self.vectors) + ")"


def span(vectors: Sequence[ColorVector], *, width: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors``.

    ``width`` is required when the list is empty (the ambient dimension
    cannot be inferred) and must agree with the vectors otherwise.
    """
    widths = {v.width for v in vectors}
    if width is not None:
        widths.add(width)
    if len(widths) > 1:
        raise DimensionMismatch(f"mixed vector widths in span: {sorted(widths)}")
    if not widths:
        raise DimensionMismatch("span of an empty set needs an explicit width")
    w = widths.pop()
    return Subspace(_rref(v.mask for v in vectors), w)


def contains(s: Subspace, v: ColorVector) -> bool:
    """Membership test: does ``v`` reduce to zero against the basis of ``s``?"""
    if s.width != v.width:
        raise DimensionMismatch(
            f"subspace width {s.width} does not match vector width {v.width}"
        )
    return s.contains_mask(v.mask)


def congruent_mod(a: ColorVector, b: ColorVector, m: ColorVector) -> bool:
    """True iff a + b lies in {0, m}."""
    if not (a.width == b.width == m.width):
        raise DimensionMismatch(
            f"mixed widths in congruence: {a.width}, {b.width}, {m.width}"
        )
    if m.is_zero:
        raise InvalidModulus("congruence modulus must be nonzero")
    return (a.mask ^ b.mask) in (0, m.mask)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Canonical basis of s1 and s2's intersection (Zassenhaus over GF(2)).

    Rows [a | a] for a in s1 and [b | 0] for b in s2 are reduced together;
    rows whose left block vanished carry the intersection in the right block.
    """
    if s1.width != s2.width:
        raise DimensionMismatch(
            f"cannot intersect subspaces of widths {s1.width} and {s2.width}"
        )
    w = s1.width
    combined = [m | (m << w) for m in s1.basis] + list(s2.basis)
    low = (1 << w) - 1
    inter = [row >> w for row in _rref(combined) if (row & low) == 0]
    return Subspace(_rref(inter), w)


def rank_gf2(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over GF(2) of a rectangular 0/1 matrix (0 for an empty one)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged rows: all matrix rows must have equal length")
    if any(e not in (0, 1) for r in rows for e in r):
        raise ValueError("matrix entries must be 0 or 1")
    masks = (sum(bit << i for i, bit in enumerate(r)) for r in rows)
    return len(_rref(masks))


def null_space(row_masks: Sequence[int], width: int) -> tuple[int, ...]:
    """Canonical basis of {t : every row has even overlap with t}.

    Rows are functionals over the dual pairing x_i(t_j) = delta_ij, so a
    vector t is in the kernel iff popcount(row & t) is even for every row.
    """
    basis = _rref(row_masks)
    pivots = [_pivot(row).bit_length() - 1 for row in basis]
    pivot_set = set(pivots)
    kernel = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = 1 << free
        for p, row in zip(pivots, basis):
            if (row >> free) & 1:
                vec |= 1 << p
        kernel.append(vec)
    return _rref(kernel)
