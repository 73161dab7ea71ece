"""Exponent-tuple combinatorics: the star pairing and the twist bicharacter.

A multi-index is an (m+n)-tuple of integers laid out in position order.  For
the polynomial-side spaces positions 1..m are bosonic (divided-power
exponents) and positions m+1..m+n fermionic (0/1 exponents); the dual-side
spaces flip the pattern.  Basis keys are constrained; *labels* (the arguments
of the diagonal twist automorphisms) may hold arbitrary integers, e.g. a
label -e_i + e_{i+1}.

The pairing a * b = sum_{i > j} a_i b_j drives every commutation factor.  The
twist bicharacter on labels multiplies a q-power from the bosonic blocks, a
(-q)-power from the fermionic blocks, and a mixed q-power, and satisfies
theta(a, b) * theta(b, a) = 1.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .qarith import QMode, ScalarQ

__all__ = ["Shape", "MultiIndex", "star", "theta", "ShapeMismatchError"]


class ShapeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    """Rank data for an (m|n)-type space.

    ``fermionic_first`` selects the dual-side layout (fermionic block of
    length m first, bosonic block of length n second).  ``restricted_ell``
    caps bosonic basis exponents at ell - 1; it is only meaningful for
    root-of-unity coefficient modes.
    """

    m: int
    n: int
    fermionic_first: bool = False
    restricted_ell: int | None = None

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("negative rank")
        if self.restricted_ell is not None and self.restricted_ell < 3:
            raise ValueError("restricted exponent cap requires ell >= 3")

    @property
    def size(self) -> int:
        return self.m + self.n

    def is_fermionic_pos(self, pos: int) -> bool:
        """Parity of 1-based position."""
        if self.fermionic_first:
            return pos <= self.m
        return pos > self.m

    @functools.cached_property
    def fermionic_mask(self) -> tuple[bool, ...]:
        return tuple(self.is_fermionic_pos(p) for p in range(1, self.size + 1))

    def bosonic_positions(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.size + 1) if not self.is_fermionic_pos(p))

    def fermionic_positions(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.size + 1) if self.is_fermionic_pos(p))


@dataclass(frozen=True, order=True)
class MultiIndex:
    """An exponent tuple over a fixed shape, compared lexicographically.

    Dataclass ordering compares ``entries`` first, which gives the fixed
    lexicographic order used for sparse storage and deterministic reports.
    """

    entries: tuple[int, ...]
    shape: Shape = field(compare=False)

    def __post_init__(self):
        if len(self.entries) != self.shape.size:
            raise ShapeMismatchError("entry count does not match shape")

    # ---- views -------------------------------------------------------------

    @property
    def bos(self) -> tuple[int, ...]:
        mask = self.shape.fermionic_mask
        return tuple(e for e, f in zip(self.entries, mask) if not f)

    @property
    def fer(self) -> tuple[int, ...]:
        mask = self.shape.fermionic_mask
        return tuple(e for e, f in zip(self.entries, mask) if f)

    def degree(self) -> int:
        return sum(self.entries)

    def fermionic_degree(self) -> int:
        return sum(self.fer)

    def bosonic_degree(self) -> int:
        return sum(self.bos)

    # ---- label arithmetic (no validity constraints) -------------------------

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        self._check(other)
        return MultiIndex(tuple(a + b for a, b in zip(self.entries, other.entries)), self.shape)

    def __sub__(self, other: "MultiIndex") -> "MultiIndex":
        self._check(other)
        return MultiIndex(tuple(a - b for a, b in zip(self.entries, other.entries)), self.shape)

    def __neg__(self) -> "MultiIndex":
        return MultiIndex(tuple(-a for a in self.entries), self.shape)

    def scaled(self, c: int) -> "MultiIndex":
        return MultiIndex(tuple(c * a for a in self.entries), self.shape)

    def shifted(self, pos: int, delta: int) -> "MultiIndex":
        """New index with entry at 1-based position pos changed by delta."""
        e = list(self.entries)
        e[pos - 1] += delta
        return MultiIndex(tuple(e), self.shape)

    def _check(self, other: "MultiIndex") -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError("shapes disagree")

    # ---- basis-key validity --------------------------------------------------

    def is_valid_basis_key(self) -> bool:
        """Basis keys: bosonic entries >= 0 (< ell when restricted), fermionic in {0,1}."""
        cap = self.shape.restricted_ell
        for e, fer in zip(self.entries, self.shape.fermionic_mask):
            if fer:
                if e not in (0, 1):
                    return False
            else:
                if e < 0 or (cap is not None and e >= cap):
                    return False
        return True

    # ---- helpers -------------------------------------------------------------

    @classmethod
    def unit(cls, shape: Shape) -> "MultiIndex":
        return cls((0,) * shape.size, shape)

    @classmethod
    def basis_vector(cls, shape: Shape, pos: int, value: int = 1) -> "MultiIndex":
        """The label value * e_pos (1-based position)."""
        if not 1 <= pos <= shape.size:
            raise ValueError(f"position {pos} out of range 1..{shape.size}")
        e = [0] * shape.size
        e[pos - 1] = value
        return cls(tuple(e), shape)

    def prefix_sum(self, pos: int) -> int:
        """Sum of entries strictly before 1-based position pos."""
        return sum(self.entries[: pos - 1])

    def suffix_sum(self, pos: int) -> int:
        """Sum of entries strictly after 1-based position pos."""
        return sum(self.entries[pos:])

    def render(self) -> str:
        first = self.entries[: self.shape.m]
        second = self.entries[self.shape.m :]
        return "(" + ",".join(map(str, first)) + " | " + ",".join(map(str, second)) + ")"

    def __str__(self) -> str:
        return self.render()


def star(a: MultiIndex, b: MultiIndex) -> int:
    """The pairing sum_{i > j} a_i b_j over all positions; bilinear."""
    a._check(b)
    total = 0
    running = 0  # sum of b_j for j < i
    for ai, bi in zip(a.entries, b.entries):
        if ai:
            total += ai * running
        running += bi
    return total


def _split(a: MultiIndex) -> tuple[MultiIndex, MultiIndex]:
    # bosonic / fermionic parts embedded back into full position tuples
    mask = a.shape.fermionic_mask
    bos = tuple(0 if f else e for e, f in zip(a.entries, mask))
    fer = tuple(e if f else 0 for e, f in zip(a.entries, mask))
    return MultiIndex(bos, a.shape), MultiIndex(fer, a.shape)


def theta(a: MultiIndex, b: MultiIndex, mode: QMode) -> ScalarQ:
    """Twist bicharacter on labels of a polynomial-side space.

    theta(a, b) = q^(ab - ba on bosonic parts) * (-q)^(ab - ba on fermionic
    parts) * q^(fer(a)*bos(b) - fer(b)*bos(a)).  Dual-side spaces carry a
    different commutation twist; see superspaces.commutation_factor.
    """
    if a.shape.fermionic_first:
        raise ShapeMismatchError("twist bicharacter is defined on polynomial-side labels")
    a._check(b)
    a_bos, a_fer = _split(a)
    b_bos, b_fer = _split(b)
    bos_exp = star(a_bos, b_bos) - star(b_bos, a_bos)
    fer_exp = star(a_fer, b_fer) - star(b_fer, a_fer)
    cross_exp = star(a_fer, b_bos) - star(b_fer, a_bos)
    sign = -1 if fer_exp % 2 else 1
    value = mode.q_power(bos_exp + fer_exp + cross_exp)
    return -value if sign < 0 else value
