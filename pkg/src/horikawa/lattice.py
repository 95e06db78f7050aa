"""Exact integer intersection theory on blown-up Hirzebruch surfaces.

Divisor classes are integer vectors in the ordered basis (C0, f, e1, ..., ek),
where C0 is the negative section, f the fiber, and e_i the exceptional classes
of k point blow-ups.  Every operation is exact; Python integers are unbounded,
so no overflow handling is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficient vector of a divisor class on a fixed basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"divisor coefficients must be integers, got {c!r}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def _require_same_rank(self, other: "DivisorClass") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError(
                f"divisor classes live on different lattices "
                f"(lengths {len(self.coeffs)} and {len(other.coeffs)})"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._require_same_rank(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._require_same_rank(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: int) -> "DivisorClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return DivisorClass(tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__


@dataclass(frozen=True)
class NegativityResult:
    """Mutual Gram matrix of a family of classes and its definiteness verdict."""

    gram: tuple[tuple[int, ...], ...]
    negative_definite: bool
    vacuous: bool


def _int_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    size = len(rows)
    if size == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class BlownHirzebruch:
    """The Picard lattice of a Hirzebruch surface F_n blown up k times.

    Basis (C0, f, e1, ..., ek) with Gram matrix

        C0.C0 = -n,  C0.f = 1,  f.f = 0,  e_i.e_j = -delta_ij,

    and both C0 and f orthogonal to every e_i.  The rank is k + 2 and the
    signature is (1, k + 1).  Blow-up centers carry no coordinates here:
    geometry enters only through which integer combinations the caller
    singles out as curve classes.
    """

    hirzebruch_index: int
    blowup_count: int = 0

    def __post_init__(self) -> None:
        if self.hirzebruch_index < 0:
            raise ValueError("hirzebruch_index must be nonnegative")
        if self.blowup_count < 0:
            raise ValueError("blowup_count must be nonnegative")

    @property
    def rank(self) -> int:
        return self.blowup_count + 2

    def divisor(self, c0: int, f: int, *exceptional: int) -> DivisorClass:
        """Build a class from coefficients; omitted e-coefficients are zero."""
        if len(exceptional) > self.blowup_count:
            raise ValueError(
                f"{len(exceptional)} exceptional coefficients on a surface with "
                f"{self.blowup_count} blow-ups"
            )
        tail = exceptional + (0,) * (self.blowup_count - len(exceptional))
        return DivisorClass((c0, f) + tail)

    def c0(self) -> DivisorClass:
        return self.divisor(1, 0)

    def fiber(self) -> DivisorClass:
        return self.divisor(0, 1)

    def exceptional(self, i: int) -> DivisorClass:
        """The i-th exceptional class e_i, 1-based."""
        if not 1 <= i <= self.blowup_count:
            raise ValueError(f"exceptional index {i} out of range 1..{self.blowup_count}")
        coeffs = [0] * self.rank
        coeffs[1 + i] = 1
        return DivisorClass(tuple(coeffs))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)

    def pairing(self, a: DivisorClass, b: DivisorClass) -> int:
        """Intersection number a.b under the Gram matrix; symmetric and bilinear."""
        if len(a.coeffs) != self.rank or len(b.coeffs) != self.rank:
            raise ValueError(
                f"classes of length {len(a.coeffs)} and {len(b.coeffs)} "
                f"on a rank {self.rank} lattice"
            )
        n = self.hirzebruch_index
        value = -n * a.coeffs[0] * b.coeffs[0]
        value += a.coeffs[0] * b.coeffs[1] + a.coeffs[1] * b.coeffs[0]
        value -= sum(x * y for x, y in zip(a.coeffs[2:], b.coeffs[2:]))
        return value

    def gram(self, classes: Sequence[DivisorClass]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.pairing(a, b) for b in classes) for a in classes)

    def canonical_class(self) -> DivisorClass:
        """K = -2*C0 - (n+2)*f + e1 + ... + ek."""
        n = self.hirzebruch_index
        return self.divisor(-2, -(n + 2), *([1] * self.blowup_count))

    def blow_up(self) -> "BlownHirzebruch":
        return BlownHirzebruch(self.hirzebruch_index, self.blowup_count + 1)

    def total_transform(self, d: DivisorClass) -> DivisorClass:
        """Pull back a class from the surface this one blows down to.

        Total transforms append a zero e-coefficient, so all pairings are
        preserved.
        """
        if self.blowup_count == 0:
            raise ValueError("surface has no blow-up to pull back along")
        if len(d.coeffs) != self.rank - 1:
            raise ValueError(
                f"class of length {len(d.coeffs)} cannot come from the "
                f"rank {self.rank - 1} predecessor"
            )
        return DivisorClass(d.coeffs + (0,))

    def adjunction_degree(self, c: DivisorClass) -> int:
        """C.(C + K), which is 2g - 2 for a reduced irreducible member."""
        return self.pairing(c, c + self.canonical_class())

    def negativity_check(self, classes: Iterable[DivisorClass]) -> NegativityResult:
        """Mutual Gram matrix plus a leading-principal-minor definiteness test.

        Negative definite means the minors alternate in sign starting negative.
        An empty family is vacuously negative definite and flagged as such.
        """
        family = tuple(classes)
        if len({c.coeffs for c in family}) != len(family):
            raise ValueError("classes must be pairwise distinct")
        if not family:
            return NegativityResult((), True, True)
        gram = self.gram(family)
        rows = [list(r) for r in gram]
        definite = True
        for size in range(1, len(family) + 1):
            minor = _int_det([row[:size] for row in rows[:size]])
            if (-1) ** size * minor <= 0:
                definite = False
                break
        return NegativityResult(gram, definite, False)
