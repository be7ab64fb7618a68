"""Multi-index combinatorics and graded monomial bases.

Every moment vector in this package is addressed through a
:class:`MonomialBasis`: an ordered list of exponent vectors of bounded total
degree, together with the inverse lookup table.  All counts are computed in
exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import CapacityError

# Guard for callers that hand counts to fixed-width consumers (array indices,
# file formats).  Python integers themselves do not overflow.
_INT_CAPACITY = 2**63 - 1

# Default ceiling on enumerated basis sizes; desk-scale problems stay far
# below this, and hitting it means the requested relaxation level is hopeless.
DEFAULT_BASIS_LIMIT = 5_000_000


@dataclass(frozen=True)
class MultiIndex:
    """Exponent vector of a monomial, with its total degree cached."""

    exponents: tuple[int, ...]
    degree: int = field(init=False)

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "degree", sum(self.exponents))

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        return MultiIndex(tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True)))

    def __len__(self) -> int:
        return len(self.exponents)


def basis_size(num_vars: int, degree: int) -> int:
    """Number of monomials in ``num_vars`` variables of total degree at most ``degree``.

    Equals ``binomial(num_vars + degree, degree)``, computed exactly.

    Raises
    ------
    CapacityError
        If the count exceeds the 64-bit range that downstream consumers
        (array shapes, solver indices) can hold.
    """
    if num_vars < 1:
        raise ValueError(f"num_vars must be >= 1, got {num_vars}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    size = math.comb(num_vars + degree, degree)
    if size > _INT_CAPACITY:
        raise CapacityError(f"basis size {size} exceeds 64-bit capacity")
    return size


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of length ``parts`` summing to exactly ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialBasis:
    """Monomials of degree at most ``max_degree`` in graded lexicographic order.

    Entries are sorted by ascending total degree; within a degree, monomials
    are ordered lexicographically with earlier variables ranked higher, so
    for two variables the degree-1 block reads ``(1, 0), (0, 1)``.  Position
    0 is always the constant monomial.
    """

    num_vars: int
    max_degree: int
    entries: tuple[MultiIndex, ...]
    lookup: dict[tuple[int, ...], int]

    def __len__(self) -> int:
        return len(self.entries)

    def index_of(self, exponents) -> int:
        """Position of an exponent vector; raises OutOfBasisError if absent."""
        key = tuple(exponents.exponents) if isinstance(exponents, MultiIndex) else tuple(exponents)
        try:
            return self.lookup[key]
        except KeyError:
            from .errors import OutOfBasisError

            raise OutOfBasisError(f"monomial {key} not in basis (n={self.num_vars}, deg<={self.max_degree})") from None


def enumerate_basis(num_vars: int, degree: int, limit: int = DEFAULT_BASIS_LIMIT) -> MonomialBasis:
    """Build the graded-lexicographic monomial basis.

    Deterministic across runs; raises :class:`CapacityError` when the basis
    would exceed ``limit`` entries.
    """
    size = basis_size(num_vars, degree)
    if size > limit:
        raise CapacityError(f"basis of size {size} exceeds configured limit {limit}")
    entries = []
    for d in range(degree + 1):
        entries.extend(MultiIndex(c) for c in _compositions(d, num_vars))
    lookup = {mi.exponents: pos for pos, mi in enumerate(entries)}
    return MonomialBasis(num_vars=num_vars, max_degree=degree, entries=tuple(entries), lookup=lookup)


def multinomial_weight(tau: MultiIndex) -> int:
    """Number of ordered tuples of unit multi-indices summing to ``tau``.

    Equals ``|tau|! / (tau_1! ... tau_n!)``, exact.
    """
    weight = math.factorial(tau.degree)
    for e in tau.exponents:
        weight //= math.factorial(e)
    if weight > _INT_CAPACITY:
        raise CapacityError(f"multinomial weight for {tau.exponents} exceeds 64-bit capacity")
    return weight
