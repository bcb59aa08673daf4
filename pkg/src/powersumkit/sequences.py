"""Named generators for the finite variable sets the symmetric functions
are evaluated over.

A SequenceSpec is a small frozen value (hashable, so usable as a cache key)
that expands to an exact tuple of Fractions on demand.  All tags except
``inverse_squares`` and ``explicit`` generate integer values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Tuple

__all__ = ["SequenceSpec"]


@dataclass(frozen=True)
class SequenceSpec:
    tag: str
    n: int = 0
    start: int = 1
    explicit_values: Tuple[Fraction, ...] = field(default=())

    # -- constructors ------------------------------------------------------

    @classmethod
    def naturals(cls, n: int, start: int = 1) -> "SequenceSpec":
        """start, start+1, ..., n (empty when n < start)."""
        return cls("naturals", n, start)

    @classmethod
    def ones(cls, n: int) -> "SequenceSpec":
        return cls("ones", n)

    @classmethod
    def squares(cls, n: int) -> "SequenceSpec":
        """1^2, 2^2, ..., n^2."""
        return cls("squares", n)

    @classmethod
    def odd_squares(cls, n: int) -> "SequenceSpec":
        """1^2, 3^2, ..., (2n-1)^2."""
        return cls("odd_squares", n)

    @classmethod
    def doubled_triangulars(cls, n: int) -> "SequenceSpec":
        """2, 6, ..., n(n+1), i.e. twice the first n triangular numbers."""
        return cls("doubled_triangulars", n)

    @classmethod
    def inverse_squares(cls, n: int) -> "SequenceSpec":
        """1/1^2, 1/2^2, ..., 1/n^2 (finite truncation)."""
        return cls("inverse_squares", n)

    @classmethod
    def from_values(cls, values: Iterable) -> "SequenceSpec":
        return cls("explicit", explicit_values=tuple(Fraction(v) for v in values))

    # -- expansion ---------------------------------------------------------

    def values(self) -> Tuple[Fraction, ...]:
        tag = self.tag
        if tag == "explicit":
            return self.explicit_values
        if self.n < 0:
            raise ValueError("sequence length must be >= 0")
        if tag == "naturals":
            return tuple(Fraction(i) for i in range(self.start, self.n + 1))
        if tag == "ones":
            return (Fraction(1),) * self.n
        if tag == "squares":
            return tuple(Fraction(i * i) for i in range(1, self.n + 1))
        if tag == "odd_squares":
            return tuple(Fraction((2 * i - 1) ** 2) for i in range(1, self.n + 1))
        if tag == "doubled_triangulars":
            return tuple(Fraction(i * (i + 1)) for i in range(1, self.n + 1))
        if tag == "inverse_squares":
            return tuple(Fraction(1, i * i) for i in range(1, self.n + 1))
        raise ValueError(f"unknown sequence tag {tag!r}")

    def __len__(self) -> int:
        if self.tag == "explicit":
            return len(self.explicit_values)
        if self.tag == "naturals":
            return max(0, self.n - self.start + 1)
        return self.n
