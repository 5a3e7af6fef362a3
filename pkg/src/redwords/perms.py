"""Permutations of {1..n} in one-line notation.

Everything downstream (words, diagrams, tableaux) indexes from 1, so a
permutation ``p`` is applied as ``p(i)`` rather than ``p[i-1]``; the tuple
storage is an implementation detail.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator


class Permutation(tuple):
    """A bijection on {1..n}, stored in one-line notation (position 1 first).

    >>> p = Permutation([4, 2, 1, 5, 3])
    >>> p(1), p(5)
    (4, 3)
    >>> p.length
    5
    >>> str(p.inverse())
    '3,2,5,1,4'
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> "Permutation":
        entries = tuple(int(x) for x in entries)
        n = len(entries)
        if n < 1:
            raise ValueError("a permutation needs at least one entry")
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {entries}")
        return tuple.__new__(cls, entries)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The longest permutation n, n-1, ..., 2, 1.

        >>> str(Permutation.longest(4))
        '4,3,2,1'
        """
        return cls(range(n, 0, -1))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse comma-separated one-line notation, e.g. ``4,2,1,5,3``.

        Values may exceed 9, so a bare digit string is not accepted.
        """
        try:
            entries = [int(part) for part in text.strip().split(",")]
        except ValueError:
            raise ValueError(f"malformed permutation text: {text!r}") from None
        return cls(entries)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        """Value at position i, 1-based."""
        if not 1 <= i <= len(self):
            raise ValueError(f"position {i} out of range 1..{len(self)}")
        return self[i - 1]

    @property
    def length(self) -> int:
        """Number of pairs i < j with entry at i greater than entry at j."""
        return sum(
            1
            for i, j in itertools.combinations(range(len(self)), 2)
            if self[i] > self[j]
        )

    def descents(self) -> list[int]:
        """Positions i (1-based) where the entry at i exceeds the entry at i+1."""
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def swap(self, i: int) -> "Permutation":
        """Exchange the entries at positions i and i+1.

        Rejects out-of-range i rather than clamping; a silent no-op here
        would mask a malformed word upstream.

        >>> str(Permutation([2, 4, 1, 5, 3]).swap(1))
        '4,2,1,5,3'
        """
        if not 1 <= i <= len(self) - 1:
            raise ValueError(f"swap position {i} out of range 1..{len(self) - 1}")
        entries = list(self)
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
        return Permutation(entries)

    def inverse(self) -> "Permutation":
        out = [0] * len(self)
        for pos, value in enumerate(self, start=1):
            out[value - 1] = pos
        return Permutation(out)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose: (p * q)(i) = p(q(i)).  Sizes must match.

        >>> p, q = Permutation([2, 1, 3, 4, 5]), Permutation([1, 3, 2, 4, 5])
        >>> str(p * q)
        '2,3,1,4,5'
        """
        if not isinstance(other, tuple):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError(f"size mismatch: {len(self)} vs {len(other)}")
        return Permutation(self[q - 1] for q in other)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
