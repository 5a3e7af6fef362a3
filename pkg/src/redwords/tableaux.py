"""Standard balanced tableaux: the balance predicate, enumeration, moves,
inversion statistics, row-sort reconstruction, and the flip and complement
involutions.

A standard balanced tableau is a bijective filling of a Rothe diagram with
1..cell-count such that at every cell, the number of larger entries to its
right equals the number of smaller entries above it.  All moves here act on
entry *values*, not cell positions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .diagrams import (
    Cell,
    Diagram,
    Filling,
    permutation_of_diagram,
    rothe_diagram,
    super_tableau,
)
from .perms import Permutation


def _check_standard(f: Filling) -> None:
    if sorted(f.entries) != list(range(1, len(f) + 1)):
        raise ValueError(f"entries are not a bijection onto 1..{len(f)}")


def is_balanced(f: Filling) -> bool:
    """Balance check at every cell.  Rejects non-bijective fillings.

    >>> is_balanced(Filling({(1, 1): 3, (1, 2): 5, (1, 3): 2, (2, 1): 1, (4, 3): 4}))
    True
    """
    _check_standard(f)
    items = f.items()
    for (r, c), e in items:
        right_greater = sum(
            1 for (r2, c2), e2 in items if r2 == r and c2 > c and e2 > e
        )
        above_smaller = sum(
            1 for (r2, c2), e2 in items if c2 == c and r2 > r and e2 < e
        )
        if right_greater != above_smaller:
            return False
    return True


def _iter_sbt(w: Permutation) -> Iterator[Filling]:
    """Backtracking enumeration of the balanced fillings of the diagram of w.

    Values are placed in increasing order, so at each placement the balance
    of the new cell is already final: every empty cell to its right will
    receive a greater entry and every filled cell above is smaller exactly
    when filled.  The placement is kept iff the count of filled cells above
    equals the count of empty cells to the right.
    """
    d = rothe_diagram(w)
    cells = d.cells
    ell = len(cells)
    if ell == 0:
        yield Filling({})
        return
    index = {cell: k for k, cell in enumerate(cells)}
    above = [
        [index[(r2, c)] for (r2, c2) in cells if c2 == c and r2 > r]
        for (r, c) in cells
    ]
    right = [
        [index[(r, c2)] for (r2, c2) in cells if r2 == r and c2 > c]
        for (r, c) in cells
    ]
    filled = [0] * ell  # 0 = empty, else the entry value

    def place(value: int) -> Iterator[Filling]:
        if value > ell:
            yield Filling(
                {cell: filled[k] for k, cell in enumerate(cells)}
            )
            return
        for k in range(ell):
            if filled[k]:
                continue
            filled_above = sum(1 for a in above[k] if filled[a])
            empty_right = sum(1 for rr in right[k] if not filled[rr])
            if filled_above != empty_right:
                continue
            filled[k] = value
            yield from place(value + 1)
            filled[k] = 0

    yield from place(1)


def enumerate_sbt(w: Permutation) -> list[Filling]:
    """All standard balanced tableaux on the diagram of w, sorted by their
    entry sequence in row-major cell order."""
    return sorted(_iter_sbt(w), key=lambda f: f.entries)


def tab_commutation(f: Filling, i: int) -> Filling:
    """Exchange entries i and i+1 when they share neither row nor column;
    otherwise return the tableau unchanged."""
    ell = len(f)
    if not 1 <= i < ell:
        raise ValueError(f"entry {i} out of range 1..{ell - 1}")
    pos = f.positions()
    (r1, c1), (r2, c2) = pos[i], pos[i + 1]
    if r1 == r2 or c1 == c2:
        return f
    swapped = dict(f.items())
    swapped[(r1, c1)], swapped[(r2, c2)] = i + 1, i
    return Filling(swapped)


def tab_braid(f: Filling, i: int) -> Filling:
    """Exchange entries i-1 and i+1 when one sits above i in its column and
    the other sits right of i in its row; otherwise unchanged."""
    ell = len(f)
    if not 1 < i < ell:
        raise ValueError(f"entry {i} out of range 2..{ell - 1}")
    pos = f.positions()
    lo, mid, hi = pos[i - 1], pos[i], pos[i + 1]

    def above(x: Cell) -> bool:
        return x[1] == mid[1] and x[0] > mid[0]

    def right_of(x: Cell) -> bool:
        return x[0] == mid[0] and x[1] > mid[1]

    if (above(lo) and right_of(hi)) or (above(hi) and right_of(lo)):
        swapped = dict(f.items())
        swapped[lo], swapped[hi] = i + 1, i - 1
        return Filling(swapped)
    return f


def inversion_pairs(f: Filling) -> list[tuple[int, int]]:
    """Pairs i < j with i in a strictly higher row and a different column."""
    pos = f.positions()
    ell = len(f)
    return [
        (i, j)
        for i in range(1, ell + 1)
        for j in range(i + 1, ell + 1)
        if pos[i][0] > pos[j][0] and pos[i][1] != pos[j][1]
    ]


def tab_inversions(f: Filling) -> int:
    """Number of inversion pairs; the minimum number of moves to the
    super-Yamanouchi tableau.

    >>> tab_inversions(super_tableau(Permutation([4, 2, 1, 5, 3])))
    0
    """
    return len(inversion_pairs(f))


def column_inversions(f: Filling) -> int:
    """Pairs i < j with i strictly above j in the same column; counts the
    Yang-Baxter moves on any minimal path to the super tableau."""
    pos = f.positions()
    ell = len(f)
    return sum(
        1
        for i in range(1, ell + 1)
        for j in range(i + 1, ell + 1)
        if pos[i][0] > pos[j][0] and pos[i][1] == pos[j][1]
    )


def tab_permutation(f: Filling) -> Permutation:
    """Sort each row decreasing, then read right to left within rows, bottom
    row first.  Reading a decreasing row right to left is reading its
    entries in increasing order.

    >>> str(tab_permutation(super_tableau(Permutation([4, 2, 1, 5, 3]))))
    '1,2,3,4,5'
    """
    if len(f) == 0:
        raise ValueError("empty tableau has no associated permutation")
    out: list[int] = []
    rows = f.rows()
    for r in sorted(rows):
        out.extend(sorted(e for _, e in rows[r]))
    return Permutation(out)


def row_coinversions(f: Filling) -> int:
    """Pairs of entries i < j in one row with i left of j, summed over rows."""
    total = 0
    for entries_by_col in f.rows().values():
        entries = [e for _, e in entries_by_col]
        total += sum(
            1
            for a in range(len(entries))
            for b in range(a + 1, len(entries))
            if entries[a] < entries[b]
        )
    return total


def reconstruct_from_row_multisets(
    d: Diagram, rows: Sequence[Iterable[int]]
) -> Filling | None:
    """The unique balanced filling of d whose row contents are the given
    multisets (listed bottom occupied row first), or None if none exists.

    Works top row down: the top row must be decreasing; in each lower row,
    filled left to right, a candidate entry is forced by requiring its count
    of smaller entries already placed above to equal the count of remaining
    row entries that would exceed it.
    """
    occupied = sorted(d.rows())
    row_sets = [sorted(set_, reverse=True) for set_ in map(list, rows)]
    if len(row_sets) != len(occupied):
        raise ValueError(
            f"expected {len(occupied)} row multisets, got {len(row_sets)}"
        )
    drows = d.rows()
    ell = len(d)
    flat = sorted(x for row in row_sets for x in row)
    if flat != list(range(1, ell + 1)):
        raise ValueError(f"row multisets do not partition 1..{ell}")
    for r, content in zip(occupied, row_sets):
        if len(drows[r]) != len(content):
            raise ValueError(f"row {r} needs {len(drows[r])} entries")

    entry_map: dict[Cell, int] = {}
    for r, content in sorted(zip(occupied, row_sets), reverse=True):
        remaining = list(content)  # decreasing
        for c in drows[r]:
            placed = None
            for idx, candidate in enumerate(remaining):
                above_smaller = sum(
                    1
                    for (r2, c2), e in entry_map.items()
                    if c2 == c and r2 > r and e < candidate
                )
                if above_smaller == idx:
                    placed = idx
                    break
            if placed is None:
                return None
            entry_map[(r, c)] = remaining.pop(placed)
    return Filling(entry_map)


def flip(f: Filling) -> Filling:
    """Transpose and complement: cell (r, c) moves to (c, r) and entry e
    becomes cell-count - e + 1.  Takes balanced tableaux for w to balanced
    tableaux for the inverse of w."""
    ell = len(f)
    return Filling({(c, r): ell - e + 1 for (r, c), e in f.items()})


def psi(f: Filling) -> Filling:
    """Entrywise complement on tableaux for the longest permutation.

    Only the staircase diagram guarantees the complement stays balanced, so
    any other shape is rejected.  Reverses the inversion ranking; applied to
    the super tableau it gives the unique minimal element.
    """
    w = permutation_of_diagram(f.diagram)
    if w != Permutation.longest(w.n):
        raise ValueError(f"complement applies only to the longest permutation, not {w}")
    ell = len(f)
    return Filling({cell: ell - e + 1 for cell, e in f.items()})


def min_inv_w0(n: int) -> int:
    """Inversion number of the minimal tableau for the longest permutation
    of rank n: (n-2)(n-1)n(3n-5)/24.  Also the diameter of the move graph.

    >>> [min_inv_w0(n) for n in range(1, 7)]
    [0, 0, 1, 7, 25, 65]
    """
    if n < 1:
        raise ValueError("rank must be positive")
    return (n - 2) * (n - 1) * n * (3 * n - 5) // 24


if __name__ == "__main__":
    import doctest

    doctest.testmod()
