"""The rank-preserving correspondence between reduced words and standard
balanced tableaux: two elements match exactly when their associated
permutations agree.

The tableau side has a constructive descent to the super tableau, so the
tableau-to-word direction transports that move sequence instead of
searching; the word-to-tableau direction inverts the reverse reading that
defines the tableau's permutation and reconstructs rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import Filling, permutation_of_diagram, rothe_diagram, super_tableau
from .perms import Permutation
from .report import CheckResult
from .tableaux import (
    enumerate_sbt,
    flip,
    is_balanced,
    reconstruct_from_row_multisets,
    tab_braid,
    tab_commutation,
    tab_inversions,
    tab_permutation,
)
from .words import (
    Word,
    braid_move,
    commutation_move,
    enumerate_reduced_words,
    pairing_permutation,
    super_word,
    word_inversions,
    word_to_permutation,
)


@dataclass(frozen=True)
class Move:
    """One labeled Coxeter move: kind "c" (commutation) or "b" (Yang-Baxter),
    with the right-to-left letter index on words or the entry value on
    tableaux."""

    kind: str
    index: int

    @property
    def label(self) -> str:
        return f"{self.kind}{self.index}"

    def on_word(self, word: Word) -> Word:
        if self.kind == "c":
            return commutation_move(word, self.index)
        return braid_move(word, self.index)

    def on_tableau(self, f: Filling) -> Filling:
        if self.kind == "c":
            return tab_commutation(f, self.index)
        return tab_braid(f, self.index)


def descent_to_super(f: Filling) -> list[Move]:
    """A minimal move sequence taking the tableau to the super tableau.

    While some pair (i, i+1) has i strictly above i+1: if any such pair sits
    in different columns, commute the smallest such i; otherwise braid at
    i+1 for the largest such i.  Each step removes exactly one inversion.
    """
    moves: list[Move] = []
    current = f
    ell = len(f)
    while True:
        pos = current.positions()
        drops = [
            i for i in range(1, ell) if pos[i][0] > pos[i + 1][0]
        ]
        if not drops:
            break
        commutable = [i for i in drops if pos[i][1] != pos[i + 1][1]]
        if commutable:
            move = Move("c", min(commutable))
        else:
            move = Move("b", max(drops) + 1)
        advanced = move.on_tableau(current)
        if advanced == current:
            raise RuntimeError(f"descent stalled at {current.to_text()}")
        moves.append(move)
        current = advanced
    return moves


def word_to_tableau(word: Word) -> Filling:
    """The unique balanced tableau whose permutation matches the word's.

    Splits the pairing permutation into consecutive blocks sized by the row
    lengths of the diagram, bottom row first (inverting the reverse row
    reading), reconstructs from those row contents, then verifies balance
    and the permutation match.
    """
    word = Word(word)
    if not word:
        return Filling({})
    w = word_to_permutation(word)
    if len(word) != w.length:
        raise ValueError(f"word is not reduced: {word}")
    v = pairing_permutation(word)
    d = rothe_diagram(w)
    rows = d.rows()
    blocks: list[tuple[int, ...]] = []
    start = 0
    for r in sorted(rows):
        size = len(rows[r])
        blocks.append(tuple(v[start : start + size]))
        start += size
    tableau = reconstruct_from_row_multisets(d, blocks)
    if tableau is None or not is_balanced(tableau) or tab_permutation(tableau) != v:
        raise RuntimeError(f"no balanced tableau matches word {word}")
    return tableau


def tableau_to_word(f: Filling) -> Word:
    """The unique reduced word whose pairing permutation matches the
    tableau's, obtained by replaying the tableau's descent sequence
    backwards from the super-Yamanouchi word."""
    if len(f) == 0:
        return Word()
    w = permutation_of_diagram(f.diagram)
    moves = descent_to_super(f)
    word = super_word(w)
    for move in reversed(moves):
        word = move.on_word(word)
    if pairing_permutation(word) != tab_permutation(f):
        raise RuntimeError(f"word transport failed for {f.to_text()}")
    return word


def _match_by_permutation(
    w: Permutation,
) -> tuple[list[Word], list[Filling], dict[Word, Filling] | None]:
    """Pair R(w) with the balanced tableaux by permutation; the map is None
    when matching is not a bijection."""
    words = enumerate_reduced_words(w)
    tableaux = enumerate_sbt(w)
    if len(words) == 1 and len(words[0]) == 0:
        return words, tableaux, {words[0]: tableaux[0]} if len(tableaux) == 1 else None
    by_perm: dict[Permutation, Filling] = {}
    for t in tableaux:
        p = tab_permutation(t)
        if p in by_perm:
            return words, tableaux, None
        by_perm[p] = t
    mapping: dict[Word, Filling] = {}
    for rho in words:
        p = pairing_permutation(rho)
        if p not in by_perm:
            return words, tableaux, None
        mapping[rho] = by_perm.pop(p)
    if by_perm:
        return words, tableaux, None
    return words, tableaux, mapping


def verify_poset_isomorphism(w: Permutation) -> list[CheckResult]:
    """Exhaustive checks that matching by permutation is a bijection that
    preserves ranks, move edges, and the flip/reversal square."""
    words, tableaux, mapping = _match_by_permutation(w)
    results = [
        CheckResult(
            "perm_matching_bijection",
            mapping is not None and len(words) == len(tableaux),
            None if mapping is not None else f"w={w}",
        )
    ]
    if mapping is None:
        return results

    bad_rank = next(
        (
            rho
            for rho, t in mapping.items()
            if word_inversions(rho) != tab_inversions(t)
        ),
        None,
    )
    results.append(
        CheckResult(
            "rank_preserved",
            bad_rank is None,
            None if bad_rank is None else f"w={w} word={bad_rank}",
        )
    )

    edge_fail = None
    for rho, t in mapping.items():
        ell = len(rho)
        moves = [Move("c", i) for i in range(1, ell)] + [
            Move("b", i) for i in range(2, ell)
        ]
        for move in moves:
            rho2 = move.on_word(rho)
            t2 = move.on_tableau(t)
            if (rho2 == rho) != (t2 == t) or (rho2 != rho and mapping[rho2] != t2):
                edge_fail = f"w={w} word={rho} move={move.label}"
                break
        if edge_fail:
            break
    results.append(CheckResult("edges_correspond", edge_fail is None, edge_fail))

    square_fail = None
    for rho, t in mapping.items():
        if word_to_tableau(rho.reverse()) != flip(t):
            square_fail = f"w={w} word={rho}"
            break
    results.append(
        CheckResult("flip_matches_reversal", square_fail is None, square_fail)
    )
    return results
