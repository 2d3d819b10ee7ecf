"""
Pipe dreams on the n x n staircase.

A pipe dream is stored as a bitmask over the n(n-1)/2 cells strictly above
the antidiagonal, listed in the reading order of the staircase word
Q_{0,n}: rows top to bottom, each row right to left. Bit ``p - 1`` is the
cell at (1-based) position ``p``; cell (i, j) carries the letter s_{i+j-1}.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .coxeter import Permutation, Word, is_tilde_reduced, length
from .errors import NotQuasiYamanouchi, NotReduced, RankMismatch
from .polynomial import Polynomial

__all__ = [
    "PipeDream", "QuasiYamanouchiCertificate",
    "staircase_word", "staircase_cells", "word_of", "shape", "reduce", "excess",
    "monomial", "slide_move", "is_quasi_yamanouchi", "destandardize",
    "enumerate_pipe_dreams", "enumerate_quasi_yamanouchi",
    "schubert_from_pipedreams", "grothendieck_from_pipedreams",
    "glide_orbit", "slide_orbit", "slide_polynomial", "glide_polynomial",
    "rightmost_occurrence", "quasi_yamanouchi_for_word",
]


@lru_cache(maxsize=None)
def staircase_cells(n: int) -> tuple[tuple[int, int], ...]:
    """Cells (i, j), i + j <= n, in reading order; entry p-1 is position p."""
    return tuple((i, j) for i in range(1, n) for j in range(n - i, 0, -1))


@lru_cache(maxsize=None)
def _cell_position(n: int) -> dict[tuple[int, int], int]:
    return {cell: p for p, cell in enumerate(staircase_cells(n), 1)}


@lru_cache(maxsize=None)
def staircase_word(n: int) -> Word:
    """Q_{0,n} = (s_{n-1} ... s_1)(s_{n-1} ... s_2) ... (s_{n-1})."""
    return Word(n, tuple(i + j - 1 for i, j in staircase_cells(n)))


@dataclass(frozen=True, order=True)
class PipeDream:
    n: int
    mask: int = 0

    def __post_init__(self):
        m = self.n * (self.n - 1) // 2
        if self.mask < 0 or self.mask >> m:
            raise RankMismatch(f"mask {self.mask:#x} does not fit the staircase of rank {self.n}")

    @classmethod
    def from_crosses(cls, n: int, crosses: Iterable[tuple[int, int]]) -> PipeDream:
        table = _cell_position(n)
        mask = 0
        for cell in crosses:
            cell = tuple(cell)
            if cell not in table:
                raise RankMismatch(f"cell {cell} is not strictly above the antidiagonal for n={n}")
            mask |= 1 << (table[cell] - 1)
        return cls(n, mask)

    @classmethod
    def from_positions(cls, n: int, positions: Iterable[int]) -> PipeDream:
        mask = 0
        for p in positions:
            mask |= 1 << (p - 1)
        return cls(n, mask)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.n * (self.n - 1) // 2 + 1) if self.mask >> (p - 1) & 1)

    @property
    def crosses(self) -> frozenset[tuple[int, int]]:
        cells = staircase_cells(self.n)
        return frozenset(cells[p - 1] for p in self.positions)

    def sorted_crosses(self) -> list[tuple[int, int]]:
        return sorted(self.crosses)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def ascii(self) -> str:
        """Grid with '+' for crosses and '.' for elbows, one row per line."""
        crosses = self.crosses
        return "\n".join(
            "".join("+" if (i, j) in crosses else "." for j in range(1, self.n + 1 - i))
            for i in range(1, self.n + 1)
        )

    def to_json(self) -> dict:
        return {"n": self.n, "crosses": [list(c) for c in self.sorted_crosses()]}

    def __repr__(self) -> str:
        return f"PipeDream(n={self.n}, crosses={self.sorted_crosses()})"


@dataclass(frozen=True)
class QuasiYamanouchiCertificate:
    pipe_dream: PipeDream
    word: Word
    reduced_flag: bool
    excess: int


def word_of(P: PipeDream) -> tuple[Word, tuple[int, ...]]:
    """Letters of the crosses in reading order, and their positions in Q_{0,n}."""
    q = staircase_word(P.n)
    pos = P.positions
    return q.subword(pos), pos


def _trace(P: PipeDream) -> tuple[Permutation, frozenset[tuple[int, int]]]:
    """
    Follow the strands through the grid, dropping every cross of a pair of
    strands that already crossed earlier in reading order.

    Strands are labelled by the top column they leave from and are followed
    downwards and leftwards, so a strand reaching a cell has only passed
    through cells earlier in reading order.  Returns the permutation
    (w(i) = label of the strand leaving row i on the left) and the kept
    crosses.
    """
    n = P.n
    crosses = P.crosses
    down: list[int | None] = list(range(1, n + 1))
    crossed: set[frozenset[int]] = set()
    kept = set()
    exits = []
    for i in range(1, n + 1):
        from_right = None
        for j in range(n + 1 - i, 0, -1):
            top = down[j - 1]
            if (i, j) in crosses:
                pair = frozenset((top, from_right))
                if pair not in crossed:
                    crossed.add(pair)
                    kept.add((i, j))
                    continue  # cross: both strands keep going
            down[j - 1], from_right = from_right, top
        exits.append(from_right)
    return Permutation(tuple(exits)), frozenset(kept)


def shape(P: PipeDream) -> Permutation:
    return _trace(P)[0]


def reduce(P: PipeDream) -> PipeDream:
    return PipeDream.from_crosses(P.n, _trace(P)[1])


def excess(P: PipeDream) -> int:
    return len(P) - len(_trace(P)[1])


def monomial(P: PipeDream) -> Polynomial:
    exps = [0] * max(P.n - 1, 0)
    for i, _ in P.crosses:
        exps[i - 1] += 1
    return Polynomial.monomial(exps)


def _beta_monomial(P: PipeDream, k: int) -> Polynomial:
    exps = [0] * max(P.n - 1, 0)
    for i, _ in P.crosses:
        exps[i - 1] += 1
    return Polynomial.monomial(exps, beta=k)


def _rows(P: PipeDream) -> dict[int, list[int]]:
    rows = defaultdict(list)
    for i, j in P.crosses:
        rows[i].append(j)
    return rows


def slide_move(P: PipeDream, i: int) -> PipeDream:
    """
    S_i: push the leftmost cross of row i one step southwest when it lies
    strictly right of every cross in row i+1. If the target cell already
    holds a cross the two merge.
    """
    if not 1 <= i <= P.n - 1:
        raise ValueError(f"row {i} out of range for n={P.n}")
    rows = _rows(P)
    if not rows[i]:
        return P
    j = min(rows[i])
    if j == 1 or (rows[i + 1] and j <= max(rows[i + 1])):
        return P
    crosses = set(P.crosses)
    crosses.discard((i, j))
    crosses.add((i + 1, j - 1))
    return PipeDream.from_crosses(P.n, crosses)


def is_quasi_yamanouchi(P: PipeDream) -> bool:
    return all(slide_move(P, i) == P for i in range(1, P.n))


def destandardize(P: PipeDream, rng: random.Random | None = None) -> PipeDream:
    """
    Apply slide moves until none acts. With ``rng`` the rows are tried in a
    random order each round; the fixed point does not depend on it.
    """
    rows = list(range(1, P.n))
    while True:
        if rng is not None:
            rng.shuffle(rows)
        for i in rows:
            Q = slide_move(P, i)
            if Q != P:
                P = Q
                break
        else:
            return P


@lru_cache(maxsize=None)
def _masks_by_shape(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Every subset of staircase positions grouped by the Demazure product of its word."""
    letters = staircase_word(n).letters
    m = len(letters)
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    # depth-first over positions so prefixes share their partial product
    stack = [(0, 0, tuple(range(1, n + 1)))]
    while stack:
        p, mask, im = stack.pop()
        if p == m:
            groups[im].append(mask)
            continue
        stack.append((p + 1, mask, im))
        a = letters[p]
        if im[a - 1] < im[a]:
            im = im[: a - 1] + (im[a], im[a - 1]) + im[a + 1:]
        stack.append((p + 1, mask | 1 << p, im))
    return {k: tuple(sorted(v, key=_mask_key)) for k, v in groups.items()}


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(p for p in range(mask.bit_length()) if mask >> p & 1)


def enumerate_pipe_dreams(w: Permutation, reduced_only: bool = False) -> list[PipeDream]:
    """
    PD(w), or PD_0(w) with ``reduced_only``, by brute force over subsets of
    staircase positions, ordered by sorted position set.
    """
    masks = _masks_by_shape(w.n).get(w.images, ())
    if reduced_only:
        ell = length(w)
        masks = [m for m in masks if bin(m).count("1") == ell]
    return [PipeDream(w.n, m) for m in masks]


def enumerate_quasi_yamanouchi(w: Permutation, reduced_only: bool = False) -> list[QuasiYamanouchiCertificate]:
    out = []
    ell = length(w)
    for P in enumerate_pipe_dreams(w, reduced_only):
        if is_quasi_yamanouchi(P):
            word, _ = word_of(P)
            ex = len(P) - ell
            out.append(QuasiYamanouchiCertificate(P, word, ex == 0, ex))
    return out


def schubert_from_pipedreams(w: Permutation) -> Polynomial:
    total = Polynomial({}, max(w.n - 1, 0))
    for P in enumerate_pipe_dreams(w, reduced_only=True):
        total = total + monomial(P)
    return total


def grothendieck_from_pipedreams(w: Permutation) -> Polynomial:
    total = Polynomial({}, max(w.n - 1, 0))
    ell = length(w)
    for P in enumerate_pipe_dreams(w):
        total = total + _beta_monomial(P, len(P) - ell)
    return total


@lru_cache(maxsize=None)
def _destandardized(n: int, mask: int) -> PipeDream:
    return destandardize(PipeDream(n, mask))


def _require_qy(Q: PipeDream) -> None:
    if not is_quasi_yamanouchi(Q):
        raise NotQuasiYamanouchi(f"{Q} is not quasi-Yamanouchi")


def glide_orbit(Q: PipeDream) -> list[PipeDream]:
    """dst^{-1}(Q) inside PD(shape(Q))."""
    _require_qy(Q)
    return [P for P in enumerate_pipe_dreams(shape(Q)) if _destandardized(P.n, P.mask) == Q]


def slide_orbit(Q: PipeDream) -> list[PipeDream]:
    """dst_0^{-1}(Q) inside PD_0(shape(Q))."""
    _require_qy(Q)
    if excess(Q):
        raise NotReduced(f"{Q} has excess {excess(Q)}")
    return [P for P in enumerate_pipe_dreams(shape(Q), reduced_only=True)
            if _destandardized(P.n, P.mask) == Q]


def slide_polynomial(Q: PipeDream) -> Polynomial:
    total = Polynomial({}, max(Q.n - 1, 0))
    for P in slide_orbit(Q):
        total = total + monomial(P)
    return total


def glide_polynomial(Q: PipeDream) -> Polynomial:
    total = Polynomial({}, max(Q.n - 1, 0))
    base = len(Q)
    # ex(P) - ex(Q) = |P| - |Q| since both reduce to the same length
    for P in glide_orbit(Q):
        total = total + _beta_monomial(P, len(P) - base)
    return total


def rightmost_occurrence(q: Word, s: Word) -> tuple[int, ...] | None:
    """Positions of the rightmost occurrence of s as a subsequence of q, or None."""
    out = []
    k = len(s) - 1
    for p in range(len(q), 0, -1):
        if k < 0:
            break
        if q[p - 1] == s[k]:
            out.append(p)
            k -= 1
    if k >= 0:
        return None
    return tuple(reversed(out))


def quasi_yamanouchi_for_word(s: Word) -> PipeDream:
    """
    The pipe dream whose crosses are the rightmost occurrence of ``s`` in
    Q_{0,n}; it is quasi-Yamanouchi exactly when ``s`` has no equal
    consecutive letters.
    """
    pos = rightmost_occurrence(staircase_word(s.n), s)
    if pos is None:
        raise NotQuasiYamanouchi(f"{s!r} does not occur in the staircase word")
    P = PipeDream.from_positions(s.n, pos)
    if not is_tilde_reduced(s) or not is_quasi_yamanouchi(P):
        raise NotQuasiYamanouchi(f"{s!r} is not the word of a quasi-Yamanouchi pipe dream")
    return P
