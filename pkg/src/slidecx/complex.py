"""
Subword complexes Delta(Q, pi) and slide complexes Delta~(Q, S).

A face is the set of *deleted* positions of Q; its complement P is the
subword that must contain the target (a reduced word of pi, or S as a
subsequence). Faces are bitmasks, bit ``p - 1`` standing for position p.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .coxeter import (
    Permutation, Word, apply_word, demazure_product, is_tilde_reduced, left_multiply, length, tilde_delta,
)
from .errors import NonUniqueGreedy, RankMismatch, UnclassifiableSlideTarget
from .pipedream import PipeDream, monomial, staircase_word
from .polynomial import Polynomial

__all__ = [
    "Face", "Complex", "FlipGraph", "Classification",
    "build_complex", "faces", "euler_characteristic", "classify",
    "vertex_decomposition_shelling", "verify_shelling", "interior_decomposition",
    "flip_graph", "pseudomanifold_boundary", "face_pipe_dream",
    "schubert_from_complex", "grothendieck_from_complex", "slide_from_complex", "glide_from_complex",
]


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, order=True)
class Face:
    """Deleted positions of Q; the empty face is the (-1)-dimensional face."""
    mask: int

    @classmethod
    def from_positions(cls, positions) -> Face:
        mask = 0
        for p in positions:
            mask |= 1 << (p - 1)
        return cls(mask)

    @property
    def deleted_positions(self) -> tuple[int, ...]:
        return tuple(p + 1 for p in range(self.mask.bit_length()) if self.mask >> p & 1)

    @property
    def dimension(self) -> int:
        return _popcount(self.mask) - 1

    def __len__(self) -> int:
        return _popcount(self.mask)

    def __repr__(self) -> str:
        return f"Face{set(self.deleted_positions) or '{}'}"


class Classification(str, enum.Enum):
    BALL = "Ball"
    SPHERE = "Sphere"


@dataclass(frozen=True)
class Complex:
    word: Word
    target: Permutation | Word
    kind: str
    facets: tuple[Face, ...]

    @property
    def m(self) -> int:
        return len(self.word)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def facet_size(self) -> int:
        if self.kind == "subword":
            return self.m - length(self.target)
        return self.m - len(self.target)

    @property
    def dimension(self) -> int:
        return self.facet_size - 1

    def complement(self, face: Face) -> Word:
        """The subword P = Q minus the face."""
        keep = self.full_mask & ~face.mask
        return Word(self.word.n, tuple(a for p, a in enumerate(self.word.letters) if keep >> p & 1))

    def codim(self, face: Face) -> int:
        return self.facet_size - len(face)

    def is_interior(self, face: Face) -> bool:
        P = self.complement(face)
        if self.kind == "subword":
            return demazure_product(P) == self.target
        return tilde_delta(P) == self.target

    def to_json(self) -> dict:
        return {
            "word": list(self.word.letters),
            "kind": self.kind,
            "target": str(self.target),
            "facets": [list(f.deleted_positions) for f in self.facets],
        }


def _subword_occurrences(q: Word, pi: Permutation) -> list[int]:
    ell = length(pi)
    out = []
    for combo in itertools.combinations(range(len(q)), ell):
        w = Word(q.n, tuple(q.letters[p] for p in combo))
        if apply_word(w) == pi:
            out.append(sum(1 << p for p in combo))
    return out


def _sequence_occurrences(q: Word, s: Word) -> list[int]:
    out = []

    def rec(k: int, t: int, mask: int):
        if t == len(s):
            out.append(mask)
            return
        # not enough letters left
        if len(q) - k < len(s) - t:
            return
        for p in range(k, len(q)):
            if q.letters[p] == s.letters[t]:
                rec(p + 1, t + 1, mask | 1 << p)

    rec(0, 0, 0)
    return out


def build_complex(q: Word, target: Permutation | Word) -> Complex:
    """
    Delta(q, pi) for a permutation target, Delta~(q, S) for a word target.
    Facets are complements of the minimal subwords containing the target,
    ordered by deleted positions.
    """
    if q.n != target.n:
        raise RankMismatch(f"word of rank {q.n} with target of rank {target.n}")
    full = (1 << len(q)) - 1
    if isinstance(target, Permutation):
        kind = "subword"
        occ = _subword_occurrences(q, target)
    else:
        kind = "slide"
        if not is_tilde_reduced(target):
            warnings.warn(f"slide target {target} has equal consecutive letters; it cannot be classified",
                          stacklevel=2)
        occ = _sequence_occurrences(q, target)
    facets = sorted({Face(full & ~mask) for mask in occ}, key=lambda f: f.deleted_positions)
    return Complex(q, target, kind, tuple(facets))


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=256)
def _all_face_masks(c: Complex) -> frozenset[int]:
    seen: set[int] = set()
    for f in c.facets:
        if f.mask in seen:
            continue
        seen.update(_submasks(f.mask))
    return frozenset(seen)


def faces(c: Complex, which: str = "all") -> list[Face]:
    """
    All faces (the empty face included), or only the interior or boundary
    ones. A face is interior when delta (resp. tilde-delta) of its
    complement equals the target.
    """
    out = [Face(m) for m in _all_face_masks(c)]
    if which == "interior":
        out = [f for f in out if c.is_interior(f)]
    elif which == "boundary":
        out = [f for f in out if not c.is_interior(f)]
    elif which != "all":
        raise ValueError(f"unknown face selection {which!r}")
    return sorted(out, key=lambda f: (len(f), f.deleted_positions))


def euler_characteristic(c: Complex) -> int:
    return sum((-1) ** (_popcount(m) - 1) for m in _all_face_masks(c) if m)


def classify(c: Complex) -> Classification:
    if c.kind == "subword":
        sphere = demazure_product(c.word) == c.target
    else:
        if not is_tilde_reduced(c.target):
            raise UnclassifiableSlideTarget(f"target {c.target} is not tilde-reduced")
        sphere = tilde_delta(c.word) == c.target
    return Classification.SPHERE if sphere else Classification.BALL


def pseudomanifold_boundary(c: Complex) -> set[Face]:
    """Codimension-1 faces lying in exactly one facet."""
    count: dict[int, int] = defaultdict(int)
    for f in c.facets:
        for p in range(c.m):
            if f.mask >> p & 1:
                count[f.mask & ~(1 << p)] += 1
    return {Face(m) for m, k in count.items() if k == 1}


def _shell_masks(c: Complex) -> list[int]:
    letters = c.word.letters
    m = len(letters)

    if c.kind == "slide":
        s = c.target.letters

        @lru_cache(maxsize=None)
        def shell(k: int, t: int) -> tuple[int, ...]:
            if k == m:
                return (0,) if t == len(s) else ()
            cone = tuple(f | 1 << k for f in shell(k + 1, t))
            if t < len(s) and s[t] == letters[k]:
                return shell(k + 1, t + 1) + cone
            return cone

        return list(shell(0, 0))

    @lru_cache(maxsize=None)
    def shell_w(k: int, pi: Permutation) -> tuple[int, ...]:
        if k == m:
            return (0,) if length(pi) == 0 else ()
        cone = tuple(f | 1 << k for f in shell_w(k + 1, pi))
        shorter = left_multiply(letters[k], pi)
        if length(shorter) < length(pi):
            return shell_w(k + 1, shorter) + cone
        return cone

    return list(shell_w(0, c.target))


def vertex_decomposition_shelling(c: Complex) -> list[Face]:
    """
    Facet order from recursively splitting on the first position of Q:
    the deletion (a complex on the remaining word) is shelled first, then
    the cone over the link.
    """
    if not c.facets:
        raise ValueError("the empty complex has no shelling")
    order = [Face(mk) for mk in _shell_masks(c)]
    if sorted(order) != sorted(c.facets):
        raise AssertionError("vertex decomposition lost or duplicated facets")
    return order


def verify_shelling(c: Complex, order: list[Face]) -> bool:
    """
    Check that for every j >= 2 the intersection of F_j with the union of
    the earlier facets is pure of dimension dim F_j - 1.
    """
    if sorted(order) != sorted(c.facets) or len(set(order)) != len(order):
        return False
    for j in range(1, len(order)):
        fj = order[j].mask
        need = _popcount(fj) - 1
        inter = {order[i].mask & fj for i in range(j)}
        maximal = [a for a in inter if not any(a != b and a & b == a for b in inter)]
        if any(_popcount(a) != need for a in maximal):
            return False
    return True


def interior_decomposition(q: Word, w: Permutation) -> dict[Word, list[Face]]:
    """
    Split the interior faces of Delta(q, w) by the tilde-delta of their
    complements; keys come out sorted by their letters.
    """
    c = build_complex(q, w)
    parts: dict[Word, list[Face]] = defaultdict(list)
    for f in faces(c, "interior"):
        parts[tilde_delta(c.complement(f))].append(f)
    return {k: parts[k] for k in sorted(parts, key=lambda s: s.letters)}


@dataclass(frozen=True)
class FlipGraph:
    """
    Facet adjacency graph. ``edges`` are oriented along increasing flips:
    (F, G) with G = F - {i} + {j} and i < j.
    """
    nodes: tuple[Face, ...]
    edges: tuple[tuple[Face, Face], ...]
    positive_greedy: Face
    negative_greedy: Face

    def increasing_flips(self) -> list[tuple[Face, Face]]:
        return list(self.edges)

    def decreasing_flips(self) -> list[tuple[Face, Face]]:
        return [(b, a) for a, b in self.edges]

    def cover_flips(self) -> list[tuple[Face, Face]]:
        """Decreasing flips that are covering relations of the flip order."""
        succ: dict[Face, set[Face]] = defaultdict(set)
        for a, b in self.decreasing_flips():
            succ[a].add(b)

        @lru_cache(maxsize=None)
        def reach(a: Face) -> frozenset[Face]:
            out = set()
            for b in succ[a]:
                out.add(b)
                out |= reach(b)
            return frozenset(out)

        covers = []
        for a, b in self.decreasing_flips():
            if not any(b in reach(c) for c in succ[a] if c != b):
                covers.append((a, b))
        return covers

    def to_dot(self) -> str:
        name = {f: "f" + "_".join(map(str, f.deleted_positions)) if len(f) else "f_empty" for f in self.nodes}
        lines = ["digraph flips {"]
        for f in self.nodes:
            label = "{" + ",".join(map(str, f.deleted_positions)) + "}"
            notes = []
            if f == self.positive_greedy:
                notes.append("positive greedy")
            if f == self.negative_greedy:
                notes.append("negative greedy")
            if notes:
                label += "\\n" + ", ".join(notes)
                lines.append(f'  {name[f]} [label="{label}", shape=box];')
            else:
                lines.append(f'  {name[f]} [label="{label}"];')
        for a, b in self.edges:
            lines.append(f"  {name[a]} -> {name[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def flip_graph(c: Complex) -> FlipGraph:
    """
    Oriented facet adjacency graph. The positive greedy facet is the unique
    source of the increasing orientation (the lexicographically first
    facet), the negative greedy facet the unique sink.
    """
    nodes = tuple(c.facets)
    edges = []
    for a, b in itertools.combinations(nodes, 2):
        diff = a.mask ^ b.mask
        if _popcount(diff) != 2:
            continue
        i = (a.mask & diff).bit_length()  # position leaving a
        j = (b.mask & diff).bit_length()  # position entering
        edges.append((a, b) if i < j else (b, a))
    edges.sort(key=lambda e: (e[0].deleted_positions, e[1].deleted_positions))
    has_in = {b for _, b in edges}
    has_out = {a for a, _ in edges}
    sources = [f for f in nodes if f not in has_in]
    sinks = [f for f in nodes if f not in has_out]
    if len(sources) != 1 or len(sinks) != 1:
        raise NonUniqueGreedy(f"{len(sources)} sources and {len(sinks)} sinks")
    return FlipGraph(nodes, tuple(edges), sources[0], sinks[0])


# pipe dream complexes: Q = Q_{0,n}, positions = staircase cells

def face_pipe_dream(c: Complex, face: Face) -> PipeDream:
    """The pipe dream whose crosses are the complement of ``face`` in Q_{0,n}."""
    if c.word != staircase_word(c.word.n):
        raise ValueError("face_pipe_dream needs a complex on the staircase word")
    return PipeDream(c.word.n, c.full_mask & ~face.mask)


def _face_sum(c: Complex, which: str, with_beta: bool) -> Polynomial:
    total = Polynomial({}, max(c.word.n - 1, 0))
    for f in (faces(c, which) if which else c.facets):
        mono = monomial(face_pipe_dream(c, f))
        if with_beta:
            mono = Polynomial({(c.codim(f), *k[1:]): v for k, v in mono.terms.items()}, mono.n_vars)
        total = total + mono
    return total


def schubert_from_complex(w: Permutation) -> Polynomial:
    """Sum of x^P over the facets of the pipe dream complex of w."""
    return _face_sum(build_complex(staircase_word(w.n), w), None, with_beta=False)


def grothendieck_from_complex(w: Permutation) -> Polynomial:
    """Sum of beta^codim x^P over the interior faces of the pipe dream complex."""
    return _face_sum(build_complex(staircase_word(w.n), w), "interior", with_beta=True)


def slide_from_complex(s: Word) -> Polynomial:
    return _face_sum(build_complex(staircase_word(s.n), s), None, with_beta=False)


def glide_from_complex(s: Word) -> Polynomial:
    return _face_sum(build_complex(staircase_word(s.n), s), "interior", with_beta=True)
