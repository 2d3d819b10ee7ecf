"""
Permutations of S_n in one-line notation and words in the simple
transpositions s_1, ..., s_{n-1}.

Products follow the right action: ``w * s_i`` swaps the entries at
one-line positions i and i+1, so a word is multiplied left to right.

>>> w = apply_word(Word(4, (3, 2, 1, 3, 2, 3)))
>>> w
Permutation(4321)
>>> demazure_product(Word(4, (2, 3, 2, 3)))
Permutation(1432)
>>> tilde_delta(Word(3, (1, 1, 2, 1, 2, 2, 2))).letters
(1, 2, 1, 2)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import NotABijection, ParseError, RankMismatch

__all__ = [
    "Permutation", "Word",
    "permutation_from_one_line", "word_from_string",
    "identity", "longest_permutation", "all_permutations",
    "length", "apply_word", "is_reduced_word", "demazure_product",
    "tilde_delta", "is_tilde_reduced", "reduced_word",
    "right_multiply", "left_multiply", "compose", "inverse",
]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise NotABijection("a permutation needs rank n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise NotABijection(f"{list(images)} is not a bijection of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def one_line(self) -> str:
        """Digit string for n < 10, comma separated otherwise."""
        if self.n < 10:
            return "".join(map(str, self.images))
        return ",".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()})"

    __str__ = one_line


@dataclass(frozen=True)
class Word:
    """A sequence of letters k in 1..n-1, the letter k standing for s_k."""
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise RankMismatch(f"rank must be positive, got {self.n}")
        for a in letters:
            if not 1 <= a <= self.n - 1:
                raise RankMismatch(f"letter s_{a} is not a simple transposition of S_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def subword(self, positions: Sequence[int]) -> Word:
        """Letters at the given 1-based positions, in increasing position order."""
        return Word(self.n, tuple(self.letters[p - 1] for p in sorted(positions)))

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Word(n={self.n}, {str(self) or '()'})"


_CSV = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def permutation_from_one_line(text: str) -> Permutation:
    """
    Parse a permutation written as a digit string ("1432") or as
    comma-separated images ("1,4,3,2"); the CSV form is the only way to
    write ranks of 10 or more.
    """
    text = text.strip()
    if "," in text:
        if not _CSV.match(text):
            raise ParseError(f"bad permutation text {text!r}")
        images = [int(t) for t in text.split(",")]
    else:
        if not text.isdigit() or not text.isascii():
            raise ParseError(f"bad permutation text {text!r}")
        images = [int(c) for c in text]
    return Permutation(tuple(images))


def word_from_string(text: str, n: int | None = None) -> Word:
    """Parse "3,2,1,3" into a Word; rank defaults to max letter + 1."""
    text = text.strip()
    if not text:
        letters: tuple[int, ...] = ()
    elif _CSV.match(text):
        letters = tuple(int(t) for t in text.split(","))
    else:
        raise ParseError(f"bad word text {text!r}")
    if any(a < 1 for a in letters):
        raise ParseError(f"letters are 1-based, got {text!r}")
    if n is None:
        n = max(letters, default=0) + 1
    return Word(n, letters)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """Every element of S_n, sorted lexicographically by one-line notation."""
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def length(w: Permutation) -> int:
    """Number of inversions of w."""
    im = w.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def right_multiply(w: Permutation, i: int) -> Permutation:
    """w * s_i: swap one-line positions i and i+1."""
    im = list(w.images)
    im[i - 1], im[i] = im[i], im[i - 1]
    return Permutation(tuple(im))


def left_multiply(i: int, w: Permutation) -> Permutation:
    """s_i * w: swap the values i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return Permutation(tuple(swap.get(v, v) for v in w.images))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u * v)(k) = u(v(k))."""
    if u.n != v.n:
        raise RankMismatch(f"cannot compose S_{u.n} with S_{v.n}")
    return Permutation(tuple(u.images[k - 1] for k in v.images))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for pos, val in enumerate(w.images, 1):
        inv[val - 1] = pos
    return Permutation(tuple(inv))


def _swap_product(n: int, letters: Sequence[int], demazure: bool) -> tuple[int, ...]:
    im = list(range(1, n + 1))
    for a in letters:
        if demazure and im[a - 1] > im[a]:
            continue
        im[a - 1], im[a] = im[a], im[a - 1]
    return tuple(im)


def apply_word(word: Word) -> Permutation:
    """Ordinary product s_{a_1} s_{a_2} ... of the letters."""
    return Permutation(_swap_product(word.n, word.letters, demazure=False))


def is_reduced_word(word: Word) -> bool:
    return len(word) == length(apply_word(word))


def demazure_product(word: Word) -> Permutation:
    """
    Product in the 0-Hecke monoid (s_i^2 = s_i): multiply left to right,
    skipping every letter that would shorten the running product.
    """
    # w*s_a is shorter than w exactly when w(a) > w(a+1)
    return Permutation(_swap_product(word.n, word.letters, demazure=True))


def tilde_delta(word: Word) -> Word:
    """Collapse each maximal run of equal consecutive letters to one letter."""
    return Word(word.n, tuple(a for a, _ in itertools.groupby(word.letters)))


def is_tilde_reduced(word: Word) -> bool:
    return all(a != b for a, b in zip(word.letters, word.letters[1:]))


def reduced_word(w: Permutation) -> Word:
    """Some reduced word for w; always picks the first descent, so it is deterministic."""
    letters = []
    im = list(w.images)
    while True:
        for i in range(len(im) - 1):
            if im[i] > im[i + 1]:
                im[i], im[i + 1] = im[i + 1], im[i]
                letters.append(i + 1)
                break
        else:
            break
    # peeled off from the right end of the word
    return Word(w.n, tuple(reversed(letters)))
