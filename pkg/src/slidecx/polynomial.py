"""
Exact integer polynomials in beta and x_1, ..., x_k, with the divided
difference operators and the operator recursion for Schubert and
beta-Grothendieck polynomials.

Terms are keyed by dense exponent tuples ``(b, e_1, ..., e_k)`` where ``b``
is the exponent of beta.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .coxeter import (
    Permutation, Word, apply_word, compose, length, longest_permutation, reduced_word, right_multiply,
)
from .errors import InternalError

__all__ = [
    "Polynomial", "x", "beta", "const",
    "divided_difference", "isobaric_divided_difference", "swap_variables",
    "schubert_oracle", "grothendieck_oracle", "specialize",
]

Key = tuple[int, ...]


def _pad(key: Key, width: int) -> Key:
    return key + (0,) * (width - len(key))


class Polynomial:
    """
    Immutable sparse polynomial in Z[beta, x_1, ..., x_{n_vars}].

    Instances with different ``n_vars`` compare equal when they agree after
    zero-padding, so rank bookkeeping never affects equality.
    """

    __slots__ = ("n_vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = (), n_vars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, int] = defaultdict(int)
        width = 0
        for key, c in items:
            acc[tuple(key)] += c
            width = max(width, len(key) - 1)
        if n_vars is None:
            n_vars = width
        elif n_vars < width:
            # allow narrowing only when the dropped variables do not occur
            for key, c in acc.items():
                if c and any(key[n_vars + 1:]):
                    raise ValueError(f"term {key} needs more than {n_vars} variables")
        self.n_vars = n_vars
        self._terms = {_pad(k[: n_vars + 1], n_vars + 1): c for k, c in acc.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, exps: Sequence[int], beta: int = 0, coeff: int = 1) -> Polynomial:
        return cls({(beta, *exps): coeff}, n_vars=len(exps))

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def with_n_vars(self, n_vars: int) -> Polynomial:
        return Polynomial(self._terms, n_vars=n_vars)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> int:
        """The value of a constant polynomial."""
        if any(any(k) for k in self._terms):
            raise ValueError(f"{self} is not constant")
        return sum(self._terms.values())

    def coefficients(self) -> list[int]:
        return [c for _, c in self.sorted_terms()]

    # arithmetic
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return const(other, self.n_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        w = max(self.n_vars, other.n_vars)
        acc = defaultdict(int)
        for p in (self, other):
            for k, c in p._terms.items():
                acc[_pad(k, w + 1)] += c
        return Polynomial(acc, w)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({k: -c for k, c in self._terms.items()}, self.n_vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        w = max(self.n_vars, other.n_vars)
        acc = defaultdict(int)
        for k1, c1 in self._terms.items():
            k1 = _pad(k1, w + 1)
            for k2, c2 in other._terms.items():
                k2 = _pad(k2, w + 1)
                acc[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
        return Polynomial(acc, w)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = const(1, self.n_vars)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = const(other, self.n_vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        w = max(self.n_vars, other.n_vars) + 1
        return ({_pad(k, w): c for k, c in self._terms.items()}
                == {_pad(k, w): c for k, c in other._terms.items()})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._stripped().items()))
        return self._hash

    def _stripped(self) -> dict[Key, int]:
        out = {}
        for k, c in self._terms.items():
            k = list(k)
            while len(k) > 1 and k[-1] == 0:
                k.pop()
            out[tuple(k)] = c
        return out

    # canonical forms
    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Terms by ascending beta degree, then x-exponents in descending lex order."""
        return sorted(self._terms.items(), key=lambda kc: (kc[0][0], tuple(-e for e in kc[0][1:])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for key, c in self.sorted_terms():
            factors = []
            if key[0]:
                factors.append("b" if key[0] == 1 else f"b^{key[0]}")
            for i, e in enumerate(key[1:], 1):
                if e:
                    factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "beta": k[0], "exps": list(k[1:])} for k, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], n_vars: int | None = None) -> Polynomial:
        return cls([((t["beta"], *t["exps"]), t["coeff"]) for t in data], n_vars=n_vars)


def const(c: int, n_vars: int = 0) -> Polynomial:
    return Polynomial({(0,) * (n_vars + 1): c}, n_vars)


def x(i: int, n_vars: int | None = None) -> Polynomial:
    n_vars = i if n_vars is None else max(n_vars, i)
    exps = [0] * n_vars
    exps[i - 1] = 1
    return Polynomial.monomial(exps)


def beta(n_vars: int = 0) -> Polynomial:
    return Polynomial.monomial([0] * n_vars, beta=1)


def swap_variables(i: int, f: Polynomial) -> Polynomial:
    """s_i o f: exchange x_i and x_{i+1}."""
    f = f.with_n_vars(max(f.n_vars, i + 1))
    out = {}
    for k, c in f._terms.items():
        k = list(k)
        k[i], k[i + 1] = k[i + 1], k[i]
        out[tuple(k)] = c
    return Polynomial(out, f.n_vars)


def _divide_by_difference(num: Polynomial, i: int) -> Polynomial:
    """
    Exact quotient num / (x_i - x_{i+1}) by synthetic division in x_i,
    with coefficients in the remaining variables.
    """
    w = num.n_vars + 1
    by_deg: dict[int, dict[Key, int]] = defaultdict(dict)
    for k, c in num._terms.items():
        rest = list(k)
        d = rest[i]
        rest[i] = 0
        by_deg[d][tuple(rest)] = c
    if not by_deg:
        return Polynomial({}, num.n_vars)

    def times_next(p: dict[Key, int]) -> dict[Key, int]:
        out = {}
        for k, c in p.items():
            k = list(k)
            k[i + 1] += 1
            out[tuple(k)] = c
        return out

    def add(p: dict[Key, int], q: dict[Key, int]) -> dict[Key, int]:
        out = dict(p)
        for k, c in q.items():
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        return out

    top = max(by_deg)
    quotient: dict[Key, int] = {}
    carry: dict[Key, int] = {}
    # Horner from the top: q_{d-1} = c_d, q_{k-1} = c_k + x_{i+1} q_k
    for d in range(top, 0, -1):
        carry = add(by_deg.get(d, {}), times_next(carry))
        for k, c in carry.items():
            k = list(k)
            k[i] = d - 1
            quotient[tuple(k)] = c
    remainder = add(by_deg.get(0, {}), times_next(carry))
    if remainder:
        raise InternalError(f"division by x{i} - x{i + 1} left remainder {Polynomial(remainder, w - 1)}")
    return Polynomial(quotient, num.n_vars)


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1})."""
    f = f.with_n_vars(max(f.n_vars, i + 1))
    return _divide_by_difference(f - swap_variables(i, f), i)


def isobaric_divided_difference(i: int, f: Polynomial) -> Polynomial:
    """((1 + b x_{i+1}) f - (1 + b x_i) s_i f) / (x_i - x_{i+1})."""
    w = max(f.n_vars, i + 1)
    f = f.with_n_vars(w)
    b = beta(w)
    num = (1 + b * x(i + 1, w)) * f - (1 + b * x(i, w)) * swap_variables(i, f)
    return _divide_by_difference(num, i)


def _top_class(n: int) -> Polynomial:
    # x_1^{n-1} x_2^{n-2} ... x_{n-1}
    return Polynomial.monomial([n - k for k in range(1, n)])


def _apply_along(op, w: Permutation, word) -> Polynomial:
    n = w.n
    w0 = longest_permutation(n)
    target = compose(w0, w)
    if word is None:
        word = reduced_word(target).letters
    else:
        word = tuple(word)
        check = Word(n, word)
        if len(word) != length(target) or apply_word(check) != target:
            raise ValueError(f"{word} is not a reduced word for w0*w = {target}")
    f = _top_class(n)
    # the word reads s_{i_k} ... s_{i_1}; s_{i_k} acts first
    for a in word:
        f = op(a, f)
    return f.with_n_vars(max(n - 1, 0))


def schubert_oracle(w: Permutation, word: Sequence[int] | None = None) -> Polynomial:
    """
    Schubert polynomial by divided differences from the top class, along
    ``word`` (a reduced word of w0*w) or a canonical one.
    """
    if word is None:
        return _schubert_cached(w)
    return _apply_along(divided_difference, w, word)


def grothendieck_oracle(w: Permutation, word: Sequence[int] | None = None) -> Polynomial:
    """beta-Grothendieck polynomial by isobaric divided differences."""
    if word is None:
        return _grothendieck_cached(w)
    return _apply_along(isobaric_divided_difference, w, word)


def _descent_recursion(op, w: Permutation, cached) -> Polynomial:
    # P_u = op_i P_{u s_i} for any ascent i of u
    for i in range(1, w.n):
        if w(i) < w(i + 1):
            return op(i, cached(right_multiply(w, i))).with_n_vars(w.n - 1)
    return _top_class(w.n)


@lru_cache(maxsize=None)
def _schubert_cached(w: Permutation) -> Polynomial:
    return _descent_recursion(divided_difference, w, _schubert_cached)


@lru_cache(maxsize=None)
def _grothendieck_cached(w: Permutation) -> Polynomial:
    return _descent_recursion(isobaric_divided_difference, w, _grothendieck_cached)


def specialize(f: Polynomial, beta: int | None = None, xs: Sequence[int | None] | Mapping[int, int] = ()) -> Polynomial:
    """
    Substitute integers for beta and for some x's; ``None`` (or a missing
    entry) keeps that variable formal. ``xs`` is either a sequence for
    x_1, x_2, ... or a mapping from 1-based variable index to value.
    """
    if isinstance(xs, Mapping):
        values = dict(xs)
    else:
        values = {i: v for i, v in enumerate(xs, 1) if v is not None}
    acc: dict[Key, int] = defaultdict(int)
    for k, c in f._terms.items():
        k = list(k)
        if beta is not None:
            c *= beta ** k[0]
            k[0] = 0
        for i, v in values.items():
            if i <= f.n_vars:
                c *= v ** k[i]
                k[i] = 0
        acc[tuple(k)] += c
    return Polynomial(acc, f.n_vars)
