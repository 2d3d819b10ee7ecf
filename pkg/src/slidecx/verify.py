"""
Exhaustive consistency checks over S_n for small n.

Each check returns a :class:`Check`; the CLI ``verify`` command and the
acceptance tests both run them.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field
from typing import Callable

from .complex import (
    Classification, Complex, Face, build_complex, classify, euler_characteristic, face_pipe_dream, faces,
    flip_graph, glide_from_complex, grothendieck_from_complex, interior_decomposition, pseudomanifold_boundary,
    schubert_from_complex, slide_from_complex, vertex_decomposition_shelling, verify_shelling,
)
from .coxeter import Permutation, Word, all_permutations, demazure_product, is_tilde_reduced, length
from .errors import UnclassifiableSlideTarget
from .pipedream import (
    PipeDream, enumerate_pipe_dreams, enumerate_quasi_yamanouchi, glide_polynomial, monomial,
    grothendieck_from_pipedreams, is_quasi_yamanouchi, schubert_from_pipedreams, slide_move, slide_orbit,
    slide_polynomial, staircase_word, word_of,
)
from .polynomial import Polynomial, grothendieck_oracle, schubert_oracle

__all__ = ["Check", "SUITES", "run_suite", "permutations_up_to"]


@dataclass
class Check:
    name: str
    passed: bool = True
    count: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str) -> None:
        self.passed = False
        if len(self.failures) < 20:
            self.failures.append(msg)

    def to_json(self, timing: bool = True) -> dict:
        out = {"name": self.name, "passed": self.passed, "count": self.count, "failures": self.failures}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(fn: Callable[..., Check]) -> Callable[..., Check]:
    def wrapper(*args, **kwargs) -> Check:
        t0 = time.perf_counter()
        check = fn(*args, **kwargs)
        check.seconds = time.perf_counter() - t0
        return check
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def permutations_up_to(max_rank: int, start: int = 1) -> list[Permutation]:
    return [w for n in range(start, max_rank + 1) for w in all_permutations(n)]


# polynomials

@_timed
def check_oracle_equivalence(max_rank: int) -> Check:
    """Pipe dream sums equal the operator recursion, and the slide/glide expansions add up."""
    c = Check("oracle_equivalence")
    for w in permutations_up_to(max_rank):
        c.count += 1
        S, G = schubert_oracle(w), grothendieck_oracle(w)
        if schubert_from_pipedreams(w) != S:
            c.fail(f"Schubert {w}")
        if grothendieck_from_pipedreams(w) != G:
            c.fail(f"Grothendieck {w}")
        slide_sum = Polynomial({}, w.n - 1)
        glide_sum = Polynomial({}, w.n - 1)
        for cert in enumerate_quasi_yamanouchi(w):
            Q = cert.pipe_dream
            if cert.reduced_flag:
                slide_sum = slide_sum + slide_polynomial(Q)
            g = glide_polynomial(Q)
            glide_sum = glide_sum + Polynomial({(k[0] + cert.excess, *k[1:]): v for k, v in g.terms.items()})
        if slide_sum != S:
            c.fail(f"sum of slide polynomials {w}")
        if glide_sum != G:
            c.fail(f"sum of glide polynomials {w}")
    return c


@_timed
def check_alternating_sums(max_rank: int) -> Check:
    """sum_k (-1)^k |PD_k(w)| = 1 and the same over quasi-Yamanouchi pipe dreams."""
    c = Check("alternating_sums")
    for w in permutations_up_to(max_rank):
        c.count += 1
        ell = length(w)
        pd = sum((-1) ** (len(P) - ell) for P in enumerate_pipe_dreams(w))
        qpd = sum((-1) ** cert.excess for cert in enumerate_quasi_yamanouchi(w))
        if pd != 1:
            c.fail(f"PD alternating sum {pd} for {w}")
        if qpd != 1:
            c.fail(f"QPD alternating sum {qpd} for {w}")
    return c


@_timed
def check_three_routes(max_rank: int) -> Check:
    """Pipe dreams, operators and complex faces give the same polynomials."""
    c = Check("three_routes")
    for w in permutations_up_to(max_rank):
        c.count += 1
        if not schubert_from_pipedreams(w) == schubert_oracle(w) == schubert_from_complex(w):
            c.fail(f"Schubert routes disagree for {w}")
        if not grothendieck_from_pipedreams(w) == grothendieck_oracle(w) == grothendieck_from_complex(w):
            c.fail(f"Grothendieck routes disagree for {w}")
        for cert in enumerate_quasi_yamanouchi(w):
            if glide_polynomial(cert.pipe_dream) != glide_from_complex(cert.word):
                c.fail(f"glide routes disagree for {cert.word}")
            if cert.reduced_flag and slide_polynomial(cert.pipe_dream) != slide_from_complex(cert.word):
                c.fail(f"slide routes disagree for {cert.word}")
    return c


# topology

def topology_corpus(max_rank: int) -> list[Complex]:
    """Pipe dream complexes, their slide strata, and the small hand examples."""
    out = [
        build_complex(Word(2, (1, 1)), Word(2, (1,))),
        build_complex(Word(4, (3, 2, 1, 3, 2, 3)), Permutation((1, 4, 3, 2))),
    ]
    for w in permutations_up_to(max_rank):
        q = staircase_word(w.n)
        out.append(build_complex(q, w))
        for s in interior_decomposition(q, w):
            out.append(build_complex(q, s))
    return out


def _check_complex_topology(cx: Complex, c: Check) -> None:
    label = f"{cx.kind} {cx.word} / {cx.target}"
    chi = euler_characteristic(cx)
    kind = classify(cx)
    d = cx.dimension
    expected = 1 if kind is Classification.BALL else 1 + (-1) ** d
    if chi != expected:
        c.fail(f"{label}: chi={chi}, {kind.value} of dim {d} wants {expected}")
    ridge_boundary = pseudomanifold_boundary(cx)
    marked = [f for f in faces(cx, "boundary")]
    ridges_marked = {f for f in marked if len(f) == cx.facet_size - 1}
    if ridges_marked != ridge_boundary:
        c.fail(f"{label}: boundary ridges disagree")
    for f in marked:
        if not any(f.mask & r.mask == f.mask for r in ridge_boundary):
            c.fail(f"{label}: boundary face {f} not under a boundary ridge")
            break
    if kind is Classification.SPHERE and marked:
        c.fail(f"{label}: sphere with boundary faces")


@_timed
def check_topology(max_rank: int) -> Check:
    """Euler characteristic and boundary structure agree with the ball/sphere classification."""
    c = Check("topology")
    for cx in topology_corpus(max_rank):
        c.count += 1
        _check_complex_topology(cx, c)
    with warnings.catch_warnings():
        # the target is deliberately not tilde-reduced
        warnings.simplefilter("ignore")
        tetra = build_complex(Word(2, (1, 1, 1, 1)), Word(2, (1, 1)))
    c.count += 1
    try:
        classify(tetra)
        c.fail("tetrahedron skeleton was classified")
    except UnclassifiableSlideTarget:
        pass
    if euler_characteristic(tetra) != -2:
        c.fail(f"tetrahedron skeleton chi={euler_characteristic(tetra)}")
    return c


@_timed
def check_shellability(max_rank: int) -> Check:
    """The vertex-decomposition order is a shelling for every complex in the corpus."""
    c = Check("shellability")
    for cx in topology_corpus(max_rank):
        c.count += 1
        if not verify_shelling(cx, vertex_decomposition_shelling(cx)):
            c.fail(f"{cx.kind} {cx.word} / {cx.target}")
    return c


@_timed
def check_decomposition(max_rank: int) -> Check:
    """Interior of each pipe dream complex splits into slide strata matching glide orbits."""
    c = Check("decomposition")
    for w in permutations_up_to(max_rank):
        c.count += 1
        q = staircase_word(w.n)
        whole = build_complex(q, w)
        interior = faces(whole, "interior")
        parts = interior_decomposition(q, w)
        flat = [f for part in parts.values() for f in part]
        if sorted(flat) != sorted(interior) or len(set(flat)) != len(flat):
            c.fail(f"{w}: parts do not partition the interior")
        qy = {cert.word: cert for cert in enumerate_quasi_yamanouchi(w)}
        if set(parts) != set(qy):
            c.fail(f"{w}: keys {sorted(map(str, parts))} vs QY words {sorted(map(str, qy))}")
            continue
        for s, part in parts.items():
            if not is_tilde_reduced(s) or demazure_product(s) != w:
                c.fail(f"{w}: bad key {s}")
            stratum = build_complex(q, s)
            if sorted(faces(stratum, "interior")) != sorted(part):
                c.fail(f"{w}: part {s} is not the interior of its slide complex")
            total = Polynomial({}, w.n - 1)
            for f in part:
                mono = face_pipe_dream(stratum, f)
                k = stratum.codim(f)
                total = total + Polynomial({(k, *e[1:]): v for e, v in monomial(mono).terms.items()})
            if total != glide_polynomial(qy[s].pipe_dream):
                c.fail(f"{w}: part sum for {s} differs from the glide polynomial")
    return c


# flips

def _reduced_qy(max_rank: int):
    for w in permutations_up_to(max_rank):
        for cert in enumerate_quasi_yamanouchi(w, reduced_only=True):
            yield w, cert.pipe_dream, cert.word


def _slide_pairs(Q: PipeDream) -> set[tuple[PipeDream, PipeDream]]:
    pairs = set()
    for P in slide_orbit(Q):
        for i in range(1, P.n):
            R = slide_move(P, i)
            if R != P:
                pairs.add((P, R))
    return pairs


def _flip_pairs(cx: Complex, flips: list[tuple[Face, Face]]) -> set[tuple[PipeDream, PipeDream]]:
    return {(face_pipe_dream(cx, a), face_pipe_dream(cx, b)) for a, b in flips}


@_timed
def check_greedy(max_rank: int) -> Check:
    """Positive greedy facets are the quasi-Yamanouchi pipe dreams."""
    c = Check("greedy_facet")
    q_cache = {}
    for w, Q, s in _reduced_qy(max_rank):
        c.count += 1
        q = q_cache.setdefault(w.n, staircase_word(w.n))
        cx = build_complex(q, s)
        g = flip_graph(cx)
        if face_pipe_dream(cx, g.positive_greedy) != Q:
            c.fail(f"{w}, {s}: positive greedy facet is not the QY pipe dream")
        if {face_pipe_dream(cx, f) for f in cx.facets} != set(slide_orbit(Q)):
            c.fail(f"{w}, {s}: facets are not the slide orbit")
    # converse direction: every reduced P, QY iff positive greedy in the complex of its own word
    for w in permutations_up_to(max_rank):
        q = staircase_word(w.n)
        for P in enumerate_pipe_dreams(w, reduced_only=True):
            c.count += 1
            cx = build_complex(q, word_of(P)[0])
            is_greedy = face_pipe_dream(cx, flip_graph(cx).positive_greedy) == P
            if is_greedy != is_quasi_yamanouchi(P):
                c.fail(f"{P}: greedy={is_greedy}, QY={is_quasi_yamanouchi(P)}")
    return c


@_timed
def check_flips_literal(max_rank: int) -> Check:
    """Every decreasing flip (all facet adjacencies) is a non-identity slide move, and conversely."""
    c = Check("decreasing_flips_are_slide_moves")
    for w, Q, s in _reduced_qy(max_rank):
        c.count += 1
        cx = build_complex(staircase_word(w.n), s)
        flips = _flip_pairs(cx, flip_graph(cx).decreasing_flips())
        slides = _slide_pairs(Q)
        if flips != slides:
            extra = sorted(flips - slides)
            missing = sorted(slides - flips)
            c.fail(f"{w}, word {s}: {len(extra)} flips are not slide moves"
                   + (f" (e.g. {extra[0][0].sorted_crosses()} -> {extra[0][1].sorted_crosses()})" if extra else "")
                   + f", {len(missing)} slide moves are not flips")
    return c


@_timed
def check_flips_covers(max_rank: int) -> Check:
    """Covering relations of the decreasing-flip order are exactly the non-identity slide moves."""
    c = Check("flip_covers_are_slide_moves")
    for w, Q, s in _reduced_qy(max_rank):
        c.count += 1
        cx = build_complex(staircase_word(w.n), s)
        g = flip_graph(cx)
        slides = _slide_pairs(Q)
        if _flip_pairs(cx, g.cover_flips()) != slides:
            c.fail(f"{w}, word {s}: covers differ from slide moves")
        if not slides <= _flip_pairs(cx, g.decreasing_flips()):
            c.fail(f"{w}, word {s}: a slide move is not a flip")
    return c


SUITES: dict[str, list[Callable[[int], Check]]] = {
    "polynomials": [check_oracle_equivalence, check_alternating_sums, check_three_routes],
    "topology": [check_topology, check_shellability, check_decomposition],
    "flips": [check_greedy, check_flips_covers, check_flips_literal],
}


def run_suite(suite: str, max_rank: int) -> list[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    return [check(max_rank) for name in names for check in SUITES[name]]
