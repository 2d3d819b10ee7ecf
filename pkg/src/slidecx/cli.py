"""
Command line front end.

Every command prints a JSON object ``{"status", "payload", "diagnostics"}``
with sorted keys, so identical arguments give identical bytes. Exit status
is 0 on success, 1 when a verification fails or a computation is refused,
and 2 for usage and parse errors. ``enumerate --format ascii`` and
``complex --dot`` print plain text instead.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from math import factorial
from dataclasses import dataclass, field
from typing import Any, Sequence

from .complex import (
    build_complex, classify, euler_characteristic, faces, flip_graph, glide_from_complex,
    grothendieck_from_complex, schubert_from_complex, slide_from_complex,
)
from .coxeter import Permutation, Word, permutation_from_one_line, word_from_string
from .errors import (
    NotABijection, NotQuasiYamanouchi, ParseError, RankMismatch, SlideCxError, UnclassifiableSlideTarget,
)
from .pipedream import (
    PipeDream, enumerate_pipe_dreams, enumerate_quasi_yamanouchi, excess, glide_polynomial,
    grothendieck_from_pipedreams, is_quasi_yamanouchi, monomial, quasi_yamanouchi_for_word,
    schubert_from_pipedreams, shape, slide_polynomial, word_of,
)
from .polynomial import Polynomial, grothendieck_oracle, schubert_oracle
from .verify import SUITES, run_suite

MAX_RANK = 6
MAX_WORD_LENGTH = 15

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(SlideCxError):
    pass


@dataclass
class CommandResult:
    status: str
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    text: str | None = None

    def render(self) -> str:
        if self.text is not None and self.status == "ok":
            return self.text
        body = {"status": self.status, "payload": self.payload, "diagnostics": self.diagnostics}
        return json.dumps(body, sort_keys=True, indent=2) + "\n"


def _error(msg: str, code: int = EXIT_USAGE) -> CommandResult:
    return CommandResult("error", None, [msg], code)


def _check_rank(n: int) -> None:
    if n > MAX_RANK:
        raise UsageError(f"rank {n} exceeds the cap of {MAX_RANK}")


def _parse_perm(text: str) -> Permutation:
    w = permutation_from_one_line(text)
    _check_rank(w.n)
    return w


def _parse_crosses(text: str, n: int | None) -> PipeDream:
    cells = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            i, j = (int(t) for t in chunk.split(","))
        except ValueError:
            raise ParseError(f"bad cross {chunk!r}, expected 'i,j'") from None
        cells.append((i, j))
    if n is None:
        n = max((i + j for i, j in cells), default=1)
    _check_rank(n)
    try:
        return PipeDream.from_crosses(n, cells)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _entry(P: PipeDream) -> dict:
    out = P.to_json()
    out.update(shape=str(shape(P)), excess=excess(P), word=list(word_of(P)[0].letters), monomial=str(monomial(P)))
    return out


def _poly_payload(f: Polynomial) -> dict:
    return {"text": str(f), "terms": f.to_json()}


# commands

def cmd_enumerate(args) -> CommandResult:
    w = _parse_perm(args.perm)
    if args.quasi_yamanouchi:
        dreams = [c.pipe_dream for c in enumerate_quasi_yamanouchi(w, reduced_only=args.reduced)]
    else:
        dreams = enumerate_pipe_dreams(w, reduced_only=args.reduced)
    if args.format == "ascii":
        blocks = [f"# {i}: excess {excess(P)}\n{P.ascii()}" for i, P in enumerate(dreams, 1)]
        return CommandResult("ok", text="\n\n".join(blocks) + "\n" if blocks else "")
    by_excess: dict[str, int] = {}
    for P in dreams:
        k = str(excess(P))
        by_excess[k] = by_excess.get(k, 0) + 1
    payload = {
        "permutation": str(w),
        "reduced_only": args.reduced,
        "quasi_yamanouchi": args.quasi_yamanouchi,
        "count": len(dreams),
        "count_by_excess": by_excess,
        "entries": [_entry(P) for P in dreams],
    }
    return CommandResult("ok", payload)


def _qy_from_args(args) -> PipeDream:
    if args.word is not None and args.crosses is not None:
        raise UsageError("give either --word or --crosses, not both")
    if args.word is not None:
        s = word_from_string(args.word, args.n)
        _check_rank(s.n)
        return quasi_yamanouchi_for_word(s)
    if args.crosses is not None:
        P = _parse_crosses(args.crosses, args.n)
        if not is_quasi_yamanouchi(P):
            raise NotQuasiYamanouchi(f"{P!r} is not quasi-Yamanouchi")
        return P
    raise UsageError("slide and glide polynomials need --word or --crosses")


def cmd_poly(args) -> CommandResult:
    *rest, kind = args.operands
    if kind not in ("schubert", "grothendieck", "slide", "glide"):
        raise UsageError(f"unknown polynomial kind {kind!r}")
    if len(rest) > 1:
        raise UsageError("expected at most one permutation before the kind")
    source = args.source
    if kind in ("schubert", "grothendieck"):
        if not rest:
            raise UsageError(f"{kind} polynomials need a permutation")
        w = _parse_perm(rest[0])
        routes = {
            ("schubert", "pipedreams"): schubert_from_pipedreams,
            ("schubert", "operators"): schubert_oracle,
            ("grothendieck", "pipedreams"): grothendieck_from_pipedreams,
            ("grothendieck", "operators"): grothendieck_oracle,
        }
        if source == "complex":
            f = (schubert_from_complex if kind == "schubert" else grothendieck_from_complex)(w)
        else:
            f = routes[kind, source](w)
        target = {"permutation": str(w)}
    else:
        if rest:
            raise UsageError(f"{kind} polynomials take --word or --crosses, not a permutation")
        if source == "operators":
            raise UsageError(f"no operator route for {kind} polynomials; use pipedreams or complex")
        Q = _qy_from_args(args)
        s = word_of(Q)[0]
        if source == "complex":
            f = (slide_from_complex if kind == "slide" else glide_from_complex)(s)
        else:
            f = (slide_polynomial if kind == "slide" else glide_polynomial)(Q)
        target = {"word": list(s.letters), "n": Q.n, "crosses": Q.to_json()["crosses"]}
    payload = {"kind": kind, "source": source, "input": target, **_poly_payload(f)}
    return CommandResult("ok", payload)


def cmd_complex(args) -> CommandResult:
    if (args.perm is None) == (args.target_word is None):
        raise UsageError("give exactly one of --perm or --word")
    target: Permutation | Word
    if args.perm is not None:
        target = _parse_perm(args.perm)
        q = word_from_string(args.word, args.n or target.n)
    else:
        q = word_from_string(args.word)
        target = word_from_string(args.target_word)
        n = args.n or max(q.n, target.n)
        q, target = Word(n, q.letters), Word(n, target.letters)
    _check_rank(q.n)
    if len(q) > MAX_WORD_LENGTH:
        raise UsageError(f"word length {len(q)} exceeds the cap of {MAX_WORD_LENGTH}")

    diagnostics = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cx = build_complex(q, target)
    diagnostics += [str(w.message) for w in caught]
    if not cx.facets:
        return _error(f"the target does not occur in {q}; the complex is void", EXIT_FAILURE)

    if args.dot:
        return CommandResult("ok", text=flip_graph(cx).to_dot())

    interior = faces(cx, "interior")
    boundary = faces(cx, "boundary")
    try:
        label = classify(cx).value
    except UnclassifiableSlideTarget:
        label = "Unclassifiable"
    payload = cx.to_json()
    payload.update(
        n=q.n,
        dimension=cx.dimension,
        facet_count=len(cx.facets),
        interior_count=len(interior),
        boundary_count=len(boundary),
        euler=euler_characteristic(cx),
        classification=label,
    )
    if args.faces:
        payload["faces"] = {
            "interior": [list(f.deleted_positions) for f in interior],
            "boundary": [list(f.deleted_positions) for f in boundary],
        }
    return CommandResult("ok", payload, diagnostics)


def cmd_verify(args) -> CommandResult:
    if not 2 <= args.max_rank <= MAX_RANK:
        raise UsageError(f"--max-rank must lie in 2..{MAX_RANK}")
    checks = run_suite(args.suite, args.max_rank)
    payload = {
        "max_rank": args.max_rank,
        "suite": args.suite,
        "permutations": {str(n): factorial(n) for n in range(1, args.max_rank + 1)},
        "checks": [c.to_json(timing=args.timings) for c in checks],
        "passed": all(c.passed for c in checks),
    }
    failed = [c.name for c in checks if not c.passed]
    if failed:
        return CommandResult("error", payload, [f"failed: {name}" for name in failed], EXIT_FAILURE)
    return CommandResult("ok", payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slidecx", description="Pipe dreams, slide complexes and their polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the pipe dreams of a permutation")
    p.add_argument("perm", help="one-line notation, e.g. 1432 or 1,4,3,2")
    p.add_argument("--reduced", action="store_true", help="reduced pipe dreams only")
    p.add_argument("--quasi-yamanouchi", action="store_true", help="quasi-Yamanouchi pipe dreams only")
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poly", help="Schubert, Grothendieck, slide or glide polynomial")
    p.add_argument("operands", nargs="+", metavar="[PERM] KIND",
                   help="KIND is schubert, grothendieck, slide or glide")
    p.add_argument("--word", help="word of a quasi-Yamanouchi pipe dream, e.g. 3,2,3")
    p.add_argument("--crosses", help='crosses of a quasi-Yamanouchi pipe dream, e.g. "1,3;2,2"')
    p.add_argument("--n", type=int, help="rank for --word or --crosses")
    p.add_argument("--source", choices=("pipedreams", "operators", "complex"), default="pipedreams")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("complex", help="subword complex or slide complex of a word")
    p.add_argument("word", help="the ambient word, e.g. 3,2,1,3,2,3")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--perm", help="permutation target: subword complex")
    target.add_argument("--word", dest="target_word", help="word target: slide complex")
    p.add_argument("--n", type=int, help="rank (default: inferred)")
    p.add_argument("--faces", action="store_true", help="list interior and boundary faces")
    p.add_argument("--dot", action="store_true", help="print the oriented flip graph in DOT")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("verify", help="run the consistency suites")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return CommandResult("ok" if code == 0 else "error", None, ["usage error"], code, text="" if code == 0 else None)
    try:
        return args.func(args)
    except (ParseError, NotABijection, RankMismatch, UsageError) as exc:
        return _error(str(exc), EXIT_USAGE)
    except SlideCxError as exc:
        return _error(f"{type(exc).__name__}: {exc}", EXIT_FAILURE)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    sys.stdout.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
