"""Command-line interface.

Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra as alg
from . import analysis, cd, paths, poset, shelling, simplicial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_h(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.strip("()").split(","))
    except ValueError:
        raise UsageError(f"cannot parse h-vector {text!r}") from None


def cmd_cdindex(args, out) -> int:
    kind = args.source[0]
    rest = args.source[1:]
    if kind == "boolean" and len(rest) == 1:
        try:
            m = int(rest[0])
        except ValueError:
            raise UsageError(f"not an integer: {rest[0]!r}") from None
        if m < 1:
            raise UsageError("boolean N needs N >= 1")
        if m - 1 > args.max_n:
            raise UsageError(f"rank {m} exceeds the limit n <= {args.max_n}")
        fv = poset.flag_f_vector(poset.build_boolean(m))
    elif kind == "poset" and len(rest) == 1:
        P = poset.parse_poset(_read(rest[0]))
        if not poset.is_eulerian(P):
            if not args.force:
                raise UsageError("poset is not Eulerian (use --force to try anyway)")
            print("warning: poset is not Eulerian", file=sys.stderr)
        fv = poset.flag_f_vector(P)
    elif kind == "complex" and len(rest) == 1:
        K = simplicial.parse_complex(_read(rest[0]))
        if not K.is_pure:
            raise UsageError("complex is not pure")
        if not (simplicial.euler_check(K) and poset.is_eulerian(simplicial.face_poset(K))):
            if not args.force:
                raise UsageError("complex fails the sphere checks (use --force to try anyway)")
            print("warning: complex fails the sphere checks", file=sys.stderr)
        fv = simplicial.flag_from_f(K)
    else:
        raise UsageError("source must be 'boolean N', 'poset FILE' or 'complex FILE'")
    try:
        psi = cd.cd_index_of_flag(fv, max_n=args.max_n)
    except cd.NotCdExpressible as exc:
        raise UsageError(f"not cd-expressible: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(cd.format_cd(psi))
    return EXIT_OK


def cmd_paths(args, out) -> int:
    word = "" if args.word == "1" else args.word
    try:
        n = cd.degree(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    h = _parse_h(args.h)
    if h is None:
        found = paths.enumerate_admissible(word)
        for f in found:
            out.write(paths.format_path(f) + "\n")
    else:
        if len(h) != n + 1 or any(x < 0 for x in h):
            raise UsageError(f"h-vector must have {n + 1} nonnegative entries")
        found = paths.enumerate_weighted(word, h)
        for b in found:
            out.write(str(b) + "\n")
    out.write(f"total {len(found)}\n")
    return EXIT_OK


def cmd_algebra_verify(args, out) -> int:
    n = args.n
    if n < 0 or n > args.max_n:
        raise UsageError(f"n must lie in 0..{args.max_n}")
    h = _parse_h(args.h)
    try:
        A = alg.MultiGradedAlgebra(n, h, max_n=args.max_n)
    except alg.AlgebraError as exc:
        raise UsageError(str(exc)) from None
    fv = simplicial.flag_from_face_numbers(simplicial.f_from_h(A.h))
    psi = cd.cd_index_of_flag(fv)
    reports = [alg.verify_axioms(A), alg.compare_dimensions(A, psi), alg.verify_factorization(A)]
    out.write("graded dimensions:\n")
    for word, dim in alg.dimension_table(A):
        out.write(f"  {word or '1'} {dim}\n")
    for r in reports:
        out.write(r.format() + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_shell(args, out) -> int:
    try:
        w = shelling.parse_opword(args.word)
        start = shelling.parse_start(args.start)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(w) != start.dim:
        raise UsageError(f"word has length {len(w)} but the start fan has dimension {start.dim}")
    if args.trace:
        try:
            branches = shelling.trace_eval(w, start)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for b in branches:
            out.write(b.format() + "\n")
    out.write(f"{shelling.eval_word(w, start)}\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    if args.file == "counterexample":
        psi = analysis.load_counterexample()
    else:
        try:
            psi = cd.parse_cd(_read(args.file))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    status = EXIT_OK
    if args.inequalities:
        bad = analysis.check_inequalities(psi)
        bad_prod = analysis.check_product_inequality(psi)
        for v in bad:
            out.write(f"violation: {v}\n")
        for v in bad_prod:
            out.write(f"product violation: {v}\n")
        out.write(f"inequalities: {'FAIL' if bad or bad_prod else 'PASS'} "
                  f"({len(bad)} pair violations, {len(bad_prod)} product violations)\n")
        if bad or bad_prod:
            status = EXIT_FAIL
    if args.realizable:
        if any(c < 0 for c in psi.coeffs.values()):
            raise UsageError("realizability needs nonnegative coefficients")
        try:
            W = analysis.realizable_as_colored_complex(psi, max_vertices=args.max_vertices,
                                                       budget=args.budget)
        except simplicial.SearchExhausted as exc:
            out.write(f"exhausted: {exc}\n")
            return EXIT_FAIL
        if W is None:
            out.write("none\n")
            status = EXIT_FAIL
        else:
            out.write("witness\n")
            out.write(W.format())
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdindex", description="cd-indices, admissible paths and shelling calculus")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cdindex", help="cd-index of a Boolean lattice, poset file or complex file")
    s.add_argument("source", nargs="+", help="'boolean N', 'poset FILE' or 'complex FILE'")
    s.add_argument("--force", action="store_true", help="skip the Eulerian / sphere gate")
    s.add_argument("--max-n", type=int, default=cd.MAX_N)
    s.set_defaults(func=cmd_cdindex)

    s = sub.add_parser("paths", help="list admissible paths of a cd-word")
    s.add_argument("word")
    s.add_argument("--h", help="h-vector, e.g. 1,3,3,1, for labeled paths")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("algebra-verify", help="build the path algebra and check it")
    s.add_argument("n", type=int)
    s.add_argument("--h", help="h-vector (default all ones, the Boolean case)")
    s.add_argument("--max-n", type=int, default=alg.MAX_N)
    s.set_defaults(func=cmd_algebra_verify)

    s = sub.add_parser("shell", help="evaluate an operator word on a product fan")
    s.add_argument("word", help="cd-word over c,d or operator word over C,B")
    s.add_argument("start", nargs="+", help="'pi N', 'pi K sigma L' or 'pi K pi L'")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_shell)

    s = sub.add_parser("check", help="inequalities and realizability of a cd-polynomial file")
    s.add_argument("file", help="cd-polynomial file, or 'counterexample' for the bundled one")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--inequalities", action="store_true")
    g.add_argument("--realizable", action="store_true")
    s.add_argument("--max-vertices", type=int, default=analysis.MAX_VERTICES)
    s.add_argument("--budget", type=int, default=analysis.SEARCH_BUDGET)
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, poset.PosetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
