"""Command-line surface.

Subcommands::

    eq <disk|star|sphere> WORD WORD   decide equality of two words
    liftable word WORD                liftability verdict + parity class
    liftable curve CURVE --k K        curve verdict + monodromy residue
    cover info                        cover cell counts, genus, H1 rank
    cover matrix NAME                 a lift's homology matrix as JSON
    verify-all                        run the claim suite, emit the report

Words use generator tokens (``s1 h3 t1,2 r r1 F hchain_t``) with integer
exponents; parenthesized exponents may be linear in n and k, e.g.
``r1^(2n+2)``.  Exit codes: 0 all good, 1 claim failure or false verdict
where a command defines one, 2 usage or parse error, 3 letter budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import cover as cover_mod
from . import liftability, oracle, theorems
from .errors import BudgetError, SuperellipticError, WordSyntaxError
from .generators import expand_token_text
from .liftability import curve_monodromy, curve_parse, parity
from .words import Context, psi

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superelliptic",
        description="word problems, liftability and homology actions for the "
        "balanced superelliptic cover",
    )
    parser.add_argument("--budget-letters", type=int, default=None,
                        help="intermediate free-word letter budget "
                        "(default %(default)s; env SUPERELLIPTIC_BUDGET_LETTERS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eq = sub.add_parser("eq", help="decide equality of two words")
    p_eq.add_argument("group", choices=("disk", "star", "sphere"))
    p_eq.add_argument("u")
    p_eq.add_argument("v")
    p_eq.add_argument("--n", type=int, required=True)
    p_eq.add_argument("--k", type=int, default=3)

    p_lift = sub.add_parser("liftable", help="liftability of a word or a curve")
    p_lift.add_argument("kind", choices=("word", "curve"))
    p_lift.add_argument("input")
    p_lift.add_argument("--n", type=int, required=True)
    p_lift.add_argument("--k", type=int, default=3)

    p_cover = sub.add_parser("cover", help="the branched cover surface")
    cover_sub = p_cover.add_subparsers(dest="cover_command", required=True)
    p_info = cover_sub.add_parser("info", help="cell counts, genus, homology rank")
    p_info.add_argument("--n", type=int, required=True)
    p_info.add_argument("--k", type=int, default=3)
    p_info.add_argument("--json", action="store_true")
    p_matrix = cover_sub.add_parser("matrix", help="homology matrix of a lift")
    p_matrix.add_argument("name", help="zeta, zeta_prime, r, r1, h<i>, or t<i>")
    p_matrix.add_argument("--n", type=int, required=True)
    p_matrix.add_argument("--k", type=int, default=3)

    p_verify = sub.add_parser("verify-all", help="run the full claim suite")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--k", type=int, default=3)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--out", default=None, help="write the report to a file")
    p_verify.add_argument("--bound-base-n", type=int, default=4)
    p_verify.add_argument("--bound-homology-n", type=int, default=3)
    p_verify.add_argument("--bound-homology-k", type=int, default=4)
    p_verify.add_argument("--liftability-samples", type=int, default=10_000)
    return parser


def _budget(args) -> int:
    if args.budget_letters is not None:
        return args.budget_letters
    return oracle.default_budget()


def _cmd_eq(args) -> int:
    ctx = Context(args.n, args.k)
    u = expand_token_text(args.u, ctx)
    v = expand_token_text(args.v, ctx)
    eq = {"disk": oracle.eq_disk, "star": oracle.eq_star, "sphere": oracle.eq_sphere}[
        args.group
    ]
    verdict = eq(u, v, ctx, budget=_budget(args))
    print("true" if verdict else "false")
    if args.group == "sphere":
        print(f"psi(u) = {psi(u, ctx).to_text()}")
        print(f"psi(v) = {psi(v, ctx).to_text()}")
    return EXIT_OK


def _cmd_liftable(args) -> int:
    ctx = Context(args.n, args.k)
    if ctx.k == 2:
        print(
            "warning: k = 2 (hyperelliptic): every mapping class lifts; "
            "the liftable theory here targets k >= 3",
            file=sys.stderr,
        )
    if args.kind == "word":
        w = expand_token_text(args.input, ctx)
        cls = parity(psi(w, ctx), ctx)
        liftable = cls is not liftability.ParityClass.NEITHER
        print("liftable" if liftable else "not liftable")
        print(f"parity: {cls.value}")
    else:
        c = curve_parse(args.input, ctx)
        residue = curve_monodromy(c, ctx)
        print("lifts" if residue == 0 else "does not lift")
        print(f"monodromy: {residue} mod {ctx.k}")
    return EXIT_OK


def _cmd_cover(args) -> int:
    ctx = Context(args.n, args.k)
    surface = cover_mod.build_cover(ctx)
    if args.cover_command == "info":
        info = surface.info()
        if args.json:
            from . import intmat

            P = intmat.symplectic_change_of_basis(surface.J)
            info["intersection_form"] = surface.J.tolist()
            info["standard_symplectic_change"] = P.tolist()
            print(json.dumps(info, indent=2, sort_keys=True))
        else:
            for key in ("n", "k", "vertices", "edges", "faces", "genus",
                        "euler_characteristic", "h1_rank"):
                print(f"{key}: {info[key]}")
            print("conventions: sheets increment across odd arcs; "
                  "rightmost letter acts first")
        return EXIT_OK
    name = args.name
    if name in ("zeta", "zeta_prime", "r", "r1"):
        M = cover_mod.lift_rep(surface, name)
    elif name[0] in ("h", "t") and name[1:].isdigit():
        M = cover_mod.lift_rep(surface, name[0], int(name[1:]))
    else:
        raise WordSyntaxError(f"unknown lift name {name!r}")
    print(json.dumps(M.tolist()))
    return EXIT_OK


def _cmd_verify_all(args) -> int:
    bounds = theorems.Bounds(
        base_n=args.bound_base_n,
        homology_n=args.bound_homology_n,
        homology_k=args.bound_homology_k,
    )
    report = theorems.run_all(
        args.n,
        args.k,
        budget=_budget(args),
        bounds=bounds,
        liftability_samples=args.liftability_samples,
    )
    text = report.to_json() if args.json else report.render_text()
    if args.out:
        directory = os.path.dirname(os.path.abspath(args.out))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text + "\n")
            os.replace(tmp, args.out)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    print(text)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eq":
            return _cmd_eq(args)
        if args.command == "liftable":
            return _cmd_liftable(args)
        if args.command == "cover":
            return _cmd_cover(args)
        if args.command == "verify-all":
            return _cmd_verify_all(args)
        parser.error(f"unknown command {args.command!r}")
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (WordSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SuperellipticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
