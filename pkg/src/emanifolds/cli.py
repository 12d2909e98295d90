"""Command line interface.

Exit codes: 0 whenever a verdict was produced (including "not realizable"),
1 for malformed input or out-of-range parameters, 2 for well-formed input
that violates a structural invariant (asymmetric δ, non-unimodular γ, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InconsistentDataError, InputError
from .freelie import hall_basis, rank_breakdown, witt_dimension
from .invariants import SystemOfInvariants, indeterminacy, realizability
from .links import (
    FramedLinkS7,
    LinkTuple,
    framed_link_from_invariants,
    link_tuple_from_invariants,
    system_from_links,
)

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2
MAX_DEGREE, MAX_B = 8, 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _parse_lift(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--lift must be comma-separated integers, got {text!r}") from None


def _load_json(source: str | None, inline: str | None):
    if (source is None) == (inline is None):
        raise InputError("give exactly one input: a file path (or '-') or --json")
    try:
        if inline is not None:
            return json.loads(inline)
        if source == "-":
            return json.load(sys.stdin)
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _dumps(obj, level: int = 0) -> str:
    # nested arrays of numbers stay on one line; objects are indented
    pad = "  " * (level + 1)
    if isinstance(obj, dict) and obj:
        items = [f"{pad}{json.dumps(str(k))}: {_dumps(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(obj, list) and any(isinstance(x, dict) for x in obj):
        items = [pad + _dumps(x, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * level + "]"
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def _emit(obj) -> None:
    sys.stdout.write(_dumps(obj) + "\n")


def _yes(flag: bool) -> str:
    return "pass" if flag else "FAIL"


def _link_lines(s, lt, fl) -> list[str]:
    lines = []
    if s.b:
        pairs = lt.pairs()
        for k in range(lt.b4):
            diag = ", ".join(f"l_{i + 1}={lt.l_diag[k][i]}" for i in range(lt.b))
            off = ", ".join(f"l_{i + 1}{j + 1}={lt.l_off[k][q]}" for q, (i, j) in enumerate(pairs))
            lines.append(f"link component {k + 1}: {diag}" + (f"; {off}" if off else ""))
    if fl is not None:
        for i, f in enumerate(fl.framings):
            links = ", ".join(f"λ_{i + 1}{j + 1}={fl.lam[i][j]}" for j in range(fl.n) if j != i)
            lines.append(f"S^7 component {i + 1}: framing (k1, k2) = ({f.k1}, {f.k2})" + (f"; {links}" if links else ""))
    return lines


def _classify_text(s, rep, ind, lt, fl) -> list[str]:
    pl = "realizable" if rep.pl_realizable else "NOT realizable"
    if rep.smooth_realizable:
        smooth = "realizable"
    elif not rep.relation3.passed:
        smooth = f"NOT realizable (residue {rep.relation3.residue} mod 2688)"
    else:
        smooth = "NOT realizable"
    fiber = ind.short() if ind else "n/a"
    lines = [f"PL: {pl}; smooth: {smooth}; fiber: {fiber}"]
    lines.append(f"type (b, b4) = ({s.b}, {s.b4}), signature {rep.signature}")
    r1 = rep.relation1
    lines.append(f"relation (1): {_yes(r1.passed)}" + (f" at {r1.witness}: {r1.detail}" if not r1.passed else ""))
    r2 = rep.relation2
    lines.append(f"relation (2): {_yes(r2.passed)}" + (f": {r2.detail}" if not r2.passed else ""))
    lines.append(f"relation (3): {_yes(rep.relation3.passed)} ({rep.relation3.detail})")
    lines.append(f"scope: {rep.scope_note}")
    if ind:
        lines.append(f"PL fibre: {ind.pl_fiber}")
        lines.append(f"smooth fibre: {ind.smooth_fiber}")
        lines.append(f"finite indeterminacy: {'yes' if ind.finite else 'no'}")
    lines.extend(_link_lines(s, lt, fl))
    return lines


def cmd_classify(args) -> int:
    s = SystemOfInvariants.from_json(_load_json(args.file, args.json))
    lift = _parse_lift(args.lift) if args.lift is not None else None
    if lift is not None and len(lift) != s.b:
        raise InputError(f"--lift has {len(lift)} entries, expected b = {s.b}")
    rep = realizability(s, lift)
    ind = indeterminacy(s, lift) if rep.pl_realizable else None
    lt = link_tuple_from_invariants(s)
    fl = framed_link_from_invariants(s.gamma, s.p) if rep.relation2.passed else None
    if args.format == "json":
        _emit(
            {
                "input": s.to_json(),
                "lift": lift if lift is not None else [0] * s.b,
                "realizability": rep.to_json(),
                "indeterminacy": ind.to_json() if ind else None,
                "link_tuple": lt.to_json(),
                "framed_link": fl.to_json() if fl else None,
            }
        )
    else:
        print("\n".join(_classify_text(s, rep, ind, lt, fl)))
    return EXIT_OK


def _guard(args, b: int, degree: int | None = None) -> None:
    if b < 1:
        raise InputError(f"--b must be >= 1, got {b}")
    if degree is not None and degree < 1:
        raise InputError(f"degree must be >= 1, got {degree}")
    if args.allow_large:
        return
    if b > MAX_B:
        raise InputError(f"--b {b} exceeds the limit {MAX_B} (use --allow-large)")
    if degree is not None and degree > MAX_DEGREE:
        raise InputError(f"degree {degree} exceeds the limit {MAX_DEGREE} (use --allow-large)")


def cmd_lie(args) -> int:
    if args.lie_cmd == "dims":
        _guard(args, args.b, args.max_degree)
        dims = [witt_dimension(args.b, l) for l in range(1, args.max_degree + 1)]
        if args.format == "json":
            _emit({"b": args.b, "dims": {str(l): d for l, d in enumerate(dims, 1)}})
        else:
            print(f"Witt dimensions d_l for b = {args.b}")
            for l, d in enumerate(dims, 1):
                print(f"{l:>3}  {d}")
    elif args.lie_cmd == "hall":
        _guard(args, args.b, args.degree)
        basis = hall_basis(args.b, args.degree)
        if args.format == "json":
            _emit(
                {
                    "b": args.b,
                    "degree": args.degree,
                    "basis": [{"index": e.index, "word": [c + 1 for c in e.word], "bracket": str(e)} for e in basis],
                }
            )
        else:
            print(f"Hall basis of degree {args.degree} for b = {args.b} ({len(basis)} elements)")
            for e in basis:
                word = "".join(f"{c + 1}" if args.b < 10 else f"{c + 1}." for c in e.word)
                print(f"{e.index:>5}  {word}  {e}")
    else:
        _guard(args, args.b)
        r = rank_breakdown(args.b)
        if args.format == "json":
            out = r.to_json()
            if args.b == 1:
                out["note"] = "FL_1 ≅ ℤ₂"
            _emit(out)
        else:
            print(f"free ranks for b = {args.b}")
            print(f"  d3, d4, d5, d6        {r.d3}, {r.d4}, {r.d5}, {r.d6}")
            print(f"  rank w_b^5            {r.rank_w5} (domain rank {r.lambda5_free_rank}, codomain rank {r.pi6_free_rank})")
            print(f"  rank w_b^6            {r.rank_w6} (domain rank {r.lambda6_free_rank}, codomain rank {r.pi7_free_rank})")
            print(f"  rank_ker_w5           {r.rank_ker_w5}")
            print(f"  rank_coker_w6         {r.rank_coker_w6}")
            print(f"  rank_L                {r.rank_L}")
            print(f"  rank_FL               {r.rank_FL}")
            if args.b == 1:
                print("  note: FL₁ ≅ ℤ₂")
            else:
                print(f"  torsion of FL         ℤ₂^{args.b} plus the (undetermined) torsion of L_{args.b}")
    return EXIT_OK


def cmd_link(args) -> int:
    data = _load_json(args.file, args.json)
    if args.link_cmd == "from-invariants":
        s = SystemOfInvariants.from_json(data)
        fl = framed_link_from_invariants(s.gamma, s.p)
        lt = link_tuple_from_invariants(s)
        if args.format == "json":
            _emit({"link_tuple": lt.to_json(), "framed_link": fl.to_json()})
        else:
            print("\n".join(_link_lines(s, lt, fl)))
    else:
        if not isinstance(data, dict) or "framed_link" not in data:
            raise InputError('input needs a "framed_link" object (and a "link_tuple" when b > 0)')
        fl = FramedLinkS7.from_json(data["framed_link"])
        lt = LinkTuple.from_json(data["link_tuple"]) if data.get("link_tuple") is not None else None
        s = system_from_links(lt, fl)
        if args.format == "json":
            _emit(s.to_json())
        else:
            print(f"b = {s.b}, b4 = {s.b4}")
            print(f"gamma = {s.gamma.to_json()}")
            print(f"p = {list(s.p)}")
            for i in range(s.b):
                for j in range(i, s.b):
                    print(f"x{i + 1} x{j + 1} = {list(s.delta[i][j])}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="emanifolds", description=__doc__.splitlines()[0])
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[fmt], help="realizability and indeterminacy of a system of invariants")
    p.add_argument("file", nargs="?", help="JSON file with b, b4, delta, gamma, p ('-' for stdin)")
    p.add_argument("--json", help="inline JSON instead of a file")
    p.add_argument("--lift", help="integral lift W of w2 as comma-separated coordinates (default 0)")
    p.set_defaults(func=cmd_classify)

    lie = sub.add_parser("lie", help="free Lie algebra tables")
    lsub = lie.add_subparsers(dest="lie_cmd", required=True, parser_class=_Parser)
    guard = _Parser(add_help=False)
    guard.add_argument("--b", type=int, required=True)
    guard.add_argument("--allow-large", action="store_true", help="lift the b <= 6, degree <= 8 limits")
    d = lsub.add_parser("dims", parents=[fmt, guard])
    d.add_argument("--max-degree", type=int, default=MAX_DEGREE)
    h = lsub.add_parser("hall", parents=[fmt, guard])
    h.add_argument("--degree", type=int, required=True)
    lsub.add_parser("rank", parents=[fmt, guard])
    lie.set_defaults(func=cmd_lie)

    link = sub.add_parser("link", help="convert between invariants and link data")
    ksub = link.add_subparsers(dest="link_cmd", required=True, parser_class=_Parser)
    for name in ("from-invariants", "to-invariants"):
        k = ksub.add_parser(name, parents=[fmt])
        k.add_argument("file", nargs="?")
        k.add_argument("--json", help="inline JSON instead of a file")
    link.set_defaults(func=cmd_link)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistentDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(main())
