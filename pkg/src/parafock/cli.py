"""Command-line interface.

Verbs: ``enumerate`` bases, ``act`` with operator words (finite or infinite
rank), ``cgc-table`` and ``reduced-me`` dumps, ``verify`` suites, ``matrix``
dumps, ``oracle`` Gram matrices and ``report`` (figures plus delimited
output).  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 table depth or internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cgc import cgc_table
from .engine import (
    ReducedMETable,
    StateVector,
    TableFamily,
    apply_word,
    parse_word,
)
from .errors import DomainError, InternalConsistencyError, TableDepthError
from .matrices import build_generator, super_bracket
from .oracle import gram_matrix
from .patterns import TopRow, enumerate_patterns, enumerate_top_rows
from .stability import InfiniteState, apply_infinite_word
from .verify import SUITES, run_suite

USAGE_ERROR = 2
DEPTH_ERROR = 3


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _parse_top(text: str, n: int) -> TopRow:
    try:
        neg_text, pos_text = text.split(";")
        neg = tuple(int(e) for e in neg_text.split(",") if e.strip() != "")
        pos = tuple(int(e) for e in pos_text.split(",") if e.strip() != "")
    except ValueError as exc:
        raise DomainError(f"cannot parse top row {text!r}: use 'a,b,..;c,d,..'") from exc
    top = TopRow(n, neg, pos)
    if not top.is_valid():
        raise DomainError(f"{text!r} is not a valid top row for rank {n}")
    return top


def cmd_enumerate(args) -> int:
    tops = enumerate_top_rows(args.n, args.p, args.degree)
    records = []
    for top in tops:
        patterns = enumerate_patterns(top)
        record = {
            "top_row": top.to_json(),
            "partition": list(top.partition()),
            "count": len(patterns),
        }
        if args.patterns:
            record["patterns"] = [pat.to_json() for pat in patterns]
        records.append(record)
    if args.format == "json":
        _emit({"n": args.n, "p": args.p, "degree": args.degree, "modules": records})
    else:
        total = 0
        for record in records:
            print(f"partition {record['partition']}: {record['count']} patterns")
            total += record["count"]
            if args.patterns:
                for top in tops:
                    if list(top.partition()) == record["partition"]:
                        for pat in enumerate_patterns(top):
                            print(pat.render())
                            print()
        print(f"total basis vectors through degree {args.degree}: {total}")
    return 0


def cmd_act(args) -> int:
    word = parse_word(args.word)
    if args.n == "inf":
        tables = TableFamily(args.p)
        state = apply_infinite_word(word, InfiniteState.vacuum_state(args.p), tables)
        if args.format == "json":
            _emit(state.to_json())
        else:
            _print_infinite(state)
        return 0
    n = int(args.n)
    for _, idx in word:
        if abs(idx) > n:
            raise DomainError(f"operator index {idx} out of range for rank {n}")
    table = ReducedMETable(n, args.p, max_degree=args.max_degree)
    state = apply_word(word, StateVector.vacuum_state(n, args.p), table)
    if args.format == "json":
        _emit(state.to_json())
    else:
        if state.is_zero():
            print("0")
        for pat, coeff in state.sorted_terms():
            print(f"coefficient {coeff}:")
            print(pat.render())
            print()
    return 0


def _print_infinite(state: InfiniteState) -> None:
    from .stability import truncate

    if state.is_zero():
        print("0")
    for pat, coeff in state.sorted_terms():
        print(f"coefficient {coeff}:  tail {list(pat.tail)}")
        print(truncate(pat, pat.stable_rows).render())
        print()


def cmd_verify(args) -> int:
    if args.p is not None:
        args.orders = [args.p]
    kwargs = {}
    if args.suite == "triples":
        kwargs = dict(n=args.n or 2, orders=tuple(args.orders), degree=args.degree or 3)
    elif args.suite == "cgc-unitarity":
        kwargs = dict(n_max=args.n or 3, boxes=args.degree or 4)
    elif args.suite == "cartan":
        kwargs = dict(n=args.n or 2, orders=tuple(args.orders), degree=args.degree or 4)
    elif args.suite == "hermiticity":
        kwargs = dict(n=args.n or 2, orders=tuple(args.orders), degree=args.degree or 4)
    elif args.suite == "stability":
        kwargs = dict(n=args.n or 3, p=args.orders[0], max_len=args.len)
    elif args.suite == "oracle":
        kwargs = dict(n=args.n or 2, orders=tuple(args.orders), max_len=args.len)
    elif args.suite == "matrix":
        kwargs = dict(n_max=args.n or 2, infinite_bound=args.bound)
    elif args.suite == "infinite":
        kwargs = dict(p=args.orders[0], index_bound=args.bound, word_len=args.len)
    elif args.suite == "dimensions":
        kwargs = dict(n_max=args.n or 3, boxes=args.degree or 4)
    report = run_suite(args.suite, **kwargs)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_cgc_table(args) -> int:
    top = _parse_top(args.top, args.n)
    _emit(cgc_table(top, args.p))
    return 0


def cmd_reduced_me(args) -> int:
    table = ReducedMETable(args.n, args.p)
    table.ensure_degree(args.degree - 1)
    records = [
        {
            "top_row": top.to_json(),
            "k": k,
            "G_squared": [g2.numerator, g2.denominator],
        }
        for top, k, g2 in table.entries()
    ]
    _emit(records)
    return 0


def cmd_matrix(args) -> int:
    n = None if args.n == "inf" else int(args.n)
    sign1, i1 = _parse_letter(args.gen)
    mat = build_generator(sign1, i1, n)
    if args.bracket:
        sign2, i2 = _parse_letter(args.bracket)
        mat = super_bracket(mat, build_generator(sign2, i2, n))
    _emit(mat.to_json())
    return 0


def _parse_letter(text: str) -> tuple[int, int]:
    text = text.strip()
    if not text or text[0] not in "+-":
        raise DomainError(f"cannot parse generator {text!r}: use e.g. '+,-2'")
    sign = 1 if text[0] == "+" else -1
    try:
        idx = int(text.split(",", 1)[1])
    except (IndexError, ValueError) as exc:
        raise DomainError(f"cannot parse generator {text!r}: use e.g. '+,-2'") from exc
    return sign, idx


def cmd_oracle(args) -> int:
    import itertools

    from .patterns import indices as index_range

    words = []
    for length in range(args.max_len + 1):
        words.extend(itertools.product(index_range(args.n), repeat=length))
    matrix = gram_matrix(words, args.p)
    _emit(
        {
            "n": args.n,
            "p": args.p,
            "words": [list(w) for w in words],
            "gram": [[entry.to_json() for entry in row] for row in matrix],
        }
    )
    return 0


def cmd_report(args) -> int:
    from .report import write_report

    paths = write_report(args.n, args.p, args.degree, args.out)
    for path in paths:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parafock",
        description="Exact parastatistics Fock representations in the odd "
        "Gelfand-Tsetlin basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="list basis modules and counts")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--p", type=int, required=True)
    enum.add_argument("--degree", type=int, required=True)
    enum.add_argument("--patterns", action="store_true", help="include full patterns")
    enum.add_argument("--format", choices=("json", "table"), default="table")
    enum.set_defaults(fn=cmd_enumerate)

    act = sub.add_parser("act", help="apply an operator word to the vacuum")
    act.add_argument("--n", required=True, help="rank, or 'inf'")
    act.add_argument("--p", type=int, required=True)
    act.add_argument("--word", required=True, help="e.g. 'c+(-3),c+(-2)' (rightmost acts first)")
    act.add_argument("--max-degree", type=int, default=None, help="cap table depth")
    act.add_argument("--format", choices=("json", "table"), default="json")
    act.set_defaults(fn=cmd_act)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=sorted(set(SUITES) | {"dimensions"}))
    ver.add_argument("--n", type=int, default=None)
    ver.add_argument("--p", type=int, default=None, help="single order (overrides --orders)")
    ver.add_argument("--orders", type=int, nargs="+", default=[1, 2])
    ver.add_argument("--degree", type=int, default=None)
    ver.add_argument("--len", type=int, default=3)
    ver.add_argument("--bound", type=int, default=5)
    ver.set_defaults(fn=cmd_verify)

    cgc_cmd = sub.add_parser("cgc-table", help="dump coupling coefficients for one module")
    cgc_cmd.add_argument("--n", type=int, required=True)
    cgc_cmd.add_argument("--top", required=True, help="top row as 'neg;pos', e.g. '1,0;0,0'")
    cgc_cmd.add_argument("--p", type=int, default=None)
    cgc_cmd.set_defaults(fn=cmd_cgc_table)

    red = sub.add_parser("reduced-me", help="dump derived reduced matrix elements")
    red.add_argument("--n", type=int, required=True)
    red.add_argument("--p", type=int, required=True)
    red.add_argument("--degree", type=int, required=True)
    red.set_defaults(fn=cmd_reduced_me)

    mat = sub.add_parser("matrix", help="dump a generator or bracket as sparse triples")
    mat.add_argument("--n", required=True, help="rank, or 'inf'")
    mat.add_argument("--gen", required=True, help="sign,index e.g. '+,-2'")
    mat.add_argument("--bracket", default=None, help="second generator to bracket with")
    mat.set_defaults(fn=cmd_matrix)

    orc = sub.add_parser("oracle", help="Gram matrix of creation words from the relation oracle")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--p", type=int, required=True)
    orc.add_argument("--max-len", type=int, required=True)
    orc.set_defaults(fn=cmd_oracle)

    rep = sub.add_parser("report", help="write CSV tables and figures to a directory")
    rep.add_argument("--n", type=int, default=2)
    rep.add_argument("--p", type=int, default=2)
    rep.add_argument("--degree", type=int, default=4)
    rep.add_argument("--out", required=True)
    rep.set_defaults(fn=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (TableDepthError, InternalConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DEPTH_ERROR
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
