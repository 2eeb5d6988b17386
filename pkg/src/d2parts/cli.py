"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a verification fails,
2 for usage errors and inputs outside a map's domain.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import qseries
from .core import DomainError, parse_partition, pentagonal_index
from .pairings import (
    CongruenceVerdict,
    congruence_verdict,
    expected_residue,
    rows_to_json,
    rows_to_tsv,
    verify_theorem,
)
from .reports import MAPS, count_rows, ferrers, trace_rows, trace_table

THEOREMS = ("parity", "mod4", "hq", "pairing-even", "pairing-equal", "gf-identities", "binomial")
BINOMIAL_CASES = ((2, 1, 1), (2, 1, 2), (2, 2, 2), (3, 1, 1))
COUNT_FIELDS = ("n", "d2", "d2e", "d2o")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="d2parts", description="Overpartitions with only even parts overlined.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("counts", help="d2(n) split by length parity")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("verify", help="machine-check one theorem or identity")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--max-n", type=int, required=True,
                   help="largest weight checked (series order for gf-identities/binomial)")
    p.add_argument("--enum-max", type=int, default=40,
                   help="largest weight checked by brute-force enumeration for parity/mod4 (default 40)")
    p.add_argument("-v", "--verbose", action="store_true", help="print every verdict, not only failures")

    p = sub.add_parser("trace", help="full pairing table of one map at weight N")
    p.add_argument("--map", choices=MAPS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "tsv", "json"), default="table")
    p.add_argument("--ascii", action="store_true", help="mark overlined parts with a leading 'o'")

    p = sub.add_parser("series", help="print generating-function coefficients")
    p.add_argument("--which", choices=("d2", "pentagonal", "d2-negq"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("ferrers", help="ASCII Ferrers diagram")
    p.add_argument("--partition", required=True)
    p.add_argument("--mark", choices=("slope", "hooks"), default=None)
    return parser


def _counts(args, out) -> int:
    rows = count_rows(args.min_n, args.max_n)
    if args.format == "json":
        out.write(json.dumps([{k: r[k] for k in COUNT_FIELDS} for r in rows], indent=1) + "\n")
    else:
        out.write("\t".join(COUNT_FIELDS) + "\n")
        for r in rows:
            out.write("\t".join(str(r[k]) for k in COUNT_FIELDS) + "\n")
    return 0


def _verdict_line(v: CongruenceVerdict) -> str:
    pent = f"m={v.pent.m} (class {v.pent.residue_class} mod 4)" if v.pent else "not pentagonal"
    status = "pass" if v.passed else "FAIL"
    return (f"{status} n={v.n} [{v.source}] d2={v.d2} = {v.d2_mod} mod {v.modulus}, "
            f"expected {v.expected}; {pent}")


def _series_verdicts(modulus: int, n_max: int) -> list[CongruenceVerdict]:
    d2 = qseries.d2_series(n_max)
    return [congruence_verdict(n, d2[n], modulus, source="series") for n in range(n_max + 1)]


def _negq_verdicts(n_max: int) -> list[CongruenceVerdict]:
    """Residues mod 4 read off the pentagonal sum through (-1)^n d2(n) == coefficient.

    Where the series congruence itself breaks at ``n`` the residue is None,
    which fails the verdict.
    """
    d2 = qseries.d2_series(n_max)
    lhs = qseries.reduce_mod(qseries.substitute_neg_q(d2), 4)
    pent = qseries.pentagonal_series(n_max)
    rhs = qseries.reduce_mod(pent, 4)
    verdicts = []
    for n in range(n_max + 1):
        derived = (-pent[n] if n % 2 else pent[n]) % 4 if lhs[n] == rhs[n] else None
        verdicts.append(CongruenceVerdict(n, d2[n], 4, derived, expected_residue(n, 4),
                                          pentagonal_index(n), "negq"))
    return verdicts


def _verify(args, out) -> int:
    failures = 0
    theorem = args.theorem

    if theorem in ("parity", "mod4"):
        modulus = 2 if theorem == "parity" else 4
        groups = [
            ("enumeration", verify_theorem(1 if modulus == 2 else 2, min(args.max_n, args.enum_max))),
            ("series", _series_verdicts(modulus, args.max_n)),
        ]
        if modulus == 4:
            groups.append(("negq", _negq_verdicts(args.max_n)))
        for source, verdicts in groups:
            bad = [v for v in verdicts if not v.passed]
            failures += len(bad)
            for v in verdicts if args.verbose else bad:
                out.write(_verdict_line(v) + "\n")
            last = verdicts[-1].n if verdicts else -1
            out.write(f"{theorem} [{source}] n<={last}: {len(verdicts) - len(bad)}/{len(verdicts)} pass\n")

    elif theorem in ("hq", "pairing-even", "pairing-equal"):
        number = {"hq": 3, "pairing-even": 4, "pairing-equal": 5}[theorem]
        reports = verify_theorem(number, args.max_n)
        for rep in reports:
            if args.verbose or not rep.passed:
                status = "pass" if rep.passed else "FAIL"
                unmatched = ",".join(f"({u})" for u in rep.unmatched) or "-"
                out.write(f"{status} n={rep.n} pairs={rep.pairs} unmatched={unmatched}\n")
            for msg in rep.failures:
                out.write(f"  {msg}\n")
        bad = sum(not r.passed for r in reports)
        failures += bad
        out.write(f"{theorem} n<={args.max_n}: {len(reports) - bad}/{len(reports)} pass\n")

    elif theorem == "gf-identities":
        for name, ok in gf_identity_checks(args.max_n):
            failures += not ok
            out.write(f"{'pass' if ok else 'FAIL'} {name} to order {args.max_n}\n")

    elif theorem == "binomial":
        for p, k, l in BINOMIAL_CASES:
            ok = qseries.check_binomial_congruence(p, k, l, args.max_n)
            failures += not ok
            out.write(f"{'pass' if ok else 'FAIL'} (1-q^{k})^({p}^{l}) == (1-q^{p * k})^({p}^{l - 1}) "
                      f"mod {p ** l} to order {args.max_n}\n")
    return 1 if failures else 0


def gf_identity_checks(order: int) -> list[tuple[str, bool]]:
    d2 = qseries.d2_series(order)
    neg = qseries.substitute_neg_q(d2)
    pent = qseries.pentagonal_series(order)
    return [
        ("d2 product == (1-q^4i)/((1-q^i)(1-q^2i))", qseries.expand(qseries.D2_PRODUCT_BY_4, order) == d2),
        ("d2 product == 1/((1-q^i)(1-q^(4i-2)))", qseries.expand(qseries.D2_PRODUCT_TWO_COLOR, order) == d2),
        ("prod (1-q^i) == pentagonal sum", qseries.expand(qseries.EULER_PRODUCT, order) == pent),
        ("d2(-q) == (1+q^2i)/((1-q^2i)(1+q^(2i-1)))", qseries.expand(qseries.D2_NEG_Q_PRODUCT, order) == neg),
        ("d2(-q) == (1-q^4i)^2(1-q^i)/(1-q^2i)^4", qseries.expand(qseries.D2_NEG_Q_ETA, order) == neg),
        ("d2(-q) == pentagonal sum mod 4", qseries.reduce_mod(neg, 4) == qseries.reduce_mod(pent, 4)),
    ]


def _trace(args, out) -> int:
    if args.format == "table":
        out.write(trace_table(args.map, args.n, ascii=args.ascii))
    elif args.format == "tsv":
        out.write(rows_to_tsv(trace_rows(args.map, args.n)))
    else:
        out.write(rows_to_json(trace_rows(args.map, args.n)))
    return 0


def _series(args, out) -> int:
    if args.which == "d2":
        s = qseries.d2_series(args.order)
    elif args.which == "pentagonal":
        s = qseries.pentagonal_series(args.order)
    else:
        s = qseries.substitute_neg_q(qseries.d2_series(args.order))
    if args.mod is not None:
        s = qseries.reduce_mod(s, args.mod)
    if args.format == "json":
        out.write(s.to_json(modulus=args.mod) + "\n")
    else:
        for n, c in enumerate(s.coeffs):
            out.write(f"{n}\t{c}\n")
    return 0


def _ferrers(args, out) -> int:
    out.write(ferrers(parse_partition(args.partition), mark=args.mark))
    return 0


COMMANDS = {"counts": _counts, "verify": _verify, "trace": _trace, "series": _series, "ferrers": _ferrers}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    for name in ("max_n", "n", "order", "enum_max", "min_n"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            print(f"d2parts: error: --{name.replace('_', '-')} must be nonnegative", file=sys.stderr)
            return 2
    try:
        return COMMANDS[args.command](args, out)
    except (DomainError, ValueError) as exc:
        print(f"d2parts: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    sys.exit(code)


if __name__ == "__main__":
    main()
