"""Command line front end: dimensions, decisions, oracle queries, and sweeps.

Every command can emit either an aligned table (default) or a JSON envelope
(--json).  Output is byte-deterministic for identical argv: big integers are
serialized as decimal strings and timing_ms stays 0 unless --timing is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .chern import run_sweep, top_chern_nonzero
from .errors import DomainError, ZeroModule
from .isotropy import (
    decide,
    min_isotropic_n,
    tevelev_inequalities,
    threshold_n,
    verify_proof_chain,
)
from .partitions import Partition, parse_partition, partitions_up_to
from .schur import (
    dim_schur_module,
    dimension_ratio_gain,
    schur_ones_hook_content,
    schur_ones_recurrence,
    symmetric_power_ratio_gain,
)
from .sympoly import DEFAULT_TERM_CAP, expansion_to_json
from .tableaux import DEFAULT_ENUMERATION_CAP, count_ssyt

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _format_table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [
        max(len(header), *(len(row[i]) for row in rows)) if rows else len(header)
        for i, header in enumerate(headers)
    ]
    def line(cells):
        return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()
    return [line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows]


def _lambda_json(shape: Partition) -> list[int]:
    return list(shape)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur-isotropy",
        description=(
            "Decide whether a generic form with a given Young-type symmetry"
            " vanishes on some k-dimensional subspace of C^n."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, lam=False, k=False, n=False, caps=False):
        if lam:
            p.add_argument(
                "--lambda", dest="lam", type=_partition_arg, required=True,
                metavar="PARTS", help="shape as a weakly decreasing comma list, e.g. 2,1",
            )
        if k:
            p.add_argument("--k", type=_positive_int, required=True,
                           help="dimension of the sought subspace")
        if n:
            p.add_argument("--n", type=_nonnegative_int, required=True,
                           help="dimension of the ambient space")
        if caps:
            p.add_argument("--max-tableaux", type=_positive_int,
                           default=DEFAULT_ENUMERATION_CAP,
                           help="enumeration cap (default %(default)s)")
            p.add_argument("--max-terms", type=_positive_int,
                           default=DEFAULT_TERM_CAP,
                           help="polynomial term cap (default %(default)s)")
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")
        p.add_argument("--timing", action="store_true",
                       help="report measured wall time in timing_ms instead of 0")

    p = sub.add_parser("dim", help="dimension of the symmetry module over C^n")
    add_common(p, lam=True, n=True)

    p = sub.add_parser("decide", help="isotropy verdict for (lambda, k, n)")
    add_common(p, lam=True, k=True, n=True)

    p = sub.add_parser("min-n", help="smallest ambient dimension giving isotropy")
    add_common(p, lam=True, k=True)

    p = sub.add_parser("oracle", help="top Chern class test on Gr(k, n)")
    add_common(p, lam=True, k=True, n=True, caps=True)

    p = sub.add_parser("check-lemma36",
                       help="interlacing inequality family dim <= (k-i)(n-k-i)")
    add_common(p, lam=True, k=True, n=True)

    p = sub.add_parser("proof-chain",
                       help="replay the inequality chain certifying the threshold")
    add_common(p, lam=True, k=True, n=True)

    p = sub.add_parser("sweep", help="compare decision rules against the oracle")
    p.add_argument("--max-size", type=_positive_int, default=5,
                   help="largest shape size (default %(default)s)")
    p.add_argument("--max-k", type=_positive_int, default=5,
                   help="largest k (default %(default)s)")
    p.add_argument("--max-n", type=_positive_int, default=9,
                   help="largest n (default %(default)s)")
    p.add_argument("--with-oracle", action="store_true",
                   help="also run the Chern oracle wherever caps allow")
    add_common(p, caps=True)

    p = sub.add_parser("self-check",
                       help="dimension triple agreement and the inequality suites")
    add_common(p)

    return parser


def _cmd_dim(args):
    result_value = dim_schur_module(args.lam, args.n)
    inputs = {"lambda": _lambda_json(args.lam), "n": args.n}
    result = {
        "lambda": _lambda_json(args.lam),
        "n": args.n,
        "dim": str(result_value.value),
    }
    human = _format_table(
        ["lambda", "n", "dim"],
        [[args.lam.as_text() or "-", str(args.n), str(result_value.value)]],
    )
    return inputs, result, human, EXIT_OK


def _cmd_decide(args):
    verdict = decide(args.lam, args.k, args.n)
    inputs = {"lambda": _lambda_json(args.lam), "k": args.k, "n": args.n}
    result = {"isotropic": verdict.isotropic, "rule": verdict.rule}
    if verdict.threshold_n is not None:
        result["threshold_n"] = verdict.threshold_n
    result["detail"] = verdict.detail
    human = _format_table(
        ["lambda", "k", "n", "isotropic", "rule", "threshold_n"],
        [[
            args.lam.as_text(), str(args.k), str(args.n),
            str(verdict.isotropic).lower(), verdict.rule,
            "-" if verdict.threshold_n is None else str(verdict.threshold_n),
        ]],
    ) + [f"detail: {verdict.detail}"]
    return inputs, result, human, EXIT_OK


def _cmd_min_n(args):
    inputs = {"lambda": _lambda_json(args.lam), "k": args.k}
    smallest = min_isotropic_n(args.lam, args.k)
    rule = decide(args.lam, args.k, smallest).rule
    try:
        formula = threshold_n(args.lam, args.k)
        dim = str(schur_ones_hook_content(args.lam, args.k))
    except ZeroModule:
        formula = None
        dim = "0"
    result = {"lambda": _lambda_json(args.lam), "k": args.k, "dim": dim}
    if formula is not None:
        result["threshold_n"] = formula
    result["min_isotropic_n"] = smallest
    result["rule_at_min_n"] = rule
    human = _format_table(
        ["lambda", "k", "dim", "threshold_n", "min_isotropic_n", "rule"],
        [[
            args.lam.as_text(), str(args.k), dim,
            "-" if formula is None else str(formula), str(smallest), rule,
        ]],
    )
    return inputs, result, human, EXIT_OK


def _cmd_oracle(args):
    verdict = top_chern_nonzero(
        args.lam, args.k, args.n,
        max_tableaux=args.max_tableaux, max_terms=args.max_terms,
    )
    inputs = {"lambda": _lambda_json(args.lam), "k": args.k, "n": args.n,
              "max_tableaux": args.max_tableaux, "max_terms": args.max_terms}
    result = {
        "nonzero": verdict.nonzero,
        "degree": str(verdict.degree),
        "shortcut": verdict.shortcut,
        "surviving": expansion_to_json(dict(verdict.surviving)),
    }
    rows = [
        [mu.as_text() or "-", str(coeff)] for mu, coeff in verdict.surviving
    ] or [["-", "-"]]
    human = [
        f"nonzero: {str(verdict.nonzero).lower()}"
        f"  degree: {verdict.degree}  shortcut: {verdict.shortcut}",
        "surviving classes:",
    ] + _format_table(["mu", "coeff"], rows)
    return inputs, result, human, EXIT_OK


def _cmd_check_lemma36(args):
    report = tevelev_inequalities(args.lam, args.k, args.n)
    inputs = {"lambda": _lambda_json(args.lam), "k": args.k, "n": args.n}
    result = {
        "rows": [
            {"i": row.index, "lhs": str(row.lhs), "rhs": str(row.rhs),
             "holds": row.holds}
            for row in report.rows
        ],
        "all_hold": report.all_hold,
    }
    human = _format_table(
        ["i", "dim(C^(k-i))", "(k-i)(n-k-i)", "holds"],
        [[str(r.index), str(r.lhs), str(r.rhs), str(r.holds).lower()]
         for r in report.rows],
    ) + [f"all hold: {str(report.all_hold).lower()}"]
    return inputs, result, human, EXIT_OK


def _cmd_proof_chain(args):
    steps = verify_proof_chain(args.lam, args.k, args.n)
    inputs = {"lambda": _lambda_json(args.lam), "k": args.k, "n": args.n}
    result = {
        "steps": [
            {"name": s.name, "detail": s.detail, "holds": s.holds} for s in steps
        ],
        "all_verified": all(s.holds for s in steps),
    }
    human = _format_table(
        ["step", "holds", "detail"],
        [[s.name, str(s.holds).lower(), s.detail] for s in steps],
    ) + [f"all verified: {str(all(s.holds for s in steps)).lower()}"]
    return inputs, result, human, EXIT_OK


def _cmd_sweep(args):
    cases = run_sweep(
        args.max_size, args.max_k, args.max_n,
        with_oracle=args.with_oracle,
        max_tableaux=args.max_tableaux, max_terms=args.max_terms,
    )
    disagreements = sum(1 for c in cases if c.agree is False)
    compared = sum(1 for c in cases if c.oracle_nonzero is not None)
    inputs = {"max_size": args.max_size, "max_k": args.max_k, "max_n": args.max_n,
              "with_oracle": args.with_oracle,
              "max_tableaux": args.max_tableaux, "max_terms": args.max_terms}
    result = {
        "total": len(cases),
        "compared": compared,
        "disagreements": disagreements,
        "cases": [
            {
                "lambda": _lambda_json(c.shape), "k": c.k, "n": c.n,
                "isotropic": c.isotropic, "rule": c.rule,
                "oracle_nonzero": c.oracle_nonzero, "agree": c.agree,
            }
            for c in cases
        ],
    }
    human = _format_table(
        ["lambda", "k", "n", "isotropic", "rule", "oracle", "agree"],
        [[
            c.shape.as_text(), str(c.k), str(c.n), str(c.isotropic).lower(),
            c.rule,
            "-" if c.oracle_nonzero is None else str(c.oracle_nonzero).lower(),
            "-" if c.agree is None else str(c.agree).lower(),
        ] for c in cases],
    ) + [
        f"total: {len(cases)}  compared: {compared}"
        f"  disagreements: {disagreements}"
    ]
    code = EXIT_DISAGREEMENT if disagreements else EXIT_OK
    return inputs, result, human, code


def _self_check_suites():
    shapes = list(partitions_up_to(6))
    nonempty = [s for s in shapes if s]

    triple = []
    for shape in shapes:
        for n in range(0, 7):
            hook = schur_ones_hook_content(shape, n)
            recurrence = schur_ones_recurrence(shape, n)
            count = count_ssyt(shape, n)
            triple.append(hook == recurrence == count)

    nondecreasing = []
    for shape in nonempty:
        for k in range(2, 8):
            nondecreasing.append(dimension_ratio_gain(shape, k) >= 0)

    unit_fraction = []
    for shape in nonempty:
        for k in range(2, 8):
            if 2 <= len(shape) <= k - 1:
                unit_fraction.append(
                    dimension_ratio_gain(shape, k) >= Fraction(1, k)
                )

    gain_one = []
    for shape in nonempty:
        if shape in ((1,), (2,), (1, 1)):
            continue
        for k in range(3, 8):
            if 1 <= len(shape) <= k - 2:
                gain_one.append(dimension_ratio_gain(shape, k) >= 1)

    binomial = []
    for d in range(3, 9):
        for alpha in range(2, 9):
            binomial.append(symmetric_power_ratio_gain(d, alpha) >= 1)

    return [
        ("dimension-triple-agreement", triple),
        ("ratio-nondecreasing", nondecreasing),
        ("ratio-gain-unit-fraction", unit_fraction),
        ("ratio-gain-one", gain_one),
        ("binomial-ratio-gain-one", binomial),
    ]


def _cmd_self_check(args):
    suites = []
    all_ok = True
    for name, outcomes in _self_check_suites():
        violations = sum(1 for ok in outcomes if not ok)
        ok = violations == 0
        all_ok = all_ok and ok
        suites.append(
            {"name": name, "cases": len(outcomes), "violations": violations,
             "ok": ok}
        )
    inputs = {}
    result = {"suites": suites, "ok": all_ok}
    human = [
        f"{'PASS' if s['ok'] else 'FAIL'}  {s['name']}:"
        f" {s['cases']} cases, {s['violations']} violations"
        for s in suites
    ] + [f"self-check: {'PASS' if all_ok else 'FAIL'}"]
    return inputs, result, human, EXIT_OK if all_ok else EXIT_DOMAIN_ERROR


_HANDLERS = {
    "dim": _cmd_dim,
    "decide": _cmd_decide,
    "min-n": _cmd_min_n,
    "oracle": _cmd_oracle,
    "check-lemma36": _cmd_check_lemma36,
    "proof-chain": _cmd_proof_chain,
    "sweep": _cmd_sweep,
    "self-check": _cmd_self_check,
}


def run(argv: list[str] | None = None) -> int:
    """Execute one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        inputs, result, human, code = _HANDLERS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    elapsed = int((time.perf_counter() - start) * 1000) if args.timing else 0
    if args.json:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "timing_ms": elapsed,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in human:
            print(line)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
