"""``maxord`` command line tool.

Exit codes: 0 success, 1 a mathematical disagreement or violation, 2 usage
error. Output is json-lines (or csv for ``table``) with every big integer
written as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager

from .arith import FieldSize
from .formula import aut_max_order, bounds, classify, max_order
from .groupcheck import SUPPORTED_SAMPLING, sample_max_order
from .search import SearchMode, default_threads, maximize
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# Keys whose values are orders or other unbounded naturals.
BIG_KEYS = frozenset({
    "value", "lower", "upper", "strong_lower", "max_observed", "formula_value",
    "search_value", "closed_form", "euclid", "lhs", "rhs", "product", "formula", "table",
})


def _stringify(obj, big=False):
    """Render the big naturals (see BIG_KEYS) as decimal strings, recursively."""
    if isinstance(obj, dict):
        return {str(k): _stringify(v, k in BIG_KEYS) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v, big) for v in obj]
    if big and isinstance(obj, int) and not isinstance(obj, bool):
        return str(obj)
    return obj


def _dump(rec, out):
    out.write(json.dumps(_stringify(rec), separators=(",", ":")) + "\n")


def _field(q: int) -> FieldSize:
    try:
        return FieldSize.of(q)
    except ValueError as e:
        raise UsageError(str(e))


def _q_list(text: str) -> list[int]:
    try:
        qs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--q expects integers separated by commas, got {text!r}")
    if not qs:
        raise UsageError("--q needs at least one value")
    return [_field(q).q for q in qs]


def _single_q(text: str) -> int:
    qs = _q_list(text)
    if len(qs) != 1:
        raise UsageError("this command takes a single --q value")
    return qs[0]


def _need_m(m, flag="--m"):
    if m is None:
        raise UsageError(f"{flag} is required")
    if m < 1:
        raise UsageError(f"{flag} must be >= 1, got {m}")
    return m


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise UsageError(f"--threads must be >= 1, got {args.threads}")
        return args.threads
    try:
        return default_threads()
    except ValueError:
        raise UsageError("MAXORD_THREADS must be an integer")


def formula_record(m: int, q: int, aut: bool = False) -> dict:
    b = bounds(m, q)
    return {
        "m": m,
        "q": q,
        "value": aut_max_order(m, q) if aut else max_order(m, q),
        "aut": aut,
        "case_tag": classify(m, q).tag.value,
        "bounds": {"lower": b.lower, "upper": b.upper, "strong_lower": b.strong_lower},
    }


def cmd_formula(args, out) -> int:
    m = _need_m(args.m)
    q = _single_q(args.q)
    _dump(formula_record(m, q, args.aut), out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    m_max = _need_m(args.m_max, "--m-max")
    q = _single_q(args.q)
    rows = [{"m": m, "q": q, "value": max_order(m, q), "case_tag": classify(m, q).tag.value}
            for m in range(1, m_max + 1)]
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=["m", "q", "value", "case_tag"], lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: str(v) for k, v in row.items()})
    else:
        for row in rows:
            _dump(row, out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    m = _need_m(args.m)
    q = _single_q(args.q)
    rep = maximize(m, q, SearchMode(args.mode), _threads(args))
    rec = {
        "m": m,
        "q": q,
        "mode": rep.mode.value,
        "value": rep.best.value,
        "candidates_evaluated": rep.candidates_evaluated,
        "agrees_with_formula": rep.agrees_with_formula,
    }
    if args.witness:
        rec["witness"] = {"m_prime": rep.best.m_prime,
                          "partition": rep.best.partition.labels()}
    _dump(rec, out)
    return EXIT_OK if rep.agrees_with_formula else EXIT_VIOLATION


def cmd_verify(args, out) -> int:
    if args.suite is None:
        raise UsageError(f"--suite is required; choose from {', '.join(SUITES)}")
    m_max = _need_m(args.m_max, "--m-max")
    q_list = _q_list(args.q)
    try:
        records = run_suite(args.suite, m_max, q_list, SearchMode(args.mode),
                            _threads(args), seed=args.seed)
    except ValueError as e:
        raise UsageError(str(e))
    for rec in records:
        rec = {"suite": args.suite, **rec}
        _dump(rec, out)
        if not rec["ok"]:
            sys.stderr.write("counterexample: " + json.dumps(_stringify(rec)) + "\n")
            return EXIT_VIOLATION
    return EXIT_OK


def cmd_sample(args, out) -> int:
    m = _need_m(args.m)
    q = _single_q(args.q)
    if (m, q) not in SUPPORTED_SAMPLING:
        raise UsageError(f"sampling supports (m, q) in {sorted(SUPPORTED_SAMPLING)}, got ({m}, {q})")
    if args.samples < 1:
        raise UsageError(f"--samples must be >= 1, got {args.samples}")
    rep = sample_max_order(m, q, args.samples, args.seed, _threads(args))
    _dump({
        "m": rep.m,
        "q": rep.q,
        "samples": rep.samples,
        "seed": rep.seed,
        "max_observed": rep.max_observed,
        "formula_value": max_order(m, q),
        "histogram": rep.histogram,
        "violated": rep.violated,
    }, out)
    return EXIT_VIOLATION if rep.violated else EXIT_OK


COMMANDS = {
    "formula": cmd_formula,
    "table": cmd_table,
    "search": cmd_search,
    "verify": cmd_verify,
    "sample": cmd_sample,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="maxord",
        description="Maximum element orders of Sp(2m, q) for q a power of 2.",
    )
    p.add_argument("command", choices=list(COMMANDS))
    p.add_argument("--m", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--q", default="2", help="q, or a comma list for verify")
    p.add_argument("--mode", choices=[x.value for x in SearchMode], default="exhaustive")
    p.add_argument("--aut", action="store_true", help="report Aut(Sp(2m, q)) instead")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--suite", choices=list(SUITES))
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, help="defaults to $MAXORD_THREADS, else CPU count")
    p.add_argument("--out", help="write records here instead of stdout")
    return p


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on malformed flags
    try:
        with _output(args.out) as out:
            return COMMANDS[args.command](args, out)
    except UsageError as e:
        sys.stderr.write(f"maxord {args.command}: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
