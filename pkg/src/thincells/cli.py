"""Command-line interface: ``thincells <command> [options]``.

Exit codes: 0 success, 1 verification failure or empty cell, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classify as cl
from .errors import EmptyCell, ThinCellError
from .exactla import RationalMatrix, matroid_of_subspace, plucker_vector
from .flags import Flag, plurimatroid_of_flag, stabilizer_dimensions, witness_flag
from .matroid import (ENUMERATION_MAX_N, Matroid, Plurimatroid, enumerate_matroids,
                      enumerate_plurimatroids, orbit, orbit_representatives)
from .verify import format_report, run_verification


class UsageError(Exception):
    pass


def _dims(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse dimensions {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _read_json(path):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON input: {exc}") from None


def cmd_counts(args) -> tuple[int, str]:
    rec = cl.count_global(args.n)
    if args.format == "json":
        return 0, _dump(rec.to_json())
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "complete", "proper", "empty", "total"])
        w.writerow([rec.n, rec.complete, rec.proper, rec.empty, rec.total])
        return 0, buf.getvalue()
    return 0, "\n".join(cl.summary_lines(rec)) + "\n"


def cmd_table(args) -> tuple[int, str]:
    table = cl.zone_table(args.n)
    if args.format == "json":
        return 0, _dump(table.to_json())
    if args.format == "csv":
        return 0, table.to_csv()
    return 0, table.to_text()


def classification_record(K: cl.KPair) -> dict:
    kind = cl.classify(K)
    stab, torus = stabilizer_dimensions(cl.plurimatroid_of_kpair(K))
    rec = {"n": K.n, "k1": list(K.k1), "k2": list(K.k2), "class": kind.value}
    if kind is not cl.CellClass.EMPTY:
        rec["dim"] = cl.dimension(K)
    rec["stab_dim"] = stab
    rec["torus_dim"] = torus
    return rec


def _render_record(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(rec)
    flat = {k: ",".join(map(str, v)) if isinstance(v, list) else v for k, v in rec.items()}
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\n")
        w.writeheader()
        w.writerow(flat)
        return buf.getvalue()
    return "".join(f"{k}: {v}\n" for k, v in flat.items())


def cmd_classify(args) -> tuple[int, str]:
    if args.flag is not None:
        F = Flag.from_json(_read_json(args.flag))
        K = cl.k_sets(plurimatroid_of_flag(F))
    else:
        if args.n is None or args.k1 is None or args.k2 is None:
            raise UsageError("classify needs --n, --k1 and --k2 (or --flag)")
        cl.count_global(args.n)  # enforces n >= 3
        K = cl.kpair_from_strings(args.n, args.k1, args.k2)
    return 0, _render_record(classification_record(K), args.format)


def cmd_witness(args) -> tuple[int, str]:
    K = cl.kpair_from_strings(args.n, args.k1, args.k2)
    try:
        F = witness_flag(K.k1, K.k2, args.n)
    except EmptyCell as exc:
        return 1, f"empty cell: {exc}\n"
    if args.format == "json":
        return 0, _dump(F.to_json())
    lines = []
    for j, stage in enumerate(F.stages, 1):
        lines.append(f"W{j} (dim {stage.nrows}):")
        lines.extend("  [" + ", ".join(row) + "]" for row in stage.to_json())
    return 0, "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[int, str]:
    results = run_verification(args.max_n, args.samples, args.seed)
    report = format_report(results, args.max_n, args.samples, args.seed)
    return (0 if all(r.passed for r in results) else 1), report


def cmd_enumerate(args) -> tuple[int, str]:
    if args.n > ENUMERATION_MAX_N:
        raise UsageError(f"enumeration is limited to n <= {ENUMERATION_MAX_N}")
    if (args.d is None) == (args.dims is None):
        raise UsageError("enumerate needs exactly one of --d and --dims")
    if args.d is not None:
        if args.orbits:
            items = orbit_representatives(
                Plurimatroid((m,)) for m in enumerate_matroids(args.n, args.d))
        else:
            return 0, "".join(_dump(m.to_json()) for m in enumerate_matroids(args.n, args.d))
    else:
        items = enumerate_plurimatroids(args.n, args.dims)
        if args.orbits:
            items = orbit_representatives(items)
    out = []
    for P in items:
        rec = P.to_json()
        if args.orbits:
            rec["orbit_size"] = len(orbit(P))
        out.append(_dump(rec))
    return 0, "".join(out)


def cmd_plucker(args) -> tuple[int, str]:
    W = RationalMatrix.from_json(_read_json(args.input))
    p = plucker_vector(W)
    rec = {"plucker": p.to_json(), "matroid": matroid_of_subspace(W).to_json()}
    return 0, _dump(rec)


def cmd_stabilizer(args) -> tuple[int, str]:
    obj = _read_json(args.input)
    if "components" in obj:
        P = Plurimatroid.from_json(obj)
    else:
        P = Plurimatroid((Matroid.from_json(obj),))
    stab, torus = stabilizer_dimensions(P)
    return 0, _render_record({"n": P.n, "dims": list(P.dims), "stab_dim": stab,
                              "torus_dim": torus}, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thincells", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "csv", "table"), default="table")
        p.add_argument("--output", help="write to this file instead of stdout")
        return p

    p = add("counts", cmd_counts, "global counts of complete/proper/empty cells")
    p.add_argument("--n", type=int, required=True)

    p = add("table", cmd_table, "restricted counts by zone, as in the reference worksheets")
    p.add_argument("--n", type=int, required=True)

    p = add("classify", cmd_classify, "classify a K-pair or a flag of signature (1, n-1)")
    p.add_argument("--n", type=int)
    p.add_argument("--k1")
    p.add_argument("--k2")
    p.add_argument("--flag", help="flag JSON file ('-' for stdin)")

    p = add("witness", cmd_witness, "construct a flag in the cell of a K-pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", required=True)
    p.add_argument("--k2", required=True)

    p = add("verify", cmd_verify, "run every formula-vs-oracle and property suite")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = add("enumerate", cmd_enumerate, "list matroids or plurimatroids (JSON lines)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--dims", type=_dims)
    p.add_argument("--orbits", action="store_true", help="keep one S_n-orbit representative")

    p = add("plucker", cmd_plucker, "Plücker vector and matroid of a matrix")
    p.add_argument("input", nargs="?", help="matrix JSON file ('-' or omitted for stdin)")

    p = add("stabilizer", cmd_stabilizer, "torus stabilizer dimensions of a plurimatroid")
    p.add_argument("input", nargs="?", help="plurimatroid JSON file ('-' or omitted for stdin)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except (ThinCellError, UsageError, KeyError, TypeError, ValueError) as exc:
        print(f"thincells {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if code == 1 and args.command == "witness":
        print(text, end="", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
