"""Command-line front end.

    orbitdim dims --name GHZ3
    orbitdim dims --file bell.json --group SL
    orbitdim table 4
    orbitdim generic 4 --seed 7
    orbitdim witness --name chi4
    orbitdim dump-tangent --name W3 --group SU2

Exit codes: 0 ok, 1 table mismatch, 2 parse error, 3 unknown name,
4 float cross-check disagreement (only with ``--float-check``).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .corpus import NamedState, UnknownName, corpus, table_names
from .lie_action import GroupKind, tangent_matrix
from .orbit_dims import (
    DEFAULT_ILO_RANGE,
    DEFAULT_TRIALS,
    RankMismatch,
    class_dimensions,
    d2_ladder_label,
    ket_orbit_dim,
    random_ket,
    state_matrix,
    state_orbit_dim,
    witness_w1,
)
from .rank_engine import AmbiguousRank, float_rank
from .states import StateError, parse_state, state_document

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_UNKNOWN, EXIT_CROSSCHECK = 0, 1, 2, 3, 4

# largest generic D1 for small n; larger n have no reference value
GENERIC_D1 = {1: 2, 2: 6, 3: 14, 4: 24}


@dataclass
class ReportRow:
    label: str
    ket: object
    D1: int
    D2: int
    D3: int
    W1: int
    ket_dims: dict
    state_dims: dict
    trial_values: tuple
    expected: tuple | None = None
    expected_ket: tuple | None = None
    warning: str | None = None

    @property
    def status(self) -> str:
        if self.expected is None:
            return "PREDICTION"
        ok = (self.D1, self.D2, self.D3) == tuple(self.expected)
        if self.expected_ket is not None:
            ok = ok and (self.ket_dims["GL"], self.ket_dims["SL"]) == tuple(self.expected_ket)
        return "PASS" if ok else "FAIL"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "state": state_document(self.ket),
            "D1": self.D1,
            "D2": self.D2,
            "D3": self.D3,
            "W1": self.W1,
            "ket_dims": self.ket_dims,
            "state_dims": self.state_dims,
            "trial_values": list(self.trial_values),
            "expected": list(self.expected) if self.expected else None,
            "expected_ket": list(self.expected_ket) if self.expected_ket else None,
            "status": self.status,
            "warning": self.warning,
        }


def build_row(entry: NamedState, groups, args) -> ReportRow:
    ket = entry.ket
    fc = args.float_check
    groups = list(dict.fromkeys([GroupKind.GL, GroupKind.SL, *groups]))
    ket_dims = {g.name: ket_orbit_dim(ket, g, fc) for g in groups}
    state_dims = {g.name: state_orbit_dim(ket, g, fc) for g in groups}
    cd = class_dimensions(ket, args.trials, args.seed, args.ilo_range, fc)
    return ReportRow(
        entry.name,
        ket,
        cd.D1,
        cd.D2,
        cd.D3,
        ket_dims["GL"] - ket_dims["SL"],
        ket_dims,
        state_dims,
        cd.trial_values,
        entry.expected,
        entry.expected_ket,
        cd.warning,
    )


def _load(args) -> NamedState:
    if args.name is not None:
        return corpus(args.name)
    with open(args.file, encoding="utf-8") as fh:
        ket = parse_state(fh.read())
    return NamedState(args.file, ket)


def _settings(args) -> str:
    return f"seed={args.seed} trials={args.trials} ilo_range={args.ilo_range}"


def _format_table(headers, rows) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(headers, *rows)]
    lines = []
    for r in [headers, *rows]:
        lines.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def cmd_dims(args, out) -> int:
    entry = _load(args)
    groups = [GroupKind.parse(g) for g in (args.group or ["GL", "SL"])]
    row = build_row(entry, groups, args)
    shown = [g.name for g in groups]
    if args.json:
        doc = row.to_json()
        doc["ket_dims"] = {g: row.ket_dims[g] for g in shown}
        doc["state_dims"] = {g: row.state_dims[g] for g in shown}
        doc.update(seed=args.seed, trials=args.trials, ilo_range=args.ilo_range)
        print(json.dumps(doc, indent=2), file=out)
    elif args.tsv:
        print("\t".join(["label", "group", "ket_dim", "state_dim", "D1", "D2", "D3", "W1"]), file=out)
        for g in shown:
            vals = [row.label, g, row.ket_dims[g], row.state_dims[g], row.D1, row.D2, row.D3, row.W1]
            print("\t".join(map(str, vals)), file=out)
    else:
        print(f"state  {row.label}  {row.ket}", file=out)
        print(
            _format_table(
                ["group", "ket_dim", "state_dim"],
                [[g, row.ket_dims[g], row.state_dims[g]] for g in shown],
            ),
            file=out,
        )
        print(f"D1={row.D1} D2={row.D2} D3={row.D3} W1={row.W1}", file=out)
        if row.warning:
            print(f"warning: {row.warning}", file=out)
        print(_settings(args), file=out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    entry = _load(args)
    ket = entry.ket
    w1 = witness_w1(ket, args.float_check)
    cd = class_dimensions(ket, args.trials, args.seed, args.ilo_range, args.float_check)
    label = d2_ladder_label(ket.n, cd.D2) or "unknown"
    if args.json:
        doc = {"label": entry.name, "W1": w1, "D2": cd.D2, "ladder": label, "seed": args.seed}
        print(json.dumps(doc, indent=2), file=out)
    elif args.tsv:
        print("label\tW1\tD2\tladder", file=out)
        print(f"{entry.name}\t{w1}\t{cd.D2}\t{label}", file=out)
    else:
        ghz_type = "GHZ-type" if w1 == 2 else "not GHZ-type"
        print(f"{entry.name}: W1={w1} ({ghz_type})  D2={cd.D2} ({label})", file=out)
    return EXIT_OK


def table_rows(n: int, args) -> list[ReportRow]:
    names = table_names(n) if n <= 4 else [f"GHZ{n}", f"W{n}"]
    return [build_row(corpus(name), [], args) for name in names]


def cmd_table(args, out) -> int:
    rows = table_rows(args.n, args)
    if args.json:
        doc = {
            "n": args.n,
            "seed": args.seed,
            "trials": args.trials,
            "ilo_range": args.ilo_range,
            "rows": [r.to_json() for r in rows],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        headers = ["class", "representative", "D1", "D2", "D3", "W1", "ketGL", "ketSL", "expected", "status"]
        body = [
            [
                r.label,
                str(r.ket),
                r.D1,
                r.D2,
                r.D3,
                r.W1,
                r.ket_dims["GL"],
                r.ket_dims["SL"],
                "-" if r.expected is None else "/".join(map(str, r.expected)),
                r.status,
            ]
            for r in rows
        ]
        if args.tsv:
            for line in [headers, *body]:
                print("\t".join(map(str, line)), file=out)
        else:
            print(_format_table(headers, body), file=out)
            for r in rows:
                if r.warning:
                    print(f"warning: {r.label}: {r.warning}", file=out)
            print(_settings(args), file=out)
    return EXIT_MISMATCH if any(r.status == "FAIL" for r in rows) else EXIT_OK


def cmd_generic(args, out) -> int:
    ket = random_ket(args.n, args.seed, args.ilo_range)
    d1 = state_orbit_dim(ket, "GL", args.float_check)
    # no reference value beyond four qubits, so always cross-check there
    if args.n > 4 and not args.float_check:
        if float_rank(state_matrix(ket, "GL")).rank - 2 != d1:
            raise RankMismatch("float rank disagrees with exact rank")
    reference = GENERIC_D1.get(args.n)
    flag = "prediction" if reference is None else f"reference {reference}"
    terms = ket.terms()
    if args.json:
        doc = {"n": args.n, "seed": args.seed, "D1": d1, "reference": reference,
               "nonzero_terms": len(terms)}
        if args.n <= 4:
            doc["state"] = state_document(ket)
        print(json.dumps(doc, indent=2), file=out)
    elif args.tsv:
        print("n\tseed\tD1\treference", file=out)
        print(f"{args.n}\t{args.seed}\t{d1}\t{reference if reference is not None else '-'}", file=out)
    else:
        summary = str(ket) if args.n <= 3 else f"{len(terms)} nonzero Gaussian-integer amplitudes"
        print(f"random {args.n}-qubit ket (seed {args.seed}): {summary}", file=out)
        print(f"D1={d1} ({flag})", file=out)
    return EXIT_OK


def cmd_dump_tangent(args, out) -> int:
    entry = _load(args)
    group = GroupKind.parse(args.group)
    m = state_matrix(entry.ket, group) if args.state else tangent_matrix(entry.ket, group)
    out.write(m.to_tsv())
    return EXIT_OK


def _common(p):
    p.add_argument("--seed", type=int, default=0, help="master seed for random ILOs / kets")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--ilo-range", type=int, default=DEFAULT_ILO_RANGE,
                   help="ILO entries are a+bi with |a|,|b| <= this bound")
    p.add_argument("--float-check", action="store_true",
                   help="cross-check every exact rank against an SVD rank")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true")


def _source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", help="corpus label, e.g. GHZ3, chi4, A-W, GHZ5")
    src.add_argument("--file", help="JSON state file")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitdim", description="Orbit dimensions of multiqubit pure states under local groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="orbit dimensions and D1/D2/D3/W1 of one state")
    _source(p)
    p.add_argument("--group", action="append", choices=[g.name for g in GroupKind],
                   help="group(s) to report; repeatable (default GL and SL)")
    _common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("witness", help="W1 witness and D2 ladder label")
    _source(p)
    _common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("table", help="reproduce the table of named classes for n qubits")
    p.add_argument("n", type=int)
    _common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("generic", help="D1 of a random n-qubit ket")
    p.add_argument("n", type=int)
    _common(p)
    p.set_defaults(func=cmd_generic)

    p = sub.add_parser("dump-tangent", help="tangent matrix as TSV")
    _source(p)
    p.add_argument("--group", default="GL", choices=[g.name for g in GroupKind])
    p.add_argument("--state", action="store_true", help="append the -psi and -i psi columns")
    _common(p)
    p.set_defaults(func=cmd_dump_tangent)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    if getattr(args, "n", 1) < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, out)
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (StateError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RankMismatch, AmbiguousRank) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


if __name__ == "__main__":
    sys.exit(main())
