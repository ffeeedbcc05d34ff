"""Command-line interface: ``qkostka {classify,rank,decompose,sweep,degree}``.

Exit status 0 on success, 1 for invalid input or an unmet precondition, 2 for a
verification disagreement or an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .bundles import BundleSpec, rank_exact, result_record, split_total
from .chern import CasimirInput, FCurve, casimir, decompose, degree4, fcurve_degree, verify_decomposition
from .errors import InvariantViolation, UnsupportedError, ValidationError
from .kostka import enumerate_tableaux
from .shapes import reduced_shape
from .sweep import CHECKS, check_instance, default_jobs, rows_to_csv, run_sweep

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for verification failures here
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def parse_weights(text: str) -> tuple[int, ...]:
    try:
        ws = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ValidationError(f"weights must be a comma list of integers, got {text!r}") from None
    if not ws:
        raise ValidationError("no weights given")
    return ws


def make_spec(args: argparse.Namespace) -> tuple[BundleSpec, int]:
    """Spec from flags; fewer than 3 weights are padded with trivial points."""
    ws = parse_weights(args.weights)
    pad = max(0, 3 - len(ws))
    return BundleSpec(args.level, ws + (0,) * pad, args.m), pad


def emit(args: argparse.Namespace, payload, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        out = text.rstrip("\n") + "\n"
    else:
        out = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def as_text(record: dict) -> str:
    width = max(len(k) for k in record)
    lines = []
    for key, value in record.items():
        if isinstance(value, list):
            value = ",".join(map(str, value))
        lines.append(f"{key.ljust(width)}  {value}")
    return "\n".join(lines)


# ------------------------------------------------------------------ commands


def cmd_classify(args: argparse.Namespace) -> int:
    spec, pad = make_spec(args)
    record = result_record(spec)
    if pad:
        record["padded"] = pad
    emit(args, record, as_text(record))
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    spec, pad = make_spec(args)
    record = result_record(spec)
    if pad:
        record["padded"] = pad
    tableaux = []
    if args.exact or args.show_tableaux:
        record["exact_rank"] = rank_exact(spec)
    if args.show_tableaux:
        ws = spec.sorted_weights()
        kp = split_total(sum(ws), spec.level)
        if kp is not None:
            shape = reduced_shape(spec.level, *kp)
            tableaux = enumerate_tableaux(shape, ws, spec.level, proper=True, limit=args.show_tableaux)
        record["tableaux"] = [t.to_dict()["entries"] for t in tableaux]
    text = as_text({k: v for k, v in record.items() if k != "tableaux"})
    for i, t in enumerate(tableaux, 1):
        text += f"\n\ntableau {i}\n{t.render()}"
    emit(args, record, text)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    spec, _ = make_spec(args)
    combo = decompose(spec)
    payload: dict = {
        "level": spec.level,
        "weights": list(spec.weights),
        "m": spec.m,
        "case": combo.case,
        "combo": str(combo),
        "terms": combo.to_list(),
    }
    status = EXIT_OK
    if args.verify:
        report = verify_decomposition(spec, jobs=args.jobs)
        payload["verification"] = report.to_dict()
        if not report.ok:
            status = EXIT_VERIFY
    text = f"{spec.algebra} level {spec.level} weights {list(spec.weights)}\nc1 = {combo}"
    if args.verify:
        v = payload["verification"]
        text += f"\nverified on {v['curves']} F-curves, {v['violations']} violations"
    emit(args, payload, text)
    return status


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.sample:
        rng = random.Random(args.seed)
        work = []
        for _ in range(args.sample):
            level = rng.randint(1, args.level_max)
            n = rng.randint(3, args.n_max)
            ws = (1,)
            while sum(ws) % 2:
                ws = tuple(sorted((rng.randint(0, level) for _ in range(n)), reverse=True))
            work.append((level, ws, args.check))
        rows = [check_instance(w) for w in sorted(set(work))]
    else:
        rows = run_sweep(args.n_max, args.level_max, args.check, args.jobs)
    bad = [r for r in rows if not r.agree]
    if args.format == "json":
        payload = {
            "instances": len(rows),
            "disagreements": len(bad),
            "failures": [
                {"level": r.level, "weights": list(r.weights), "class": r.rank_class,
                 "oracle_count": r.oracle_count, "note": r.note}
                for r in bad
            ],
        }
        emit(args, payload)
    else:
        out = rows_to_csv(rows)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    print(f"{len(rows)} instances, {len(bad)} disagreements", file=sys.stderr)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_degree(args: argparse.Namespace) -> int:
    ws = parse_weights(args.weights)
    record: dict = {"level": args.level, "weights": list(ws)}
    if args.fcurve:
        curve = FCurve.parse(args.fcurve)
        spec = BundleSpec(args.level, ws, args.m)
        record["fcurve"] = str(curve)
        record["degree"] = fcurve_degree(spec, curve)
    else:
        if len(ws) != 4:
            raise ValidationError(f"--weights needs 4 entries without --fcurve, got {len(ws)}")
        if args.m != 1:
            raise UnsupportedError("4-point degrees are computed for sl2; use --fcurve for m>1")
        record["degree"] = degree4(args.level, ws)
    if args.casimir:
        record["casimir"] = {
            str(c): str(casimir(CasimirInput(2 * args.m, _omega(args.m, c)))) for c in sorted(set(ws))
        }
    emit(args, record, as_text({k: v for k, v in record.items() if k != "casimir"}))
    return EXIT_OK


def _omega(m: int, c: int) -> tuple[int, ...]:
    coeffs = [0] * (2 * m - 1)
    coeffs[m - 1] = c
    return tuple(coeffs)


# ------------------------------------------------------------------ wiring


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qkostka", description="Ranks and first Chern classes of sl_2m bundles with rectangular weights.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, bundle: bool = True) -> None:
        if bundle:
            p.add_argument("--level", type=int, required=True)
            p.add_argument("--weights", required=True, help="comma list c1,c2,...")
            p.add_argument("--m", type=int, default=1, help="algebra sl_2m (default 1)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write output to FILE instead of stdout")

    p = sub.add_parser("classify", help="rank class from the closed form")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rank", help="exact rank by counting proper tableaux")
    common(p)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--show-tableaux", type=int, default=0, metavar="N")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("decompose", help="level-one decomposition of c1 for rank one")
    common(p)
    p.add_argument("--verify", action="store_true", help="check degrees on every F-curve")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sweep", help="compare the classifier against exact counts")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--level-max", type=int, required=True)
    p.add_argument("--check", choices=CHECKS, default="classifier")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--sample", type=int, default=0, help="random instances instead of the full range")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("degree", help="4-point degree or F-curve intersection number")
    common(p)
    p.add_argument("--fcurve", help='blocks like "1,2|3|4|5,6"')
    p.add_argument("--casimir", action="store_true", help="also print the Casimir numbers used")
    p.set_defaults(func=cmd_degree)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValidationError, UnsupportedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
