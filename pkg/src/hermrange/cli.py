"""Command line front end.

Three subcommands: `range` computes one range of one matrix, `verify`
runs a prediction-versus-enumeration sweep preset, `fibers` tabulates
the null fibers of a subfield matrix.  All output is deterministic for
a fixed argument list, including the seed of randomized sweeps.

Exit codes: 0 success, 1 verification found a failing claim, 2 bad
usage or input, 3 enumeration over capacity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass

from .fields import FieldCtx, FieldSpec, build_tower, ctx_from_spec
from .hermitian import DEFAULT_CAPACITY, CapacityError, HermMatrix
from .ranges import (KIND_NUM0_PRIME, KIND_NUM0_PRIME_SUBFIELD, KIND_NUM_K,
                     KIND_NUM_K_SUBFIELD, fiber_table, num0_prime,
                     num0_prime_subfield, num_k, num_k_subfield)
from .verify import (SCOPE_DIRECT_SUMS, SCOPE_EXHAUSTIVE_2X2,
                     SCOPE_RANDOM_NXN, SCOPE_SCALAR_FIBERS, VERIFY_SCOPES,
                     run_direct_sums, run_exhaustive_2x2, run_random_nxn,
                     run_scalar_fibers)

KINDS = (KIND_NUM_K, KIND_NUM0_PRIME, KIND_NUM_K_SUBFIELD,
         KIND_NUM0_PRIME_SUBFIELD)


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs besides its own positional inputs."""

    ctx: FieldCtx
    capacity: int
    sample_budget: int | None
    seed: int
    fmt: str
    out: str | None


def _resolve_ctx(args, file_spec: FieldSpec | None) -> FieldCtx:
    # a field block in a matrix file must agree with any -p/-m flags
    if file_spec is not None:
        if args.p is not None and (args.p, args.m) != (file_spec.p, file_spec.m):
            raise ValueError(
                f"field flags p={args.p} m={args.m} disagree with the "
                f"matrix file's p={file_spec.p} m={file_spec.m}")
        return ctx_from_spec(file_spec)
    if args.p is None:
        raise ValueError("no field given: pass --p (and --m) or a matrix "
                         "file with a field block")
    return build_tower(args.p, args.m)


def _parse_inline(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(x) for x in row.split(","))
                     for row in text.split(";"))
    except ValueError as exc:
        raise ValueError(f"bad inline matrix {text!r}: {exc}") from exc
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValueError(f"inline matrix {text!r} is not square")
    return rows


def _load_matrix(args) -> tuple[FieldCtx, HermMatrix]:
    text = args.matrix
    if text is None:
        raise ValueError("this command needs --matrix")
    if "," in text or ";" in text:
        ctx = _resolve_ctx(args, None)
        return ctx, HermMatrix.from_encs(ctx, _parse_inline(text))
    try:
        with open(text, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read matrix file {text!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"matrix file {text!r} is not JSON: {exc}") from exc
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValueError(f"matrix file {text!r} lacks an entries table")
    spec = None
    if "field" in doc:
        spec = FieldSpec.from_json_dict(doc["field"])
    ctx = _resolve_ctx(args, spec)
    entries = doc["entries"]
    n = int(doc.get("n", len(entries)))
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ValueError(f"matrix file {text!r}: entries are not {n}x{n}")
    return ctx, HermMatrix.from_encs(ctx, entries)


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_bytes(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_range(cfg: RunConfig, m: HermMatrix, kind: str, k_enc: int) -> int:
    ctx = cfg.ctx
    kw = {"capacity": cfg.capacity}
    if cfg.sample_budget is not None:
        kw["sample_budget"] = cfg.sample_budget
        kw["rng"] = random.Random(cfg.seed)
    if kind == KIND_NUM_K:
        rs = num_k(m, ctx.elem(k_enc), **kw)
    elif kind == KIND_NUM0_PRIME:
        rs = num0_prime(m, **kw)
    elif kind == KIND_NUM_K_SUBFIELD:
        rs = num_k_subfield(m, ctx.elem(k_enc), **kw)
    elif kind == KIND_NUM0_PRIME_SUBFIELD:
        rs = num0_prime_subfield(m, **kw)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if cfg.fmt == "json":
        payload = dict(rs.to_json_dict(), field=ctx.spec.to_json_dict(),
                       matrix=[list(r) for r in m.encs()])
        _write(cfg, _json_bytes(payload))
    else:
        _write(cfg, _csv_text(("kind", "k", "value", "value_poly"),
                              rs.csv_rows()))
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    ctx = cfg.ctx
    if args.scope == SCOPE_EXHAUSTIVE_2X2:
        report = run_exhaustive_2x2(ctx, space=args.space, seed=cfg.seed,
                                    capacity=cfg.capacity)
    elif args.scope == SCOPE_RANDOM_NXN:
        report = run_random_nxn(ctx, n=args.n or 3, count=args.count,
                                seed=cfg.seed, space=args.space
                                if args.space != "auto" else "subfield",
                                capacity=cfg.capacity)
    elif args.scope == SCOPE_SCALAR_FIBERS:
        kw = {"capacity": cfg.capacity}
        if args.n:
            kw["n_values"] = (args.n,)
        report = run_scalar_fibers(ctx, **kw)
    elif args.scope == SCOPE_DIRECT_SUMS:
        report = run_direct_sums(ctx, count=args.count, seed=cfg.seed,
                                 capacity=cfg.capacity)
    else:
        raise ValueError(f"unknown scope {args.scope!r}")
    if cfg.fmt == "json":
        _write(cfg, _json_bytes(report))
    else:
        rows = [(c["citation"], c["claim"], c["k"],
                 ";".join(",".join(str(e) for e in r) for r in c["matrix"]),
                 c["verdict"],
                 c["observed"].get("cardinality", c["observed"].get("count")))
                for c in report["checks"]]
        _write(cfg, _csv_text(
            ("citation", "claim", "k", "matrix", "verdict", "observed"), rows))
    return 1 if report["summary"]["fail"] else 0


def cmd_fibers(cfg: RunConfig, m: HermMatrix) -> int:
    table = fiber_table(m, capacity=cfg.capacity)
    if cfg.fmt == "json":
        payload = {
            "field": cfg.ctx.spec.to_json_dict(),
            "matrix": [list(r) for r in m.encs()],
            "fibers": [{"value": fc.value.enc, "count": fc.count}
                       for fc in table],
            "total": sum(fc.count for fc in table),
        }
        _write(cfg, _json_bytes(payload))
    else:
        _write(cfg, _csv_text(
            ("value", "value_poly", "count"),
            [(fc.value.enc, fc.value.poly_str(), fc.count) for fc in table]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermrange",
        description="Ranges of matrices over F_{q^2} under the conjugate "
                    "pairing: enumerate them, or sweep rule predictions "
                    "against enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=int, help="field characteristic")
        sp.add_argument("--m", type=int, default=1,
                        help="degree of F_q over F_p (default 1)")
        sp.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY,
                        help="max vectors to enumerate exhaustively")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized step")
        sp.add_argument("--format", dest="fmt", choices=("json", "csv"),
                        default="json")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("range", help="compute one range of one matrix")
    common(sp)
    sp.add_argument("--matrix", required=True,
                    help="inline rows like 0,1;2,3 or a JSON file")
    sp.add_argument("--kind", choices=KINDS, default=KIND_NUM_K)
    sp.add_argument("--k", type=int, default=0,
                    help="level as an element code (default 0)")
    sp.add_argument("--sample-budget", type=int, default=None,
                    help="fall back to this many sampled vectors over capacity")

    sp = sub.add_parser("verify", help="run a prediction sweep preset")
    common(sp)
    sp.add_argument("--scope", choices=VERIFY_SCOPES, required=True)
    sp.add_argument("--space", choices=("auto", "full", "subfield", "both"),
                    default="auto")
    sp.add_argument("--n", type=int, default=None,
                    help="matrix size for sized sweeps")
    sp.add_argument("--count", type=int, default=50,
                    help="matrices per randomized sweep")

    sp = sub.add_parser("fibers", help="null fiber table of a subfield matrix")
    common(sp)
    sp.add_argument("--matrix", required=True,
                    help="inline rows like 0,1;2,3 or a JSON file")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "range":
            ctx, m = _load_matrix(args)
            cfg = RunConfig(ctx=ctx, capacity=args.capacity,
                            sample_budget=args.sample_budget, seed=args.seed,
                            fmt=args.fmt, out=args.out)
            return cmd_range(cfg, m, args.kind, args.k)
        if args.command == "verify":
            ctx = _resolve_ctx(args, None)
            cfg = RunConfig(ctx=ctx, capacity=args.capacity,
                            sample_budget=None, seed=args.seed,
                            fmt=args.fmt, out=args.out)
            return cmd_verify(cfg, args)
        ctx, m = _load_matrix(args)
        cfg = RunConfig(ctx=ctx, capacity=args.capacity, sample_budget=None,
                        seed=args.seed, fmt=args.fmt, out=args.out)
        return cmd_fibers(cfg, m)
    except CapacityError as exc:
        print(f"hermrange: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"hermrange: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
