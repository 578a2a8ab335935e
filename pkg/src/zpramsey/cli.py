"""Command-line front end.

    zpramsey transform --p 23 --f qr [--fast]
    zpramsey sigma --p 5 --a1 list:1,2 --a2 list:3,4 --omega +1
    zpramsey verify two-set --p 101 --a1 random:density=0.6,seed=1 --a2 ...
    zpramsey color find --p 31 --coloring random:k=2,seed=3 --pattern quadruple
    zpramsey color search --p 31 --k 2 --budget 10000 --seed 0 --save best.json
    zpramsey sweep two-set --seed 0 --threads 4 --format csv --output out.csv

Exit status: 0 success (or nothing failed), 1 a verification failed,
2 usage error, 3 output could not be written.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, bounds, sweeps
from .coloring import (
    Coloring,
    adversarial_search,
    find_mono_quadruple,
    find_mono_schur,
    find_mono_triple,
    random_coloring,
)
from .counting import sigma, sigma_tilde
from .field import make_context
from .report import VerificationReport, emit_report
from .setspec import SetSpecError, parse_coloring_spec, parse_set_spec
from .transform import fast_forward, forward

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

CLAIMS = ("two-set", "main", "subgroup", "circ", "johnsen", "basis", "spectral-tail")


class UsageError(Exception):
    pass


def _omega(text: str) -> int:
    value = int(text)
    if value not in (1, -1):
        raise argparse.ArgumentTypeError("omega must be +1 or -1")
    return value


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpramsey", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def out_flags(sp):
        sp.add_argument("--output", help="write here instead of stdout")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("transform", help="character transform of a set indicator")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--f", required=True, help="set spec; f is its indicator on Z_p*")
    sp.add_argument("--fast", action="store_true")
    out_flags(sp)

    sp = sub.add_parser("sigma", help="exact count of (x, y) with w*x+y in A1, xy in A2")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a1", required=True)
    sp.add_argument("--a2", required=True)
    sp.add_argument("--a3", help="also restrict x to A3")
    sp.add_argument("--omega", type=_omega, default=1)
    sp.add_argument("--include-zero-y", action="store_true")
    out_flags(sp)

    sp = sub.add_parser("verify", help="check one claim on one instance")
    sp.add_argument("claim", choices=CLAIMS)
    sp.add_argument("--p", type=int, required=True)
    for name in ("a1", "a2", "a3", "r", "a", "b"):
        sp.add_argument(f"--{name}")
    sp.add_argument("--omega", type=_omega, default=1)
    sp.add_argument("--chars", type=_int_list)
    sp.add_argument("--shifts", type=_int_list)
    sp.add_argument("--log-base", default="e", choices=("e", "2"))
    sp.add_argument("--seed", type=int)
    out_flags(sp)

    sp = sub.add_parser("color", help="coloring searches")
    csub = sp.add_subparsers(dest="action", required=True)
    fp = csub.add_parser("find")
    fp.add_argument("--pattern", choices=("triple", "quadruple", "schur"), default="triple")
    fp.add_argument("--p", type=int, help="prime (triple, quadruple)")
    fp.add_argument("--n", type=int, help="segment length (schur)")
    fp.add_argument("--coloring", required=True,
                    help="random:k=K,seed=S | list:c0,c1,... | qr | path to JSON")
    fp.add_argument("--class", dest="color_class", type=int, help="restrict quadruple search")
    fp.add_argument("--strict", action="store_true")
    out_flags(fp)
    spp = csub.add_parser("search")
    spp.add_argument("--p", type=int, required=True)
    spp.add_argument("--k", type=int, required=True)
    spp.add_argument("--budget", type=int, required=True)
    spp.add_argument("--seed", type=int, default=0)
    spp.add_argument("--save", help="persist the best coloring as JSON")
    out_flags(spp)

    sp = sub.add_parser("sweep", help="run a seeded verification suite")
    sp.add_argument("suite", choices=sorted(sweeps.SUITES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=1)
    out_flags(sp)
    return parser


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this command")


def _sets(args, ctx, *names):
    _need(args, *names)
    return [parse_set_spec(ctx.p, getattr(args, n), ctx) for n in names]


def _specs(args, *names):
    return {n.upper(): getattr(args, n) for n in names}


def _verify(args) -> VerificationReport:
    ctx = make_context(args.p)
    claim = args.claim
    if claim == "two-set":
        A1, A2 = _sets(args, ctx, "a1", "a2")
        return bounds.verify_two_set(ctx, A1, A2, args.omega, _specs(args, "a1", "a2"), args.seed)
    if claim == "main":
        A1, A2, A3 = _sets(args, ctx, "a1", "a2", "a3")
        return bounds.verify_main(ctx, A1, A2, A3, args.omega, _specs(args, "a1", "a2", "a3"),
                                  args.seed)
    if claim == "subgroup":
        R, A1, A2 = _sets(args, ctx, "r", "a1", "a2")
        base = "e" if args.log_base == "e" else 2
        return bounds.verify_subgroup(ctx, R, A1, A2, base, _specs(args, "r", "a1", "a2"),
                                      args.seed)
    if claim == "circ":
        A, B = _sets(args, ctx, "a", "b")
        return bounds.verify_circ_corollary(ctx, A, B, _specs(args, "a", "b"), args.seed)
    if claim == "johnsen":
        _need(args, "chars", "shifts")
        return bounds.johnsen_sum(ctx, args.chars, args.shifts, args.seed)[1]
    if claim == "basis":
        (R,) = _sets(args, ctx, "r")
        return bounds.basis_order_two(ctx, R, _specs(args, "r"), args.seed)
    (A1, A2) = _sets(args, ctx, "a1", "a2")
    return bounds.max_nonzero_spectrum_bound(ctx, A1, A2, args.omega, _specs(args, "a1", "a2"),
                                             args.seed)


def _segment_coloring(n: int, text: str) -> Coloring:
    head, _, body = text.partition(":")
    if head == "list":
        colors = [int(v) for v in body.split(",")]
        return Coloring("segment", max(colors), colors)
    if head == "random":
        kv = dict(part.split("=", 1) for part in body.split(","))
        return random_coloring(n, int(kv["k"]), int(kv["seed"]), domain="segment")
    c = Coloring.load(text)
    if c.domain != "segment":
        raise UsageError("schur search needs a segment coloring")
    return c


def _zp_coloring(p: int, text: str, ctx) -> Coloring:
    head, _, body = text.partition(":")
    if head == "list":
        colors = [int(v) for v in body.split(",")]
        if len(colors) != p:
            raise UsageError(f"list coloring needs {p} entries (colors of 0..p-1)")
        return Coloring("zp", max(colors), colors)
    return parse_coloring_spec(p, text, ctx)


def _color(args) -> tuple[dict, int]:
    if args.action == "search":
        ctx = make_context(args.p)
        best, count = adversarial_search(ctx, args.k, args.budget, args.seed)
        if args.save:
            best.save(args.save)
        return {"command": "color search", "p": args.p, "k": args.k, "budget": args.budget,
                "seed": args.seed, "mono_count": count, "coloring": best.colors.tolist(),
                "version": __version__}, EXIT_OK

    base = {"command": "color find", "pattern": args.pattern, "coloring": args.coloring,
            "version": __version__}
    if args.pattern == "schur":
        _need(args, "n")
        c = _segment_coloring(args.n, args.coloring)
        hit = find_mono_schur(args.n, c)
        return {**base, "n": args.n, "found": hit is not None,
                "witness": None if hit is None else list(hit)}, EXIT_OK
    _need(args, "p")
    ctx = make_context(args.p)
    c = _zp_coloring(args.p, args.coloring, ctx)
    if args.pattern == "triple":
        hit = find_mono_triple(ctx, c, strict=args.strict)
    else:
        hit = find_mono_quadruple(ctx, c, color=args.color_class)
    return {**base, "p": args.p, "found": hit is not None,
            "witness": None if hit is None else list(hit)}, EXIT_OK


def _transform(args) -> dict:
    ctx = make_context(args.p)
    A = parse_set_spec(args.p, args.f, ctx)
    f = A.mask[1:].astype(complex)
    spec = fast_forward(ctx, f) if args.fast else forward(ctx, f)
    return {"command": "transform", "p": args.p, "f": args.f, "fast": args.fast,
            "g": ctx.g, "spectrum": spec.to_json(), "version": __version__}


def _sigma(args) -> dict:
    ctx = make_context(args.p)
    A1 = parse_set_spec(args.p, args.a1, ctx)
    A2 = parse_set_spec(args.p, args.a2, ctx)
    out = {"command": "sigma", "p": args.p, "a1": args.a1, "a2": args.a2, "omega": args.omega,
           "include_zero_y": args.include_zero_y,
           "sigma": sigma(ctx, A1, A2, args.omega, args.include_zero_y),
           "version": __version__}
    if args.a3 is not None:
        cert = sigma_tilde(ctx, A1, A2, parse_set_spec(args.p, args.a3, ctx), args.omega,
                           args.include_zero_y)
        out.update(a3=args.a3, sigma_tilde=cert.count,
                   witness=None if cert.witness is None else list(cert.witness))
    return out


def _plain_csv(payload: dict) -> str:
    keys = [k for k, v in payload.items() if not isinstance(v, (list, dict))]
    return ",".join(keys) + "\n" + ",".join(str(payload[k]) for k in keys) + "\n"


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    code = EXIT_OK
    try:
        if args.command == "verify":
            report = _verify(args)
            text = emit_report(report, args.format)
            code = EXIT_FAIL if report.failed else EXIT_OK
        elif args.command == "sweep":
            reports = sweeps.run_suite(args.suite, seed=args.seed, threads=args.threads)
            text = emit_report(reports, args.format)
            code = EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK
        else:
            if args.command == "color":
                payload, code = _color(args)
            elif args.command == "transform":
                payload = _transform(args)
            else:
                payload = _sigma(args)
            if args.format == "csv":
                text = _plain_csv(payload)
            else:
                text = json.dumps(payload, indent=2, sort_keys=True)
    except (UsageError, SetSpecError, ValueError) as exc:
        print(f"zpramsey: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"zpramsey: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
