"""Command-line front end.

Exit status is 0 for a definite answer (including a negative one), 2 when a
search ran out of budget and 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import complexes, constructions, designs, lefschetz, purity, sequences
from .monomials import Monomial, divisor_closure, parse_generators

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_nodes: int
    max_candidate_pool: int
    jobs: int
    fmt: str
    seed: int

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_candidate_pool < 1 or self.jobs < 1:
            raise UsageError("budgets and --jobs must be positive")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        default = purity.SearchBudget.from_env()
        return cls(
            max_nodes=args.budget if args.budget is not None else default.max_nodes,
            max_candidate_pool=args.pool if args.pool is not None else default.max_candidate_pool,
            jobs=args.jobs,
            fmt=args.format,
            seed=args.seed,
        )

    def budget(self) -> purity.SearchBudget:
        return purity.SearchBudget(
            self.max_nodes, self.max_candidate_pool, parallel_roots=self.jobs > 1, workers=self.jobs
        )


class Output:
    def __init__(self, cfg: RunConfig, out):
        self.cfg = cfg
        self.out = out

    def emit(self, payload: dict, text: str | Callable[[], str]) -> None:
        if self.cfg.fmt == "json":
            self.out.write(json.dumps(payload) + "\n")
        else:
            self.out.write((text() if callable(text) else text).rstrip("\n") + "\n")


def _seq(text: str) -> sequences.IntSeq:
    try:
        return sequences.IntSeq.parse(text)
    except sequences.SequenceParseError as exc:
        raise UsageError(f"cannot parse sequence {text!r}: {exc}") from None


def _gens(text: str) -> list[Monomial]:
    return [Monomial.parse(tok) for tok in re.split(r"[,;\s]+", text.strip()) if tok]


def _fail_at(check: sequences.SequenceCheck):
    return None if check.ok else check.failed_at


# -- check / decide ------------------------------------------------------------


def cmd_check(args, o: Output) -> int:
    h = _seq(args.seq)
    if not h or h[0] != 1:
        raise UsageError("sequence must start with 1")
    e = h.socle_degree
    oseq = sequences.is_o_sequence(h)
    delta = sequences.first_difference(h)
    diff = sequences.is_differentiable(h)
    shape = sequences.analyze_shape(h)
    hibi = sequences.hibi_violation(h)
    half = (e - 1) // 2 + 1 if e >= 1 else 0
    payload = {
        "h": list(h),
        "o_sequence": oseq.ok,
        "o_sequence_fails_at": _fail_at(oseq),
        "first_difference": list(delta),
        "differentiable": diff,
        "first_half_differentiable": sequences.is_differentiable(h, min(half, e)),
        "si_sequence": sequences.is_si_sequence(h),
        "hibi_violation": list(hibi) if hibi else None,
        "unimodal": shape.is_unimodal,
        "strictly_unimodal": shape.is_strictly_unimodal,
        "local_maxima": shape.num_local_maxima,
        "flawless": shape.is_flawless,
        "first_half_nondecreasing": shape.first_half_nondecreasing,
    }

    def text() -> str:
        lines = []
        for k, v in payload.items():
            if k == "o_sequence" and not v:
                lines.append(f"o_sequence: false@{payload['o_sequence_fails_at']}")
            elif k == "o_sequence_fails_at":
                continue
            elif isinstance(v, list):
                lines.append(f"{k}: {','.join(map(str, v))}")
            else:
                lines.append(f"{k}: {json.dumps(v)}")
        return "\n".join(lines)

    o.emit(payload, text)
    return EXIT_OK


def _verdict_text(v: purity.PurityVerdict) -> str:
    lines = [f"status: {v.status.value}", f"nodes: {v.nodes_explored}"]
    if v.reason:
        lines.append(f"reason: {v.reason}")
    if v.witness is not None:
        lines.append("witness:")
        lines += [f"  {m}" for m in v.witness]
    return "\n".join(lines)


def _verdict_exit(v: purity.PurityVerdict) -> int:
    return EXIT_UNKNOWN if v.status is purity.Status.UNKNOWN else EXIT_OK


def cmd_decide(args, o: Output) -> int:
    h = _seq(args.seq)
    if args.witness:
        gens = parse_generators(Path(args.witness).read_text())
        v = purity.validate_witness(h, gens)
    else:
        v = purity.decide_pure(h, o.cfg.budget())
    payload = {"h": list(h), **v.to_json()}
    o.emit(payload, lambda: _verdict_text(v))
    return _verdict_exit(v)


# -- enumeration ---------------------------------------------------------------


def _enumerate(args, o: Output) -> purity.Enumeration:
    budget = o.cfg.budget()
    if args.e is None:
        raise UsageError("--e is required")
    if args.t is not None:
        return purity.enumerate_pure_by_type(args.e, args.t, budget, codimension=args.r)
    if args.r is None:
        raise UsageError("give --r, --t or both")
    return purity.enumerate_pure(args.r, args.e, budget)


def cmd_enumerate(args, o: Output) -> int:
    res = _enumerate(args, o)
    payload = {
        "sequences": [list(s) for s in res.sequences],
        "count": len(res),
        "complete": res.complete,
        "nodes": res.nodes,
    }
    if res.regions is not None:
        payload["regions"] = res.regions

    def text() -> str:
        lines = [str(s) for s in res.sequences]
        if not res.complete:
            lines.append("# incomplete: budget exhausted")
        return "\n".join(lines)

    o.emit(payload, text)
    return EXIT_OK if res.complete else EXIT_UNKNOWN


def cmd_interval_scan(args, o: Output) -> int:
    res = _enumerate(args, o)
    gaps = purity.scan_interval_gaps(res.sequences)
    payload = {
        "count": len(res),
        "complete": res.complete,
        "gaps": [
            {"below": list(g.below), "missing": [list(m) for m in g.missing], "above": list(g.above), "position": g.position}
            for g in gaps
        ],
    }

    def text() -> str:
        lines = [f"{len(res)} sequences, {len(gaps)} gaps"]
        for g in gaps:
            lines.append(f"{g.below} < [{' '.join(str(m) for m in g.missing)}] < {g.above}")
        return "\n".join(lines)

    o.emit(payload, text)
    return EXIT_OK if res.complete else EXIT_UNKNOWN


# -- constructions ---------------------------------------------------------------


def cmd_construct(args, o: Output) -> int:
    kind = args.kind
    if kind == "ci":
        p = constructions.Partition.parse(args.arg)
        h = constructions.ci_h_vector(p)
        o.emit({"kind": kind, "h": list(h), "witness": [str(p.monomial())]}, str(h))
    elif kind == "truncation":
        if args.r is None or args.e is None:
            raise UsageError("truncation needs --r and --e")
        h = constructions.truncation_h(args.r, args.e)
        o.emit({"kind": kind, "h": list(h)}, str(h))
    elif kind == "sum":
        hs = [_seq(s) for s in args.arg.split(";")] + [_seq(s) for s in args.more]
        h = constructions.disjoint_sum(hs)
        o.emit({"kind": kind, "h": list(h)}, str(h))
    elif kind == "nonunimodal":
        rec = constructions.nonunimodal_factory(int(args.arg))
        shape = sequences.analyze_shape(rec.h)
        payload = {
            "kind": kind,
            "h": list(rec.h),
            "recipe": rec.describe(),
            "codimension": rec.codimension,
            "local_maxima": shape.num_local_maxima,
        }
        o.emit(payload, f"{rec.h}\nrecipe: {rec.describe()}\nlocal_maxima: {shape.num_local_maxima}")
    elif kind == "c-e":
        q = constructions.format_fraction(constructions.compute_c_e(int(args.arg)))
        o.emit({"kind": kind, "e": int(args.arg), "value": q}, q)
    elif kind == "partitions":
        e = int(args.arg)
        ps = list(constructions.partitions(e, args.r))
        count = len(ps)
        payload = {"kind": kind, "e": e, "r": args.r, "count": count, "partitions": [list(p.parts) for p in ps]}
        o.emit(payload, "\n".join(str(p) for p in ps) + f"\n# count: {count}")
    return EXIT_OK


# -- designs -----------------------------------------------------------------------


def _design_payload(D: designs.BlockDesign) -> dict:
    chk = designs.verify_steiner(D)
    return {
        "l": D.l,
        "m": D.m,
        "r": D.r,
        "blocks": [list(b) for b in D.blocks],
        "steiner": chk.ok,
        "violation": list(chk.violation) if chk.violation else None,
        "f": list(designs.design_f_vector(D)),
    }


def _design_text(p: dict) -> str:
    lines = [f"{p['l']} {p['m']} {p['r']}"] + [" ".join(map(str, b)) for b in p["blocks"]]
    lines.append(f"# steiner: {json.dumps(p['steiner'])}")
    if p["violation"]:
        lines.append(f"# violation: {' '.join(map(str, p['violation']))}")
    lines.append(f"# f: {','.join(map(str, p['f']))}")
    return "\n".join(lines)


def cmd_steiner(args, o: Output) -> int:
    if args.verify:
        D = designs.BlockDesign.from_text(Path(args.verify).read_text())
        p = _design_payload(D)
        o.emit(p, lambda: _design_text(p))
    elif args.construct is not None:
        p = _design_payload(designs.construct_sts(args.construct))
        o.emit(p, lambda: _design_text(p))
    elif args.count is not None:
        n = designs.count_labeled_sts(args.count)
        o.emit({"r": args.count, "labeled_count": n}, str(n))
    elif args.plane is not None:
        h = designs.projective_plane_sequence(args.plane)
        brc = designs.brc_screen(args.plane)
        o.emit({"q": args.plane, "h": list(h), "brc": brc.value}, f"{h}\nbrc: {brc.value}")
    elif args.brc is not None:
        brc = designs.brc_screen(args.brc)
        o.emit({"q": args.brc, "brc": brc.value}, brc.value)
    elif args.f_vector:
        l, m, r = (int(x) for x in args.f_vector)
        h = designs.steiner_f_vector(l, m, r)
        o.emit({"l": l, "m": m, "r": r, "f": list(h)}, str(h))
    else:
        raise UsageError("choose one of --verify, --construct, --count, --plane, --brc, --f-vector")
    return EXIT_OK


# -- complexes ---------------------------------------------------------------------


def cmd_complex(args, o: Output) -> int:
    if args.action == "matroid" and args.all is not None:
        recs = complexes.enumerate_matroids(args.all, budget=o.cfg.budget())
        payload = {"matroids": [r.to_json() for r in recs], "count": len(recs)}
        o.emit(payload, lambda: "\n".join(json.dumps(r.to_json()) for r in recs))
        unknown = any(r.verdict and r.verdict.status is purity.Status.UNKNOWN for r in recs)
        return EXIT_UNKNOWN if unknown else EXIT_OK
    if not args.file:
        raise UsageError("a complex file is required")
    D = complexes.SimplicialComplex.from_text(Path(args.file).read_text())
    f = complexes.f_vector(D)
    if args.action == "f":
        o.emit({"f": list(f), "pure": complexes.is_pure_complex(D)}, str(f))
    elif args.action == "h":
        h = complexes.f_to_h(f, D.dimension + 1)
        o.emit({"f": list(f), "h": list(h)}, str(h))
    elif args.action == "matroid":
        chk = complexes.is_matroid(D)
        payload = {"matroid": chk.ok, "witness": list(chk.witness) if chk.witness else None}
        text = "matroid: true" if chk.ok else f"matroid: false (restriction to {' '.join(map(str, chk.witness))} is not pure)"
        o.emit(payload, text)
    elif args.action == "stanley":
        if not complexes.is_matroid(D):
            raise UsageError("complex is not a matroid")
        h = complexes.f_to_h(f, D.dimension + 1)
        v = purity.decide_pure(h, o.cfg.budget())
        o.emit({"h": list(h), **v.to_json()}, lambda: f"h: {h}\n" + _verdict_text(v))
        return _verdict_exit(v)
    elif args.action == "nonfaces":
        nf = complexes.stanley_reisner_nonfaces(D)
        o.emit({"nonfaces": [list(s) for s in nf]}, "\n".join(" ".join(map(str, s)) for s in nf))
    return EXIT_OK


# -- lefschetz ---------------------------------------------------------------------


def cmd_wlp(args, o: Output) -> int:
    if args.crosscheck is not None:
        res = lefschetz.crosscheck(args.crosscheck, o.cfg.seed)
        payload = {"instances": res.instances, "seed": o.cfg.seed, "mismatches": [list(m) for m in res.mismatches]}
        o.emit(payload, f"{res.instances} instances, {len(res.mismatches)} mismatches")
        return EXIT_OK if not res.mismatches else EXIT_ERROR
    if args.gens:
        gens = _gens(args.gens)
    elif args.gens_file:
        gens = parse_generators(Path(args.gens_file).read_text())
    else:
        raise UsageError("give --gens, --gens-file or --crosscheck")
    X = divisor_closure(gens)
    prof = lefschetz.rank_profile(X, args.max_power)
    payload = prof.to_json()

    def text() -> str:
        lines = [f"h: {prof.hilbert}"]
        lines += [f"rank({i},{d}) = {r}" for (i, d), r in sorted(prof.ranks.items())]
        for name, value in (("wlp", prof.has_wlp), ("slp", prof.has_slp)):
            note = " (fails for the symmetric form)" if value is False else ""
            lines.append(f"{name}: {json.dumps(value)}{note}")
        lines.append(f"hausel: {json.dumps(prof.hausel_injective)}")
        return "\n".join(lines)

    o.emit(payload, text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, help="node budget (default: PUREO_BUDGET or 10^7)")
    common.add_argument("--pool", type=int, help="cap on the number of candidate top-degree monomials")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for root-level branches")
    common.add_argument("--seed", type=int, default=0)
    dims = argparse.ArgumentParser(add_help=False)
    dims.add_argument("--r", type=int)
    dims.add_argument("--e", type=int)
    dims.add_argument("--t", type=int)

    parser = argparse.ArgumentParser(prog="pureo", description="Pure O-sequences and their relatives.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="sequence predicates")
    p.add_argument("seq")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", parents=[common], help="decide purity by search")
    p.add_argument("seq")
    p.add_argument("--witness", help="validate this generator file instead of searching")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("enumerate", parents=[common, dims], help="list pure O-sequences")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("interval-scan", parents=[common, dims], help="interval gaps in an enumeration")
    p.set_defaults(func=cmd_interval_scan)

    p = sub.add_parser("construct", parents=[common, dims], help="closed-form sequences")
    p.add_argument("kind", choices=("ci", "truncation", "sum", "nonunimodal", "c-e", "partitions"))
    p.add_argument("arg", nargs="?", default="")
    p.add_argument("more", nargs="*", help="further summands for 'sum'")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("steiner", parents=[common], help="Steiner systems")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--verify", metavar="FILE")
    g.add_argument("--construct", type=int, metavar="R")
    g.add_argument("--count", type=int, metavar="R")
    g.add_argument("--plane", type=int, metavar="Q")
    g.add_argument("--brc", type=int, metavar="Q")
    g.add_argument("--f-vector", nargs=3, metavar=("L", "M", "R"))
    p.set_defaults(func=cmd_steiner)

    p = sub.add_parser("complex", parents=[common], help="simplicial complexes and matroids")
    p.add_argument("action", choices=("f", "h", "matroid", "stanley", "nonfaces"))
    p.add_argument("file", nargs="?")
    p.add_argument("--all", type=int, metavar="N", help="with 'matroid': corpus of all matroids on <= N elements")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("wlp", parents=[common], help="Lefschetz rank profile")
    p.add_argument("--gens", help="generators separated by commas or spaces")
    p.add_argument("--gens-file")
    p.add_argument("--max-power", type=int)
    p.add_argument("--crosscheck", type=int, metavar="N", help="compare exact and modular ranks on N random matrices")
    p.set_defaults(func=cmd_wlp)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        cfg = RunConfig.from_args(args)
        if args.command == "construct" and args.kind not in ("truncation",) and not args.arg:
            raise UsageError(f"construct {args.kind} needs an argument")
        return args.func(args, Output(cfg, out))
    except (UsageError, ValueError, OSError) as exc:
        print(f"pureo: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
