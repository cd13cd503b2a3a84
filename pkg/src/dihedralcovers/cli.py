"""Command-line front end.

    dihedralcovers verify all
    dihedralcovers enumerate --prime 7 --branch 6 --format text
    dihedralcovers field solve-det --height 1

Exit status: 0 when every check passes, 1 when any check fails, 2 on usage
errors (bad arguments, unknown suite, budget exceeded).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .cubicfield import (classify_polarization_matrices, conjugate_idempotent,
                         is_totally_positive, norm_embeddings, norm_resultant,
                         random_idempotents, solve_det_equation, DIAG01)
from .dihedral import is_odd_prime
from .hurwitz import DEFAULT_BUDGET, BudgetExceeded, classification_record
from .report import RENDERERS, Check, Report
from .suites import SUITES, run_suite

FIELD_COMMANDS = ("solve-det", "classify-polarizations", "idempotent-roundtrip")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    prime: int = 7
    branch_count: int = 6
    height: int = 1
    threads: int = 1
    out: str | None = None
    fmt: str = "json"
    budget: int = DEFAULT_BUDGET
    seed: int = 1
    samples: int = 100

    def __post_init__(self):
        if not is_odd_prime(self.prime) or self.prime > 31:
            raise UsageError(f"prime must be an odd prime <= 31, got {self.prime}")
        if self.branch_count % 2 or not 2 <= self.branch_count <= 10:
            raise UsageError(f"branch count must be even in 2..10, got {self.branch_count}")
        if self.height < 0:
            raise UsageError(f"height must be >= 0, got {self.height}")
        if self.budget < 1:
            raise UsageError("budget must be >= 1")
        if self.threads < 1:
            raise UsageError("threads must be >= 1")
        if self.samples < 0:
            raise UsageError("samples must be >= 0")


def cmd_verify(cfg: RunConfig, suite: str, timings: bool = False) -> Report:
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return run_suite(suite, threads=cfg.threads, seed=cfg.seed, timings=timings)


def cmd_enumerate(cfg: RunConfig, allow_conjectural: bool = False) -> Report:
    config = {"command": "enumerate", "p": cfg.prime, "b": cfg.branch_count,
              "budget": cfg.budget, "allow_conjectural": allow_conjectural}
    try:
        rec = classification_record(cfg.prime, cfg.branch_count, threads=cfg.threads,
                                    budget=cfg.budget, allow_conjectural=allow_conjectural)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from exc
    report = Report(config=config, results=rec)
    if rec["mode"] == "exact":
        report.checks.append(Check("burnside", "orbit-counting lemma equals orbit count",
                                   "derived", rec["class_count"], rec["burnside_count"]))
        report.checks.append(Check("frobenius", "character formula equals tuple total",
                                   "derived", rec["total_tuples"], rec["frobenius_count"]))
    return report


def cmd_field(cfg: RunConfig, sub: str) -> Report:
    config = {"command": "field", "sub": sub, "height": cfg.height}
    if sub == "idempotent-roundtrip":
        config = {"command": "field", "sub": sub, "seed": cfg.seed, "samples": cfg.samples}
    report = Report(config=config)
    if sub == "solve-det":
        rows = []
        for phi in solve_det_equation(cfg.height):
            t = 4 - phi * phi
            rows.append({"phi": str(phi), "four_minus_phi2": str(t), "norm": t.norm(),
                         "norm_resultant": norm_resultant(t),
                         "norm_embeddings": norm_embeddings(t),
                         "totally_positive": is_totally_positive(t)})
        report.results = {"count": len(rows), "solutions": rows}
        report.checks.append(Check("recomputed_norms", "norms agree across three algorithms",
                                   "derived", len(rows),
                                   sum(r["norm"] == r["norm_resultant"] == r["norm_embeddings"] == 7
                                       for r in rows)))
    elif sub == "classify-polarizations":
        cands = classify_polarization_matrices(cfg.height)
        rows = [{"matrix": str(c.matrix), "det": str(c.det), "det_norm": c.det.norm(),
                 "det_norm_resultant": norm_resultant(c.det), "prym_shape": c.prym_shape}
                for c in cands]
        report.results = {"count": len(rows), "prym_shape_count": sum(c.prym_shape for c in cands),
                          "matrices": rows}
        report.checks.append(Check("recomputed_norms", "determinant norms recomputed by resultant",
                                   "derived", len(rows),
                                   sum(r["det_norm"] == r["det_norm_resultant"] == 7 for r in rows)))
    elif sub == "idempotent-roundtrip":
        eps = random_idempotents(cfg.seed, cfg.samples)
        rows, ok = [], 0
        for e in eps:
            r = conjugate_idempotent(e)
            back = r.g.inverse() * DIAG01 * r.g == e
            ok += r.verified and back and r.basis_det.is_unit()
            rows.append({"idempotent": str(e), "g": str(r.g), "basis_det": str(r.basis_det)})
        report.results = {"summary": f"{ok}/{cfg.samples} conjugated and verified",
                          "samples": rows}
        report.checks.append(Check("roundtrip", "g eps g^-1 = diag(0,1) and back", "derived",
                                   cfg.samples, ok))
    else:
        raise UsageError(f"unknown field subcommand {sub!r}")
    return report


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=sorted(RENDERERS), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="dihedralcovers", parents=[common],
                                 description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help="one of: " + ", ".join(SUITES + ("all",)))
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="add per-check runtimes")

    e = sub.add_parser("enumerate", parents=[common], help="classify tuples for (p, b)")
    e.add_argument("--prime", type=int, required=True)
    e.add_argument("--branch", type=int, required=True)
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    e.add_argument("--allow-conjectural", action="store_true")

    f = sub.add_parser("field", parents=[common], help="cubic-field searches")
    f.add_argument("sub", choices=FIELD_COMMANDS)
    f.add_argument("--height", type=int, default=1)
    f.add_argument("--seed", type=int, default=1)
    f.add_argument("--samples", type=int, default=100)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    threads = getattr(args, "threads", 1)
    fmt = getattr(args, "format", "json")
    out = getattr(args, "out", None)
    try:
        if args.command == "verify":
            cfg = RunConfig("verify", threads=threads, fmt=fmt, out=out, seed=args.seed)
            report = cmd_verify(cfg, args.suite, args.timings)
        elif args.command == "enumerate":
            cfg = RunConfig("enumerate", prime=args.prime, branch_count=args.branch,
                            threads=threads, fmt=fmt, out=out, budget=args.budget)
            report = cmd_enumerate(cfg, args.allow_conjectural)
        else:
            cfg = RunConfig("field", height=args.height, threads=threads, fmt=fmt, out=out,
                            seed=args.seed, samples=args.samples)
            report = cmd_field(cfg, args.sub)
    except UsageError as exc:
        print(f"dihedralcovers: error: {exc}", file=sys.stderr)
        return 2
    text = RENDERERS[fmt](report)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
