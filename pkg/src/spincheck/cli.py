"""Command line entry point: ``spincheck verify|tensor|orbit``."""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import verifier
from .bruhat import verify_lemma3
from .characters import dimension
from .errors import SpincheckError
from .lie_core import D5
from .orbits import Partition, dominance_compare, greater_or_not_related, paper_orbit_facts
from .report import CheckReport, reports_to_json
from .rep_ring import tensor_decompose

SUITES = (
    "brion",
    "g-identity",
    "h-collapse",
    "lemma3",
    "main-identity",
    "okada",
    "orbits",
    "p-annihilation",
    "prop4",
    "q-sums",
)


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...]
    y_max: int | None = None
    trials: int = 5
    seed: int = 42
    tolerance: float = verifier.DEFAULT_TOL
    out: str | None = None
    fmt: str = "json"
    okada_max: int = 3

    def __post_init__(self):
        if self.y_max is not None and self.y_max < 0:
            raise ValueError("--ymax must be >= 0")
        if self.trials < 1:
            raise ValueError("--trials must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("--tol must be > 0")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(sorted(unknown))}")


def _symbolic_n(cfg: RunConfig) -> int:
    return 12 if cfg.y_max is None else cfg.y_max


def _numeric_n(cfg: RunConfig) -> int:
    return 10 if cfg.y_max is None else cfg.y_max


def _jobs(cfg: RunConfig) -> dict[str, Callable[[], list[CheckReport]]]:
    num = dict(trials=cfg.trials, seed=cfg.seed, tol=cfg.tolerance)
    return {
        "okada": lambda: [verifier.verify_okada(cfg.okada_max, cfg.okada_max)],
        "p-annihilation": lambda: [verifier.verify_p_annihilation(_symbolic_n(cfg))],
        "g-identity": lambda: [verifier.verify_g_identity()],
        "q-sums": lambda: [verifier.verify_q_sums()],
        "h-collapse": lambda: [verifier.verify_h_collapse()],
        "main-identity": lambda: [verifier.verify_main_identity(_numeric_n(cfg), **num)],
        "prop4": lambda: [verifier.verify_prop4_euler(_numeric_n(cfg), **num)],
        "brion": lambda: [verifier.verify_brion(_numeric_n(cfg), **num)],
        "orbits": lambda: [paper_orbit_facts()],
        "lemma3": lambda: [verify_lemma3("V"), verify_lemma3("R")],
    }


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SPINCHECK_THREADS", "1")))
    except ValueError:
        return 1


def run_checks(cfg: RunConfig) -> list[CheckReport]:
    """Run the selected suites; reports come back ordered by suite name."""
    jobs = _jobs(cfg)
    names = sorted(cfg.suites)
    workers = min(_threads(), len(names))
    if workers <= 1:
        results = [jobs[n]() for n in names]
    else:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda n: jobs[n](), names))
    return [r for group in results for r in group]


def run_verify(cfg: RunConfig, stream=None) -> int:
    reports = run_checks(cfg)
    text = reports_to_json(reports)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if cfg.fmt == "json":
        if not cfg.out:
            (stream or sys.stdout).write(text)
    else:
        for r in reports:
            print(r.summary(), file=stream)
    return 0 if all(r.passed for r in reports) else 1


def _label(text: str) -> tuple[int, ...]:
    parts = [p for p in text.replace("(", " ").replace(")", " ").replace(",", " ").split() if p]
    try:
        label = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer label: {text!r}") from None
    if len(label) != 5 or min(label) < 0:
        raise argparse.ArgumentTypeError(f"need five nonnegative integers: {text!r}")
    return label


def query_tensor(a: Sequence[int], b: Sequence[int], stream=None) -> None:
    lam, mu = D5.from_label(a), D5.from_label(b)
    prod = tensor_decompose(lam, mu)
    total = 0
    for label, mult in sorted(prod.by_label().items()):
        d = dimension(D5.from_label(label))
        total += mult * d
        print(f"{mult:>3} x {label}  dim {d}", file=stream)
    da, db = dimension(lam), dimension(mu)
    print(f"{len(prod.by_label())} constituents; {da} * {db} = {da * db}, sum = {total}", file=stream)


def query_orbit(p: str, q: str, n: int | None, stream=None) -> None:
    pp, qq = Partition.parse(p), Partition.parse(q)
    if n is not None and (pp.total != n or qq.total != n):
        raise SpincheckError(f"both partitions must sum to {n}")
    verdict = dominance_compare(pp, qq)
    print(f"{pp} vs {qq}: {verdict.value}; greater_or_not_related = {str(greater_or_not_related(pp, qq)).lower()}",
          file=stream)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spincheck", description="Finite checks for the Spin_10 x GL_2 L-function identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--ymax", type=int, default=None, help="truncation degree (default 12 symbolic, 10 numeric)")
    v.add_argument("--trials", type=int, default=5)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tol", type=float, default=verifier.DEFAULT_TOL)
    v.add_argument("--max", type=int, default=3, dest="okada_max", help="bound for the okada sweep")
    v.add_argument("--out", default=None)
    v.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")

    t = sub.add_parser("tensor", help="decompose a tensor product of two irreducibles")
    t.add_argument("a", type=_label)
    t.add_argument("b", type=_label)

    o = sub.add_parser("orbit", help="compare two partitions in dominance order")
    o.add_argument("p")
    o.add_argument("q")
    o.add_argument("--n", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            suites = SUITES if args.suite == "all" else (args.suite,)
            try:
                cfg = RunConfig(suites, args.ymax, args.trials, args.seed, args.tol,
                                args.out, args.fmt, args.okada_max)
            except ValueError as exc:
                parser.error(str(exc))
            return run_verify(cfg)
        if args.command == "tensor":
            query_tensor(args.a, args.b)
            return 0
        query_orbit(args.p, args.q, args.n)
        return 0
    except SpincheckError as exc:
        print(f"spincheck: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
