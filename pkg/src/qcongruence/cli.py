"""Batch verification driver.

``qcong verify <statement> [--n LIST] [--p LIST] [--trials K] [--seed S]
[--precision N] [--heavy-ok] [--format text|json] [--out PATH]`` runs one
statement over a grid of sizes/primes/seeded trials and emits one report line
per job.  ``qcong verify all --small`` touches every statement once at the
cheapest admissible parameters.

Exit codes: 0 when every report is ok, 1 when any check refutes, 2 for usage
or precondition errors (bad statement id, inadmissible n, ungated heavy job).
Randomness is fully determined by (seed, statement, value, trial), so reports
are reproducible; the worker count (QCONG_WORKERS) never affects output
order or content.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import padic, theorems
from .congruence import (
    CongruenceClaim,
    ModulusCollisionError,
    ParamPoint,
    UndecidableCongruenceError,
    congruent_mod,
    sample_pair,
    sample_param_point,
    verify_lemma22,
    verify_relations,
)
from .qseries import QMonomial, TermSpec, term
from .ratfun import RatFun
from .theorems import STATEMENT_IDS, VerifyReport

HEAVY_GAMMA_FACTORS = 1_000_000
WORKERS_ENV = "QCONG_WORKERS"

ALL_IDS: tuple[str, ...] = STATEMENT_IDS + padic.PADIC_IDS
# Self-test fixture: runs the main double-sum check against a deliberately
# perturbed right side and reports the (refuted) outcome verbatim.
EXTRA_IDS: tuple[str, ...] = ("negative-control",)


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    """One statement with its parameter grid; validated before dispatch."""

    statement: str
    n_list: tuple[int, ...] = ()
    p_list: tuple[int, ...] = ()
    trials: int = 1
    seed: int = 0
    precision: int | None = None
    heavy_ok: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise UsageError("trials must be >= 1")


# ----------------------------------------------------------------------
# Admissibility rules and small-suite defaults, per statement.

def _n_1mod3(n: int) -> bool:
    return n >= 1 and n % 3 == 1


_N_RULES: dict[str, tuple] = {
    "vanhamme-q-partial": (lambda n: n >= 1 and n % 3 != 0, "n not divisible by 3"),
    "wei-a": (_n_1mod3, "n ≡ 1 (mod 3)"),
    "wei-b": (lambda n: n >= 2 and n % 3 == 2, "n ≡ 2 (mod 3)"),
    "bachraoui-double": (lambda n: n >= 1 and math.gcd(n, 6) == 1, "gcd(n, 6) = 1"),
    "relations": (lambda n: n >= 1, "n >= 1"),
    "final-reduction": (lambda n: n > 1 and n % 3 == 1, "n ≡ 1 (mod 3), n > 1"),
    "negative-control": (_n_1mod3, "n ≡ 1 (mod 3)"),
}
# every other n-statement needs n ≡ 1 (mod 3)

_SMALL_N: dict[str, tuple[int, ...]] = {
    "vanhamme-q-partial": (4, 5),
    "wei-a": (4,),
    "wei-b": (5,),
    "bachraoui-double": (5,),
    "relations": (4,),
    "thm-a": (1, 4),
    "thm-aa": (1, 4),
    "thm-c": (4,),
    "thm-d": (4,),
    "lemma-a": (4,),
    "lemma-b": (4,),
    "base-A": (4,),
    "base-B": (4,),
    "base-C": (4,),
    "wei-gg": (4,),
    "wei-hhh": (4,),
    "limit-2dim": (4,),
    "limit-3dim": (4,),
    "final-reduction": (4,),
}
for _chain_id in theorems.CHAIN_IDS:
    _SMALL_N.setdefault(_chain_id, (4,))

_FULL_N: dict[str, tuple[int, ...]] = {
    "vanhamme-q-partial": (4, 5, 7, 8),
    "wei-a": (4, 7),
    "wei-b": (5, 8),
    "bachraoui-double": (5, 7),
    "relations": (4, 7, 10, 13),
    "thm-a": (1, 4, 7, 10, 13),
    "thm-aa": (1, 4, 7, 10),
    "thm-c": (4, 7),
    "thm-d": (4, 7),
    "lemma-a": (4, 7),
    "lemma-b": (4, 7, 10),
    "base-A": (4, 7, 10),
    "base-B": (4, 7),
    "base-C": (4, 7),
    "wei-gg": (4, 7),
    "wei-hhh": (4, 7),
    "limit-2dim": (4, 7, 10),
    "limit-3dim": (4, 7, 10),
    "final-reduction": (4, 7, 10),
}
for _chain_id in theorems.CHAIN_IDS:
    _FULL_N.setdefault(_chain_id, (4, 7))

_FULL_TRIALS: dict[str, int] = {
    "relations": 4,
    "thm-c": 10,
    "thm-d": 10,
    "lemma-b": 20,
    "base-A": 5,
}

_RANDOMIZED: frozenset[str] = frozenset(
    {"relations", "thm-c", "thm-d", "lemma-a", "lemma-b", "base-A", "base-B",
     "base-C"}
    | set(theorems.CHAIN_IDS)
)

_SMALL_P: dict[str, tuple[int, ...]] = {
    "harmonic": (7,),
    "cor-a": (7,),
    "cor-aa": (7,),
    "vanhamme-D2": (7,),
    "long-ramakrishna": (5, 7),
}

_FULL_P: dict[str, tuple[int, ...]] = {
    "harmonic": (7, 13, 19, 31),
    "cor-a": (7, 13, 19),
    "cor-aa": (7, 13, 19),
    "vanhamme-D2": (7,),
    "long-ramakrishna": (5, 7),
}


def _validate_n(statement: str, n: int) -> None:
    rule, desc = _N_RULES.get(statement, (_n_1mod3, "n ≡ 1 (mod 3)"))
    if not rule(n):
        raise UsageError(f"{statement}: n = {n} is inadmissible (needs {desc})")


def _validate_p(statement: str, p: int, precision: int | None, heavy_ok: bool) -> None:
    if not padic.is_prime(p) or p == 2:
        raise UsageError(f"{statement}: p = {p} must be an odd prime")
    if statement in ("harmonic", "cor-a", "cor-aa", "vanhamme-D2"):
        if p % 6 != 1:
            raise UsageError(f"{statement}: p = {p} must be ≡ 1 (mod 6)")
    if statement == "long-ramakrishna" and p == 3:
        raise UsageError("long-ramakrishna: p = 3 is excluded")
    if statement in ("vanhamme-D2", "long-ramakrishna"):
        used = precision if precision is not None else (
            4 if statement == "vanhamme-D2" else 6
        )
        if padic.gamma_cost(p, used) > HEAVY_GAMMA_FACTORS and not heavy_ok:
            raise UsageError(
                f"{statement}: the Gamma product at p = {p}, precision {used} "
                f"has {padic.gamma_cost(p, used)} factors; pass --heavy-ok to run it"
            )


# ----------------------------------------------------------------------
# Per-statement runners.  Each returns a list of reports with timings.

def _report(statement: str, params: dict, modulus_degree: int, started: float,
            ok: bool) -> VerifyReport:
    elapsed = int((time.perf_counter() - started) * 1000)
    return VerifyReport(
        statement=statement,
        parameters={k: str(v) for k, v in params.items()},
        modulus_degree=modulus_degree,
        ok=bool(ok),
        elapsed_ms=elapsed,
    )


def _sampled_point(statement: str, n: int, rng) -> tuple[ParamPoint, bool]:
    for _ in range(100):
        point = sample_param_point(rng)
        try:
            return point, theorems.verify_chain(statement, n, point)
        except (UndecidableCongruenceError, ModulusCollisionError):
            continue
    raise RuntimeError(f"{statement}: no admissible sample found at n = {n}")


def run_statement(statement: str, value: int, trial: int, rng,
                  precision: int | None = None) -> list[VerifyReport]:
    """Run one (statement, value, trial) unit and report each checked claim."""
    t0 = time.perf_counter()
    if statement == "thm-a":
        lhs, rhs, mod = theorems.thm_a_sides(value)
        ok = congruent_mod(CongruenceClaim(lhs, rhs, mod))
        return [_report(statement, {"n": value}, mod.degree, t0, ok)]
    if statement == "negative-control":
        lhs, rhs, mod = theorems.thm_a_sides(value)
        ok = congruent_mod(
            CongruenceClaim(lhs, rhs + RatFun.q_power(1), mod)
        )
        return [
            _report(statement, {"n": value, "perturbation": "+q"}, mod.degree, t0, ok)
        ]
    if statement == "thm-aa":
        ok = theorems.verify_thm_aa(value)
        deg = theorems.cyclotomic(value).degree * 6
        return [_report(statement, {"n": value}, deg, t0, ok)]
    if statement == "final-reduction":
        ok = theorems.verify_final_reduction(value)
        deg = theorems.cyclotomic(value).degree * 6
        return [_report(statement, {"n": value}, deg, t0, ok)]
    if statement in ("thm-c", "thm-d"):
        verify = theorems.verify_thm_c if statement == "thm-c" else theorems.verify_thm_d
        for _ in range(100):
            a, b = sample_pair(rng)
            try:
                ok = verify(value, a, b)
            except UndecidableCongruenceError:
                continue
            deg = theorems.cyclotomic(value).degree * 2 + 4 * value
            return [
                _report(statement, {"n": value, "trial": trial, "a": a, "b": b},
                        deg, t0, ok)
            ]
        raise RuntimeError(f"{statement}: no admissible sample at n = {value}")
    if statement in theorems.CHAIN_IDS:
        point, ok = _sampled_point(statement, value, rng)
        _, _, mod = theorems.chain_sides(statement, value, point)
        params = {"n": value, "trial": trial, "a": point.a}
        if statement not in ("wei-gg", "wei-hhh"):
            params["b"] = point.b
        if statement not in ("wei-ff", "wei-ggg", "wei-gg", "wei-hhh"):
            params["c"] = point.c
        return [_report(statement, params, mod.degree, t0, ok)]
    if statement == "relations":
        a, b = sample_pair(rng)
        out = []
        for t in (1, 2):
            t0 = time.perf_counter()
            ok = verify_relations(a, b, t, value)
            out.append(
                _report(statement, {"n": value, "trial": trial, "t": t, "a": a, "b": b},
                        2 * t * value, t0, ok)
            )
        return out
    if statement == "lemma-a":
        point = sample_param_point(rng)
        lam_zero = [theorems.base_a_term(value, point, k) for k in range(value)]
        spec = TermSpec.beta(QMonomial.q(value), point.b, point.c)
        lam_pos = [term(spec, k) for k in range(value)]
        out = []
        for t in (2, 3):
            t0 = time.perf_counter()
            ok = theorems.verify_lemma_a(3, t, value, lam_zero) and \
                theorems.verify_lemma_a(3, t, value, lam_pos)
            out.append(
                _report(statement,
                        {"n": value, "trial": trial, "t": t,
                         "a": point.a, "b": point.b, "c": point.c},
                        0, t0, ok)
            )
        return out
    if statement == "lemma-b":
        for _ in range(100):
            point = sample_param_point(rng)
            try:
                ok = verify_lemma22(point, value) and \
                    theorems.verify_crt_recombination(point, value)
            except (UndecidableCongruenceError, ModulusCollisionError):
                continue
            return [
                _report(statement,
                        {"n": value, "trial": trial,
                         "a": point.a, "b": point.b, "c": point.c},
                        5 * value, t0, ok)
            ]
        raise RuntimeError(f"lemma-b: no admissible sample at n = {value}")
    if statement == "base-A":
        point = sample_param_point(rng)
        ok = theorems.verify_base_a(value, point)
        return [
            _report(statement,
                    {"n": value, "trial": trial,
                     "a": point.a, "b": point.b, "c": point.c},
                    0, t0, ok)
        ]
    if statement in ("base-B", "base-C"):
        point = sample_param_point(rng)
        ok = theorems.verify_base_bc(value, point, statement[-1])
        params = {"n": value, "trial": trial, "c": point.c}
        params["b" if statement == "base-B" else "a"] = (
            point.b if statement == "base-B" else point.a
        )
        return [_report(statement, params, 0, t0, ok)]
    if statement in ("limit-2dim", "limit-3dim"):
        dim = 2 if statement == "limit-2dim" else 3
        ok = theorems.verify_limit(dim, value)
        return [_report(statement, {"n": value}, 0, t0, ok)]
    if statement in ("vanhamme-q-partial", "wei-a", "bachraoui-double"):
        lhs, rhs, mod = theorems.prior_sides(statement, value)
        ok = congruent_mod(CongruenceClaim(lhs, rhs, mod))
        return [_report(statement, {"n": value}, mod.degree, t0, ok)]
    if statement == "wei-b":
        out = []
        for m_bound in ((2 * value - 1) // 3, value - 1):
            t0 = time.perf_counter()
            lhs, rhs, mod = theorems.prior_sides(statement, value, m_bound)
            ok = congruent_mod(CongruenceClaim(lhs, rhs, mod))
            out.append(
                _report(statement, {"n": value, "M": m_bound}, mod.degree, t0, ok)
            )
        return out
    # p-axis statements
    if statement == "harmonic":
        ok = padic.verify_harmonic_identity(value)
        return [_report(statement, {"p": value}, 0, t0, ok)]
    if statement in ("cor-a", "cor-aa"):
        ok = padic.verify_cor(statement, value)
        return [_report(statement, {"p": value, "precision": 6}, 0, t0, ok)]
    if statement in ("vanhamme-D2", "long-ramakrishna"):
        used = precision if precision is not None else (
            4 if statement == "vanhamme-D2" else 6
        )
        ok = padic.verify_classical(statement, value, used)
        return [_report(statement, {"p": value, "precision": used}, 0, t0, ok)]
    raise UsageError(f"unknown statement {statement!r}")


# ----------------------------------------------------------------------
# Job expansion and execution.

def _values_for(job: JobSpec) -> tuple[str, tuple[int, ...]]:
    if job.statement in padic.PADIC_IDS:
        values = job.p_list or _SMALL_P[job.statement]
        return "p", values
    values = job.n_list or _SMALL_N.get(job.statement, (4,))
    return "n", values


def validate_job(job: JobSpec) -> None:
    if job.statement not in ALL_IDS + EXTRA_IDS:
        raise UsageError(f"unknown statement {job.statement!r}")
    axis, values = _values_for(job)
    for v in values:
        if axis == "n":
            _validate_n(job.statement, v)
        else:
            _validate_p(job.statement, v, job.precision, job.heavy_ok)


def _unit_count(job: JobSpec) -> int:
    trials = job.trials if job.statement in _RANDOMIZED else 1
    return trials


def _run_unit(payload) -> list[VerifyReport]:
    statement, value, trial, seed, precision = payload
    rng = random.Random(f"{seed}:{statement}:{value}:{trial}")
    return run_statement(statement, value, trial, rng, precision)


def run(job: JobSpec) -> list[VerifyReport]:
    """Execute one JobSpec; deterministic given the seed."""
    validate_job(job)
    _, values = _values_for(job)
    units = [
        (job.statement, value, trial, job.seed, job.precision)
        for value in values
        for trial in range(_unit_count(job))
    ]
    workers = int(os.environ.get(WORKERS_ENV, "1") or "1")
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_unit, units))
    else:
        chunks = [_run_unit(u) for u in units]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=_report_key)
    return reports


def _report_key(report: VerifyReport):
    def item_key(pair):
        key, value = pair
        try:
            return (key, 0, int(value), "")
        except ValueError:
            return (key, 1, 0, value)

    return (report.statement, sorted(item_key(p) for p in report.parameters.items()))


def small_suite_jobs(seed: int, small: bool = True) -> list[JobSpec]:
    """One JobSpec per statement id; --small uses the cheapest sizes."""
    jobs = []
    for statement in ALL_IDS:
        if statement in padic.PADIC_IDS:
            values = _SMALL_P[statement] if small else _FULL_P[statement]
            jobs.append(JobSpec(statement=statement, p_list=values, seed=seed))
        else:
            values = _SMALL_N[statement] if small else _FULL_N[statement]
            trials = 1 if small else _FULL_TRIALS.get(statement, 1)
            jobs.append(
                JobSpec(statement=statement, n_list=values, trials=trials, seed=seed)
            )
    return jobs


def emit_report(reports, fmt: str = "text") -> str:
    """Render reports; text is one line per report, json a flat array."""
    if fmt == "text":
        lines = []
        for r in reports:
            params = ",".join(f"{k}={v}" for k, v in sorted(r.parameters.items()))
            lines.append(
                f"{r.statement} {params or '-'} "
                f"{'ok' if r.ok else 'FAIL'} {r.elapsed_ms}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [
            {
                "statement": r.statement,
                "parameters": dict(sorted(r.parameters.items())),
                "modulus_degree": r.modulus_degree,
                "ok": r.ok,
                "elapsed_ms": r.elapsed_ms,
            }
            for r in reports
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# ----------------------------------------------------------------------
# Argument parsing.

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcong",
        description="Exact verification of q-supercongruences for "
        "multidimensional basic hypergeometric sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="verify one statement or all of them")
    verify.add_argument(
        "statement",
        help="statement id, or 'all' for the whole suite "
        f"(ids: {', '.join(ALL_IDS + EXTRA_IDS)})",
    )
    verify.add_argument("--n", help="comma-separated list of sizes n")
    verify.add_argument("--p", help="comma-separated list of primes p")
    verify.add_argument("--trials", type=int, default=1, help="seeded trials per size")
    verify.add_argument("--seed", type=int, default=0, help="master seed")
    verify.add_argument("--precision", type=int, help="p-adic precision override")
    verify.add_argument(
        "--heavy-ok", action="store_true",
        help="allow Gamma products with more than a million factors",
    )
    verify.add_argument("--small", action="store_true",
                        help="with 'all': cheapest admissible sizes")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", help="write the report here instead of stdout")
    return parser


def _parse_int_list(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.statement == "all":
            jobs = small_suite_jobs(args.seed, small=args.small)
        else:
            jobs = [
                JobSpec(
                    statement=args.statement,
                    n_list=_parse_int_list(args.n),
                    p_list=_parse_int_list(args.p),
                    trials=args.trials,
                    seed=args.seed,
                    precision=args.precision,
                    heavy_ok=args.heavy_ok,
                )
            ]
        for job in jobs:
            validate_job(job)
        reports = []
        for job in jobs:
            reports.extend(run(job))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rendered = emit_report(reports, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
