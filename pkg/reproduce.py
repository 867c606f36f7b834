import argparse
import logging
import time
from math import isqrt

import numpy as np
import pandas as pd

import analytic
import construct
import counting
import directories
import search
from configs import settings
from core import Budget, Colouring, count_solutions, enumerate_solutions, verify_colouring
from main import configure_logging

logger = logging.getLogger("reproduce")


def construction_sweep() -> pd.DataFrame:
    rows = []
    for k in range(2, 7):
        started = time.monotonic()
        colouring = construct.construct_lower_bound(k)
        verdict = verify_colouring(colouring)
        brute = None
        if k <= 4:
            brute = verify_colouring(colouring.to_explicit()).clean
        rows.append(
            {
                "k": k,
                "n_bits": colouring.n.bit_length(),
                "clean": verdict.clean,
                "explicit_clean": brute,
                "seconds": time.monotonic() - started,
            }
        )
    return pd.DataFrame(rows)


def small_s_values(budget: Budget) -> pd.DataFrame:
    rows = []
    for k in (1, 2):
        value = search.compute_S(k, budget=budget)
        rows.append(
            {
                "k": k,
                "value": value.value,
                "exact": value.exact,
                "nodes": value.nodes_explored,
                "seconds": value.seconds,
            }
        )
    return pd.DataFrame(rows)


def oracle_agreement(max_n: int = 40) -> pd.DataFrame:
    rows = []
    for k in (1, 2):
        for n in range(1, max_n + 1):
            backtrack = search.feasible(k, n, budget=Budget.unlimited())
            dpll = search.feasible_via_cnf(k, n, engine="dpll", budget=Budget.unlimited())
            rows.append(
                {
                    "k": k,
                    "n": n,
                    "backtrack": backtrack.status.value,
                    "dpll": dpll.status.value,
                    "agree": search.cnf.agrees([backtrack, dpll]),
                }
            )
    return pd.DataFrame(rows)


def counting_identities(rng: np.random.Generator) -> pd.DataFrame:
    rows = []
    for n in range(1, 501):
        rows.append(
            {
                "check": "closed-form",
                "n": n,
                "ok": len(enumerate_solutions(n)) == count_solutions(n),
            }
        )
    for n in (50, 100, 200):
        triples = np.asarray(enumerate_solutions(n), dtype=np.int64).reshape(-1, 3)
        for _ in range(100):
            colours = rng.integers(0, 3, size=n)
            colouring = Colouring.explicit(colours.tolist(), k=3)
            counts = counting.count_per_class(colouring)
            table = colouring.as_array()
            mono = (table[triples[:, 0]] == table[triples[:, 1]]) & (
                table[triples[:, 1]] == table[triples[:, 2]]
            )
            brute = np.bincount(table[triples[mono, 0]], minlength=3).tolist()
            rows.append(
                {
                    "check": "per-class",
                    "n": n,
                    "ok": counts.per_class == brute
                    and sum(counts.per_class) + counts.cross == len(triples),
                }
            )
    return pd.DataFrame(rows)


def extremal_agreement(max_n: int = 40) -> pd.DataFrame:
    rows = []
    for n in range(1, max_n + 1):
        bnb = counting.fs_extremal(n, budget=Budget.unlimited(), method="branch-and-bound")
        dp = counting.fs_extremal(n, budget=Budget.unlimited(), method="dp")
        rows.append(
            {
                "n": n,
                "branch_and_bound": bnb.size,
                "dp": dp.size,
                "agree": bnb.size == dp.size,
                "witness_ok": counting.is_square_difference_free(bnb.witness)
                and counting.is_square_difference_free(dp.witness),
            }
        )
    return pd.DataFrame(rows)


def weyl_envelopes() -> pd.DataFrame:
    reports = []
    for n_prime in (10**3, 10**4):
        report = analytic.weyl_envelope_report(n_prime, M=settings.weyl_grid_size)
        report.insert(0, "n_prime", n_prime)
        reports.append(report)
    return pd.concat(reports, ignore_index=True)


def parseval_corpus(rng: np.random.Generator, instances: int = 1000) -> pd.DataFrame:
    rows = []
    for _ in range(instances):
        N = int(rng.integers(1, 2049))
        size = int(rng.integers(0, N + 1))
        members = rng.choice(np.arange(1, N + 1), size=size, replace=False)
        f = analytic.BalancedIndicator(members.tolist(), N)
        M = analytic.fourier.power_of_two_at_least(2 * N)
        lhs, rhs = analytic.parseval_check(f, M)
        discrepancy = analytic.fourier.relative_discrepancy(lhs, rhs)
        rows.append({"N": N, "size": size, "M": M, "lhs": lhs, "rhs": rhs, "rel": discrepancy})
    return pd.DataFrame(rows)


def arc_kernel(q_max: int = 5, M: int = 4096) -> pd.DataFrame:
    reports = []
    for Q in (10, 30):
        rates = analytic.arc_kernel_rates(analytic.arc_kernel_report(q_max, Q, M, half_length=Q))
        rates.insert(0, "Q", Q)
        reports.append(rates)
    return pd.concat(reports, ignore_index=True)


def square_difference_corpus(rng: np.random.Generator) -> list:
    """Construction classes, congruence classes and random dense sets, as (family, N, A)."""
    corpus = []
    for k in (4, 5):
        colouring = construct.construct_lower_bound(k)
        for colour in range(k):
            members = [v for lo, hi in colouring.class_runs(colour) for v in range(lo, hi + 1)]
            corpus.append((f"construction-k{k}-class{colour}", colouring.n, members))
    for N in (1000, 10000):
        for modulus in (2, 3, 5, 7):
            for residue in range(modulus):
                members = [x for x in range(1, N + 1) if x % modulus == residue]
                corpus.append((f"congruence-{residue}-mod-{modulus}", N, members))
    for _ in range(50):
        N = int(rng.integers(500, 20001))
        density = float(rng.uniform(0.1, 0.9))
        members = (np.flatnonzero(rng.random(N) < density) + 1).tolist()
        corpus.append(("random", N, members))
    return corpus


def square_difference_witnesses(rng: np.random.Generator, r_max: int = 20) -> pd.DataFrame:
    return counting.corollary_report(square_difference_corpus(rng), r_max)


def increment_corpus(rng: np.random.Generator) -> pd.DataFrame:
    """Intervals, congruence classes, random sets and Bohr-like sets, 50 of each."""
    corpus = []
    for _ in range(50):
        N = int(rng.integers(100, 2001))
        lo = int(rng.integers(1, N // 2))
        corpus.append(("interval", N, list(range(lo, N + 1))))
        modulus = int(rng.integers(2, 8))
        residue = int(rng.integers(0, modulus))
        members = [x for x in range(1, N + 1) if x % modulus == residue]
        corpus.append(("congruence", N, members))
        density = float(rng.uniform(0.05, 0.9))
        corpus.append(("random", N, np.flatnonzero(rng.random(N) < density) + 1))
        theta, width = float(rng.uniform(0, 1)), float(rng.uniform(0.05, 0.3))
        xs = np.arange(1, N + 1)
        distance = np.abs(((xs * theta) + 0.5) % 1 - 0.5)
        corpus.append(("bohr", N, xs[distance < width]))

    rows = []
    for family, N, members in corpus:
        members = [int(m) for m in members]
        if not members:
            continue
        alpha = len(members) / N
        n_prime = max(1, isqrt(N))
        outcome = analytic.increment_search(members, N, n_prime, q0=8)
        rows.append(
            {
                "family": family,
                "N": N,
                "alpha": alpha,
                "n_prime": n_prime,
                "branch": outcome.branch.value,
            }
        )
    report = pd.DataFrame(rows)
    flagged = (report["branch"] == analytic.Branch.NO_BRANCH.value).mean()
    logger.info(f"increment corpus: no-branch rate {flagged:.3%} over {len(report)} instances")
    return report


def traces() -> pd.DataFrame:
    rows = []
    for k in (2, 3, 4):
        trace = analytic.iteration_trace(construct.construct_lower_bound(k).to_explicit())
        again = analytic.iteration_trace(construct.construct_lower_bound(k).to_explicit())
        for stage in trace.stages:
            record = {"k": k, "reason": trace.reason, "reproducible": trace == again}
            rows.append({**record, **stage.model_dump()})
    return pd.DataFrame(rows)


def main():
    parser = argparse.ArgumentParser(description="Replays the acceptance experiments into CSVs.")
    parser.add_argument("--budget-seconds", type=float, default=settings.budget_seconds)
    parser.add_argument("--seed", type=int, default=settings.seed)
    args = parser.parse_args()

    configure_logging()
    rng = np.random.default_rng(args.seed)
    directories.reports.mkdir(parents=True, exist_ok=True)

    experiments = {
        "construction": construction_sweep,
        "s_values": lambda: small_s_values(Budget(seconds=args.budget_seconds)),
        "oracle_agreement": oracle_agreement,
        "counting": lambda: counting_identities(rng),
        "extremal": extremal_agreement,
        "weyl_envelope": weyl_envelopes,
        "parseval": lambda: parseval_corpus(rng),
        "arc_kernel": arc_kernel,
        "square_differences": lambda: square_difference_witnesses(rng),
        "increment": lambda: increment_corpus(rng),
        "traces": traces,
    }
    for name, experiment in experiments.items():
        started = time.monotonic()
        report = experiment()
        path = directories.reports.joinpath(f"{name}.csv")
        report.to_csv(path, index=False)
        logger.info(f"{name}: {len(report)} rows in {time.monotonic() - started:.1f}s -> {path}")


if __name__ == "__main__":
    main()
