"""Exhaustive criterion-versus-oracle sweeps over two-factor modules."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .criteria import (
    NotTwoFactor,
    TensorShape,
    classify_two_factor,
    decide_shape,
    is_tensor_indecomposable,
    table1_inequality,
    inner_product_inequality,
    type_a_normalized_inequality,
    check_an5_all,
    zero_weight_b_direct,
)
from .oracle import tensor_has_zero_weight
from .root_data import LieType, miniscule_weights, supported_types
from .weights import (
    Weight,
    dominates_multiple_fundamental,
    dominance_geq,
    fundamental,
    is_radical,
    is_radical_by_table,
    dual,
)

DEFAULT_TYPES = ("A:1", "A:2", "A:3", "B:2", "B:3", "C:2", "C:3", "D:4", "G:2")
DEFAULT_PRIMES = (2, 3, 5)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass
class SweepConfig:
    types: list[LieType] = field(
        default_factory=lambda: [LieType.parse(s) for s in DEFAULT_TYPES])
    primes: list[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    max_i: int = 2
    include_i0_exceptional: bool = True
    worker_count: int = 1

    def __post_init__(self):
        bad = [p for p in self.primes if not _is_prime(p)]
        if bad:
            raise ValueError(f"not prime: {bad}")
        if self.max_i < 1:
            raise ValueError("max_i must be at least 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")


@dataclass
class SweepResult:
    instances: int = 0
    agreements: int = 0
    skipped: int = 0
    disagreements: list[dict] = field(default_factory=list)

    def merge(self, other: SweepResult) -> None:
        self.instances += other.instances
        self.agreements += other.agreements
        self.skipped += other.skipped
        self.disagreements += other.disagreements

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "agreements": self.agreements,
            "skipped_not_two_factor": self.skipped,
            "disagreements": self.disagreements,
        }


def restricted_weights(t: LieType, p: int, nonzero: bool = True) -> list[Weight]:
    out = [Weight(t, c) for c in itertools.product(range(p), repeat=t.rank)]
    return [w for w in out if not (nonzero and w.is_zero())]


def _candidates_for(t: LieType, p: int, lam0: Weight, max_i: int, include_i0: bool,
                    uppers: list[Weight]):
    if include_i0:
        yield lam0
    for lam1 in uppers:
        for i in range(1, max_i + 1):
            yield lam0 + p ** i * lam1


def _run_chunk(args) -> SweepResult:
    t, p, idx, max_i, include_i0 = args
    uppers = restricted_weights(t, p)
    lam0 = uppers[idx]
    res = SweepResult()
    for lam in _candidates_for(t, p, lam0, max_i, include_i0, uppers):
        try:
            shape = classify_two_factor(t, p, lam)
        except NotTwoFactor:
            res.skipped += 1
            continue
        res.instances += 1
        crit = decide_shape(shape).has_zero_weight
        orc = tensor_has_zero_weight(t, p, *shape.factors())
        if crit == orc:
            res.agreements += 1
        else:
            res.disagreements.append({"shape": shape.to_dict(), "criterion": crit,
                                      "oracle": orc})
    return res


def sweep_jobs(cfg: SweepConfig):
    for t in cfg.types:
        for p in cfg.primes:
            n_restricted = p ** t.rank - 1
            for idx in range(n_restricted):
                yield (t, p, idx, cfg.max_i, cfg.include_i0_exceptional)


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Compare the criterion with the oracle on every shape in the box.

    Work is partitioned by the index of ``lambda0``; merging is order-free,
    so the totals do not depend on ``worker_count``.
    """
    total = SweepResult()
    jobs = list(sweep_jobs(cfg))
    if cfg.worker_count == 1:
        results = map(_run_chunk, jobs)
        for r in results:
            total.merge(r)
    else:
        with ProcessPoolExecutor(cfg.worker_count) as pool:
            for r in pool.map(_run_chunk, jobs, chunksize=16):
                total.merge(r)
    total.disagreements.sort(key=lambda d: repr(d))
    return total


def iter_shapes(t: LieType, p: int, max_i: int = 2, include_i0: bool = True):
    """Every two-factor shape with restricted digits and gap at most ``max_i``."""
    uppers = restricted_weights(t, p)
    for lam0 in uppers:
        for lam in _candidates_for(t, p, lam0, max_i, include_i0, uppers):
            try:
                yield classify_two_factor(t, p, lam)
            except NotTwoFactor:
                continue


# --- table and inequality sub-checks ----------------------------------------

def check_radical_tables(max_rank: int = 5, lo: int = 0, hi: int = 5) -> tuple[int, int]:
    """Exhaustive agreement of the congruence table with integrality."""
    checked = bad = 0
    for t in supported_types(max_rank):
        for c in itertools.product(range(lo, hi + 1), repeat=t.rank):
            w = Weight(t, c)
            checked += 1
            bad += is_radical(w) != is_radical_by_table(w)
    return checked, bad


def check_inequality_table(max_rank: int = 5, max_coeff: int = 4, primes=(2, 3, 5),
                 exponents=(1, 2, 3)) -> tuple[int, int]:
    """Explicit inequality rows against the inner-product form (and its A_n normal form)."""
    checked = bad = 0
    for t in supported_types(max_rank):
        for j in miniscule_weights(t):
            for c in itertools.product(range(max_coeff + 1), repeat=t.rank):
                lam0 = Weight(t, c)
                for p in primes:
                    for i in exponents:
                        ref = inner_product_inequality(t, lam0, j, p, i)
                        got = table1_inequality(t, lam0, j, p, i)
                        checked += 1
                        bad += ref != got
                        if t.family == "A":
                            bad += type_a_normalized_inequality(dual(lam0), j, p ** i) != ref
    return checked, bad


def check_dominates_multiple(max_rank: int = 5, max_coeff: int = 4, max_m: int = 6) -> tuple[int, int]:
    """``dominates_multiple_fundamental`` against the direct dominance test."""
    checked = bad = 0
    for t in supported_types(max_rank):
        fund = [fundamental(t, j) for j in t.nodes()]
        for c in itertools.product(range(max_coeff + 1), repeat=t.rank):
            w = Weight(t, c)
            for j, wj in enumerate(fund, 1):
                for m in range(1, max_m + 1):
                    checked += 1
                    bad += dominates_multiple_fundamental(w, m, j) != dominance_geq(w, m * wj)
    return checked, bad


def check_an5(max_rank: int = 8) -> dict[str, bool]:
    return {str(t): check_an5_all(t) for t in supported_types(max_rank)}


def b_transport_agreement(ranks=(2, 3), max_i: int = 2) -> tuple[int, int]:
    """Direct B_n conditions against the isogeny-transported C_n decision."""
    checked = bad = 0
    for n in ranks:
        t = LieType("B", n)
        for shape in iter_shapes(t, 2, max_i):
            checked += 1
            bad += zero_weight_b_direct(shape) != decide_shape(shape).has_zero_weight
    return checked, bad


def indecomposable_modules(shapes: list[TensorShape]) -> set[tuple[LieType, int, Weight]]:
    """Distinct twisted indecomposable factors ``(t, p, p^s w)`` among ``shapes``."""
    out = set()
    for sh in shapes:
        for s, w in sh.factors():
            if is_tensor_indecomposable(sh.t, sh.p, w):
                out.add((sh.t, sh.p, sh.p ** s * w))
    return out
