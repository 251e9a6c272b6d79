"""Exhaustive sweeps over S_n and claim verification.

Sweeps run over half-open rank ranges, iterated with the lexicographic
successor (unranking happens only at range starts).  Ranges can be handed to
worker processes; partial results merge by sums, unions, and maxima, so the
outcome is identical for any worker count.

``verify`` pairs each registered claim's closed form (from
:mod:`pss.formulas`) with its brute-force counterpart and emits a
:class:`VerificationReport`.
"""

from __future__ import annotations

import math
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import formulas
from .engine import (
    DottedPattern,
    MapId,
    Strategy,
    apply,
    dotted_policy,
    orbit,
    run_pass,
    s12_closed_form,
    s12_simulated,
    s21_closed_form,
    s21_simulated,
    west_pass,
    west_recursive,
)
from .guard import check_guard
from .perms import (
    Perm,
    delete_one,
    format_perm,
    identity,
    ins,
    reverse_identity,
    successor,
    unrank,
)


@dataclass(frozen=True)
class RankRange:
    """Half-open slice [lo, hi) of S_n in lexicographic order."""

    n: int
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi <= math.factorial(self.n):
            raise ValueError(f"invalid rank range [{self.lo}, {self.hi}) for S_{self.n}")


def split_ranges(n: int, parts: int) -> list[RankRange]:
    """Partition [0, n!) into at most ``parts`` contiguous ranges."""
    total = math.factorial(n)
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    ranges = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        ranges.append(RankRange(n, lo, hi))
        lo = hi
    return ranges


def iter_range(r: RankRange) -> Iterator[Perm]:
    p = unrank(r.n, r.lo) if r.lo < r.hi else None
    for _ in range(r.hi - r.lo):
        yield p  # type: ignore[misc]
        p = successor(p)  # type: ignore[arg-type]


def for_each_in_range(r: RankRange, visitor: Callable[[Perm], None]) -> None:
    for p in iter_range(r):
        visitor(p)


# -- single-pass function lookup ---------------------------------------------


def _pass_fn(map_id: MapId, strategy: Optional[Strategy]) -> Callable[[Perm], Perm]:
    closed = strategy is None or Strategy(strategy) is Strategy.CLOSED_FORM
    s12 = s12_closed_form if closed else s12_simulated
    s21 = s21_closed_form if closed else s21_simulated
    return {
        MapId.WEST: west_pass,
        MapId.S12: s12,
        MapId.S21: s21,
        MapId.MACHINE12: lambda p: west_pass(s12(p)),
        MapId.MACHINE21: lambda p: west_pass(s21(p)),
    }[MapId(map_id)]


# -- range workers (top level so they pickle) --------------------------------


def _w_sort_histogram(args) -> tuple[list[int], int]:
    """Bucket minimal sort counts; returns (buckets[0..t_cap], never_sorts)."""
    n, lo, hi, map_value, t_cap, strategy = args
    step = _pass_fn(MapId(map_value), strategy)
    ident = identity(n)
    buckets = [0] * (t_cap + 1)
    stuck = 0
    for p in iter_range(RankRange(n, lo, hi)):
        cur = p
        t = 0
        seen = {p}
        while True:
            if cur == ident:
                buckets[t] += 1
                break
            if t == t_cap:
                stuck += 1
                break
            cur = step(cur)
            t += 1
            if cur in seen:  # cycling without the identity: will never sort
                stuck += 1
                break
            seen.add(cur)
    return buckets, stuck


def _w_exact_sortable(args) -> list[int]:
    """Exact-at-t sortable counts: counts[t] is the number of p in the slice
    with the t-fold image equal to the identity.  Needed for maps that do not
    fix the identity, where sortability is not monotone in t."""
    n, lo, hi, map_value, t_cap, strategy = args
    step = _pass_fn(MapId(map_value), strategy)
    ident = identity(n)
    counts = [0] * (t_cap + 1)
    for p in iter_range(RankRange(n, lo, hi)):
        states = [p]
        index = {p: 0}
        cur = p
        while True:
            cur = step(cur)
            if cur in index or len(states) > t_cap:
                break
            index[cur] = len(states)
            states.append(cur)
        hits = [t for t, s in enumerate(states) if s == ident]
        if cur in index and cur == states[index[cur]]:
            tail, cycle = index[cur], len(states) - index[cur]
            for t0 in hits:
                if t0 >= tail:  # identity lies on the cycle: recurs forever
                    t = t0
                    while t <= t_cap:
                        counts[t] += 1
                        t += cycle
                    hits = [h for h in hits if h < tail]
                    break
        for t0 in hits:
            if t0 <= t_cap:
                counts[t0] += 1
    return counts


def _w_count_pred(args) -> int:
    n, lo, hi, pred_key = args
    pred = _PREDICATES[pred_key]
    return sum(1 for p in iter_range(RankRange(n, lo, hi)) if pred(p))


def _w_collect_pred(args) -> list[Perm]:
    n, lo, hi, pred_key = args
    pred = _PREDICATES[pred_key]
    return [p for p in iter_range(RankRange(n, lo, hi)) if pred(p)]


def _w_image(args) -> set[Perm]:
    n, lo, hi, map_value, k, strategy = args
    step = _pass_fn(MapId(map_value), strategy)
    out: set[Perm] = set()
    for p in iter_range(RankRange(n, lo, hi)):
        for _ in range(k):
            p = step(p)
        out.add(p)
        if len(out) > IMAGE_SET_CAP:
            raise RuntimeError(f"image set exceeds cap of {IMAGE_SET_CAP} elements")
    return out


def _w_max_tail(args) -> int:
    n, lo, hi, map_value = args
    m = MapId(map_value)
    best = 0
    for p in iter_range(RankRange(n, lo, hi)):
        best = max(best, orbit(m, p).tail_length)
    return best


def _w_l33_mismatches(args) -> int:
    """Count p in a slice of S_{n-1} with some insertion i where deleting the
    1 from the sorted insertion does not recover the sorted p."""
    m, lo, hi = args
    bad = 0
    for p in iter_range(RankRange(m, lo, hi)):
        want = s12_closed_form(p)
        if any(
            delete_one(s12_closed_form(ins(p, i))) != want for i in range(1, m + 2)
        ):
            bad += 1
    return bad


def _w_insertion_property(args) -> list[int]:
    """Per t in 1..n-1, failures of: every t-sortable p in S_{n-1} has exactly
    t+1 of its n insertions t-sortable."""
    m, lo, hi, n = args
    fails = [0] * n  # index by t, slot 0 unused
    for p in iter_range(RankRange(m, lo, hi)):
        c0 = _min_sorts_s12(p)
        counts = [_min_sorts_s12(ins(p, i)) for i in range(1, n + 1)]
        for t in range(1, n):
            if c0 <= t and sum(1 for c in counts if c <= t) != t + 1:
                fails[t] += 1
    return fails


def _min_sorts_s12(p: Perm) -> int:
    ident = identity(len(p))
    t = 0
    while p != ident:
        p = s12_closed_form(p)
        t += 1
    return t


def _w_dot_mismatches(args) -> int:
    """Permutations whose pass outputs differ between the two dot placements
    of either base pattern."""
    n, lo, hi = args
    policies = [
        (dotted_policy(DottedPattern(base, 1)), dotted_policy(DottedPattern(base, 2)))
        for base in (12, 21)
    ]
    bad = 0
    for p in iter_range(RankRange(n, lo, hi)):
        for pol1, pol2 in policies:
            if run_pass(p, pol1)[0] != run_pass(p, pol2)[0]:
                bad += 1
                break
    return bad


def _w_random_agreement(args) -> int:
    """Failures of closed-form vs simulated agreement on random permutations;
    lengths are drawn log-uniformly in [1, n_max]."""
    count, n_max, seed = args
    rng = random.Random(seed)
    log_max = math.log(n_max)
    bad = 0
    for _ in range(count):
        n = min(n_max, max(1, int(round(math.exp(rng.uniform(0.0, log_max))))))
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        p = tuple(vals)
        if s12_closed_form(p) != s12_simulated(p):
            bad += 1
        if s21_closed_form(p) != s21_simulated(p):
            bad += 1
    return bad


def _p_m21_sorts(p: Perm) -> bool:
    return west_pass(s21_closed_form(p)) == identity(len(p))


def _p_m12_sorts(p: Perm) -> bool:
    return west_pass(s12_closed_form(p)) == identity(len(p))


def _p_l41_mismatch(p: Perm) -> bool:
    return _p_m21_sorts(p) != (s21_closed_form(p) == reverse_identity(len(p)))


def _p_m21_fixed(p: Perm) -> bool:
    return west_pass(s21_closed_form(p)) == p


def _p_m12_fixed(p: Perm) -> bool:
    return west_pass(s12_closed_form(p)) == p


def _p_l43_mismatch(p: Perm) -> bool:
    return _p_m21_fixed(p) != formulas.is_machine21_fixed_shape(p)


def _p_p31_mismatch(p: Perm) -> bool:
    return s12_closed_form(p) != s12_simulated(p)


def _p_p35_mismatch(p: Perm) -> bool:
    return s21_closed_form(p) != s21_simulated(p)


def _p_west_mismatch(p: Perm) -> bool:
    return west_pass(p) != west_recursive(p)


def _p_largest_not_last(p: Perm) -> bool:
    n = len(p)
    return s12_closed_form(p)[-1] != n or west_pass(p)[-1] != n


def _p_l53_fail(p: Perm) -> bool:
    cur = p
    for _ in range(len(p) // 2):
        cur = west_pass(s12_closed_form(cur))
    return cur != identity(len(p))


_PREDICATES: dict[str, Callable[[Perm], bool]] = {
    "m21_sorts": _p_m21_sorts,
    "m12_sorts": _p_m12_sorts,
    "l41_mismatch": _p_l41_mismatch,
    "m21_fixed": _p_m21_fixed,
    "m12_fixed": _p_m12_fixed,
    "l43_mismatch": _p_l43_mismatch,
    "p31_mismatch": _p_p31_mismatch,
    "p35_mismatch": _p_p35_mismatch,
    "west_mismatch": _p_west_mismatch,
    "largest_not_last": _p_largest_not_last,
    "l53_fail": _p_l53_fail,
}

IMAGE_SET_CAP = 10**6


# -- parallel driver ---------------------------------------------------------


def _run_ranged(worker, n: int, jobs: int, extra: tuple) -> list:
    """Run ``worker`` over a partition of S_n; jobs<=1 stays in-process."""
    ranges = split_ranges(n, max(1, jobs) * 4 if jobs > 1 else 1)
    argv = [(r.n, r.lo, r.hi, *extra) for r in ranges]
    if jobs <= 1 or len(argv) == 1:
        return [worker(a) for a in argv]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(worker, argv)


# -- public brute-force operations -------------------------------------------


def sort_histogram(
    map_id: MapId,
    n: int,
    t_cap: int,
    jobs: int = 1,
    force: bool = False,
    strategy: Optional[Strategy] = None,
) -> tuple[list[int], int]:
    """Minimal-sort-count histogram over S_n: (buckets[0..t_cap], never)."""
    check_guard(n, force)
    parts = _run_ranged(_w_sort_histogram, n, jobs, (map_id.value, t_cap, strategy))
    buckets = [sum(col) for col in zip(*(b for b, _ in parts))]
    return buckets, sum(s for _, s in parts)


def _identity_fixed(map_id: MapId) -> bool:
    return apply(map_id, (1, 2)) == (1, 2)


def exact_sortable_counts(
    map_id: MapId,
    n: int,
    t_cap: int,
    jobs: int = 1,
    force: bool = False,
    strategy: Optional[Strategy] = None,
) -> list[int]:
    """counts[t] = #{p in S_n : t-fold image of p is the identity}."""
    check_guard(n, force)
    parts = _run_ranged(_w_exact_sortable, n, jobs, (MapId(map_id).value, t_cap, strategy))
    return [sum(col) for col in zip(*parts)]


def brute_t_sortable(
    map_id: MapId,
    n: int,
    t: int,
    jobs: int = 1,
    force: bool = False,
    strategy: Optional[Strategy] = None,
) -> int:
    """Count permutations of length n whose t-fold image is the identity.

    For maps that fix the identity this is the usual "sorted within t
    passes"; otherwise the exact t-fold image is tested.
    """
    if _identity_fixed(map_id):
        buckets, _ = sort_histogram(map_id, n, t, jobs, force, strategy)
        return sum(buckets)
    return exact_sortable_counts(map_id, n, t, jobs, force, strategy)[t]


def brute_machine_sortable(
    machine: MapId, n: int, jobs: int = 1, force: bool = False
) -> int:
    check_guard(n, force)
    key = {MapId.MACHINE12: "m12_sorts", MapId.MACHINE21: "m21_sorts"}[MapId(machine)]
    return sum(_run_ranged(_w_count_pred, n, jobs, (key,)))


def brute_fixed_points(
    machine: MapId, n: int, collect: bool = False, jobs: int = 1, force: bool = False
) -> tuple[int, Optional[list[Perm]]]:
    check_guard(n, force)
    key = {MapId.MACHINE12: "m12_fixed", MapId.MACHINE21: "m21_fixed"}[MapId(machine)]
    if collect:
        parts = _run_ranged(_w_collect_pred, n, jobs, (key,))
        found = [p for part in parts for p in part]
        return len(found), found
    return sum(_run_ranged(_w_count_pred, n, jobs, (key,))), None


def brute_image(
    map_id: MapId,
    n: int,
    k: int,
    jobs: int = 1,
    force: bool = False,
    strategy: Optional[Strategy] = None,
) -> set[Perm]:
    """{k-fold image of p : p in S_n} as a set."""
    check_guard(n, force)
    parts = _run_ranged(_w_image, n, jobs, (MapId(map_id).value, k, strategy))
    return set().union(*parts)


def brute_ord(map_id: MapId, n: int, jobs: int = 1, force: bool = False) -> int:
    """Largest orbit tail over S_n, computed exhaustively."""
    check_guard(n, force)
    return max(_run_ranged(_w_max_tail, n, jobs, (MapId(map_id).value,)))


def insertion_positions_property(n: int, t: int, force: bool = False) -> bool:
    """True iff every t-sortable p in S_{n-1} has exactly t+1 of its n
    insertions t-sortable under the base-12 map."""
    if not 1 <= t < n:
        raise ValueError("need 1 <= t < n")
    check_guard(n, force)
    fails = _w_insertion_property((n - 1, 0, math.factorial(n - 1), n))
    return fails[t] == 0


def random_agreement_failures(
    count: int, n_max: int, seed: int = 0, jobs: int = 1
) -> int:
    """Closed-form vs simulated disagreements over ``count`` random
    permutations of log-uniform length up to ``n_max``."""
    chunks = max(1, jobs)
    per = [count // chunks + (1 if i < count % chunks else 0) for i in range(chunks)]
    argv = [(c, n_max, seed + i) for i, c in enumerate(per) if c]
    if jobs <= 1 or len(argv) == 1:
        return sum(_w_random_agreement(a) for a in argv)
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return sum(pool.map(_w_random_agreement, argv))


# -- claim verification ------------------------------------------------------


@dataclass(frozen=True)
class Row:
    n: int
    param: str
    expected: str
    observed: str
    passed: bool


@dataclass
class VerificationReport:
    claim: str
    n_min: int
    n_max: int
    rows: list[Row] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def overall_pass(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self) -> dict:
        """JSON document; deliberately excludes elapsed so output is
        byte-identical across worker counts."""
        return {
            "claim": self.claim,
            "params": {"n_min": self.n_min, "n_max": self.n_max},
            "rows": [
                {
                    "n": r.n,
                    "param": r.param,
                    "expected": r.expected,
                    "observed": r.observed,
                    "pass": r.passed,
                }
                for r in self.rows
            ],
            "overall_pass": self.overall_pass,
        }


def _perm_set_str(ps: set[Perm]) -> str:
    return " | ".join(format_perm(p) for p in sorted(ps))


def _count_row(n: int, param: str, expected: int, observed: int) -> Row:
    return Row(n, param, str(expected), str(observed), expected == observed)


def _zero_row(n: int, param: str, observed: int) -> Row:
    return Row(n, param, "0", str(observed), observed == 0)


def _set_row(n: int, param: str, expected: set[Perm], observed: set[Perm]) -> Row:
    return Row(n, param, _perm_set_str(expected), _perm_set_str(observed), expected == observed)


def _rows_red(n, jobs, force):
    check_guard(n, force)
    bad = sum(_run_ranged(_w_dot_mismatches, n, jobs, ()))
    return [_zero_row(n, "dot-variant mismatches", bad)]


def _rows_p31(n, jobs, force):
    check_guard(n, force)
    return [_zero_row(n, "closed vs simulated mismatches",
                      sum(_run_ranged(_w_count_pred, n, jobs, ("p31_mismatch",))))]


def _rows_p35(n, jobs, force):
    check_guard(n, force)
    return [_zero_row(n, "closed vs simulated mismatches",
                      sum(_run_ranged(_w_count_pred, n, jobs, ("p35_mismatch",))))]


def _rows_l33(n, jobs, force):
    check_guard(n, force)
    bad = sum(_run_ranged(_w_l33_mismatches, n - 1, jobs, ()))
    return [_zero_row(n, "insertion commutation failures", bad)]


def _rows_t34(n, jobs, force):
    buckets, _ = sort_histogram(MapId.S12, n, n, jobs, force)
    rows = []
    cum = 0
    by_t = list(buckets)
    for t in range(1, n + 1):
        cum = sum(by_t[: t + 1])
        rows.append(_count_row(n, f"t={t}", formulas.count_t_sortable_s12(n, t), cum))
    return rows


def _rows_t36(n, jobs, force):
    counts = exact_sortable_counts(MapId.S21, n, 2 * n, jobs, force)
    expected = formulas.count_t_sortable_s21(n)
    return [
        _count_row(n, f"t={t}", expected, counts[t]) for t in range(1, 2 * n + 1)
    ]


def _rows_l41(n, jobs, force):
    check_guard(n, force)
    return [_zero_row(n, "characterization mismatches",
                      sum(_run_ranged(_w_count_pred, n, jobs, ("l41_mismatch",))))]


def _rows_t42(n, jobs, force):
    observed = brute_machine_sortable(MapId.MACHINE21, n, jobs, force)
    return [_count_row(n, "machine-sortable", formulas.count_machine21_sortable(n), observed)]


def _rows_l43(n, jobs, force):
    check_guard(n, force)
    return [_zero_row(n, "shape-predicate mismatches",
                      sum(_run_ranged(_w_count_pred, n, jobs, ("l43_mismatch",))))]


def _rows_t44(n, jobs, force):
    observed, _ = brute_fixed_points(MapId.MACHINE21, n, False, jobs, force)
    return [_count_row(n, "fixed points", formulas.count_machine21_fixed_points(n), observed)]


def _rows_c51_min(n, jobs, force):
    buckets, _ = sort_histogram(MapId.S12, n, n, jobs, force)
    rows = [_count_row(n, "exactly n-1 sorts", formulas.count_min_sorted_s12(n), buckets[n - 1])]
    rows.append(_count_row(n, "ord", n - 1, brute_ord(MapId.S12, n, jobs, force)))
    return rows


def _rows_c51_high(n, jobs, force):
    buckets, _ = sort_histogram(MapId.S12, n, n, jobs, force)
    observed = sum(buckets[: n - 1])
    return [_count_row(n, "within n-2 sorts", formulas.count_highly_sorted_s12(n), observed)]


def _rows_t52(n, jobs, force):
    observed = brute_image(MapId.S12, n, n - 2, jobs, force)
    return [_set_row(n, f"power={n - 2}", formulas.image_s12_power(n), observed)]


def _rows_l53(n, jobs, force):
    check_guard(n, force)
    bad = sum(_run_ranged(_w_count_pred, n, jobs, ("l53_fail",)))
    return [_zero_row(n, f"not sorted within {n // 2} machine passes", bad)]


def _rows_t54(n, jobs, force):
    k = n // 2 - 1
    rows = [_set_row(n, f"power={k}", formulas.image_machine12(n),
                     brute_image(MapId.MACHINE12, n, k, jobs, force))]
    families = ["even"] if n % 2 == 0 else ["cycle", "pi213", "pi132", "pi312"]
    for fam in families:
        _, target, actual = formulas.machine12_witness_check(fam, n)
        rows.append(Row(n, f"witness {fam}", format_perm(target), format_perm(actual),
                        target == actual))
    return rows


# claim -> (row builder over one n, inclusive domain (lo, hi or None))
_CLAIMS: dict[str, tuple[Callable, tuple[int, Optional[int]]]] = {
    "RED": (_rows_red, (1, None)),
    "P3_1": (_rows_p31, (1, None)),
    "P3_5": (_rows_p35, (1, None)),
    "L3_3": (_rows_l33, (2, None)),
    "T3_4": (_rows_t34, (1, None)),
    "T3_6": (_rows_t36, (1, None)),
    "L4_1": (_rows_l41, (1, None)),
    "T4_2": (_rows_t42, (1, None)),
    "L4_3": (_rows_l43, (1, None)),
    "T4_4": (_rows_t44, (1, None)),
    "C5_1_min": (_rows_c51_min, (2, None)),
    "C5_1_high": (_rows_c51_high, (2, None)),
    "T5_2": (_rows_t52, (4, None)),
    "L5_3": (_rows_l53, (2, None)),
    "T5_4": (_rows_t54, (4, None)),
}

CLAIM_IDS = tuple(_CLAIMS)


def verify(
    claim: str, n_min: int, n_max: int, jobs: int = 1, force: bool = False
) -> VerificationReport:
    """Compare the closed form of one claim against brute force over a range
    of lengths.  The range is clamped to the claim's valid domain."""
    if claim not in _CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; known: {', '.join(_CLAIMS)}")
    if n_min > n_max:
        raise ValueError("n_min must not exceed n_max")
    check_guard(n_max, force)
    builder, (lo, hi) = _CLAIMS[claim]
    start = time.monotonic()
    report = VerificationReport(claim, n_min, n_max)
    for n in range(max(n_min, lo), (min(n_max, hi) if hi else n_max) + 1):
        report.rows.extend(builder(n, jobs, force))
    report.elapsed = time.monotonic() - start
    return report


def verify_all(
    n_min: int, n_max: int, jobs: int = 1, force: bool = False
) -> list[VerificationReport]:
    return [verify(c, n_min, n_max, jobs, force) for c in CLAIM_IDS]
