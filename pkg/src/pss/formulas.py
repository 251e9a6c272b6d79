"""Closed-form counts, characterizations, image sets, and witness families.

Every function here has a brute-force counterpart in :mod:`pss.enumerator`;
the verification registry pairs them up.  Counts are exact Python ints, so
they stay correct far beyond the brute-force ceiling.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .engine import MapId, s21_closed_form
from .perms import Perm, identity, reverse_identity, valley_runs

CLAIM_IDS = (
    "RED",
    "P3_1",
    "P3_5",
    "L3_3",
    "T3_4",
    "T3_6",
    "L4_1",
    "T4_2",
    "L4_3",
    "T4_4",
    "C5_1_min",
    "C5_1_high",
    "T5_2",
    "L5_3",
    "T5_4",
)


# -- one-pass sortability under the dotted maps ------------------------------


def count_t_sortable_s12(n: int, t: int) -> int:
    """Number of length-n permutations reaching the identity within t passes
    of the base-12 dotted map: n! when n <= t, else t! * (t+1)^(n-t)."""
    if n < 1 or t < 1:
        raise ValueError("n and t must be >= 1")
    if n <= t:
        return factorial(n)
    return factorial(t) * (t + 1) ** (n - t)


def count_t_sortable_s21(n: int) -> int:
    """Under the base-21 dotted map only the singleton ever sorts, for any
    number of passes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1 if n == 1 else 0


# -- the 21 machine: sortable permutations and fixed points ------------------


def is_machine21_sortable(p: Perm) -> bool:
    """A permutation sorts in one pass of the 21 machine iff its valley-run
    reversal is the decreasing permutation."""
    return s21_closed_form(p) == reverse_identity(len(p))


def count_machine21_sortable(n: int) -> int:
    """2^(n-1): one sortable permutation per composition of n into valley
    runs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 ** (n - 1)


def is_machine21_fixed_shape(p: Perm) -> bool:
    """Structural test for fixed points of the 21 machine: every valley run
    increases, and each run's last entry exceeds everything in the previous
    run."""
    segments = valley_runs(p).segments(p)
    for seg in segments:
        if any(seg[i] >= seg[i + 1] for i in range(len(seg) - 1)):
            return False
    for prev, nxt in zip(segments, segments[1:]):
        if nxt[-1] <= max(prev):
            return False
    return True


@lru_cache(maxsize=None)
def count_machine21_fixed_points(n: int) -> int:
    """Fixed points of the 21 machine, by the binomial recurrence
    a_n = sum_{k=0}^{n-2} C(n-2, k) a_k with a_0 = a_1 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return 1
    return sum(comb(n - 2, k) * count_machine21_fixed_points(k) for k in range(n - 1))


# -- highly / minimally sorted under the base-12 map -------------------------


def count_min_sorted_s12(n: int) -> int:
    """Permutations needing the full n-1 passes: (n-1)!."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return factorial(n - 1)


def count_highly_sorted_s12(n: int) -> int:
    """Permutations sorted within n-2 passes: (n-1) * (n-1)!."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return (n - 1) * factorial(n - 1)


def image_s12_power(n: int) -> set[Perm]:
    """Image of S_n after n-2 passes of the base-12 map: the identity and the
    identity with its first two entries swapped."""
    if n < 2:
        raise ValueError("n must be >= 2")
    ident = identity(n)
    return {ident, (2, 1) + ident[2:]}


def machine12_bound(n: int) -> int:
    """Every length-n permutation sorts within floor(n/2) passes of the 12
    machine."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return n // 2


def image_machine12(n: int) -> set[Perm]:
    """Image of S_n after floor(n/2) - 1 passes of the 12 machine: a 2-set
    for even n, a 5-set for odd n."""
    if n < 4:
        raise ValueError("n must be >= 4")
    tail = tuple(range(6, n + 1))
    if n % 2 == 0:
        ident = identity(n)
        return {ident, (2, 1) + ident[2:]}
    heads = [
        (1, 2, 3, 4, 5),
        (1, 3, 2, 4, 5),
        (2, 1, 3, 4, 5),
        (2, 3, 1, 4, 5),
        (3, 1, 2, 4, 5),
    ]
    return {head + tail for head in heads}


# -- witness families for the 12-machine image -------------------------------


def witness_even(n: int) -> Perm:
    """2 4 ... n 1 3 ... (n-1); lands on 2 1 3 ... n after n/2 - 1 machine
    passes."""
    if n < 4 or n % 2:
        raise ValueError("n must be even and >= 4")
    return tuple(range(2, n + 1, 2)) + tuple(range(1, n, 2))


def witness_cycle(n: int) -> Perm:
    """2 3 ... n 1; lands on 2 3 1 4 ... n after floor(n/2) - 1 machine
    passes."""
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and >= 5")
    return tuple(range(2, n + 1)) + (1,)


_PI_SEEDS = {
    (2, 1, 3): ((2,), (1, 3)),
    (1, 3, 2): ((1, 3), (2,)),
    (3, 1, 2): ((3,), (1, 2)),
}


def witness_pi(n: int, seed: Perm) -> Perm:
    """Interleaved witness for the odd-image heads 213, 132, 312.

    Starting from the seed's split (tau, sigma), each step appends the last
    entry plus 2 to both halves; the witness is their concatenation and
    reaches seed followed by 4 5 ... n after floor(n/2) - 1 machine passes.
    """
    seed = tuple(seed)
    if seed not in _PI_SEEDS:
        raise ValueError("seed must be one of 213, 132, 312")
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    tau, sigma = _PI_SEEDS[seed]
    for _ in range((n - 3) // 2):
        tau = tau + (tau[-1] + 2,)
        sigma = sigma + (sigma[-1] + 2,)
    return tau + sigma


def witness_pi_target(n: int, seed: Perm) -> Perm:
    """The image the interleaved witness is claimed to reach."""
    return tuple(seed) + tuple(range(4, n + 1))


def machine12_witness_check(family: str, n: int) -> tuple[Perm, Perm, Perm]:
    """Return (witness, claimed image, actual image after the claimed number
    of machine passes) for one witness family."""
    from .engine import iterate  # local import avoids a cycle at module load

    if family == "even":
        w = witness_even(n)
        target = (2, 1) + identity(n)[2:]
        steps = n // 2 - 1
    elif family == "cycle":
        w = witness_cycle(n)
        target = (2, 3, 1) + tuple(range(4, n + 1))
        steps = n // 2 - 1
    elif family in ("pi213", "pi132", "pi312"):
        seed = tuple(int(c) for c in family[2:])
        w = witness_pi(n, seed)
        target = witness_pi_target(n, seed)
        steps = n // 2 - 1
    else:
        raise ValueError(f"unknown witness family {family!r}")
    actual = iterate(MapId.MACHINE12, w, steps)
    return w, target, actual
