"""Compositions, coarsenings, and permutation combinatorics.

Conventions: a composition is a tuple of positive ints (a "weak" composition
may contain zeros or negatives where noted). Positions in subsets are 1-based
and refer to the gaps between adjacent parts, so S is a subset of
{1, ..., len(alpha) - 1}.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator


def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all compositions of n in lexicographic order. n = 0 yields ()."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def is_partition(seq: Iterable[int]) -> bool:
    """True if seq is weakly decreasing with all parts positive (or empty)."""
    seq = tuple(seq)
    return all(p > 0 for p in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )


def sort_to_partition(seq: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(seq, reverse=True))


def pad(seq: Iterable[int], length: int, fill: int = 0) -> tuple[int, ...]:
    seq = tuple(seq)
    if len(seq) > length:
        raise ValueError(f"sequence longer than target length {length}: {seq}")
    return seq + (fill,) * (length - len(seq))


def coarsen(alpha: tuple[int, ...], subset: Iterable[int]) -> tuple[int, ...]:
    """Merge adjacent parts of alpha across the gaps listed in subset.

    Gap i (1-based) sits between alpha[i-1] and alpha[i]; including it in
    the subset fuses those two parts into their sum.
    """
    subset = set(subset)
    if not subset <= set(range(1, len(alpha))):
        raise ValueError(f"subset {sorted(subset)} not within gaps of {alpha}")
    out = []
    acc = 0
    for i, part in enumerate(alpha, start=1):
        acc += part
        if i == len(alpha) or i not in subset:
            out.append(acc)
            acc = 0
    return tuple(out)


def coarsenings(alpha: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], frozenset[int]]]:
    """Yield (coarsening, subset) over all 2^(len-1) gap subsets."""
    gaps = tuple(range(1, len(alpha)))
    for r in range(len(gaps) + 1):
        for subset in combinations(gaps, r):
            yield coarsen(alpha, subset), frozenset(subset)


def refines(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """True if beta is a coarsening of alpha (alpha refines beta)."""
    if sum(alpha) != sum(beta):
        return False
    j = 0
    acc = 0
    for part in alpha:
        if j >= len(beta):
            return False
        acc += part
        if acc == beta[j]:
            j += 1
            acc = 0
        elif acc > beta[j]:
            return False
    return j == len(beta) and acc == 0


def flatten(delta: Iterable[int]) -> tuple[int, ...]:
    """Remove zero entries, keeping order. Entries must be nonnegative."""
    out = []
    for d in delta:
        if d < 0:
            raise ValueError(f"cannot flatten sequence with negative entry: {d}")
        if d > 0:
            out.append(d)
    return tuple(out)


def allowable_flat_subsets(
    delta: tuple[int, ...], target: tuple[int, ...]
) -> list[frozenset[int]]:
    """Gap subsets S of delta with flatten(coarsen(delta, S)) == target.

    Only subsets containing every forced gap are considered: a zero entry
    delta[i] forces gap i so that the zero is absorbed into the part on
    its left. The first entry must be positive so every zero has a left
    neighbor to merge into.
    """
    if any(d < 0 for d in delta):
        raise ValueError("delta must be nonnegative")
    if delta and delta[0] == 0:
        raise ValueError("first entry of delta must be positive")
    k = len(delta)
    forced = {i for i in range(1, k) if delta[i] == 0}
    free = [g for g in range(1, k) if g not in forced]
    hits = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            subset = forced | set(extra)
            if flatten(coarsen(delta, subset)) == target:
                hits.append(frozenset(subset))
    return hits


def lehmer_code(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Inversion table: entry i counts later values smaller than sigma[i]."""
    return tuple(
        sum(1 for j in range(i + 1, len(sigma)) if sigma[j] < sigma[i])
        for i in range(len(sigma))
    )


def permutation_sign(sigma: tuple[int, ...]) -> int:
    return -1 if sum(lehmer_code(sigma)) % 2 else 1


def linear_permutations(k: int, m: int) -> Iterator[tuple[int, ...]]:
    """Ordered m-arrangements of {1, ..., k}."""
    if not 0 <= m <= k:
        raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    yield from permutations(range(1, k + 1), m)


def linear_sign(pi: tuple[int, ...], k: int) -> int:
    """Sign of the m-arrangement pi of {1, ..., k}.

    Counts inversions within pi plus, for each entry, the unused values it
    exceeds. Restricts to the usual sign when m = k.
    """
    inv = sum(
        1
        for i in range(len(pi))
        for j in range(i + 1, len(pi))
        if pi[i] > pi[j]
    )
    unused = set(range(1, k + 1)) - set(pi)
    skipped = sum(1 for v in pi for q in unused if v > q)
    return -1 if (inv + skipped) % 2 else 1
