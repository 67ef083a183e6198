"""Sequence generators and the bottom-up WTI tree pool.

The pool builder assembles all WTI trees of order k from the trees of
smaller orders: every multiset of child orders is a strictly increasing
sequence summing to k - 1 (children of one vertex must have distinct
subtree orders), and every way of picking concrete child trees is a
cartesian product over the already-built collections.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from .wti import SINGLE_VERTEX, WTITree, join_wti_trees

__all__ = [
    "IncreasingSequence",
    "WTIPool",
    "generate_increasing",
    "cartesian_product",
    "generate_wti_trees",
]

# A strictly increasing tuple of positive integers.
IncreasingSequence = tuple[int, ...]

# Collections of WTI trees indexed by order; entry 0 is an unused placeholder.
WTIPool = list[list[WTITree]]


def generate_increasing(
    alpha: int,
    beta: int,
    gamma: int,
    emit: Callable[[IncreasingSequence], None],
) -> None:
    """Emit every strictly increasing positive sequence summing to alpha.

    Qualifying sequences (s_1 < s_2 < ... < s_q) satisfy sum(s) == alpha,
    s_q <= beta and q <= gamma; they are produced in lexicographic order.
    Emits nothing when no sequence qualifies.
    """
    if alpha < 1 or beta < 1 or gamma < 1:
        raise ValueError("alpha, beta and gamma must all be positive")
    parts: list[int] = []

    def extend(remaining: int, minimum: int, slots: int) -> None:
        if remaining == 0:
            emit(tuple(parts))
            return
        if slots == 0:
            return
        for s in range(minimum, min(beta, remaining) + 1):
            parts.append(s)
            extend(remaining - s, s + 1, slots - 1)
            parts.pop()

    extend(alpha, 1, gamma)


def cartesian_product(
    collections: Sequence[Iterable],
    emit: Callable[[tuple], None],
) -> None:
    """Emit each tuple taking one element per collection.

    Tuples appear in mixed-radix order with the last coordinate varying
    fastest; an empty factor yields no tuples at all.
    """
    for combo in itertools.product(*collections):
        emit(combo)


def generate_wti_trees(n: int, h: int, stats: dict | None = None) -> WTIPool:
    """Build all WTI trees of order <= n with at most h children per vertex.

    Returns a pool where entry k lists the order-k trees; entry 0 is an
    empty placeholder.  Collections are finalized in increasing order of
    k since each order only joins strictly smaller trees.  When ``stats``
    is given, the number of discarded (non-WTI) join attempts is added
    under the key ``"failed_joins"``.
    """
    if n < 1 or h < 1:
        raise ValueError("n and h must be positive")
    pool: WTIPool = [[] for _ in range(n + 1)]
    pool[1].append(SINGLE_VERTEX)
    failed = 0

    for k in range(2, n + 1):
        bucket = pool[k]

        def join_tuple(children: tuple[WTITree, ...]) -> None:
            nonlocal failed
            tree = join_wti_trees(children)
            if tree is not None:
                bucket.append(tree)
            else:
                failed += 1

        def expand_sequence(seq: IncreasingSequence) -> None:
            cartesian_product([pool[s] for s in seq], join_tuple)

        generate_increasing(k - 1, k - 1, h, expand_sequence)

    if stats is not None:
        stats["failed_joins"] = stats.get("failed_joins", 0) + failed
    return pool
