"""Two-phase generation of transmission irregular (TI) trees.

A tree is TI when all of its vertices have pairwise distinct
transmissions.  Every TI tree has a canonical rooted form: root at the
unique minimum-transmission vertex, children ordered by increasing
subtree order.  Phase 1 builds the WTI pool up to half the target order
and reports the pool trees that already are canonical TI forms.  Phase 2
constructs the canonical forms of the larger orders directly: for order
k the root's subtrees all have fewer than k/2 vertices, so they come
from the pool, and each admissible multiset of subtree orders is an
increasing sequence over which a cartesian product of pool entries is
scanned.

The phase-2 scan never materializes failing joins.  For a fixed joined
order k, the transmission of any vertex of a candidate differs from the
new root's transmission by an offset that depends only on the subtree
containing it, so each pool tree gets a bitmask of offsets and a
candidate is TI exactly when the chosen masks are pairwise disjoint.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .enumeration import IncreasingSequence, generate_increasing, generate_wti_trees
from .wti import WTITree, join_wti_trees

__all__ = [
    "TICensus",
    "SubtreePool",
    "get_max_degree",
    "is_ti_tree",
    "generate_ti_trees",
    "generate_ti_trees_parallel",
]

# Pool of degree-admissible join components, indexed by order like WTIPool.
SubtreePool = list[list[WTITree]]

TreeCallback = Callable[[WTITree], None]


@dataclass
class TICensus:
    """Per-order counts of emitted TI trees for orders 1..n_max."""

    counts: list[int] = field(default_factory=lambda: [0])

    @classmethod
    def zeros(cls, n_max: int) -> "TICensus":
        return cls([0] * (n_max + 1))

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, order: int) -> int:
        return self.counts[order]

    def items(self) -> Iterable[tuple[int, int]]:
        return ((k, self.counts[k]) for k in range(1, len(self.counts)))

    def total(self) -> int:
        return sum(self.counts)

    def to_dict(self) -> dict[int, int]:
        return dict(self.items())


def get_max_degree(tree: WTITree) -> tuple[int, int]:
    """(maximum vertex degree, number of root children) of a WTI tree."""
    child_count = [0] * tree.order
    for x in range(1, tree.order):
        child_count[tree.parents[x]] += 1
    root_children = child_count[0]
    max_degree = root_children
    for v in range(1, tree.order):
        degree = child_count[v] + 1
        if degree > max_degree:
            max_degree = degree
    return max_degree, root_children


def is_ti_tree(tree: WTITree) -> bool:
    """True iff the tree is a canonical TI form.

    Requires all transmissions across all levels to be pairwise distinct
    with the unique minimum sitting at the root.
    """
    root_value = tree.level_transmissions[0][0]
    seen: set[int] = set()
    for values in tree.level_transmissions:
        for t in values:
            if t < root_value or t in seen:
                return False
            seen.add(t)
    return True


# ----------------------------------------------------------------------
# Phase-2 offset masks
# ----------------------------------------------------------------------


def _offset_mask(tree: WTITree, joined_order: int) -> int | None:
    """Bitmask of root-relative transmissions of ``tree`` under a join.

    When a pool tree of order c becomes a root subtree in a joined tree
    of order ``joined_order``, the transmission of its level-l vertex
    with within-tree value t exceeds the new root's transmission by

        t - root_transmission + (joined_order - 2c) + (joined_order - c) * l

    independently of the sibling subtrees.  Bit o of the mask is set for
    each such offset o.  Returns None when the tree can never take part
    in a TI join of this order: some offset is <= 0 (a vertex would tie
    or undercut the root) or two of its own vertices always collide.
    """
    c = tree.order
    base = joined_order - 2 * c - tree.root_transmission
    step = joined_order - c
    mask = 0
    for level, values in enumerate(tree.level_transmissions):
        shift = base + step * level
        for t in values:
            offset = t + shift
            if offset <= 0:
                return None
            mask |= 1 << offset
    if mask.bit_count() != c:
        return None
    return mask


MaskedPool = list[tuple[int, WTITree]]


def _masked_collection(trees: Sequence[WTITree], joined_order: int) -> MaskedPool:
    out: MaskedPool = []
    for tree in trees:
        mask = _offset_mask(tree, joined_order)
        if mask is not None:
            out.append((mask, tree))
    return out


def _scan_products(
    k: int,
    sequences: Sequence[IncreasingSequence],
    masked: dict[int, MaskedPool],
    func: TreeCallback | None,
) -> int:
    """Count (and optionally emit) the TI joins of order k.

    Candidates are scanned in sequence order, then in mixed-radix tuple
    order with the last coordinate varying fastest, skipping every branch
    whose partial union of masks already collides.
    """
    count = 0
    for seq in sequences:
        pools = [masked[s] for s in seq]
        if not all(pools):
            continue
        last = len(pools) - 1
        chosen = [None] * len(pools)

        def walk(i: int, used: int) -> None:
            nonlocal count
            if i == last:
                for mask, tree in pools[i]:
                    if used & mask:
                        continue
                    count += 1
                    if func is not None:
                        chosen[i] = tree
                        joined = join_wti_trees(chosen)
                        assert joined is not None and is_ti_tree(joined)
                        func(joined)
            else:
                for mask, tree in pools[i]:
                    if used & mask:
                        continue
                    chosen[i] = tree
                    walk(i + 1, used | mask)

        walk(0, 0)
    return count


def _phase2_sequences(k: int, max_children: int) -> list[IncreasingSequence]:
    """Admissible root-subtree order sequences for a TI tree of order k.

    Subtrees of the minimum-transmission root have fewer than k/2
    vertices each, hence the cap of ceil(k/2) - 1 on every part.
    """
    beta = (k - 1) // 2
    if beta < 1:
        return []
    sequences: list[IncreasingSequence] = []
    generate_increasing(k - 1, beta, max_children, sequences.append)
    return sequences


# ----------------------------------------------------------------------
# The driver
# ----------------------------------------------------------------------


def _check_arguments(n: int, m: int | None) -> int:
    if n < 1:
        raise ValueError(f"order bound must be >= 1, got {n}")
    if m is not None and m < 2:
        raise ValueError(f"degree bound must be >= 2, got {m}")
    return n - 1 if m is None else m


def _build_subtree_pools(
    n: int,
    m_eff: int,
    census: TICensus,
    func: TreeCallback | None,
) -> SubtreePool:
    """Phase 1: filter the WTI pool, report small TI trees, keep components.

    Every pool tree with maximum degree <= m_eff survives; survivors that
    are canonical TI forms are reported, and survivors whose root has
    strictly fewer than m_eff children are kept as phase-2 components
    (one more edge will arrive at their root).
    """
    half = max(1, n // 2)
    pool = generate_wti_trees(half, max(1, m_eff))
    subtrees: SubtreePool = [[] for _ in range(half + 1)]
    for k in range(1, half + 1):
        for tree in pool[k]:
            max_degree, root_children = get_max_degree(tree)
            if max_degree > m_eff:
                continue
            if is_ti_tree(tree):
                census.counts[k] += 1
                if func is not None:
                    func(tree)
            if root_children < m_eff:
                subtrees[k].append(tree)
    return subtrees


def generate_ti_trees(
    n: int,
    m: int | None = None,
    func: TreeCallback | None = None,
) -> TICensus:
    """Generate every TI tree of order <= n and maximum degree <= m.

    Each tree is produced exactly once, in canonical representation, and
    passed to ``func`` when given; the returned census counts emitted
    trees per order.  ``m=None`` means unbounded degree.  Trees arrive in
    increasing phase-1 order first, then by order, sequence and tuple for
    phase 2; the whole run is single-threaded and deterministic.
    """
    m_eff = _check_arguments(n, m)
    census = TICensus.zeros(n)
    subtrees = _build_subtree_pools(n, m_eff, census, func)
    for k in range(max(1, n // 2) + 1, n + 1):
        sequences = _phase2_sequences(k, m_eff)
        masked = {s: _masked_collection(subtrees[s], k) for s in {x for q in sequences for x in q}}
        census.counts[k] += _scan_products(k, sequences, masked, func)
    return census


# ----------------------------------------------------------------------
# Parallel execution
# ----------------------------------------------------------------------
#
# Phase 2 splits into independent (k, sequence) tasks that only read the
# subtree pools, so they fan out to worker processes (CPython threads
# would serialize on the interpreter lock).  Results are consumed in
# submission order, which makes a parallel run's output byte-identical
# to the deterministic one.

_WORKER_POOLS: SubtreePool = []
_WORKER_ENCODER: Callable[[WTITree], bytes] | None = None
_WORKER_MASK_CACHE: dict[tuple[int, int], MaskedPool] = {}


def _worker_init(subtrees: SubtreePool, encoder: Callable[[WTITree], bytes] | None) -> None:
    global _WORKER_POOLS, _WORKER_ENCODER
    _WORKER_POOLS = subtrees
    _WORKER_ENCODER = encoder
    _WORKER_MASK_CACHE.clear()


def _worker_task(task: tuple[int, IncreasingSequence]) -> tuple[int, int, list[bytes] | None]:
    k, seq = task
    masked: dict[int, MaskedPool] = {}
    for s in set(seq):
        key = (k, s)
        if key not in _WORKER_MASK_CACHE:
            _WORKER_MASK_CACHE[key] = _masked_collection(_WORKER_POOLS[s], k)
        masked[s] = _WORKER_MASK_CACHE[key]
    lines: list[bytes] | None = None
    if _WORKER_ENCODER is None:
        count = _scan_products(k, [seq], masked, None)
    else:
        encoder = _WORKER_ENCODER
        lines = []
        count = _scan_products(k, [seq], masked, lambda t: lines.append(encoder(t)))
    return k, count, lines


def generate_ti_trees_parallel(
    n: int,
    m: int | None = None,
    *,
    workers: int,
    encoder: Callable[[WTITree], bytes] | None = None,
    write: Callable[[bytes], None] | None = None,
) -> TICensus:
    """Parallel variant of :func:`generate_ti_trees` over worker processes.

    Phase 1 runs in the calling process; each phase-2 (order, sequence)
    pair becomes one task.  When ``encoder`` is given, every emitted tree
    is encoded in the worker and the resulting lines are handed to
    ``write`` in deterministic task order, so the output matches a
    single-threaded run byte for byte.  Counting runs carry no per-tree
    payload at all.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    m_eff = _check_arguments(n, m)
    census = TICensus.zeros(n)

    if encoder is not None and write is not None:

        def phase1_func(tree: WTITree) -> None:
            write(encoder(tree))

    else:
        phase1_func = None

    subtrees = _build_subtree_pools(n, m_eff, census, phase1_func)

    tasks = [
        (k, seq)
        for k in range(max(1, n // 2) + 1, n + 1)
        for seq in _phase2_sequences(k, m_eff)
    ]
    if not tasks:
        return census

    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:  # platform without fork
        ctx = multiprocessing.get_context()
    with ProcessPoolExecutor(
        max_workers=workers,
        mp_context=ctx,
        initializer=_worker_init,
        initargs=(subtrees, encoder),
    ) as executor:
        for k, count, lines in executor.map(_worker_task, tasks):
            census.counts[k] += count
            if lines is not None and write is not None:
                for line in lines:
                    write(line)
    return census
