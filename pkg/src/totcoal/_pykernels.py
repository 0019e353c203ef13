"""Pure-Python search kernels.

Every kernel works on a ``reach`` table: ``reach[v]`` is the mask of vertices
that ``v`` dominates (open neighbourhood for total domination, closed
neighbourhood for ordinary domination).  A set ``S`` covers the graph iff the
OR of ``reach[v]`` over ``v in S`` equals the full mask.

``_ckernels.pyx`` mirrors this file line for line; both must return
identical results, including witness order.
"""

from __future__ import annotations

from typing import Sequence


def _suffix_or(reach: Sequence[int], n: int) -> list[int]:
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | reach[i]
    return suffix


def min_cover(reach: Sequence[int], n: int) -> int:
    """Numerically smallest mask among minimum-size covering sets, or -1."""
    full = (1 << n) - 1
    acc = 0
    for v in range(n):
        acc |= reach[v]
    if acc != full:
        return -1
    for size in range(1, n + 1):
        x = (1 << size) - 1
        last = x << (n - size)
        while True:
            cov = 0
            m = x
            while m:
                low = m & -m
                cov |= reach[low.bit_length() - 1]
                m ^= low
            if cov == full:
                return x
            if x == last:
                break
            # next mask with the same popcount (Gosper)
            c = x & -x
            r = x + c
            x = (((r ^ x) >> 2) // c) | r
    return -1


def cover_partition(reach: Sequence[int], n: int, k: int) -> list[int] | None:
    """Assign vertices to ``k`` blocks so that every block covers the graph.

    Returns the block index per vertex (a restricted-growth string) or None.
    """
    if k < 1 or k > n:
        return None
    full = (1 << n) - 1
    suffix = _suffix_or(reach, n)
    blocks = [0] * k
    assign = [0] * n

    def completable(i: int) -> bool:
        rem = suffix[i]
        for j in range(k):
            if blocks[j] | rem != full:
                return False
        return True

    def dfs(i: int, used: int) -> bool:
        if i == n:
            return True
        r = reach[i]
        top = used if used < k else k - 1
        seen_full = False
        for b in range(top + 1):
            old = blocks[b]
            if old == full:
                # all covering blocks are interchangeable for a spare vertex
                if seen_full:
                    continue
                seen_full = True
            nu = used + 1 if b == used else used
            if k - nu > n - i - 1:
                continue
            blocks[b] = old | r
            assign[i] = b
            if completable(i + 1) and dfs(i + 1, nu):
                return True
            blocks[b] = old
        return False

    if not completable(0):
        return None
    return assign[:] if dfs(0, 0) else None


def coalition_search(
    reach: Sequence[int],
    n: int,
    k: int,
    min_dom: int,
    prefix: Sequence[int] = (),
    budget: int = -1,
) -> tuple[list[int] | None, int, bool]:
    """First partition into exactly ``k`` blocks, in restricted-growth order,
    in which every block has a coalition partner.

    A block is *dominating* when its reach is full.  Blocks of size at least
    ``min_dom`` may never be dominating (``min_dom=1`` gives total coalition
    partitions, ``min_dom=2`` lets singleton dominating blocks through for
    ordinary coalition partitions).  A partner of block ``a`` is another
    non-dominating block ``b`` with ``reach(a) | reach(b) == full``.

    Only assignments extending ``prefix`` are explored.  ``budget`` caps the
    number of search nodes visited (negative means unlimited).

    Returns ``(assignment or None, nodes visited, search completed)``.
    """
    if k < 1 or k > n:
        return None, 0, True
    full = (1 << n) - 1
    suffix = _suffix_or(reach, n)
    blocks = [0] * k
    size = [0] * k
    assign = [0] * n
    nodes = 0
    stop = False

    def partnerable(i: int, used: int) -> bool:
        # optimistic: block a could still reach a partner using every
        # unassigned vertex; exact once i == n
        rem = suffix[i]
        spare = used < k
        for a in range(used):
            ra = blocks[a]
            if ra == full:
                continue
            need = full & ~(ra | rem)
            if spare and not need:
                continue
            for b in range(used):
                if b != a:
                    rb = blocks[b]
                    if rb != full and rb & need == need:
                        break
            else:
                return False
        return True

    def dfs(i: int, used: int) -> bool:
        nonlocal nodes, stop
        nodes += 1
        if 0 <= budget < nodes:
            stop = True
            return False
        if i == n:
            return partnerable(n, used)
        r = reach[i]
        rem_after = n - i - 1
        top = used if used < k else k - 1
        for b in range(top + 1):
            nu = used + 1 if b == used else used
            if k - nu > rem_after:
                continue
            old = blocks[b]
            nr = old | r
            if nr == full and size[b] + 1 >= min_dom:
                continue
            blocks[b] = nr
            size[b] += 1
            assign[i] = b
            if partnerable(i + 1, nu) and dfs(i + 1, nu):
                return True
            blocks[b] = old
            size[b] -= 1
            if stop:
                return False
        return False

    used = 0
    for i, b in enumerate(prefix):
        if b > used or b >= k:
            return None, 0, True
        if b == used:
            used += 1
        if k - used > n - i - 1:
            return None, 0, True
        blocks[b] |= reach[i]
        size[b] += 1
        assign[i] = b
        if blocks[b] == full and size[b] >= min_dom:
            return None, 0, True
    if not partnerable(len(prefix), used):
        return None, 0, True
    found = dfs(len(prefix), used)
    return (assign[:] if found else None), nodes, not stop
