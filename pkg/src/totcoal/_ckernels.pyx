# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef enum:
    MAXN = 64


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef inline int lowbit_index(u64 x) nogil:
    return __builtin_ctzll(x)


cdef int load(object reach, int n, u64 *out) except -1:
    cdef int v
    if n < 1 or n > MAXN:
        raise ValueError("n out of range")
    for v in range(n):
        out[v] = <u64>reach[v]
    return 0


cdef u64 min_cover_c(u64 *r, int n, bint *found) nogil:
    cdef u64 full = full_mask(n)
    cdef u64 x, last, cov, m, c, rr
    cdef int size
    for size in range(1, n + 1):
        x = full_mask(size)
        last = x << (n - size)
        while True:
            cov = 0
            m = x
            while m:
                cov |= r[lowbit_index(m)]
                m &= m - 1
            if cov == full:
                found[0] = True
                return x
            if x == last:
                break
            c = x & (~x + 1)
            rr = x + c
            x = (((rr ^ x) >> 2) // c) | rr
    found[0] = False
    return 0


def min_cover(reach, int n):
    cdef u64 r[MAXN]
    cdef u64 acc = 0, best
    cdef bint found = False
    cdef int v
    load(reach, n, r)
    for v in range(n):
        acc |= r[v]
    if acc != full_mask(n):
        return -1
    with nogil:
        best = min_cover_c(r, n, &found)
    return best if found else -1


# ---------------------------------------------------------------- domatic

cdef struct CoverCtx:
    int n
    int k
    u64 full
    u64 reach[MAXN]
    u64 suffix[MAXN + 1]
    u64 blocks[MAXN]
    int assign[MAXN]


cdef inline bint cover_completable(CoverCtx *ctx, int i) nogil:
    cdef u64 rem = ctx.suffix[i]
    cdef int j
    for j in range(ctx.k):
        if (ctx.blocks[j] | rem) != ctx.full:
            return False
    return True


cdef bint cover_dfs(CoverCtx *ctx, int i, int used) nogil:
    cdef int b, nu, top
    cdef u64 old, r
    cdef bint seen_full = False
    if i == ctx.n:
        return True
    r = ctx.reach[i]
    top = used if used < ctx.k else ctx.k - 1
    for b in range(top + 1):
        old = ctx.blocks[b]
        if old == ctx.full:
            if seen_full:
                continue
            seen_full = True
        nu = used + 1 if b == used else used
        if ctx.k - nu > ctx.n - i - 1:
            continue
        ctx.blocks[b] = old | r
        ctx.assign[i] = b
        if cover_completable(ctx, i + 1) and cover_dfs(ctx, i + 1, nu):
            return True
        ctx.blocks[b] = old
    return False


def cover_partition(reach, int n, int k):
    cdef CoverCtx *ctx
    cdef int i
    cdef bint found
    if k < 1 or k > n:
        return None
    ctx = <CoverCtx *>malloc(sizeof(CoverCtx))
    if ctx == NULL:
        raise MemoryError()
    try:
        load(reach, n, ctx.reach)
        ctx.n = n
        ctx.k = k
        ctx.full = full_mask(n)
        ctx.suffix[n] = 0
        for i in range(n - 1, -1, -1):
            ctx.suffix[i] = ctx.suffix[i + 1] | ctx.reach[i]
        for i in range(k):
            ctx.blocks[i] = 0
        if not cover_completable(ctx, 0):
            return None
        with nogil:
            found = cover_dfs(ctx, 0, 0)
        if not found:
            return None
        return [ctx.assign[i] for i in range(n)]
    finally:
        free(ctx)


# -------------------------------------------------------------- coalition

cdef struct CoalCtx:
    int n
    int k
    int min_dom
    u64 full
    long long nodes
    long long budget
    bint stop
    u64 reach[MAXN]
    u64 suffix[MAXN + 1]
    u64 blocks[MAXN]
    int size[MAXN]
    int assign[MAXN]


cdef bint partnerable(CoalCtx *ctx, int i, int used) nogil:
    cdef u64 rem = ctx.suffix[i]
    cdef u64 full = ctx.full
    cdef u64 ra, rb, need
    cdef bint spare = used < ctx.k
    cdef bint ok
    cdef int a, b
    for a in range(used):
        ra = ctx.blocks[a]
        if ra == full:
            continue
        need = full & ~(ra | rem)
        if spare and need == 0:
            continue
        ok = False
        for b in range(used):
            if b != a:
                rb = ctx.blocks[b]
                if rb != full and (rb & need) == need:
                    ok = True
                    break
        if not ok:
            return False
    return True


cdef bint coal_dfs(CoalCtx *ctx, int i, int used) nogil:
    cdef int b, nu, top, rem_after
    cdef u64 old, nr, r
    ctx.nodes += 1
    if ctx.budget >= 0 and ctx.nodes > ctx.budget:
        ctx.stop = True
        return False
    if i == ctx.n:
        return partnerable(ctx, ctx.n, used)
    r = ctx.reach[i]
    rem_after = ctx.n - i - 1
    top = used if used < ctx.k else ctx.k - 1
    for b in range(top + 1):
        nu = used + 1 if b == used else used
        if ctx.k - nu > rem_after:
            continue
        old = ctx.blocks[b]
        nr = old | r
        if nr == ctx.full and ctx.size[b] + 1 >= ctx.min_dom:
            continue
        ctx.blocks[b] = nr
        ctx.size[b] += 1
        ctx.assign[i] = b
        if partnerable(ctx, i + 1, nu) and coal_dfs(ctx, i + 1, nu):
            return True
        ctx.blocks[b] = old
        ctx.size[b] -= 1
        if ctx.stop:
            return False
    return False


def coalition_search(reach, int n, int k, int min_dom, prefix=(), long long budget=-1):
    cdef CoalCtx *ctx
    cdef int i, b, used, plen
    cdef bint found
    if k < 1 or k > n:
        return None, 0, True
    ctx = <CoalCtx *>malloc(sizeof(CoalCtx))
    if ctx == NULL:
        raise MemoryError()
    try:
        load(reach, n, ctx.reach)
        ctx.n = n
        ctx.k = k
        ctx.min_dom = min_dom
        ctx.full = full_mask(n)
        ctx.nodes = 0
        ctx.budget = budget
        ctx.stop = False
        ctx.suffix[n] = 0
        for i in range(n - 1, -1, -1):
            ctx.suffix[i] = ctx.suffix[i + 1] | ctx.reach[i]
        for i in range(k):
            ctx.blocks[i] = 0
            ctx.size[i] = 0
        used = 0
        plen = len(prefix)
        for i in range(plen):
            b = prefix[i]
            if b > used or b >= k:
                return None, 0, True
            if b == used:
                used += 1
            if k - used > n - i - 1:
                return None, 0, True
            ctx.blocks[b] |= ctx.reach[i]
            ctx.size[b] += 1
            ctx.assign[i] = b
            if ctx.blocks[b] == ctx.full and ctx.size[b] >= min_dom:
                return None, 0, True
        if not partnerable(ctx, plen, used):
            return None, 0, True
        with nogil:
            found = coal_dfs(ctx, plen, used)
        assignment = [ctx.assign[i] for i in range(n)] if found else None
        return assignment, ctx.nodes, not ctx.stop
    finally:
        free(ctx)
