"""Compiled GL(N, q) element stream reduced to a cycle-type histogram.

Elements are visited in the same order as ``PermGroupHandle.elements``.
"""

import numpy as np
from numba import njit

MAX_TYPES = 4096


@njit(cache=True)
def _kernel(N, q, add, smul, hi_pos, hi_dig, rest):
    deg = q**N
    types = np.zeros((MAX_TYPES, deg + 1), np.int64)
    counts = np.zeros(MAX_TYPES, np.int64)
    hashes = np.zeros(MAX_TYPES, np.uint64)
    ntypes = 0
    total = 0

    rows = np.zeros(N, np.int64)
    cand = np.zeros(N, np.int64)
    span = np.zeros((N + 1, deg), np.int64)
    inspan = np.zeros((N + 1, deg), np.bool_)
    inspan[0, 0] = True
    perm = np.zeros(deg, np.int64)
    seen = np.zeros(deg, np.bool_)
    m = np.zeros(deg + 1, np.int64)

    depth = 0
    while depth >= 0:
        r = cand[depth]
        if r >= deg:
            depth -= 1
            if depth >= 0:
                cand[depth] += 1
            continue
        if inspan[depth, r]:
            cand[depth] += 1
            continue
        rows[depth] = r
        if depth == N - 1:
            perm[0] = 0
            for x in range(1, deg):
                perm[x] = add[perm[rest[x]], smul[hi_dig[x], rows[hi_pos[x]]]]
            for x in range(deg + 1):
                m[x] = 0
            for x in range(deg):
                seen[x] = False
            for x in range(deg):
                if not seen[x]:
                    length = 0
                    y = x
                    while not seen[y]:
                        seen[y] = True
                        y = perm[y]
                        length += 1
                    m[length] += 1
            h = np.uint64(14695981039346656037)
            for k in range(1, deg + 1):
                h = (h ^ np.uint64(m[k])) * np.uint64(1099511628211)
            slot = -1
            for i in range(ntypes):
                if hashes[i] == h:
                    same = True
                    for k in range(1, deg + 1):
                        if types[i, k] != m[k]:
                            same = False
                            break
                    if same:
                        slot = i
                        break
            if slot < 0:
                if ntypes >= MAX_TYPES:
                    return types[:0], counts[:0], -1
                slot = ntypes
                ntypes += 1
                hashes[slot] = h
                for k in range(deg + 1):
                    types[slot, k] = m[k]
            counts[slot] += 1
            total += 1
            cand[depth] += 1
            continue
        size = 1
        for _ in range(depth):
            size *= q
        for x in range(deg):
            inspan[depth + 1, x] = False
        cnt = 0
        for i in range(size):
            s = span[depth, i]
            for c in range(q):
                v = add[s, smul[c, r]]
                span[depth + 1, cnt] = v
                inspan[depth + 1, v] = True
                cnt += 1
        depth += 1
        cand[depth] = 0
    return types[:ntypes].copy(), counts[:ntypes].copy(), total


def gl_cycle_histogram(N, q, add, smul, hi_pos, hi_dig, rest):
    types, counts, total = _kernel(
        N,
        q,
        np.ascontiguousarray(add),
        np.ascontiguousarray(smul),
        np.ascontiguousarray(hi_pos),
        np.ascontiguousarray(hi_dig),
        np.ascontiguousarray(rest),
    )
    if total < 0:
        raise RuntimeError("too many distinct cycle types for the kernel table")
    return types, counts, total
