# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled maximum matching kernel (blossom contraction).

Same algorithm and contract as kernels._pure.max_matching; kept line-for-line
comparable so the two stay easy to diff.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"


def max_matching(int n, edges):
    """Maximum cardinality matching.

    Returns (size, mate) where mate[v] is v's partner or -1.
    """
    cdef int m = len(edges)
    cdef int i, u, v, to, a, b, head, tail, root, cur_base, child, pv, ppv
    cdef int size = 0

    if n == 0:
        return 0, []

    # CSR adjacency
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *adj = <int *> malloc((2 * m if m > 0 else 1) * sizeof(int))
    cdef int *fill = <int *> malloc(n * sizeof(int))
    cdef int *match = <int *> malloc(n * sizeof(int))
    cdef int *parent = <int *> malloc(n * sizeof(int))
    cdef int *base = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef bint *used = <bint *> malloc(n * sizeof(bint))
    cdef bint *blossom = <bint *> malloc(n * sizeof(bint))
    cdef bint *on_path = <bint *> malloc(n * sizeof(bint))
    if (deg == NULL or start == NULL or adj == NULL or fill == NULL
            or match == NULL or parent == NULL or base == NULL
            or queue == NULL or used == NULL or blossom == NULL
            or on_path == NULL):
        free(deg); free(start); free(adj); free(fill); free(match)
        free(parent); free(base); free(queue)
        free(used); free(blossom); free(on_path)
        raise MemoryError()

    try:
        memset(deg, 0, n * sizeof(int))
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        start[0] = 0
        for i in range(n):
            start[i + 1] = start[i] + deg[i]
            fill[i] = start[i]
        for u, v in edges:
            adj[fill[u]] = v
            fill[u] += 1
            adj[fill[v]] = u
            fill[v] += 1

        for i in range(n):
            match[i] = -1
        for u, v in edges:
            if match[u] == -1 and match[v] == -1:
                match[u] = v
                match[v] = u
                size += 1

        for root in range(n):
            if match[root] != -1:
                continue
            # ---- find_augmenting_path(root) ----
            for i in range(n):
                used[i] = 0
                parent[i] = -1
                base[i] = i
            used[root] = 1
            queue[0] = root
            head = 0
            tail = 1
            augmented = False
            while head < tail and not augmented:
                v = queue[head]
                head += 1
                for i in range(start[v], start[v + 1]):
                    to = adj[i]
                    if base[v] == base[to] or match[v] == to:
                        continue
                    if to == root or (match[to] != -1 and parent[match[to]] != -1):
                        # even-depth vertex reached again: blossom
                        # lowest common base of v and to
                        for u in range(n):
                            on_path[u] = 0
                        a = v
                        while True:
                            a = base[a]
                            on_path[a] = 1
                            if match[a] == -1:
                                break
                            a = parent[match[a]]
                        b = to
                        while True:
                            b = base[b]
                            if on_path[b]:
                                cur_base = b
                                break
                            b = parent[match[b]]
                        for u in range(n):
                            blossom[u] = 0
                        # mark_path(v, cur_base, to)
                        a = v
                        child = to
                        while base[a] != cur_base:
                            blossom[base[a]] = 1
                            blossom[base[match[a]]] = 1
                            parent[a] = child
                            child = match[a]
                            a = parent[match[a]]
                        # mark_path(to, cur_base, v)
                        a = to
                        child = v
                        while base[a] != cur_base:
                            blossom[base[a]] = 1
                            blossom[base[match[a]]] = 1
                            parent[a] = child
                            child = match[a]
                            a = parent[match[a]]
                        for u in range(n):
                            if blossom[base[u]]:
                                base[u] = cur_base
                                if not used[u]:
                                    used[u] = 1
                                    queue[tail] = u
                                    tail += 1
                    elif parent[to] == -1:
                        parent[to] = v
                        if match[to] == -1:
                            # augment along root..v, to
                            u = to
                            while u != -1:
                                pv = parent[u]
                                ppv = match[pv]
                                match[u] = pv
                                match[pv] = u
                                u = ppv
                            size += 1
                            augmented = True
                            break
                        used[match[to]] = 1
                        queue[tail] = match[to]
                        tail += 1

        mate = [match[i] for i in range(n)]
        return size, mate
    finally:
        free(deg); free(start); free(adj); free(fill); free(match)
        free(parent); free(base); free(queue)
        free(used); free(blossom); free(on_path)
