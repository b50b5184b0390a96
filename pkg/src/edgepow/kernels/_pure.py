"""Pure-Python maximum matching in general graphs (blossom contraction).

Classic O(V^3) augmenting-path search with blossom shrinking via a base[]
array.  Vertices are 0-based here; callers translate.  This module is the
fallback twin of the compiled kernel in ``_blossom.pyx`` and must stay
behaviorally identical to it.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "pure"


def max_matching(n: int, edges: Sequence[tuple[int, int]]) -> tuple[int, list[int]]:
    """Maximum cardinality matching.

    Returns (size, mate) where mate[v] is v's partner or -1.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)

    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    # greedy seed matching cuts down the number of augmentation phases
    size = 0
    for (u, v) in edges:
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u
            size += 1

    def lowest_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> bool:
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # even-depth vertex reached again: blossom
                    cur_base = lowest_common_base(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur_base, to)
                    mark_path(to, cur_base, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
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
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1 and find_augmenting_path(v):
            size += 1
    return size, match
