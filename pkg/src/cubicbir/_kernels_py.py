"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``."""
from __future__ import annotations

from operator import itemgetter


def group_closure(gens, n: int) -> list[tuple[int, ...]]:
    ident = tuple(range(n))
    if n == 1:
        return [ident]
    getters = [itemgetter(*g) for g in gens]
    seen = {ident}
    order = [ident]
    # the list grows while being iterated: breadth-first by construction
    for p in order:
        for get in getters:
            q = get(p)
            if q not in seen:
                seen.add(q)
                order.append(q)
    return order


def orbit_partition(gens, n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]
