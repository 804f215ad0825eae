# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled permutation-group kernels; must agree with ``_kernels_py`` exactly."""

cdef int MAX_POINTS = 255


def group_closure(gens, int n):
    """All elements of the group generated by ``gens`` (permutations of range(n)).

    Breadth-first from the identity; element order is deterministic.
    """
    if n > MAX_POINTS:
        raise ValueError("at most 255 points supported")
    cdef list gen_bytes = [bytes(bytearray(perm)) for perm in gens]
    cdef Py_ssize_t ng = len(gen_bytes)
    cdef bytes ident = bytes(bytearray(range(n)))
    cdef set seen = {ident}
    cdef list order = [ident]
    cdef Py_ssize_t head = 0
    cdef unsigned char buf[256]
    cdef const unsigned char* p
    cdef const unsigned char* g
    cdef bytes cur, gb, q
    cdef Py_ssize_t k
    cdef int i
    while head < len(order):
        cur = <bytes>order[head]
        p = cur
        head += 1
        for k in range(ng):
            gb = <bytes>gen_bytes[k]
            g = gb
            for i in range(n):
                buf[i] = p[g[i]]
            q = buf[:n]
            if q not in seen:
                seen.add(q)
                order.append(q)
    return [tuple(x) for x in order]


def orbit_partition(gens, int n):
    """Orbits of the action of ``gens`` on range(n), each sorted, ordered by minimum."""
    cdef list parent = list(range(n))
    cdef int i, a, b
    for g in gens:
        for i in range(n):
            a = i
            while parent[a] != a:
                a = parent[a]
            b = g[i]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    cdef dict groups = {}
    for i in range(n):
        a = i
        while parent[a] != a:
            a = parent[a]
        groups.setdefault(a, []).append(i)
    return [groups[k] for k in sorted(groups)]
