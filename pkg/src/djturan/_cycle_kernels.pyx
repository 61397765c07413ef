# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled cycle kernels.

Mirrors _kernels_py exactly: same canonical form (cycles start at their
minimum vertex and run toward its smaller neighbour), same lexicographic
emission order, same truncation semantics.  Inputs are CSR adjacency
arrays of C ints as produced by EdgeSubgraph.csr().
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

cdef int _INF = 1 << 30


def backend_name():
    return "cython"


cdef void _bfs_min(const int[:] indptr, const int[:] nbr, int src, int min_vertex,
                   int* dist, int* queue) noexcept:
    cdef int nv = indptr.shape[0] - 1
    cdef int head = 0, tail = 0, u, x, du
    cdef Py_ssize_t i
    for u in range(nv):
        dist[u] = _INF
    dist[src] = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for i in range(indptr[u], indptr[u + 1]):
            x = nbr[i]
            if x >= min_vertex and dist[x] == _INF:
                dist[x] = du + 1
                queue[tail] = x
                tail += 1


cdef long long _cycle_walk(const int[:] indptr, const int[:] nbr, int length,
                           long long cap, int mode, list out,
                           const int[:] eidx, long long* counts,
                           bint* truncated) except -1:
    """mode 0: count only; 1: collect tuples into out; 2: per-edge counts."""
    cdef int nv = indptr.shape[0] - 1
    cdef long long count = 0
    cdef int s, c, x, depth, d, v, first, last, prev
    cdef Py_ssize_t i, end, j
    cdef int* dist = <int*> malloc(nv * sizeof(int))
    cdef int* queue = <int*> malloc(nv * sizeof(int))
    cdef char* visited = <char*> calloc(nv, 1)
    cdef int* path = <int*> malloc((length + 1) * sizeof(int))
    cdef Py_ssize_t* ptr = <Py_ssize_t*> malloc((length + 2) * sizeof(Py_ssize_t))
    cdef bint moved
    truncated[0] = False
    if dist == NULL or queue == NULL or visited == NULL or path == NULL or ptr == NULL:
        raise MemoryError()
    try:
        for s in range(nv):
            if indptr[s + 1] - indptr[s] < 2:
                continue
            _bfs_min(indptr, nbr, s, s, dist, queue)
            memset(visited, 0, nv)
            visited[s] = 1
            path[0] = s
            depth = 1
            ptr[1] = indptr[s]
            while depth >= 1:
                c = path[depth - 1]
                i = ptr[depth]
                end = indptr[c + 1]
                moved = False
                while i < end:
                    x = nbr[i]
                    i += 1
                    if x <= s or visited[x]:
                        continue
                    if dist[x] > length - depth:
                        continue
                    if depth == length - 1:
                        if path[1] < x:
                            path[length - 1] = x
                            if mode == 1:
                                out.append(tuple([path[d] for d in range(length)]))
                            elif mode == 2:
                                prev = path[0]
                                for d in range(1, length):
                                    v = path[d]
                                    for j in range(indptr[prev], indptr[prev + 1]):
                                        if nbr[j] == v:
                                            counts[eidx[j]] += 1
                                            break
                                    prev = v
                                last = path[length - 1]
                                first = path[0]
                                for j in range(indptr[last], indptr[last + 1]):
                                    if nbr[j] == first:
                                        counts[eidx[j]] += 1
                                        break
                            count += 1
                            if count >= cap:
                                truncated[0] = True
                                return count
                        continue
                    path[depth] = x
                    visited[x] = 1
                    ptr[depth] = i
                    depth += 1
                    ptr[depth] = indptr[x]
                    moved = True
                    break
                if not moved:
                    depth -= 1
                    if depth >= 1:
                        visited[path[depth]] = 0
        return count
    finally:
        free(dist)
        free(queue)
        free(visited)
        free(path)
        free(ptr)


def enumerate_cycles_fixed_length(const int[:] indptr, const int[:] nbr, int length,
                                  long long cap):
    cdef list out = []
    cdef bint truncated = False
    _cycle_walk(indptr, nbr, length, cap, 1, out, indptr, NULL, &truncated)
    return out, bool(truncated)


def count_cycles_fixed_length(const int[:] indptr, const int[:] nbr, int length,
                              long long cap):
    cdef bint truncated = False
    cdef long long count = _cycle_walk(indptr, nbr, length, cap, 0, None, indptr,
                                       NULL, &truncated)
    return count, bool(truncated)


def contains_cycle_fixed_length(const int[:] indptr, const int[:] nbr, int length):
    cdef bint truncated = False
    cdef long long count = _cycle_walk(indptr, nbr, length, 1, 0, None, indptr,
                                       NULL, &truncated)
    return count > 0


def find_cycle_fixed_length(const int[:] indptr, const int[:] nbr, int length):
    cdef list out = []
    cdef bint truncated = False
    _cycle_walk(indptr, nbr, length, 1, 1, out, indptr, NULL, &truncated)
    return out[0] if out else None


def cycle_edge_counts(const int[:] indptr, const int[:] nbr, const int[:] eidx,
                      int n_edges, int length, long long cap):
    cdef long long* counts = <long long*> calloc(n_edges, sizeof(long long))
    cdef bint truncated = False
    cdef long long total
    cdef int e
    if counts == NULL:
        raise MemoryError()
    try:
        total = _cycle_walk(indptr, nbr, length, cap, 2, None, eidx, counts,
                            &truncated)
        return [counts[e] for e in range(n_edges)], total, bool(truncated)
    finally:
        free(counts)


def contains_cycle_through_edge(const int[:] indptr, const int[:] nbr, int u, int w,
                                int length):
    cdef int nv = indptr.shape[0] - 1
    cdef int* dist_u = <int*> malloc(nv * sizeof(int))
    cdef int* queue = <int*> malloc(nv * sizeof(int))
    cdef char* visited = <char*> calloc(nv, 1)
    cdef int steps = length - 2
    cdef int* path = <int*> malloc((steps + 2) * sizeof(int))
    cdef Py_ssize_t* ptr = <Py_ssize_t*> malloc((steps + 3) * sizeof(Py_ssize_t))
    cdef int depth, c, x
    cdef Py_ssize_t i, end
    cdef bint moved
    if dist_u == NULL or queue == NULL or visited == NULL or path == NULL or ptr == NULL:
        raise MemoryError()
    try:
        _bfs_min(indptr, nbr, u, 0, dist_u, queue)
        if dist_u[w] == _INF:
            return False
        visited[u] = 1
        visited[w] = 1
        path[0] = w
        depth = 1
        ptr[1] = indptr[w]
        while depth >= 1:
            c = path[depth - 1]
            i = ptr[depth]
            end = indptr[c + 1]
            moved = False
            while i < end:
                x = nbr[i]
                i += 1
                if visited[x]:
                    continue
                if dist_u[x] > length - 1 - depth:
                    continue
                if depth == steps:
                    return True
                path[depth] = x
                visited[x] = 1
                ptr[depth] = i
                depth += 1
                ptr[depth] = indptr[x]
                moved = True
                break
            if not moved:
                depth -= 1
                if depth >= 1:
                    visited[path[depth]] = 0
        return False
    finally:
        free(dist_u)
        free(queue)
        free(visited)
        free(path)
        free(ptr)


def girth_bfs(const int[:] indptr, const int[:] nbr, int floor):
    cdef int nv = indptr.shape[0] - 1
    cdef int* dist = <int*> malloc(nv * sizeof(int))
    cdef int* parent = <int*> malloc(nv * sizeof(int))
    cdef int* queue = <int*> malloc(nv * sizeof(int))
    cdef int best = _INF
    cdef int r, u, x, du, cand, v, head, tail
    cdef Py_ssize_t i
    if dist == NULL or parent == NULL or queue == NULL:
        raise MemoryError()
    try:
        for r in range(nv):
            for v in range(nv):
                dist[v] = _INF
            dist[r] = 0
            parent[r] = -1
            queue[0] = r
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u]
                if 2 * du >= best:
                    break
                for i in range(indptr[u], indptr[u + 1]):
                    x = nbr[i]
                    if dist[x] == _INF:
                        dist[x] = du + 1
                        parent[x] = u
                        queue[tail] = x
                        tail += 1
                    elif x != parent[u]:
                        cand = du + dist[x] + 1
                        if cand < best:
                            best = cand
                            if best <= floor:
                                return best
        return 0 if best == _INF else best
    finally:
        free(dist)
        free(parent)
        free(queue)
