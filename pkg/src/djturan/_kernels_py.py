"""Pure-Python cycle kernels: the fallback backend.

The compiled backend in _cycle_kernels mirrors this module exactly:
same canonical form, same emission order, same truncation semantics.
The dispatcher in kernels.py picks whichever is importable.

A fixed-length simple cycle is emitted once, in canonical form: the
sequence starts at the cycle's minimum vertex and proceeds toward the
smaller of that vertex's two cycle-neighbours.  Enumeration walks DFS
paths from each start vertex s using only vertices > s, pruned by BFS
distance back to s, so cycles appear in lexicographic order of their
canonical sequences.
"""

from __future__ import annotations

_INF = 1 << 30


def backend_name() -> str:
    return "python"


def _bfs_from(indptr, nbr, src, min_vertex):
    """Distances from src over vertices >= min_vertex (unreachable = _INF)."""
    nv = len(indptr) - 1
    dist = [_INF] * nv
    dist[src] = 0
    queue = [src]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u]
        for i in range(indptr[u], indptr[u + 1]):
            x = nbr[i]
            if x >= min_vertex and dist[x] == _INF:
                dist[x] = du + 1
                queue.append(x)
    return dist


def _cycle_dfs(indptr, nbr, length, cap, emit):
    """Core walk; calls emit(path) per canonical cycle, stops at cap.

    Returns (count, truncated).
    """
    nv = len(indptr) - 1
    count = 0
    path = [0] * length
    ptr = [0] * (length + 1)
    for s in range(nv):
        if indptr[s + 1] - indptr[s] < 2:
            continue
        dist = _bfs_from(indptr, nbr, s, s)
        visited = bytearray(nv)
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
                    # dist[x] <= 1 here, so x is adjacent to s
                    if path[1] < x:
                        path[length - 1] = x
                        if emit is not None:
                            emit(path)
                        count += 1
                        if count >= cap:
                            return count, True
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
    return count, False


def enumerate_cycles_fixed_length(indptr, nbr, length, cap):
    """All canonical simple cycles of exactly `length`, lex order."""
    out = []
    _, truncated = _cycle_dfs(indptr, nbr, length, cap, lambda p: out.append(tuple(p)))
    return out, truncated


def count_cycles_fixed_length(indptr, nbr, length, cap):
    return _cycle_dfs(indptr, nbr, length, cap, None)


def contains_cycle_fixed_length(indptr, nbr, length):
    count, _ = _cycle_dfs(indptr, nbr, length, 1, None)
    return count > 0


def find_cycle_fixed_length(indptr, nbr, length):
    """First canonical cycle of the given length, or None."""
    out = []
    _cycle_dfs(indptr, nbr, length, 1, lambda p: out.append(tuple(p)))
    return out[0] if out else None


def cycle_edge_counts(indptr, nbr, eidx, n_edges, length, cap):
    """Per-edge counts of cycles of the given length.

    Returns (counts list, total, truncated).  The closing edge of each
    cycle is resolved by scanning the last vertex's adjacency.
    """
    counts = [0] * n_edges

    def emit(path):
        prev = path[0]
        for d in range(1, length):
            v = path[d]
            for i in range(indptr[prev], indptr[prev + 1]):
                if nbr[i] == v:
                    counts[eidx[i]] += 1
                    break
            prev = v
        last = path[length - 1]
        first = path[0]
        for i in range(indptr[last], indptr[last + 1]):
            if nbr[i] == first:
                counts[eidx[i]] += 1
                break

    total, truncated = _cycle_dfs(indptr, nbr, length, cap, emit)
    return counts, total, truncated


def contains_cycle_through_edge(indptr, nbr, u, w, length):
    """Is there a simple cycle of exactly `length` using the edge (u,w)?"""
    nv = len(indptr) - 1
    dist_u = _bfs_from(indptr, nbr, u, 0)
    if dist_u[w] == _INF:
        return False
    visited = bytearray(nv)
    visited[u] = 1
    visited[w] = 1
    # path w = y0, y1, ..., y_{length-2}; closing edge y_{length-2} ~ u
    steps = length - 2
    path = [0] * (steps + 1)
    ptr = [0] * (steps + 2)
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
                # dist_u[x] <= 1 and x != u, so x closes the cycle at u
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


def girth_bfs(indptr, nbr, floor):
    """Shortest cycle length via per-root BFS; 0 when acyclic.

    `floor` is the smallest possible girth for the graph family at hand
    (6 for subgraphs of a doubled Johnson host); the scan exits early as
    soon as that value is certified.
    """
    nv = len(indptr) - 1
    best = _INF
    dist = [0] * nv
    parent = [0] * nv
    for r in range(nv):
        for v in range(nv):
            dist[v] = _INF
        dist[r] = 0
        parent[r] = -1
        queue = [r]
        head = 0
        while head < len(queue):
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
                    queue.append(x)
                elif x != parent[u]:
                    cand = du + dist[x] + 1
                    if cand < best:
                        best = cand
                        if best <= floor:
                            return best
    return 0 if best == _INF else best
