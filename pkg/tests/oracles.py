"""Independent reference implementations used only by the tests.

These deliberately share no code with the package's kernels: cycle
enumeration is a plain recursive DFS deduplicated by rotation/reversal,
acyclicity is union-find, distances are BFS.
"""

from __future__ import annotations


def neighbor_map(s) -> dict[int, list[int]]:
    """Adjacency of an EdgeSubgraph as a plain dict."""
    g = s.parent
    nbrs: dict[int, list[int]] = {v: [] for v in range(g.num_vertices)}
    for e in s.selected_edges():
        u, w = g.edge_endpoints(e)
        nbrs[u].append(w)
        nbrs[w].append(u)
    return nbrs


def rotation_canon(seq: tuple) -> tuple:
    """Lexicographically least rotation over both directions."""
    rots = [seq[i:] + seq[:i] for i in range(len(seq))]
    rev = tuple(reversed(seq))
    rots += [rev[i:] + rev[:i] for i in range(len(rev))]
    return min(rots)


def naive_cycles(nbrs: dict[int, list[int]], length: int) -> set[tuple]:
    """Every simple cycle of exactly `length`, via recursive DFS."""
    found: set[tuple] = set()

    def dfs(path, visited):
        last = path[-1]
        if len(path) == length:
            if path[0] in nbrs[last]:
                found.add(rotation_canon(tuple(path)))
            return
        for x in nbrs[last]:
            if x not in visited:
                visited.add(x)
                path.append(x)
                dfs(path, visited)
                path.pop()
                visited.discard(x)

    for v in sorted(nbrs):
        dfs([v], {v})
    return found


def bfs_distance(g, src: int, dst: int) -> int:
    if src == dst:
        return 0
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for x in g.neighbors(u):
                if x not in dist:
                    dist[x] = dist[u] + 1
                    if x == dst:
                        return dist[x]
                    nxt.append(x)
        frontier = nxt
    return -1


def is_acyclic_union_find(s) -> bool:
    g = s.parent
    parent = list(range(g.num_vertices))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in s.selected_edges():
        u, w = g.edge_endpoints(e)
        ru, rw = find(u), find(w)
        if ru == rw:
            return False
        parent[ru] = rw
    return True


def brute_force_extremal(g, length: int) -> int:
    """Maximum C_length-free edge count by checking every edge subset.

    Only usable on hosts with few edges (2^e subsets are scanned).
    """
    from djturan.core import EdgeSubgraph

    best = 0
    for mask in range((1 << g.num_edges) - 1, -1, -1):
        size = mask.bit_count()
        if size <= best:
            continue
        sub = EdgeSubgraph(g, mask)
        if not naive_cycles(neighbor_map(sub), length):
            best = size
    return best
