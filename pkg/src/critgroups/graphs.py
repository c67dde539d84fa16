"""Simple graphs with canonical edge ordering, plus the transformations and
combinatorial decompositions used throughout the package.

Vertices are 0..n-1.  Edges are unordered pairs stored as (u, v) with u < v,
sorted lexicographically; the index of an edge in that list is stable, and
the canonical orientation of edge i = (u, v) is u -> v.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import (
    BadParams,
    NotConnected,
    NotSpanningTree,
    NotTwoEdgeConnected,
    TooLarge,
    UnknownFamily,
)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise BadParams("negative vertex count")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise BadParams(f"edge ({u}, {v}) is not 0 <= u < v < n")
            if prev is not None and (u, v) <= prev:
                raise BadParams("edge list must be strictly sorted")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from unordered pairs, rejecting loops and duplicates."""
        norm = []
        for u, v in edges:
            if u == v:
                raise BadParams(f"loop at vertex {u}")
            norm.append((min(u, v), max(u, v)))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise BadParams(f"duplicate edge {a}")
        return cls(n, tuple(norm))

    # -- basic structure ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def incident_edges(self) -> list[list[int]]:
        """For each vertex, the sorted indices of its incident edges."""
        inc = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def other_endpoint(self, edge_idx: int, v: int) -> int:
        a, b = self.edges[edge_idx]
        if v == a:
            return b
        if v == b:
            return a
        raise BadParams(f"vertex {v} is not on edge {edge_idx}")

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """2-coloring as (side of the least vertex per component, rest), or None."""
        adj = self.adjacency()
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        side0 = tuple(v for v in range(self.n) if color[v] == 0)
        side1 = tuple(v for v in range(self.n) if color[v] == 1)
        return side0, side1

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------


def line_graph_edges(g: Graph) -> list[tuple[int, int, int]]:
    """Edges (i, j, w) of the line graph: i < j are edge indices of g sharing
    vertex w; canonical orientation is i -> j "through" w."""
    out = []
    for w, inc in enumerate(g.incident_edges()):
        for a, b in itertools.combinations(inc, 2):
            out.append((a, b, w))
    out.sort()
    return out


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of g; adjacency = incidence at a common vertex."""
    return Graph(g.m, tuple((i, j) for i, j, _ in line_graph_edges(g)))


def subdivision(g: Graph) -> Graph:
    """Insert a midpoint vertex on every edge; midpoint of edge i is n + i."""
    edges = []
    for i, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + i))
        edges.append((v, g.n + i))
    edges.sort()
    return Graph(g.n + g.m, tuple(edges))


def beta(g: Graph) -> int:
    """Number of independent cycles: |E| - |V| + #components."""
    return g.m - g.n + len(g.components())


# ---------------------------------------------------------------------------
# Regularity classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegularityClass:
    kind: str  # "regular" | "semiregular_bipartite" | "neither"
    d: int | None = None
    d1: int | None = None
    d2: int | None = None
    part1: tuple[int, ...] | None = None
    part2: tuple[int, ...] | None = None

    @property
    def is_regular(self) -> bool:
        return self.kind == "regular"

    @property
    def is_semiregular_bipartite(self) -> bool:
        return self.kind == "semiregular_bipartite"


def classify_regularity(g: Graph) -> RegularityClass:
    """Regular(d), semiregular bipartite (d1 on the side of vertex 0), or neither."""
    if not g.is_connected():
        raise NotConnected("regularity classification needs a connected graph")
    deg = g.degrees()
    if len(set(deg)) <= 1:
        return RegularityClass(kind="regular", d=deg[0] if deg else 0)
    parts = g.bipartition()
    if parts is not None:
        p1, p2 = parts
        d1s = {deg[v] for v in p1}
        d2s = {deg[v] for v in p2}
        if len(d1s) == 1 and len(d2s) == 1:
            return RegularityClass(
                kind="semiregular_bipartite",
                d1=d1s.pop(),
                d2=d2s.pop(),
                part1=p1,
                part2=p2,
            )
    return RegularityClass(kind="neither")


def semiregular_data(g: Graph) -> tuple[int, int, tuple[int, ...], tuple[int, ...]] | None:
    """(d1, d2, part1, part2) for bipartite graphs with per-side constant
    degree, treating regular bipartite graphs as (d, d)-semiregular."""
    cls = classify_regularity(g)
    if cls.is_semiregular_bipartite:
        return cls.d1, cls.d2, cls.part1, cls.part2
    if cls.is_regular:
        parts = g.bipartition()
        if parts is not None:
            return cls.d, cls.d, parts[0], parts[1]
    return None


# ---------------------------------------------------------------------------
# Connectivity: bridges, blocks
# ---------------------------------------------------------------------------


def bridges(g: Graph) -> list[int]:
    """Edge indices of all cut-edges, by iterative DFS lowpoint."""
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    timer = 0
    for s in range(g.n):
        if disc[s] != -1:
            continue
        stack = [(s, -1, iter(adj[s]))]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for y, ei in it:
                if ei == pe:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, ei, iter(adj[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if not advanced:
                stack.pop()
                if stack:
                    px = stack[-1][0]
                    low[px] = min(low[px], low[x])
                    if low[x] > disc[px]:
                        out.append(pe)
    return sorted(out)


def is_two_edge_connected(g: Graph) -> bool:
    """Connected and bridgeless."""
    return g.n >= 1 and g.is_connected() and not bridges(g)


def biconnected_blocks(g: Graph) -> list[list[int]]:
    """Edge-index sets of the biconnected components (blocks)."""
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * g.n
    low = [0] * g.n
    edge_stack: list[int] = []
    blocks = []
    timer = 0
    for s in range(g.n):
        if disc[s] != -1:
            continue
        stack = [(s, -1, iter(adj[s]))]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for y, ei in it:
                if ei == pe:
                    continue
                if disc[y] == -1:
                    edge_stack.append(ei)
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, ei, iter(adj[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append(ei)
                    low[x] = min(low[x], disc[y])
            if not advanced:
                stack.pop()
                if stack:
                    px = stack[-1][0]
                    low[px] = min(low[px], low[x])
                    if low[x] >= disc[px]:
                        block = []
                        while True:
                            ei = edge_stack.pop()
                            block.append(ei)
                            if ei == pe:
                                break
                        blocks.append(sorted(block))
    return blocks


# ---------------------------------------------------------------------------
# Ear decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EarWalk:
    """Alternating walk v_1, e_1, v_2, ..., e_l, v_{l+1} (vertices/edge indices)."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    closed: bool

    def __post_init__(self):
        if len(self.vertices) != len(self.edge_indices) + 1:
            raise BadParams("walk must alternate vertices and edges")


@dataclass(frozen=True)
class EarDecomposition:
    """A base cycle followed by ears, covering every vertex and edge once."""

    ears: tuple[EarWalk, ...]


def _walk_is_valid(g: Graph, walk: EarWalk) -> bool:
    for k, ei in enumerate(walk.edge_indices):
        a, b = walk.vertices[k], walk.vertices[k + 1]
        if tuple(sorted((a, b))) != g.edges[ei]:
            return False
    return True


def verify_ear_decomposition(g: Graph, dec: EarDecomposition) -> bool:
    """Literal check of the ear-decomposition conditions."""
    if not dec.ears:
        return False
    base = dec.ears[0]
    if not _walk_is_valid(g, base):
        return False
    if base.vertices[0] != base.vertices[-1] or len(base.edge_indices) < 3:
        return False
    if len(set(base.vertices[:-1])) != len(base.edge_indices):
        return False
    used_edges = set(base.edge_indices)
    if len(used_edges) != len(base.edge_indices):
        return False
    seen_vertices = set(base.vertices)
    degree_so_far = {}
    for u, w in zip(base.vertices, base.vertices[1:]):
        degree_so_far[u] = degree_so_far.get(u, 0) + 1
        degree_so_far[w] = degree_so_far.get(w, 0) + 1
    for ear in dec.ears[1:]:
        if not _walk_is_valid(g, ear):
            return False
        v, w = ear.vertices[0], ear.vertices[-1]
        if ear.closed != (v == w):
            return False
        if v not in seen_vertices or w not in seen_vertices:
            return False
        internal = ear.vertices[1:-1]
        if any(x in seen_vertices for x in internal):
            return False
        if len(set(internal)) != len(internal):
            return False
        if any(ei in used_edges for ei in ear.edge_indices):
            return False
        if len(set(ear.edge_indices)) != len(ear.edge_indices):
            return False
        used_edges.update(ear.edge_indices)
        seen_vertices.update(ear.vertices)
        for u, x in zip(ear.vertices, ear.vertices[1:]):
            degree_so_far[u] = degree_so_far.get(u, 0) + 1
            degree_so_far[x] = degree_so_far.get(x, 0) + 1
        # internal vertices must have degree exactly 2 in the union so far
        if any(degree_so_far[x] != 2 for x in internal):
            return False
    return used_edges == set(range(g.m)) and seen_vertices == set(range(g.n))


def ear_decomposition(g: Graph) -> EarDecomposition | None:
    """An ear decomposition when one exists (iff g is 2-edge-connected)."""
    if not g.is_connected():
        raise NotConnected("ear decomposition needs a connected graph")
    if g.m == 0:
        return None
    cycle = _lowest_cycle(g)
    if cycle is None:
        return None
    ears = [cycle]
    in_h = set(cycle.vertices)
    used = set(cycle.edge_indices)
    adj = g.adjacency()
    eidx = g.edge_index()
    while len(used) < g.m:
        start = None
        for ei, (u, v) in enumerate(g.edges):
            if ei not in used and (u in in_h or v in in_h):
                start = ei
                break
        if start is None:
            return None
        u, v = g.edges[start]
        anchor = u if u in in_h else v
        other = v if anchor == u else u
        if other in in_h:
            ears.append(
                EarWalk((anchor, other), (start,), closed=anchor == other)
            )
            used.add(start)
            continue
        # shortest walk from `other` back into H that avoids H internally
        path = _bfs_to_set(adj, other, in_h, forbid_first=anchor)
        if path is None:
            return None
        verts = [anchor, other] + path
        edge_ids = [start] + [
            eidx[tuple(sorted((a, b)))] for a, b in zip(verts[1:], verts[2:])
        ]
        walk = EarWalk(tuple(verts), tuple(edge_ids), closed=verts[0] == verts[-1])
        if any(ei in used for ei in edge_ids):
            return None
        ears.append(walk)
        used.update(edge_ids)
        in_h.update(verts)
    dec = EarDecomposition(tuple(ears))
    return dec if verify_ear_decomposition(g, dec) else None


def _lowest_cycle(g: Graph) -> EarWalk | None:
    """A cycle through the lexicographically first non-forest edge, as a walk."""
    parent = {}
    parent_edge = {}
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    # greedy forest; the first edge closing a cycle yields the base cycle
    from .unionfind import UnionFind

    uf = UnionFind(g.n)
    tree_adj = [[] for _ in range(g.n)]
    closing = None
    for i, (u, v) in enumerate(g.edges):
        if uf.union(u, v):
            tree_adj[u].append((v, i))
            tree_adj[v].append((u, i))
        elif closing is None:
            closing = i
    if closing is None:
        return None
    u, v = g.edges[closing]
    path = _tree_path(tree_adj, v, u)
    verts = [u, v] + path[1:]
    eidx = g.edge_index()
    edge_ids = [closing] + [
        eidx[tuple(sorted((a, b)))] for a, b in zip(verts[1:], verts[2:])
    ]
    return EarWalk(tuple(verts), tuple(edge_ids), closed=True)


def _tree_path(tree_adj, src: int, dst: int) -> list[int]:
    prev = {src: None}
    queue = [src]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == dst:
            break
        for y, _ in tree_adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _bfs_to_set(adj, start: int, targets: set[int], forbid_first: int) -> list[int] | None:
    """Shortest path start -> (any vertex of targets) avoiding targets internally.

    The first step may not go straight back to forbid_first (that edge is the
    one already consumed by the caller).
    """
    prev = {start: None}
    queue = [start]
    qi = 0
    found = None
    while qi < len(queue) and found is None:
        x = queue[qi]
        qi += 1
        for y in sorted(adj[x]):
            if x == start and y == forbid_first:
                continue
            if y in targets:
                found = (x, y)
                break
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if found is None:
        return None
    x, y = found
    back = [x]
    while back[-1] != start:
        back.append(prev[back[-1]])
    back.reverse()
    return back[1:] + [y]


# ---------------------------------------------------------------------------
# Absorption orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbsorptionOrder:
    """A spanning tree plus a linear order over vertices and tree edges.

    Order elements are tagged pairs ("v", vertex) or ("e", edge index).
    """

    tree: tuple[int, ...]
    order: tuple[tuple[str, int], ...]

    @property
    def leaf_edge(self) -> int:
        return self.order[1][1]


def absorption_order(g: Graph) -> AbsorptionOrder:
    """Spanning tree with an absorption order, built along an ear decomposition.

    Each ear's run of new vertices and tree edges is spliced in immediately
    after the ear's earlier endpoint; a closed ear attached at the very first
    vertex is spliced in at the front instead, renaming the starting pair.
    """
    dec = ear_decomposition(g)
    if dec is None:
        raise NotTwoEdgeConnected("absorption orders need a 2-edge-connected graph")
    base = dec.ears[0]
    order: list[tuple[str, int]] = []
    tree: list[int] = []
    for k in range(len(base.edge_indices) - 1):
        order.append(("v", base.vertices[k]))
        order.append(("e", base.edge_indices[k]))
        tree.append(base.edge_indices[k])
    order.append(("v", base.vertices[-2]))
    for ear in dec.ears[1:]:
        verts = list(ear.vertices)
        eids = list(ear.edge_indices)
        pos = {el: k for k, el in enumerate(order)}
        pv = pos[("v", verts[0])]
        pw = pos[("v", verts[-1])]
        if pw < pv:
            verts.reverse()
            eids.reverse()
            pv, pw = pw, pv
        subseq: list[tuple[str, int]] = []
        for k in range(1, len(verts) - 1):
            subseq.append(("v", verts[k]))
            subseq.append(("e", eids[k]))
        tree.extend(eids[1:])
        if ear.closed and ("v", verts[0]) == order[0]:
            order = subseq + order
        else:
            at = order.index(("v", verts[0])) + 1
            order = order[:at] + subseq + order[at:]
    return AbsorptionOrder(tuple(sorted(tree)), tuple(order))


def _check_spanning_tree(g: Graph, tree_edges) -> None:
    from .unionfind import UnionFind

    tree = list(tree_edges)
    if len(set(tree)) != len(tree) or any(not 0 <= t < g.m for t in tree):
        raise NotSpanningTree("tree edge indices invalid")
    uf = UnionFind(g.n)
    for t in tree:
        u, v = g.edges[t]
        if not uf.union(u, v):
            raise NotSpanningTree("tree edges contain a cycle")
    if len(tree) != g.n - 1:
        raise NotSpanningTree("edge set does not span")


def verify_absorption_order(g: Graph, a: AbsorptionOrder) -> bool:
    """Literal check of the three absorption-order conditions."""
    _check_spanning_tree(g, a.tree)
    tree = set(a.tree)
    order = list(a.order)
    expected = {("v", v) for v in range(g.n)} | {("e", t) for t in tree}
    if len(order) != len(expected) or set(order) != expected:
        return False
    pos = {el: k for k, el in enumerate(order)}
    inc = g.incident_edges()

    # (i) starts with a leaf vertex of the tree and its unique tree edge
    if order[0][0] != "v" or order[1][0] != "e":
        return False
    v0 = order[0][1]
    e0 = order[1][1]
    tree_at_v0 = [ei for ei in inc[v0] if ei in tree]
    if tree_at_v0 != [e0]:
        return False

    # (ii) every other vertex is reachable from an earlier vertex along an
    # edge that is either a non-tree edge or itself earlier
    for v in range(g.n):
        if v == v0:
            continue
        pv = pos[("v", v)]
        ok = False
        for ei in inc[v]:
            w = g.other_endpoint(ei, v)
            if pos[("v", w)] < pv and (ei not in tree or pos[("e", ei)] < pv):
                ok = True
                break
        if not ok:
            return False

    # (iii) every other tree edge has an earlier endpoint whose remaining
    # incident edges are all non-tree or earlier
    for ei in tree:
        if ei == e0:
            continue
        pe = pos[("e", ei)]
        ok = False
        for v in g.edges[ei]:
            if pos[("v", v)] >= pe:
                continue
            good = True
            for ej in inc[v]:
                if ej == ei:
                    continue
                if ej in tree and pos[("e", ej)] >= pe:
                    good = False
                    break
            if good:
                ok = True
                break
        if not ok:
            return False
    return True


def bipartite_tree_orientation(g: Graph, tree_edges) -> tuple[bool, ...]:
    """Orientation flags (True = keep canonical u->v) whose restriction to the
    tree is bipartite: around any vertex, tree edges all in or all out."""
    _check_spanning_tree(g, tree_edges)
    tree = set(tree_edges)
    color = [-1] * g.n
    adj = [[] for _ in range(g.n)]
    for t in tree:
        u, v = g.edges[t]
        adj[u].append(v)
        adj[v].append(u)
    color[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if color[y] == -1:
                color[y] = 1 - color[x]
                stack.append(y)
    flags = []
    for i, (u, v) in enumerate(g.edges):
        if i in tree:
            flags.append(color[u] == 0)
        else:
            flags.append(True)
    return tuple(flags)


# ---------------------------------------------------------------------------
# Named families and enumeration
# ---------------------------------------------------------------------------


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def _complete_bipartite(n1: int, n2: int) -> Graph:
    return Graph.from_edges(
        n1 + n2, ((a, n1 + b) for a in range(n1) for b in range(n2))
    )


def _cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycles need at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def _path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def _star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def _cube(d: int) -> Graph:
    if d < 1:
        raise BadParams("cube dimension must be >= 1")
    edges = []
    for v in range(1 << d):
        for bit in range(d):
            u = v ^ (1 << bit)
            if v < u:
                edges.append((v, u))
    return Graph.from_edges(1 << d, edges)


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _octahedron() -> Graph:
    # K_{2,2,2}: all pairs except the three antipodal ones
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(6), 2)
        if (u, v) not in {(0, 3), (1, 4), (2, 5)}
    ]
    return Graph.from_edges(6, edges)


def _icosahedron() -> Graph:
    # apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
    edges = [(0, 1 + j) for j in range(5)]
    edges += [(1 + j, 1 + (j + 1) % 5) for j in range(5)]
    edges += [(6 + j, 6 + (j + 1) % 5) for j in range(5)]
    edges += [(11, 6 + j) for j in range(5)]
    edges += [(1 + j, 6 + j) for j in range(5)]
    edges += [(1 + j, 6 + (j + 1) % 5) for j in range(5)]
    return Graph.from_edges(12, edges)


def _dodecahedron() -> Graph:
    # generalized Petersen construction on 10 + 10 vertices with skip 2
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(i, 10 + i) for i in range(10)]
    edges += [(10 + i, 10 + (i + 2) % 10) for i in range(10)]
    return Graph.from_edges(20, edges)


_FAMILIES = {
    "complete": (1, _complete),
    "complete_bipartite": (2, _complete_bipartite),
    "cycle": (1, _cycle),
    "path": (1, _path),
    "star": (1, _star),
    "cube": (1, _cube),
    "petersen": (0, _petersen),
    "tetrahedron": (0, lambda: _complete(4)),
    "octahedron": (0, _octahedron),
    "icosahedron": (0, _icosahedron),
    "dodecahedron": (0, _dodecahedron),
}


def generate_named(family: str, *params: int) -> Graph:
    """Deterministic construction of a named graph family member."""
    if family not in _FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}")
    arity, fn = _FAMILIES[family]
    if len(params) != arity:
        raise BadParams(f"family {family!r} takes {arity} parameter(s)")
    if any(p < 1 for p in params):
        raise BadParams("family parameters must be positive")
    return fn(*params)


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def enumerate_connected(n_max: int):
    """All connected simple graphs on exactly n labeled vertices, 2 <= n <= n_max."""
    if n_max > 7:
        raise TooLarge("labeled enumeration is limited to 7 vertices")
    from .unionfind import UnionFind

    for n in range(2, n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = tuple(pairs[k] for k in range(len(pairs)) if mask >> k & 1)
            if len(edges) < n - 1:
                continue
            uf = UnionFind(n)
            parts = n
            for u, v in edges:
                if uf.union(u, v):
                    parts -= 1
            if parts == 1:
                yield Graph(n, edges)


def count_connected(n: int) -> int:
    """Connected labeled graph count on n vertices (reference for tests)."""
    return sum(1 for g in enumerate_connected(n) if g.n == n)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" then m lines "u v"; '#' starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise BadParams("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise BadParams("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise BadParams(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        fields = row.split()
        if len(fields) != 2:
            raise BadParams(f"bad edge line {row!r}")
        u, v = int(fields[0]), int(fields[1])
        if not 0 <= u < v < n:
            raise BadParams(f"edge ({u}, {v}) must satisfy 0 <= u < v < n")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_descriptor(g: Graph) -> str:
    """Compact deterministic descriptor used in reports."""
    return f"n={g.n};m={g.m};edges=" + ",".join(f"{u}-{v}" for u, v in g.edges)


def expected_line_graph_edge_count(g: Graph) -> int:
    return sum(comb(d, 2) for d in g.degrees())
