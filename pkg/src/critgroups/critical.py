"""Graph lattices (bonds, cycles, boundary map) and critical-group structure.

The critical group of a graph is the finite abelian group
Z^E / (B + Z), where B is the integer span of signed cut vectors and Z the
integer kernel of the boundary map.  Its order is the number of spanning
forests.  This module builds those lattices explicitly and computes the
group through several equivalent presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    BadOmitSet,
    NoEdges,
    NotConnected,
    NotPrime,
    NotSpanningForest,
)
from .graphs import Graph, beta, biconnected_blocks, line_graph
from .intlinalg import FiniteAbelianGroup, IntMatrix, cokernel_structure, determinant
from .unionfind import UnionFind


@dataclass(frozen=True)
class Presentation:
    """A finite abelian group given as Z^ambient_rank modulo the integer
    column span of `relations`."""

    ambient_rank: int
    relations: IntMatrix
    label: str

    def __post_init__(self):
        if self.relations.rows != self.ambient_rank:
            raise ValueError("relation matrix must have ambient_rank rows")

    def group(self) -> FiniteAbelianGroup:
        if self.ambient_rank == 0:
            return FiniteAbelianGroup.trivial()
        return cokernel_structure(self.relations)


@dataclass(frozen=True)
class PartitionType:
    """Weakly decreasing positive integers: the exponent type of a p-group."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("partition parts must be weakly decreasing")

    @classmethod
    def from_exponents(cls, exponents) -> "PartitionType":
        return cls(tuple(sorted((e for e in exponents if e > 0), reverse=True)))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


# ---------------------------------------------------------------------------
# Lattices attached to a graph
# ---------------------------------------------------------------------------


def boundary_matrix(g: Graph) -> IntMatrix:
    """|V| x |E| boundary map: edge (u, v) with u < v maps to +v - u."""
    rows = [[0] * g.m for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        rows[u][i] = -1
        rows[v][i] = 1
    return IntMatrix(rows, rows=g.n, cols=g.m)


def canonical_spanning_forest(g: Graph) -> tuple[int, ...]:
    """Greedy lexicographic spanning forest (lowest edge index first)."""
    uf = UnionFind(g.n)
    forest = []
    for i, (u, v) in enumerate(g.edges):
        if uf.union(u, v):
            forest.append(i)
    return tuple(forest)


def _check_spanning_forest(g: Graph, forest) -> list[int]:
    forest = sorted(set(forest))
    if any(not 0 <= f < g.m for f in forest):
        raise NotSpanningForest("forest edge indices out of range")
    uf = UnionFind(g.n)
    for f in forest:
        u, v = g.edges[f]
        if not uf.union(u, v):
            raise NotSpanningForest("forest edges contain a cycle")
    if len(forest) != g.n - len(g.components()):
        raise NotSpanningForest("edge set is not a maximal forest")
    return forest


def bond_and_cycle_bases(g: Graph, forest) -> tuple[IntMatrix, IntMatrix]:
    """Z-bases (M_B, M_Z) of the bond and cycle lattices from a spanning forest.

    M_B has one signed cut column per forest edge (the cut separating the two
    forest components created by deleting it, signed away from the side of the
    lower endpoint).  M_Z has one signed fundamental-cycle column per
    non-forest edge.  The two column families are mutually orthogonal.
    """
    forest = _check_spanning_forest(g, forest)
    fset = set(forest)
    forest_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for f in forest:
        u, v = g.edges[f]
        forest_adj[u].append((v, f))
        forest_adj[v].append((u, f))

    bond_cols = []
    for f in forest:
        u, v = g.edges[f]
        side = _forest_side(forest_adj, u, skip_edge=f, n=g.n)
        col = []
        for x, y in g.edges:
            if side[x] and not side[y]:
                col.append(1)
            elif side[y] and not side[x]:
                col.append(-1)
            else:
                col.append(0)
        bond_cols.append(col)

    cycle_cols = []
    for i, (u, v) in enumerate(g.edges):
        if i in fset:
            continue
        path = _forest_path(forest_adj, v, u)
        col = [0] * g.m
        col[i] = 1
        for (a, b), f in zip(zip(path, path[1:]), _forest_path_edges(forest_adj, path)):
            col[f] = 1 if g.edges[f] == (a, b) else -1
        cycle_cols.append(col)

    mb = IntMatrix.from_columns(bond_cols, rows=g.m)
    mz = IntMatrix.from_columns(cycle_cols, rows=g.m)
    return mb, mz


def _forest_side(forest_adj, start: int, skip_edge: int, n: int) -> list[bool]:
    side = [False] * n
    side[start] = True
    stack = [start]
    while stack:
        x = stack.pop()
        for y, f in forest_adj[x]:
            if f != skip_edge and not side[y]:
                side[y] = True
                stack.append(y)
    return side


def _forest_path(forest_adj, src: int, dst: int) -> list[int]:
    prev = {src: None}
    queue = [src]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == dst:
            break
        for y, _ in forest_adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _forest_path_edges(forest_adj, path: list[int]) -> list[int]:
    out = []
    for a, b in zip(path, path[1:]):
        for y, f in forest_adj[a]:
            if y == b:
                out.append(f)
                break
    return out


def reduced_laplacian(g: Graph, omit=None) -> IntMatrix:
    """Laplacian with one row/column removed per connected component."""
    comps = g.components()
    if omit is None:
        omit = [c[0] for c in comps]
    omit = sorted(set(omit))
    if len(omit) != len(comps):
        raise BadOmitSet("omit exactly one vertex per component")
    for comp in comps:
        if sum(1 for v in comp if v in set(omit)) != 1:
            raise BadOmitSet("omit exactly one vertex per component")
    keep = [v for v in range(g.n) if v not in set(omit)]
    deg = g.degrees()
    adj = set(g.edges)
    rows = []
    for x in keep:
        row = []
        for y in keep:
            if x == y:
                row.append(deg[x])
            else:
                row.append(-1 if (min(x, y), max(x, y)) in adj else 0)
        rows.append(row)
    return IntMatrix(rows, rows=len(keep), cols=len(keep))


# ---------------------------------------------------------------------------
# Critical group, by several routes
# ---------------------------------------------------------------------------


def critical_group(g: Graph) -> FiniteAbelianGroup:
    """Invariant factors of the critical group, via the reduced Laplacian."""
    if g.n == 0:
        return FiniteAbelianGroup.trivial()
    return cokernel_structure(reduced_laplacian(g))


def spanning_forest_count(g: Graph) -> int:
    """Number of spanning forests, as the reduced-Laplacian determinant."""
    if g.n == 0:
        return 1
    return determinant(reduced_laplacian(g))


def critical_group_via_cycles(g: Graph) -> FiniteAbelianGroup:
    """Same group from the Gram matrix of a fundamental cycle basis."""
    _, mz = bond_and_cycle_bases(g, canonical_spanning_forest(g))
    if mz.cols == 0:
        return FiniteAbelianGroup.trivial()
    return cokernel_structure(mz.transpose() @ mz)


def critical_group_via_edge_space(g: Graph) -> FiniteAbelianGroup:
    """Same group as Z^E modulo the combined bond-plus-cycle relation columns."""
    if g.m == 0:
        return FiniteAbelianGroup.trivial()
    return edge_space_presentation(g).group()


def edge_space_presentation(g: Graph) -> Presentation:
    """Z^E modulo [M_B | M_Z] for the canonical spanning forest."""
    mb, mz = bond_and_cycle_bases(g, canonical_spanning_forest(g))
    return Presentation(
        ambient_rank=g.m, relations=mb.hstack(mz), label="edge-space"
    )


def vertex_presentation(g: Graph, v0: int = 0) -> Presentation:
    """Z^V modulo the span of v0 and the Laplacian columns (connected g)."""
    if not g.is_connected():
        raise NotConnected("vertex presentation needs a connected graph")
    if not 0 <= v0 < g.n:
        raise BadOmitSet(f"vertex {v0} out of range")
    unit = [[1 if i == v0 else 0] for i in range(g.n)]
    lap = full_laplacian(g)
    return Presentation(
        ambient_rank=g.n,
        relations=IntMatrix(unit, rows=g.n, cols=1).hstack(lap),
        label=f"vertex-space(v0={v0})",
    )


def full_laplacian(g: Graph) -> IntMatrix:
    deg = g.degrees()
    adj = set(g.edges)
    rows = [
        [deg[x] if x == y else (-1 if (min(x, y), max(x, y)) in adj else 0) for y in range(g.n)]
        for x in range(g.n)
    ]
    return IntMatrix(rows, rows=g.n, cols=g.n)


def line_presentation(g: Graph, e0: int) -> Presentation:
    """Presentation of the line graph's critical group on Z^E(g).

    Relations: the single edge e0, plus the boundary image of every bond of
    the line graph (equivalently the columns of the line graph's Laplacian).
    """
    if not g.is_connected():
        raise NotConnected("line presentation needs a connected graph")
    if g.m == 0:
        raise NoEdges("line presentation needs at least one edge")
    if not 0 <= e0 < g.m:
        raise BadOmitSet(f"edge index {e0} out of range")
    unit = IntMatrix([[1 if i == e0 else 0] for i in range(g.m)], rows=g.m, cols=1)
    lap = full_laplacian(line_graph(g))
    return Presentation(
        ambient_rank=g.m,
        relations=unit.hstack(lap),
        label=f"line-presentation(e0={e0})",
    )


# ---------------------------------------------------------------------------
# Derived structure
# ---------------------------------------------------------------------------


def mod_q_quotient(k: FiniteAbelianGroup, q: int) -> FiniteAbelianGroup:
    """K/qK, computed from invariant factors as the sum of Z_gcd(d_i, q)."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    return FiniteAbelianGroup.from_summands(
        gcd(d, q) for d in k.invariant_factors
    )


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_adic_valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def p_primary_type(k: FiniteAbelianGroup, p: int) -> PartitionType:
    """Exponent partition of the p-Sylow subgroup."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return PartitionType.from_exponents(
        p_adic_valuation(d, p) for d in k.invariant_factors
    )


def min_generators(k: FiniteAbelianGroup) -> int:
    """Minimal number of generators: the count of nontrivial invariant factors."""
    return len(k.invariant_factors)


def degree_sum_gcd(g: Graph) -> int:
    """gcd over edges {v, w} of deg(v) + deg(w)."""
    if g.m == 0:
        raise NoEdges("degree sums need at least one edge")
    deg = g.degrees()
    out = 0
    for u, v in g.edges:
        out = gcd(out, deg[u] + deg[v])
    return out


def k_of_p(g: Graph, p: int) -> int:
    """Largest k with p^k dividing every adjacent degree sum."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p_adic_valuation(degree_sum_gcd(g), p)


def has_even_cycle(g: Graph) -> bool:
    """Whether g contains a cycle of even length.

    Decided per biconnected block: a block with more edges than vertices
    always contains one (three internally disjoint paths give three cycles
    whose lengths cannot all be odd); a block that is a single cycle
    contains one exactly when its length is even.
    """
    for block in biconnected_blocks(g):
        if len(block) == 1:
            continue
        verts = set()
        for ei in block:
            verts.update(g.edges[ei])
        if len(block) > len(verts):
            return True
        if len(block) % 2 == 0:
            return True
    return False


def has_even_cycle_bruteforce(g: Graph) -> bool:
    """Oracle: explicit search over simple cycles (desk-scale graphs only)."""
    adj = g.adjacency()

    def extend(path: list[int], on_path: set[int]) -> bool:
        x = path[-1]
        for y in adj[x]:
            if y == g_start and len(path) >= 3 and len(path) % 2 == 0:
                if path[1] < path[-1]:  # canonical direction kills mirrors
                    return True
            if y > g_start and y not in on_path:
                path.append(y)
                on_path.add(y)
                if extend(path, on_path):
                    return True
                on_path.remove(y)
                path.pop()
        return False

    for g_start in range(g.n):
        if extend([g_start], {g_start}):
            return True
    return False
