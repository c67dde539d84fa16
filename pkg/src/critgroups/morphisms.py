"""Lattice maps between edge spaces of a graph, its line graph and its
edge subdivision, and the induced homomorphisms on critical groups.

All matrices are expressed against each graph's canonical edge orientation
(low index -> high index).  The subdivision of edge i = (u, v) consists of
the half-edges {u, n+i} and {v, n+i}; both are canonically oriented toward
the midpoint, so a half-edge traversed "along" the parent edge from u to v
picks up a sign flip on the v side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm, gcd

from .critical import Presentation, bond_and_cycle_bases, canonical_spanning_forest
from .errors import (
    DegreeTooSmall,
    MorphismInvalid,
    NotConnected,
    NotRegular,
    NotSemiregularBipartite,
)
from .graphs import Graph, classify_regularity, line_graph, line_graph_edges, semiregular_data, subdivision
from .intlinalg import (
    FiniteAbelianGroup,
    IntMatrix,
    LatticeSolver,
    cokernel_structure,
    kernel_lattice,
    lattice_quotient,
)


@dataclass(frozen=True)
class LatticeMorphism:
    """Integer matrix between the ambient edge spaces of two presentations.

    The cycle bases are carried along so the morphism criterion (image of
    source cycles lands in target cycles, and transposed image of target
    cycles lands in source cycles) can be checked by lattice membership.
    """

    name: str
    matrix: IntMatrix
    source: Presentation
    target: Presentation
    source_cycles: IntMatrix
    target_cycles: IntMatrix

    def transpose_morphism(self) -> "LatticeMorphism":
        """The adjoint map, with source and target decompositions swapped."""
        return LatticeMorphism(
            name=f"{self.name}_transpose",
            matrix=self.matrix.transpose(),
            source=self.target,
            target=self.source,
            source_cycles=self.target_cycles,
            target_cycles=self.source_cycles,
        )


@dataclass(frozen=True)
class KernelCokernelReport:
    kernel: FiniteAbelianGroup
    cokernel: FiniteAbelianGroup
    source_order: int
    target_order: int

    @property
    def order_identity_holds(self) -> bool:
        return self.kernel.order * self.target_order == self.source_order * self.cokernel.order


def _edge_decomposition(g: Graph, label: str):
    mb, mz = bond_and_cycle_bases(g, canonical_spanning_forest(g))
    pres = Presentation(ambient_rank=g.m, relations=mb.hstack(mz), label=label)
    return pres, mz


def _sd_edge_lookup(g: Graph, sd: Graph) -> dict[tuple[int, int], int]:
    """Map (endpoint, parent edge index) -> subdivision edge index."""
    idx = sd.edge_index()
    out = {}
    for i, (u, v) in enumerate(g.edges):
        out[(u, i)] = idx[(u, g.n + i)]
        out[(v, i)] = idx[(v, g.n + i)]
    return out


def morphism_h(g: Graph) -> LatticeMorphism:
    """Fold each subdivision half-edge onto its parent edge (sd G -> G)."""
    sd = subdivision(g)
    lookup = _sd_edge_lookup(g, sd)
    rows = [[0] * sd.m for _ in range(g.m)]
    for i, (u, v) in enumerate(g.edges):
        rows[i][lookup[(u, i)]] = 1
        rows[i][lookup[(v, i)]] = -1
    source, source_cycles = _edge_decomposition(sd, "edge-space(sd)")
    target, target_cycles = _edge_decomposition(g, "edge-space")
    return LatticeMorphism(
        name="h",
        matrix=IntMatrix(rows, rows=g.m, cols=sd.m),
        source=source,
        target=target,
        source_cycles=source_cycles,
        target_cycles=target_cycles,
    )


def morphism_f(g: Graph) -> LatticeMorphism:
    """Send a line-graph edge through its shared vertex into sd G.

    The edge of the line graph joining parent edges i -> j through vertex w
    maps to the length-two directed path (mid_i -> w -> mid_j), which in
    canonical subdivision coordinates is -(w, mid_i) + (w, mid_j).
    """
    if not g.is_connected():
        raise NotConnected("the line-to-subdivision map needs a connected graph")
    cls = classify_regularity(g)
    if not cls.is_regular:
        raise NotRegular("the line-to-subdivision map needs a regular graph")
    if cls.d < 2:
        raise DegreeTooSmall("degree must be at least 2")
    sd = subdivision(g)
    lookup = _sd_edge_lookup(g, sd)
    lg_edges = line_graph_edges(g)
    rows = [[0] * len(lg_edges) for _ in range(sd.m)]
    for col, (i, j, w) in enumerate(lg_edges):
        rows[lookup[(w, i)]][col] -= 1
        rows[lookup[(w, j)]][col] += 1
    lg = line_graph(g)
    source, source_cycles = _edge_decomposition(lg, "edge-space(line)")
    target, target_cycles = _edge_decomposition(sd, "edge-space(sd)")
    return LatticeMorphism(
        name="f",
        matrix=IntMatrix(rows, rows=sd.m, cols=len(lg_edges)),
        source=source,
        target=target,
        source_cycles=source_cycles,
        target_cycles=target_cycles,
    )


def morphism_g(g: Graph) -> LatticeMorphism:
    """Send a line-graph edge through its shared vertex into G, scaled by
    lcm(d1, d2) over the degree of the shared vertex's side."""
    if not g.is_connected():
        raise NotConnected("the line-to-graph map needs a connected graph")
    data = semiregular_data(g)
    if data is None:
        raise NotSemiregularBipartite(
            "the line-to-graph map needs a semiregular bipartite graph"
        )
    d1, d2, part1, _ = data
    side1 = set(part1)
    lam = lcm(d1, d2)
    assert lam % d1 == 0 and lam % d2 == 0
    lg_edges = line_graph_edges(g)
    rows = [[0] * len(lg_edges) for _ in range(g.m)]
    for col, (i, j, w) in enumerate(lg_edges):
        c = lam // d1 if w in side1 else lam // d2
        x = g.other_endpoint(i, w)
        y = g.other_endpoint(j, w)
        # path x -> w -> y, signed against canonical orientations
        rows[i][col] += c if x < w else -c
        rows[j][col] += c if w < y else -c
    lg = line_graph(g)
    source, source_cycles = _edge_decomposition(lg, "edge-space(line)")
    target, target_cycles = _edge_decomposition(g, "edge-space")
    return LatticeMorphism(
        name="g",
        matrix=IntMatrix(rows, rows=g.m, cols=len(lg_edges)),
        source=source,
        target=target,
        source_cycles=source_cycles,
        target_cycles=target_cycles,
    )


# ---------------------------------------------------------------------------
# Verification and induced maps
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def verify_morphism(m: LatticeMorphism) -> bool:
    """Morphism criterion by lattice membership.

    Checks that the matrix maps every source cycle basis vector into the
    target cycle lattice and that its transpose maps every target cycle
    basis vector into the source cycle lattice.
    """
    target_solver = LatticeSolver(m.target_cycles)
    for j in range(m.source_cycles.cols):
        image = m.matrix.mul_vector(m.source_cycles.column(j))
        if target_solver.solve(image) is None:
            return False
    mt = m.matrix.transpose()
    source_solver = LatticeSolver(m.source_cycles)
    for j in range(m.target_cycles.cols):
        image = mt.mul_vector(m.target_cycles.column(j))
        if source_solver.solve(image) is None:
            return False
    return True


def _require_valid(m: LatticeMorphism) -> None:
    if not verify_morphism(m):
        raise MorphismInvalid(f"{m.name} is not a morphism of decompositions")


def induced_cokernel(m: LatticeMorphism) -> FiniteAbelianGroup:
    """Cokernel of the induced map: target ambient modulo image plus relations."""
    _require_valid(m)
    return cokernel_structure(m.matrix.hstack(m.target.relations))


def induced_kernel(m: LatticeMorphism) -> FiniteAbelianGroup:
    """Kernel of the induced map, as a quotient of the preimage lattice.

    The integer kernel of [matrix | target relations] projects onto the
    lattice of source vectors mapping into the target relation lattice;
    dividing by the source relations gives the kernel group.
    """
    _require_valid(m)
    combined = m.matrix.hstack(m.target.relations)
    null_basis = kernel_lattice(combined)
    src = m.matrix.cols
    preimage_cols = [null_basis.column(j)[:src] for j in range(null_basis.cols)]
    preimage = IntMatrix.from_columns(preimage_cols, rows=src)
    return lattice_quotient(preimage, m.source.relations)


def kernel_cokernel_report(m: LatticeMorphism) -> KernelCokernelReport:
    _require_valid(m)
    return KernelCokernelReport(
        kernel=induced_kernel(m),
        cokernel=induced_cokernel(m),
        source_order=m.source.group().order,
        target_order=m.target.group().order,
    )


def _scaling_holds(matrix: IntMatrix, c: int, relations: IntMatrix) -> bool:
    """Whether matrix - c * identity maps every basis vector into the lattice."""
    solver = LatticeSolver(relations)
    n = matrix.rows
    for k in range(n):
        col = list(matrix.column(k))
        col[k] -= c
        if solver.solve(col) is None:
            return False
    return True


def scaling_check_f(g: Graph) -> bool:
    """Composing the line->sd map with its adjoint acts as multiplication by
    the degree, on both critical groups."""
    f = morphism_f(g)
    _require_valid(f)
    d = classify_regularity(g).d
    ft = f.matrix.transpose()
    return _scaling_holds(ft @ f.matrix, d, f.source.relations) and _scaling_holds(
        f.matrix @ ft, d, f.target.relations
    )


def scaling_check_g(g: Graph) -> bool:
    """The adjoint composite of the line->graph map is multiplication by
    (d1 + d2) * lcm(d1, d2) / gcd(d1, d2) on the line graph's group."""
    gm = morphism_g(g)
    _require_valid(gm)
    d1, d2, _, _ = semiregular_data(g)
    c = (d1 + d2) // gcd(d1, d2) * lcm(d1, d2)
    return _scaling_holds(gm.matrix.transpose() @ gm.matrix, c, gm.source.relations)


def is_zero_morphism(m: LatticeMorphism) -> bool:
    """Whether every column of the matrix lies in the target relation lattice."""
    _require_valid(m)
    solver = LatticeSolver(m.target.relations)
    return all(
        solver.solve(m.matrix.column(j)) is not None for j in range(m.matrix.cols)
    )


# ---------------------------------------------------------------------------
# Cycle generators of the line graph
# ---------------------------------------------------------------------------


def line_cycle_generators(g: Graph) -> IntMatrix:
    """Columns spanning the cycle lattice of the line graph.

    One global cycle per fundamental cycle of g, plus, at every vertex of
    degree >= 3, the triangles through the least incident edge, which span
    the cycle space of that vertex's local clique.
    """
    if not g.is_connected():
        raise NotConnected("line cycle generators need a connected graph")
    lg_edges = line_graph_edges(g)
    lg_index = {(i, j): col for col, (i, j, _) in enumerate(lg_edges)}
    m_line = len(lg_edges)

    def line_step(a: int, b: int) -> tuple[int, int]:
        """Signed coordinate of the directed line-graph step a -> b."""
        if a < b:
            return lg_index[(a, b)], 1
        return lg_index[(b, a)], -1

    cols = []
    _, mz = bond_and_cycle_bases(g, canonical_spanning_forest(g))
    for j in range(mz.cols):
        cyc = mz.column(j)
        edge_seq = _directed_cycle_edges(g, cyc)
        col = [0] * m_line
        for a, b in zip(edge_seq, edge_seq[1:] + edge_seq[:1]):
            k, s = line_step(a, b)
            col[k] += s
        cols.append(col)
    for v, inc in enumerate(g.incident_edges()):
        if len(inc) < 3:
            continue
        f0 = inc[0]
        for a in range(1, len(inc)):
            for b in range(a + 1, len(inc)):
                col = [0] * m_line
                for x, y in ((f0, inc[a]), (inc[a], inc[b]), (inc[b], f0)):
                    k, s = line_step(x, y)
                    col[k] += s
                cols.append(col)
    return IntMatrix.from_columns(cols, rows=m_line)


def _directed_cycle_edges(g: Graph, incidence) -> list[int]:
    """Order the support of a simple cycle incidence vector as an edge walk."""
    support = [i for i, c in enumerate(incidence) if c]
    nxt: dict[int, list[int]] = {}
    for i in support:
        u, v = g.edges[i]
        nxt.setdefault(u, []).append(i)
        nxt.setdefault(v, []).append(i)
    start = support[0]
    walk = [start]
    # traverse in the direction given by the sign of the starting edge
    u, v = g.edges[start]
    vertex = v if incidence[start] > 0 else u
    prev = start
    while True:
        e1, e2 = nxt[vertex]
        nxt_edge = e2 if e1 == prev else e1
        if nxt_edge == start:
            break
        walk.append(nxt_edge)
        vertex = g.other_endpoint(nxt_edge, vertex)
        prev = nxt_edge
    return walk
