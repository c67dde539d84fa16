"""Exact integer matrix kernel: Smith/Hermite forms, lattice solving, quotients.

Everything here works over arbitrary-precision Python ints.  Matrices are
dense and immutable; the elimination routines copy into plain lists of rows
(or columns) and mutate those.  Pivoting always selects a nonzero entry of
minimal absolute value, with row-major index as tie-break, which keeps
coefficient growth tame on Laplacian-like matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    DimensionMismatch,
    InfiniteCokernel,
    NotSquare,
    NotSublattice,
    RankMismatch,
)


class IntMatrix:
    """A dense integer matrix with immutable entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        ent = tuple(tuple(int(x) for x in row) for row in entries)
        r = len(ent)
        if rows is not None and rows != r:
            raise DimensionMismatch("rows does not match entries")
        if ent:
            c = len(ent[0])
            if any(len(row) != c for row in ent):
                raise DimensionMismatch("ragged rows")
            if cols is not None and c != cols:
                raise DimensionMismatch("cols does not match entries")
        else:
            c = 0 if cols is None else cols
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", c)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        m = cls.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple((0,) * cols for _ in range(rows)))
        return m

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> "IntMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise DimensionMismatch("row count needed for an empty column list")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch("ragged columns")
        m = cls.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", len(columns))
        object.__setattr__(
            m, "entries", tuple(tuple(c[i] for c in columns) for i in range(rows))
        )
        return m

    @classmethod
    def diagonal(cls, diag, rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        diag = list(diag)
        r = len(diag) if rows is None else rows
        c = len(diag) if cols is None else cols
        return cls(
            [[diag[i] if i == j and i < len(diag) else 0 for j in range(c)] for i in range(r)]
        )

    # -- basic accessors ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.entries]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def column_lists(self) -> list[list[int]]:
        return [[row[j] for row in self.entries] for j in range(self.cols)]

    # -- algebra -----------------------------------------------------------

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns([list(r) for r in self.entries], rows=self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        ocols = other.column_lists()
        return IntMatrix.from_columns(
            [[sum(a * b for a, b in zip(row, col)) for row in self.entries] for col in ocols],
            rows=self.rows,
        )

    def mul_vector(self, vec) -> list[int]:
        vec = list(vec)
        if len(vec) != self.cols:
            raise DimensionMismatch(f"{self.shape} times vector of length {len(vec)}")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.entries]

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack with differing row counts")
        return IntMatrix(
            [list(a) + list(b) for a, b in zip(self.entries, other.entries)],
            rows=self.rows,
            cols=self.cols + other.cols,
        )

    def scaled(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in row] for row in self.entries], self.rows, self.cols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch("subtracting mismatched shapes")
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.rows,
            self.cols,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    # -- text fixtures -----------------------------------------------------

    def to_text(self) -> str:
        """Serialize as "rows cols" header plus one line of entries per row."""
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(str(x) for x in row) for row in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        r, c = (int(x) for x in lines[0].split())
        rows = [[int(x) for x in ln.split()] for ln in lines[1 : 1 + r]]
        if len(rows) != r or any(len(row) != c for row in rows):
            raise DimensionMismatch("matrix text does not match its header")
        return cls(rows, rows=r, cols=c)


@dataclass(frozen=True)
class SmithForm:
    """U @ a @ V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    def diagonal(self) -> list[int]:
        k = min(self.d.rows, self.d.cols)
        return [self.d.entries[i][i] for i in range(k)]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group in invariant-factor form d_1 | d_2 | ..., d_i >= 2."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls(())

    @classmethod
    def from_summands(cls, summands) -> "FiniteAbelianGroup":
        """Normalize an arbitrary direct sum of cyclic groups Z_k (k >= 1)."""
        return cls(tuple(normalize_invariant_factors(summands)))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls.from_summands([n])

    @property
    def order(self) -> int:
        o = 1
        for f in self.invariant_factors:
            o *= f
        return o

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def to_json_dict(self) -> dict:
        return {
            "invariant_factors": [str(f) for f in self.invariant_factors],
            "order": str(self.order),
        }

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z{f}" for f in self.invariant_factors)


def normalize_invariant_factors(summands) -> list[int]:
    """Rewrite cyclic summand orders as an ascending divisibility chain.

    Works without factoring: repeatedly replaces a violating adjacent pair
    (a, b) by (gcd(a, b), lcm(a, b)), which preserves the group.
    """
    fs = [int(x) for x in summands if int(x) != 1]
    if any(f < 1 for f in fs):
        raise ValueError("cyclic summands must have positive order")
    fs.sort()
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a, b = fs[i], fs[i + 1]
            if b % a:
                g = gcd(a, b)
                fs[i], fs[i + 1] = g, a * b // g
                changed = True
        if changed:
            fs.sort()
    return [f for f in fs if f != 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def _find_pivot(work, t, m, n):
    """Nonzero entry of minimal |value| in work[t:, t:]; (i, j) or None."""
    best = 0
    best_ij = None
    for i in range(t, m):
        row = work[i]
        for j in range(t, n):
            v = row[j]
            if v:
                av = -v if v < 0 else v
                if best == 0 or av < best:
                    best = av
                    best_ij = (i, j)
                    if av == 1:
                        return best_ij
    return best_ij


def _diagonalize(work, m, n, urows=None, vrows=None):
    """In-place diagonalization by unimodular row/column operations.

    Returns the rank.  When urows/vrows are given (identity-seeded lists of
    row lists), the row ops are mirrored on urows and the column ops on
    vrows, maintaining U @ A @ V = work.
    """
    t = 0
    size = min(m, n)
    while t < size:
        piv = _find_pivot(work, t, m, n)
        if piv is None:
            break
        while True:
            i, j = piv
            if i != t:
                work[t], work[i] = work[i], work[t]
                if urows is not None:
                    urows[t], urows[i] = urows[i], urows[t]
            if j != t:
                for row in work:
                    row[t], row[j] = row[j], row[t]
                if vrows is not None:
                    for row in vrows:
                        row[t], row[j] = row[j], row[t]
            if work[t][t] < 0:
                work[t] = [-x for x in work[t]]
                if urows is not None:
                    urows[t] = [-x for x in urows[t]]
            p = work[t][t]
            pivot_row = work[t]
            # Clear column t below the pivot by floor-division row ops.
            clean = True
            smallest = p
            si, sj = t, t
            for i in range(t + 1, m):
                v = work[i][t]
                if v:
                    q = v // p
                    if q:
                        work[i] = [a - q * b for a, b in zip(work[i], pivot_row)]
                        if urows is not None:
                            urows[i] = [a - q * b for a, b in zip(urows[i], urows[t])]
                    r = work[i][t]
                    if r:
                        clean = False
                        if r < smallest:
                            smallest, si, sj = r, i, t
            if not clean:
                piv = (si, sj)
                continue
            # Column t is now p * e_t, so clearing row t only touches row t.
            clean = True
            for j in range(t + 1, n):
                v = pivot_row[j]
                if v:
                    q = v // p
                    if q:
                        pivot_row[j] = v - q * p
                        if vrows is not None:
                            for row in vrows:
                                row[j] -= q * row[t]
                    r = pivot_row[j]
                    if r:
                        clean = False
                        if r < smallest:
                            smallest, si, sj = r, t, j
            if clean:
                break
            piv = (si, sj)
        t += 1
    return t


def _chain_fix_diagonal(diag):
    """Enforce the divisibility chain on a list of positive diagonal entries."""
    fs = sorted(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a, b = fs[i], fs[i + 1]
            if b % a:
                g = gcd(a, b)
                fs[i], fs[i + 1] = g, a * b // g
                changed = True
        if changed:
            fs.sort()
    return fs


def smith_diagonal(a: IntMatrix) -> tuple[list[int], int]:
    """Invariant-factor diagonal (ascending, positive) and rank, no transforms."""
    work = a.to_lists()
    rank = _diagonalize(work, a.rows, a.cols)
    diag = [work[i][i] for i in range(rank)]
    return _chain_fix_diagonal(diag), rank


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Full Smith normal form with unimodular transforms, U @ a @ V = D."""
    m, n = a.rows, a.cols
    work = a.to_lists()
    urows = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    vrows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rank = _diagonalize(work, m, n, urows, vrows)
    # Repair divisibility violations with explicit row ops, then re-eliminate.
    guard = 0
    while True:
        bad = None
        for i in range(rank - 1):
            if work[i + 1][i + 1] % work[i][i]:
                bad = i
                break
        if bad is None:
            break
        guard += 1
        if guard > 4 * (rank + 1) * (rank + 1):
            raise RuntimeError("divisibility fix-up failed to converge")
        j = bad + 1
        work[bad] = [a_ + b_ for a_, b_ in zip(work[bad], work[j])]
        urows[bad] = [a_ + b_ for a_, b_ in zip(urows[bad], urows[j])]
        _diagonalize(work, m, n, urows, vrows)
    d = IntMatrix(work, rows=m, cols=n)
    return SmithForm(d=d, u=IntMatrix(urows, rows=m, cols=m), v=IntMatrix(vrows, rows=n, cols=n))


def cokernel_structure(a: IntMatrix) -> FiniteAbelianGroup:
    """The finite group Z^rows / (column span of a).

    Raises InfiniteCokernel when the columns do not span a finite-index
    subgroup, i.e. when rank < rows.
    """
    diag, rank = smith_diagonal(a)
    if rank < a.rows:
        raise InfiniteCokernel(f"rank {rank} < {a.rows} rows")
    return FiniteAbelianGroup(tuple(f for f in diag if f > 1))


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise NotSquare(f"{a.shape} is not square")
    n = a.rows
    if n == 0:
        return 1
    work = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = work[k][k]
        for i in range(k + 1, n):
            wi = work[i]
            wk = work[k]
            aik = wi[k]
            work[i] = [
                (pkk * wi[j] - aik * wk[j]) // prev for j in range(n)
            ]
        prev = pkk
    return sign * work[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Column Hermite form, integer kernels and lattice solving
# ---------------------------------------------------------------------------


def _column_echelon(cols, m, vcols=None):
    """In-place column echelon reduction.

    cols is a list of column lists of length m.  Returns the list of pivot
    rows (one per leading column).  Columns beyond the pivot count end up
    identically zero; mirrored column ops are applied to vcols when given.
    The result is canonical: pivots positive, entries left of a pivot reduced
    to [0, pivot).
    """
    n = len(cols)
    t = 0
    pivot_rows = []
    for r in range(m):
        # Gather candidate columns with a nonzero entry in row r.
        while True:
            best = 0
            bj = -1
            for j in range(t, n):
                v = cols[j][r]
                if v:
                    av = -v if v < 0 else v
                    if best == 0 or av < best:
                        best, bj = av, j
                        if av == 1:
                            break
            if bj < 0:
                break
            if bj != t:
                cols[t], cols[bj] = cols[bj], cols[t]
                if vcols is not None:
                    vcols[t], vcols[bj] = vcols[bj], vcols[t]
            if cols[t][r] < 0:
                cols[t] = [-x for x in cols[t]]
                if vcols is not None:
                    vcols[t] = [-x for x in vcols[t]]
            p = cols[t][r]
            ct = cols[t]
            dirty = False
            for j in range(t + 1, n):
                v = cols[j][r]
                if v:
                    q = v // p
                    if q:
                        cols[j] = [a - q * b for a, b in zip(cols[j], ct)]
                        if vcols is not None:
                            vcols[j] = [a - q * b for a, b in zip(vcols[j], vcols[t])]
                    if cols[j][r]:
                        dirty = True
            if not dirty:
                break
        # Did we place a pivot at row r?
        if t < n and cols[t][r]:
            p = cols[t][r]
            ct = cols[t]
            for j in range(t):
                v = cols[j][r]
                q = v // p
                if q:
                    cols[j] = [a - q * b for a, b in zip(cols[j], ct)]
                    if vcols is not None:
                        vcols[j] = [a - q * b for a, b in zip(vcols[j], vcols[t])]
            pivot_rows.append(r)
            t += 1
            if t == n:
                break
    return pivot_rows


def column_hermite_form(a: IntMatrix) -> IntMatrix:
    """Canonical column Hermite form of the column span (zero columns dropped)."""
    cols = a.column_lists()
    pivot_rows = _column_echelon(cols, a.rows)
    return IntMatrix.from_columns(cols[: len(pivot_rows)], rows=a.rows)


def kernel_lattice(a: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel {y : a @ y = 0}, in column Hermite form.

    The basis is saturated: every integer kernel vector is an integer
    combination of the returned columns.
    """
    cols = a.column_lists()
    vcols = [[1 if i == j else 0 for i in range(a.cols)] for j in range(a.cols)]
    pivot_rows = _column_echelon(cols, a.rows, vcols)
    kernel_cols = vcols[len(pivot_rows) :]
    if not kernel_cols:
        return IntMatrix.zeros(a.cols, 0)
    return column_hermite_form(IntMatrix.from_columns(kernel_cols, rows=a.cols))


class LatticeSolver:
    """Repeated integer solving against a fixed column lattice basis."""

    def __init__(self, basis: IntMatrix):
        self.basis = basis
        self.rows = basis.rows
        cols = basis.column_lists()
        vcols = [[1 if i == j else 0 for i in range(basis.cols)] for j in range(basis.cols)]
        self.pivot_rows = _column_echelon(cols, basis.rows, vcols)
        self.hcols = cols[: len(self.pivot_rows)]
        self.vcols = vcols

    def solve(self, x) -> list[int] | None:
        """y with basis @ y = x over the integers, or None."""
        x = list(x)
        if len(x) != self.rows:
            raise DimensionMismatch(f"vector length {len(x)} vs {self.rows} rows")
        coeffs = []
        for r, col in zip(self.pivot_rows, self.hcols):
            v = x[r]
            if v:
                p = col[r]
                if v % p:
                    return None
                q = v // p
                x = [a - q * b for a, b in zip(x, col)]
                coeffs.append(q)
            else:
                coeffs.append(0)
        if any(x):
            return None
        n = self.basis.cols
        y = [0] * n
        for q, vc in zip(coeffs, self.vcols):
            if q:
                for i in range(n):
                    y[i] += q * vc[i]
        return y

    def contains(self, x) -> bool:
        return self.solve(x) is not None


def lattice_member_solve(basis: IntMatrix, x) -> list[int] | None:
    """Solve basis @ y = x over the integers; None when no solution exists."""
    return LatticeSolver(basis).solve(x)


def lattice_quotient(p_basis: IntMatrix, l_basis: IntMatrix) -> FiniteAbelianGroup:
    """Structure of P / L for lattices spanned by the given columns, L <= P.

    Both spans must have equal full rank; raises RankMismatch otherwise and
    NotSublattice when a generator of L is not in P.
    """
    if p_basis.rows != l_basis.rows:
        raise DimensionMismatch("ambient dimensions differ")
    solver = LatticeSolver(p_basis)
    r = len(solver.pivot_rows)
    # Express each generator of L in the Hermite basis of P (rank r coords).
    coeff_cols = [_hermite_coordinates(solver, l_basis.column(j)) for j in range(l_basis.cols)]
    coeff = IntMatrix.from_columns(coeff_cols, rows=r)
    diag, rank = smith_diagonal(coeff)
    if rank < r:
        raise RankMismatch(f"sublattice rank {rank} < lattice rank {r}")
    return FiniteAbelianGroup(tuple(f for f in diag if f > 1))


def _hermite_coordinates(solver: LatticeSolver, x) -> list[int]:
    """Coordinates of x in the Hermite basis columns of the solver's lattice."""
    x = list(x)
    coeffs = []
    for r, col in zip(solver.pivot_rows, solver.hcols):
        v = x[r]
        if v:
            p = col[r]
            if v % p:
                raise NotSublattice("vector is not in the lattice")
            q = v // p
            x = [a - q * b for a, b in zip(x, col)]
            coeffs.append(q)
        else:
            coeffs.append(0)
    if any(x):
        raise NotSublattice("vector is not in the lattice")
    return coeffs
