"""Exact integer and rational linear algebra on small dense matrices.

Everything here works on plain ``list[list[int]]`` (rows) or
``list[list[Fraction]]`` and never touches floating point, so results are
exact for arbitrarily large entries.  Matrices are small (a handful of rows
and columns), which keeps the classical algorithms below entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]
IntVector = list[int]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(a) -> list[list]:
    return [row[:] for row in a]


def transpose(a) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a, b) -> list[list]:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            x = arow[t]
            if x:
                brow = b[t]
                for j in range(m):
                    orow[j] += x * brow[j]
    return out


def matvec(a, v) -> list:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_matrix(a) -> bool:
    return all(all(x == 0 for x in row) for row in a)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


def hermite_columns(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite reduction.

    Returns ``(h, u)`` with ``a @ u == h``, ``u`` unimodular and ``h`` in
    column echelon form: pivots move down and right, pivot entries are
    positive, entries left of a pivot in its row are reduced modulo the
    pivot, and zero columns are gathered at the right end.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = copy_matrix(a)
    u = identity(cols)

    def col_op_combine(j1: int, j2: int, x: int, y: int, p: int, q: int) -> None:
        # (c_{j1}, c_{j2}) <- (x c_{j1} + y c_{j2}, p c_{j1} + q c_{j2})
        for m in (h, u):
            for r in m:
                v1, v2 = r[j1], r[j2]
                r[j1] = x * v1 + y * v2
                r[j2] = p * v1 + q * v2

    def col_addmul(dst: int, src: int, k: int) -> None:
        for m in (h, u):
            for r in m:
                r[dst] += k * r[src]

    def col_swap(j1: int, j2: int) -> None:
        for m in (h, u):
            for r in m:
                r[j1], r[j2] = r[j2], r[j1]

    def col_negate(j: int) -> None:
        for m in (h, u):
            for r in m:
                r[j] = -r[j]

    pivot_col = 0
    for row in range(rows):
        if pivot_col >= cols:
            break
        nz = [j for j in range(pivot_col, cols) if h[row][j] != 0]
        if not nz:
            continue
        lead = nz[0]
        for j in nz[1:]:
            aa, bb = h[row][lead], h[row][j]
            g, x, y = _xgcd(aa, bb)
            col_op_combine(lead, j, x, y, -(bb // g), aa // g)
        if lead != pivot_col:
            col_swap(lead, pivot_col)
        if h[row][pivot_col] < 0:
            col_negate(pivot_col)
        piv = h[row][pivot_col]
        for j in range(pivot_col):
            if h[row][j]:
                col_addmul(j, pivot_col, -(h[row][j] // piv))
        pivot_col += 1
    return h, u


def kernel_basis(a: IntMatrix) -> list[IntVector]:
    """Basis of the integer kernel lattice ``{x : a x = 0}``.

    The returned vectors generate the full kernel (which is automatically a
    saturated sublattice), each given as a list of ints.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [list(e) for e in identity(cols)]
    h, u = hermite_columns(a)
    basis = []
    for j in range(cols):
        if all(h[r][j] == 0 for r in range(rows)):
            basis.append([u[r][j] for r in range(cols)])
    return basis


def primitive(v: IntVector) -> IntVector:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    for x in v:
        if x != 0:
            return v if x > 0 else [-y for y in v]
    return list(v)


class SmithForm:
    """Smith normal form ``s = u a v`` with unimodular ``u``, ``v``.

    ``uinv`` and ``vinv`` are maintained so that ``a = uinv s vinv``.
    """

    def __init__(self, a: IntMatrix):
        rows = len(a)
        cols = len(a[0]) if rows else 0
        s = copy_matrix(a)
        u, uinv = identity(rows), identity(rows)
        v, vinv = identity(cols), identity(cols)

        def row_swap(i, j):
            s[i], s[j] = s[j], s[i]
            u[i], u[j] = u[j], u[i]
            for r in uinv:
                r[i], r[j] = r[j], r[i]

        def row_addmul(dst, src, k):
            # s <- L s with L = I + k E_{dst,src}; uinv <- uinv L^{-1}
            for m_row, a_row in ((s[dst], s[src]), (u[dst], u[src])):
                for t in range(len(m_row)):
                    m_row[t] += k * a_row[t]
            for r in uinv:
                r[src] -= k * r[dst]

        def row_negate(i):
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
            for r in uinv:
                r[i] = -r[i]

        def col_swap(i, j):
            for r in s:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]
            vinv[i], vinv[j] = vinv[j], vinv[i]

        def col_addmul(dst, src, k):
            for r in s:
                r[dst] += k * r[src]
            for r in v:
                r[dst] += k * r[src]
            for t in range(len(vinv[src])):
                vinv[src][t] -= k * vinv[dst][t]

        def col_negate(j):
            for r in s:
                r[j] = -r[j]
            for r in v:
                r[j] = -r[j]
            vinv[j] = [-x for x in vinv[j]]

        t = 0
        limit = min(rows, cols)
        while t < limit:
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(s[i][j])
                    if x and (best is None or x < best):
                        best, pivot = x, (i, j)
            if pivot is None:
                break
            i, j = pivot
            if i != t:
                row_swap(t, i)
            if j != t:
                col_swap(t, j)
            if s[t][t] < 0:
                row_negate(t)
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    row_addmul(i, t, -q)
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    col_addmul(j, t, -q)
                    if s[t][j]:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by s[t][t]
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if s[i][j] % s[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                row_addmul(t, offender, 1)
                continue
            t += 1

        self.s = s
        self.u, self.uinv = u, uinv
        self.v, self.vinv = v, vinv
        self.rank = sum(1 for i in range(limit) if s[i][i] != 0)

    @property
    def invariant_factors(self) -> list[int]:
        return [self.s[i][i] for i in range(self.rank)]


def saturation(a: IntMatrix) -> list[IntVector]:
    """Basis of ``span_R(columns of a) ∩ Z^m``, as column vectors.

    This is the smallest saturated lattice containing the column lattice of
    ``a``; empty list when ``a`` has rank zero.
    """
    sf = SmithForm(a)
    # a = uinv s vinv, so the real column span is uinv applied to the span of
    # the first ``rank`` coordinate axes; its integer points come from the
    # first ``rank`` columns of uinv.
    return [[sf.uinv[r][j] for r in range(len(a))] for j in range(sf.rank)]


def complete_to_unimodular(basis_cols: list[IntVector], dim: int) -> IntMatrix:
    """Unimodular matrix whose first ``k`` columns span the given lattice.

    Requires the column lattice to be saturated of full column rank; raises
    ``ValueError`` otherwise.
    """
    k = len(basis_cols)
    if k == 0:
        return identity(dim)
    a = [[basis_cols[j][r] for j in range(k)] for r in range(dim)]
    sf = SmithForm(a)
    if sf.rank != k or any(f != 1 for f in sf.invariant_factors):
        raise ValueError("column lattice is not saturated of full rank")
    # a v = uinv s, and s has unit pivots, so the first k columns of uinv
    # span the same lattice as the columns of a.
    return copy_matrix(sf.uinv)


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for t in range(n - 1):
        if m[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if m[i][t]), None)
            if swap is None:
                return 0
            m[t], m[swap] = m[swap], m[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) // prev
            m[i][t] = 0
        prev = m[t][t]
    return sign * m[n - 1][n - 1]


def rational_inverse(a) -> list[list[Fraction]]:
    """Inverse of a square matrix with int/Fraction entries, over Q."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for t in range(n):
        piv = next((i for i in range(t, n) if m[i][t] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[t], m[piv] = m[piv], m[t]
        inv = Fraction(1) / m[t][t]
        m[t] = [x * inv for x in m[t]]
        for i in range(n):
            if i != t and m[i][t]:
                f = m[i][t]
                m[i] = [x - f * y for x, y in zip(m[i], m[t])]
    return [row[n:] for row in m]


def rational_matvec(a, v) -> list[Fraction]:
    return [sum((Fraction(row[j]) * v[j] for j in range(len(v))), Fraction(0))
            for row in a]
