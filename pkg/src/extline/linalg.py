"""Exact dense and sparse linear algebra over a field object.

Matrices are lists of rows of field scalars.  Dimensions in this package
stay small (a few dozen), so plain Gaussian elimination is the right tool;
the sparse ``LinearSystem`` handles the larger, very sparse systems coming
from chain-map and homotopy solving.
"""

from __future__ import annotations


def zeros(field, m: int, n: int):
    z = field.zero
    return [[z] * n for _ in range(m)]


def identity_matrix(field, n: int):
    M = zeros(field, n, n)
    for i in range(n):
        M[i][i] = field.one
    return M


def mat_copy(M):
    return [row[:] for row in M]


def mat_shape(M):
    return len(M), len(M[0]) if M else 0


def mat_mul(field, A, B, out_cols: int | None = None):
    """A @ B.  When B has no rows its column count is unrecoverable from
    the nested-list encoding, so pass out_cols explicitly in that case."""
    m = len(A)
    k = len(B)
    n = len(B[0]) if k else (out_cols or 0)
    if A and len(A[0]) != k:
        raise ValueError("shape mismatch in mat_mul")
    out = zeros(field, m, n)
    for i in range(m):
        Ai = A[i]
        oi = out[i]
        for t in range(k):
            a = Ai[t]
            if field.is_zero(a):
                continue
            Bt = B[t]
            for j in range(n):
                b = Bt[j]
                if not field.is_zero(b):
                    oi[j] = field.add(oi[j], field.mul(a, b))
    return out


def mat_add(field, A, B):
    return [[field.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(field, A, B):
    return [[field.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(field, c, A):
    return [[field.mul(c, a) for a in row] for row in A]


def mat_eq(field, A, B) -> bool:
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if not field.is_zero(field.sub(a, b)):
                return False
    return True


def is_zero_mat(field, A) -> bool:
    return all(field.is_zero(a) for row in A for a in row)


def transpose(M, ncols: int | None = None):
    if not M:
        return [[] for _ in range(ncols)] if ncols else []
    return [list(col) for col in zip(*M)]


def rref(field, M):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = mat_copy(M)
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        sel = None
        for i in range(r, m):
            if not field.is_zero(R[i][c]):
                sel = i
                break
        if sel is None:
            continue
        R[r], R[sel] = R[sel], R[r]
        iv = field.inv(R[r][c])
        R[r] = [field.mul(iv, x) for x in R[r]]
        for i in range(m):
            if i != r and not field.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field, M) -> int:
    return len(rref(field, M)[1])


def nullspace(field, M, ncols: int | None = None):
    """Basis of {x : Mx = 0} as a list of column vectors (lists)."""
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    if n == 0:
        return []
    if m == 0:
        return [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
    R, pivots = rref(field, M)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(R[r][fc])
        basis.append(v)
    return basis


def solve(field, A, b):
    """One solution x of Ax = b, or None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [A[i][:] + [b[i]] for i in range(m)]
    R, pivots = rref(field, aug)
    for r in range(len(pivots)):
        if pivots[r] == n:
            return None
    # rows past the pivots are all zero in R
    x = [field.zero] * n
    for r, pc in enumerate(pivots):
        if pc < n:
            x[pc] = R[r][n]
    return x


def row_span_basis(field, rows):
    """Reduced basis of the span of the given row vectors."""
    if not rows:
        return []
    R, pivots = rref(field, rows)
    return [R[i] for i in range(len(pivots))]


def span_contains(field, basis_rows, v) -> bool:
    if all(field.is_zero(x) for x in v):
        return True
    if not basis_rows:
        return False
    stacked = [r[:] for r in basis_rows]
    k = rank(field, stacked)
    stacked.append(list(v))
    return rank(field, stacked) == k


def span_equal(field, rows_a, rows_b) -> bool:
    ra = rank(field, rows_a) if rows_a else 0
    rb = rank(field, rows_b) if rows_b else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(field, list(rows_a) + list(rows_b)) == ra


class LinearSystem:
    """Sparse exact linear system  A u = b  built row by row.

    Rows are dicts {column: coefficient}.  Forward elimination keeps every
    stored pivot row normalized (pivot coefficient 1) and the pivot column
    is the minimal column of its row, so back-substitution in decreasing
    pivot order only ever meets already-known values.
    """

    def __init__(self, field, nvars: int):
        self.field = field
        self.nvars = nvars
        self.pivot_rows = {}  # pivot column -> (row dict, rhs)
        self.inconsistent = False

    def add_equation(self, coeffs: dict, rhs):
        F = self.field
        row = {c: v for c, v in coeffs.items() if not F.is_zero(v)}
        b = rhs
        while True:
            hit = None
            for c in row:
                if c in self.pivot_rows:
                    hit = c
                    break
            if hit is None:
                break
            prow, prhs = self.pivot_rows[hit]
            f = row[hit]
            for c, v in prow.items():
                nv = F.sub(row.get(c, F.zero), F.mul(f, v))
                if F.is_zero(nv):
                    row.pop(c, None)
                else:
                    row[c] = nv
            b = F.sub(b, F.mul(f, prhs))
        if not row:
            if not F.is_zero(b):
                self.inconsistent = True
            return
        pc = min(row)
        iv = F.inv(row[pc])
        row = {c: F.mul(iv, v) for c, v in row.items()}
        b = F.mul(iv, b)
        self.pivot_rows[pc] = (row, b)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def solution(self):
        """A particular solution (free variables set to zero), or None."""
        if self.inconsistent:
            return None
        F = self.field
        x = [F.zero] * self.nvars
        for pc in sorted(self.pivot_rows, reverse=True):
            row, b = self.pivot_rows[pc]
            acc = b
            for c, v in row.items():
                if c != pc:
                    acc = F.sub(acc, F.mul(v, x[c]))
            x[pc] = acc
        return x

    def nullspace_dimension(self) -> int:
        return self.nvars - len(self.pivot_rows)

    def nullspace_basis(self):
        F = self.field
        free = [c for c in range(self.nvars) if c not in self.pivot_rows]
        basis = []
        for fc in free:
            x = [F.zero] * self.nvars
            x[fc] = F.one
            for pc in sorted(self.pivot_rows, reverse=True):
                row, _ = self.pivot_rows[pc]
                acc = F.zero
                for c, v in row.items():
                    if c != pc:
                        acc = F.sub(acc, F.mul(v, x[c]))
                x[pc] = acc
            basis.append(x)
        return basis


class SpanBuilder:
    """Incremental row-echelon span of sparse vectors (dict form)."""

    def __init__(self, field):
        self.field = field
        self.pivot_rows = {}

    def add(self, vec: dict) -> bool:
        """Reduce vec against the span; returns True if it enlarged it."""
        F = self.field
        row = {c: v for c, v in vec.items() if not F.is_zero(v)}
        while True:
            hit = None
            for c in row:
                if c in self.pivot_rows:
                    hit = c
                    break
            if hit is None:
                break
            prow = self.pivot_rows[hit]
            f = row[hit]
            for c, v in prow.items():
                nv = F.sub(row.get(c, F.zero), F.mul(f, v))
                if F.is_zero(nv):
                    row.pop(c, None)
                else:
                    row[c] = nv
        if not row:
            return False
        pc = min(row)
        iv = F.inv(row[pc])
        self.pivot_rows[pc] = {c: F.mul(iv, v) for c, v in row.items()}
        return True

    @property
    def dim(self) -> int:
        return len(self.pivot_rows)
