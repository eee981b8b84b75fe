"""Integer and rational matrix utilities: Smith normal form, kernels, dets.

Matrices are plain lists of lists; everything is exact (int / Fraction).
The Smith form drives the fixed-locus combinatorics of torus quotients:
component counts come from the nonzero invariant factors and the component
group is read off in the transformed coordinates.
"""

from __future__ import annotations

from fractions import Fraction


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_vec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def rational_det(a) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(a)
    rows = [[Fraction(x) for x in r] for r in a]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        det *= rows[c][c]
        pivot = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / pivot
                rows[i] = [rows[i][j] - f * rows[c][j] for j in range(n)]
    return det


def rational_kernel(a, with_free_columns: bool = False):
    """Reduced-echelon kernel basis of an integer/rational matrix.

    Basis vector i carries coordinate 1 at its free column and 0 at the
    other free columns, so coordinates w.r.t. the basis can be read off at
    the free columns.  With with_free_columns=True, returns (basis, free).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    rows = [[Fraction(x) for x in r] for r in a]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [rows[i][j] - f * rows[r][j] for j in range(ncols)]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    free = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
        free.append(f)
    if with_free_columns:
        return basis, free
    return basis


def rational_inverse(a):
    """Exact inverse of a square rational matrix (raises on singular)."""
    n = len(a)
    rows = [[Fraction(x) for x in r] + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        rows[c], rows[p] = rows[p], rows[c]
        pivot = rows[c][c]
        rows[c] = [x / pivot for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [rows[i][j] - f * rows[c][j] for j in range(2 * n)]
    return [r[n:] for r in rows]


def integer_inverse(a):
    """Inverse of a unimodular integer matrix, as integers."""
    inv = rational_inverse(a)
    out = []
    for r in inv:
        row = []
        for x in r:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(x))
        out.append(row)
    return out


def smith_normal_form(mat):
    """Smith normal form D = P * mat * Q of an integer matrix.

    Returns (diag, P, Q) where diag is the full diagonal of D (zeros
    included), P and Q are unimodular, and the nonzero invariant factors
    are positive with each dividing the next.
    """
    a = [list(map(int, row)) for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    p = mat_identity(nrows)
    q = mat_identity(ncols)

    def row_op(i, j, ci, cj, di, dj):
        # rows (i, j) <- (ci*ri + cj*rj, di*ri + dj*rj), applied to a and p
        for m in (a, p):
            ri = m[i][:]
            rj = m[j][:]
            m[i] = [ci * x + cj * y for x, y in zip(ri, rj)]
            m[j] = [di * x + dj * y for x, y in zip(ri, rj)]

    def col_op(i, j, ci, cj, di, dj):
        for m in (a, q):
            for r in m:
                x, y = r[i], r[j]
                r[i] = ci * x + cj * y
                r[j] = di * x + dj * y

    def bezout(x, y):
        # returns (g, s, t) with s*x + t*y = g
        old_r, r = x, y
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            qq = old_r // r
            old_r, r = r, old_r - qq * r
            old_s, s = s, old_s - qq * s
            old_t, t = t, old_t - qq * t
        return old_r, old_s, old_t

    t = 0
    while t < min(nrows, ncols):
        # find a pivot in the remaining block
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            changed = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    if a[i][t] % a[t][t] == 0:
                        row_op(t, i, 1, 0, -(a[i][t] // a[t][t]), 1)
                    else:
                        # Bezout strictly shrinks |a[t][t]|, so this terminates
                        g, s, u = bezout(a[t][t], a[i][t])
                        x, y = a[t][t] // g, a[i][t] // g
                        row_op(t, i, s, u, -y, x)
                    changed = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    if a[t][j] % a[t][t] == 0:
                        col_op(t, j, 1, 0, -(a[t][j] // a[t][t]), 1)
                    else:
                        g, s, u = bezout(a[t][t], a[t][j])
                        x, y = a[t][t] // g, a[t][j] // g
                        col_op(t, j, s, u, -y, x)
                    changed = True
            if not changed:
                break
        t += 1

    # positive diagonal
    for i in range(min(nrows, ncols)):
        if a[i][i] < 0:
            for m in (a, p):
                m[i] = [-x for x in m[i]]

    # divisibility chain on the nonzero part
    k = min(nrows, ncols)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            j = i + 1
            di, dj = a[i][i], a[j][j]
            if dj and (di == 0 or dj % di):
                if di == 0:
                    row_op(i, j, 0, 1, 1, 0)
                    col_op(i, j, 0, 1, 1, 0)
                else:
                    # stack d_j under d_i, Bezout rows to (gcd, lcm), clear fill-in
                    col_op(i, j, 1, 1, 0, 1)
                    g, s, u = bezout(a[i][i], a[j][i])
                    x, y = a[i][i] // g, a[j][i] // g
                    row_op(i, j, s, u, -y, x)
                    c = a[i][j] // a[i][i]
                    col_op(j, i, 1, -c, 0, 1)
                    if a[i][i] < 0:
                        for m in (a, p):
                            m[i] = [-v for v in m[i]]
                    if a[j][j] < 0:
                        for m in (a, p):
                            m[j] = [-v for v in m[j]]
                changed = True
    diag = [a[i][i] for i in range(k)]
    return diag, p, q
