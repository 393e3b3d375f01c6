"""Exact integer and rational linear algebra on small matrices.

Everything here works with Python ints and fractions.Fraction, so coefficient
growth (e.g. inside double description runs) can never overflow.
"""

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def transpose(rows):
    return [tuple(col) for col in zip(*rows)]


def primitive(v):
    """Scale a nonzero rational vector to its primitive integer form.

    The result points in the same direction, has integer entries, and the gcd
    of its entries is 1.  For an integer vector this is v divided by the gcd
    of its entries.
    """
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive representative")
    mult = 1
    for x in v:
        d = x.denominator
        mult = mult * d // gcd(mult, d)
    ints = [int(x * mult) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def is_primitive(v):
    try:
        return primitive(v) == tuple(v)
    except ValueError:
        return False


def determinant(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [[int(x) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    Returns (reduced rows, pivot column indices); zero rows are dropped.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(rref(rows, ncols)[0])


def in_row_span(rows, v):
    """Whether v lies in the rational row span of rows."""
    rows = list(rows)
    base = rank(rows, len(v)) if rows else 0
    return rank(rows + [list(v)], len(v)) == base


def kernel_basis(rows, ncols):
    """Primitive integer basis of {x : r . x = 0 for every row r}.

    Deterministic: computed from the RREF, free columns in increasing order.
    """
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, c in enumerate(pivots):
            x[c] = -reduced[r][f]
        basis.append(primitive(x))
    return basis


def solve(rows, rhs):
    """Solve a square nonsingular rational system; returns a Fraction tuple."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            raise ValueError("singular system")
        m[c], m[pivot_row] = m[pivot_row], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(m[i][n] for i in range(n))


def invert(rows):
    """Exact inverse of a square nonsingular matrix, as Fraction rows."""
    n = len(rows)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        cols.append(solve(rows, e))
    return transpose(cols)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(rows):
    """Smith normal form of an integer matrix.

    Returns (diag, U, V) where U and V are unimodular integer matrices with
    U * m * V diagonal, and each diagonal entry divides the next.  diag has
    min(#rows, #cols) entries, trailing zeros included.
    """
    r = len(rows)
    c = len(rows[0]) if r else 0
    a = [[int(x) for x in row] for row in rows]
    u = _identity(r)
    v = _identity(c)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(r, c):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, r):
            if a[i][t] != 0:
                add_row(i, t, -(a[i][t] // a[t][t]))
                dirty = dirty or a[i][t] != 0
        for j in range(t + 1, c):
            if a[t][j] != 0:
                add_col(j, t, -(a[t][j] // a[t][t]))
                dirty = dirty or a[t][j] != 0
        if dirty:
            continue
        p = a[t][t]
        offender = next(
            (i for i in range(t + 1, r) if any(a[i][j] % p for j in range(t + 1, c))),
            None,
        )
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1
    for i in range(min(r, c)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    diag = [a[i][i] for i in range(min(r, c))]
    return diag, [tuple(row) for row in u], [tuple(row) for row in v]


def positively_spans(vs, dim=None):
    """Whether every point of R^n is a nonnegative combination of vs.

    Equivalent, by duality, to the cone {x : <x, v> >= 0 for all v} being
    {0}; that dual cone is what gets computed.
    """
    vs = [tuple(v) for v in vs]
    if not vs:
        return dim == 0
    from .polyhedra import HCone, dd_convert  # deferred: polyhedra builds on this module

    n = len(vs[0])
    vc = dd_convert(HCone(n, tuple(vs)))
    return not vc.rays and not vc.lineality
