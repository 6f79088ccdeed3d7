"""Exact integer / rational linear algebra.

Everything in this package runs on arbitrary-precision integers and exact
rationals; no floating point is used anywhere.  Matrices are plain lists of
lists, vectors are tuples or lists.  gmpy2 supplies fast mpq/mpz when
available, with fractions.Fraction as a drop-in fallback.
"""

try:
    from gmpy2 import mpq as QQ, mpz as ZZ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

    def ZZ(x):
        return int(x)

from math import gcd


def vec(xs):
    return tuple(int(x) for x in xs)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, u):
    return tuple(c * a for a in u)

def vec_dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_content(u):
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for a in u:
        g = gcd(g, int(a))
    return g


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_copy(a):
    return [list(row) for row in a]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v, a):
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0])))


def mat_eq(a, b):
    return all(list(ra) == list(rb) for ra, rb in zip(a, b))


def det(a):
    """Determinant by fraction-free Bareiss elimination (integer entries)."""
    n = len(a)
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_rational(a):
    """Determinant of a matrix with rational entries."""
    n = len(a)
    m = [[QQ(x) for x in row] for row in a]
    d = QQ(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            return QQ(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d *= m[k][k]
        inv = 1 / QQ(m[k][k])
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] * inv
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return d


def mat_inverse(a):
    """Exact inverse over the rationals; raises ValueError if singular."""
    n = len(a)
    m = [[QQ(x) for x in row] + [QQ(1) if i == j else QQ(0) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / QQ(m[k][k])
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:] for row in m]


def solve_left(a, b):
    """Solve x * a = b for a row vector x (a square and invertible)."""
    ainv = mat_inverse(a)
    return vec_mat(b, ainv)


def is_integral(v):
    return all(QQ(x).denominator == 1 for x in v)


def to_int_vec(v):
    return tuple(int(x) for x in v)


# ---------------------------------------------------------------------------
# Hermite / Smith normal forms over Z
# ---------------------------------------------------------------------------

def hnf_row(a):
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular, u * a = h, h in row echelon form with
    non-negative pivots.
    """
    m = [[int(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = mat_identity(rows)
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                if piv is None or abs(m[i][c]) < abs(m[piv][c]):
                    piv = i
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        u[r], u[piv] = u[piv], u[r]
        while True:
            done = True
            for i in range(r + 1, rows):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if m[i][c] != 0:
                        m[r], m[i] = m[i], m[r]
                        u[r], u[i] = u[i], u[r]
                        done = False
            if done:
                break
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q != 0:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == rows:
            break
    return m, u


def kernel_int(a):
    """Basis (list of rows) of the integer kernel {x : x * a = 0}.

    Computed as the rational kernel followed by saturation, which avoids
    the coefficient explosion of a straight Hermite reduction on wide
    systems: the saturation of the row space of an integer matrix B with
    Smith form U B V = [D | 0] is spanned by the first rank rows of V^-1.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    # one equation per column: sum_i a[i][c] x_i = 0
    eq = [[QQ(a[i][c]) for i in range(rows)] for c in range(cols)]
    pivots = []  # (equation row in reduced form, bound variable)
    bound = set()
    r = 0
    for var in range(rows):
        piv = None
        for i in range(r, len(eq)):
            if eq[i][var] != 0:
                piv = i
                break
        if piv is None:
            continue
        eq[r], eq[piv] = eq[piv], eq[r]
        inv = 1 / eq[r][var]
        eq[r] = [x * inv for x in eq[r]]
        for i in range(len(eq)):
            if i != r and eq[i][var] != 0:
                f = eq[i][var]
                eq[i] = [x - f * y for x, y in zip(eq[i], eq[r])]
        pivots.append((r, var))
        bound.add(var)
        r += 1
    free = [v for v in range(rows) if v not in bound]
    if not free:
        return []
    basis = []
    for fr in free:
        v = [QQ(0)] * rows
        v[fr] = QQ(1)
        for row_i, var in pivots:
            v[var] = -eq[row_i][fr]
        den = 1
        for x in v:
            d = int(QQ(x).denominator)
            den = den * d // gcd(den, d)
        basis.append([int(x * den) for x in v])
    if len(basis) == rows:
        return basis
    return _saturate_rows(basis)


def _saturate_rows(basis):
    """Saturation of the row span of an integer matrix in Z^n."""
    d, u, v = snf_with_transforms(basis)
    r = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)
    vinv = mat_inverse(v)
    out = []
    for i in range(r):
        row = [QQ(x) for x in vinv[i]]
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    return out


def snf_with_transforms(a):
    """Smith normal form.  Returns (d, u, v) with u * a * v = d diagonal,
    d[i][i] | d[i+1][i+1], and u, v unimodular.

    Pivoting picks the smallest nonzero absolute value, which keeps the
    intermediate entries small for the lattices handled here.
    """
    m = [[int(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    u = mat_identity(rows)
    v = mat_identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        m[i] = [x - q * y for x, y in zip(m[i], m[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            m[r][i] -= q * m[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        again = False
        for i in range(t + 1, rows):
            if m[i][t] != 0:
                row_op(i, t, m[i][t] // m[t][t])
                if m[i][t] != 0:
                    again = True
        for j in range(t + 1, cols):
            if m[t][j] != 0:
                col_op(j, t, m[t][j] // m[t][t])
                if m[t][j] != 0:
                    again = True
        if again:
            continue
        # divisibility: fold any entry not divisible by the pivot back in
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)
            continue
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return m, u, v


# ---------------------------------------------------------------------------
# LDL^t decomposition of a positive-definite rational form
# ---------------------------------------------------------------------------

def ldl(gram):
    """LDL^t of a symmetric positive-definite rational matrix.

    Returns (lower, diag) with lower unit lower triangular (list of rows of
    QQ) and diag the list of positive pivots; gram = L D L^t.
    Raises ValueError if the form is not positive definite.
    """
    n = len(gram)
    lw = [[QQ(0)] * n for _ in range(n)]
    dg = [QQ(0)] * n
    for j in range(n):
        s = QQ(gram[j][j])
        for k in range(j):
            s -= lw[j][k] * lw[j][k] * dg[k]
        if s <= 0:
            raise ValueError("form is not positive definite")
        dg[j] = s
        lw[j][j] = QQ(1)
        for i in range(j + 1, n):
            t = QQ(gram[i][j])
            for k in range(j):
                t -= lw[i][k] * lw[j][k] * dg[k]
            lw[i][j] = t / s
    return lw, dg


def floor_q(q):
    """Floor of a rational."""
    q = QQ(q)
    return q.numerator // q.denominator


def ceil_q(q):
    q = QQ(q)
    return -((-q.numerator) // q.denominator)
