"""Exact rational linear programming, just enough for facet tests.

feasible(eqs, ineqs, n) decides whether a point x in Q^n exists with
x . e = 0 for every e in eqs and x . a >= 1 for every a in ineqs, by a
two-phase simplex with Bland's rule on exact rationals (so it always
terminates).  Everything is tiny: dimensions ~22 and a few dozen rows.
"""

from .exactmath import QQ


def feasible(eqs, ineqs, n):
    """Phase-I simplex feasibility for {x.e = 0, x.a >= 1}.

    Returns (ok, x) with x a rational witness when the system is feasible.
    """
    # standard form: x = u - v with u, v >= 0; a.x - s = 1, s >= 0
    rows = []
    rhs = []
    for e in eqs:
        rows.append(list(e) + [0] * len(ineqs))
        rhs.append(QQ(0))
    for i, a in enumerate(ineqs):
        slack = [0] * len(ineqs)
        slack[i] = -1
        rows.append(list(a) + slack)
        rhs.append(QQ(1))
    m = len(rows)
    if m == 0:
        return True, tuple([QQ(0)] * n)
    width = n + len(ineqs)
    # columns: u (width), v (width), artificials (m)
    tab = []
    for i in range(m):
        r = [QQ(x) for x in rows[i]]
        if rhs[i] < 0:
            r = [-x for x in r]
            b = -rhs[i]
        else:
            b = rhs[i]
        tab.append([*r, *(-x for x in r),
                    *(QQ(1) if k == i else QQ(0) for k in range(m)), b])
    ncols = 2 * width + m
    basis = [2 * width + i for i in range(m)]
    # objective: minimize sum of artificials
    obj = [QQ(0)] * (ncols + 1)
    for i in range(m):
        for j in range(ncols + 1):
            obj[j] += tab[i][j]

    def pivot(r, c):
        pr = tab[r]
        inv = 1 / pr[c]
        tab[r] = [x * inv for x in pr]
        pr = tab[r]
        for i in range(m):
            if i != r and tab[i][c] != 0:
                f = tab[i][c]
                tab[i] = [x - f * y for x, y in zip(tab[i], pr)]
        f = obj[c]
        if f != 0:
            for j in range(ncols + 1):
                obj[j] -= f * pr[j]
        basis[r] = c

    while True:
        col = None
        for j in range(ncols):
            if obj[j] > 0:
                col = j
                break
        if col is None:
            break
        row = None
        best = None
        for i in range(m):
            if tab[i][col] > 0:
                ratio = tab[i][ncols] / tab[i][col]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row is None:
            break  # unbounded in phase I cannot happen, but be safe
        pivot(row, col)
    if obj[ncols] != 0:
        return False, None
    x = [QQ(0)] * n
    for r in range(m):
        b = basis[r]
        val = tab[r][ncols]
        if b < n:
            x[b] += val
        elif width <= b < width + n:
            x[b - width] -= val
    return True, tuple(x)
