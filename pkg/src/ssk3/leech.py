"""The Leech lattice and the rank-26 even unimodular lattice U + Lambda.

Leech vectors are stored with raw integer coordinates (xi_inf, xi_0, ...,
xi_22) in the orthonormal frame; the pairing is <x, y> = -(x . y)/8, so the
lattice is negative definite and the -1/8 scaling lives only in the inner
product.  Vectors of U + Lambda are triples (m, n, lam) with
<(m,n,lam), (m',n',lam')> = m n' + m' n + <lam, lam'>.
"""

from itertools import combinations

from .golay import build_golay, popcount, point_index, N


def nu(points):
    """Characteristic vector of a set of point labels."""
    v = [0] * N
    for p in points:
        v[point_index(p)] += 1
    return tuple(v)


def nu_mask(mask):
    return tuple(1 if mask >> i & 1 else 0 for i in range(N))

NU_OMEGA = tuple([1] * N)


def leech_inner(x, y):
    d = sum(a * b for a, b in zip(x, y))
    if d % 8 != 0:
        raise ValueError("vectors do not pair integrally")
    return -d // 8


def leech_contains(v, code=None):
    """Membership test for the Leech lattice (integer frame coordinates)."""
    if code is None:
        code = build_golay()
    m = v[0] % 2
    s = 0
    masks = [0, 0, 0, 0]
    for i, x in enumerate(v):
        if x % 2 != m:
            return False
        s += x
        masks[x % 4] |= 1 << i
    if (s - 4 * m) % 8 != 0:
        return False
    # each residue class mod 4 must cut out a C-set (0 and Omega included)
    return all(mask in code.codewords for mask in masks)


def _sign_vectors(mask, code):
    """All sign assignments on the support mask, as lists of +-1 positions."""
    pos = [i for i in range(N) if mask >> i & 1]
    out = []
    for bits in range(1 << len(pos)):
        signs = [-1 if bits >> k & 1 else 1 for k in range(len(pos))]
        out.append(list(zip(pos, signs)))
    return out


def _lambda4_candidates(code):
    # (+-2^8, 0^16)
    for k in code.octads:
        pos = [i for i in range(N) if k >> i & 1]
        for bits in range(256):
            v = [0] * N
            for t, i in enumerate(pos):
                v[i] = -2 if bits >> t & 1 else 2
            yield tuple(v)
    # (+-3, +-1^23): base nu_Omega - 2 nu_S with a +-4 bump at one point
    cs = sorted(code.codewords)
    for s_mask in cs:
        base = [(-1 if s_mask >> i & 1 else 1) for i in range(N)]
        for p in range(N):
            v = list(base)
            v[p] += 4 if s_mask >> p & 1 else -4
            yield tuple(v)
    # (+-4^2, 0^22)
    for i, j in combinations(range(N), 2):
        for si in (4, -4):
            for sj in (4, -4):
                v = [0] * N
                v[i], v[j] = si, sj
                yield tuple(v)


def _lambda6_candidates(code):
    # (+-2^12, 0^12)
    for k in code.dodecads():
        pos = [i for i in range(N) if k >> i & 1]
        for bits in range(1 << 12):
            v = [0] * N
            for t, i in enumerate(pos):
                v[i] = -2 if bits >> t & 1 else 2
            yield tuple(v)
    # (+-3^3, +-1^21)
    cs = sorted(code.codewords)
    for s_mask in cs:
        base = [(-1 if s_mask >> i & 1 else 1) for i in range(N)]
        for trip in combinations(range(N), 3):
            v = list(base)
            for p in trip:
                v[p] += 4 if s_mask >> p & 1 else -4
            yield tuple(v)
    # (+-4, +-2^8, 0^15)
    for k in code.octads:
        pos = [i for i in range(N) if k >> i & 1]
        outside = [i for i in range(N) if not k >> i & 1]
        for p in outside:
            for sp in (4, -4):
                for bits in range(256):
                    v = [0] * N
                    v[p] = sp
                    for t, i in enumerate(pos):
                        v[i] = -2 if bits >> t & 1 else 2
                    yield tuple(v)
    # (+-5, +-1^23)
    for s_mask in cs:
        base = [(-1 if s_mask >> i & 1 else 1) for i in range(N)]
        for p in range(N):
            v = list(base)
            v[p] += -4 if s_mask >> p & 1 else 4
            yield tuple(v)


def enumerate_lambda(n, constraints=(), code=None):
    """All Leech vectors of norm -n (n = 4 or 6) meeting the constraints.

    Each constraint is a pair (c, k) asking <lam, c> = k for a frame vector
    c.  Candidates are produced shape family by shape family and filtered
    through the membership test, so the sign rules never have to be spelled
    out; the result is sorted lexicographically.
    """
    if code is None:
        code = build_golay()
    if n == 4:
        gen = _lambda4_candidates(code)
    elif n == 6:
        gen = _lambda6_candidates(code)
    else:
        raise ValueError("only norms -4 and -6 are enumerable by shape")
    cons = [(tuple(c), -8 * k) for c, k in constraints]
    out = []
    for v in gen:
        ok = True
        for c, dot in cons:
            if sum(a * b for a, b in zip(v, c)) != dot:
                ok = False
                break
        if ok and leech_contains(v, code):
            out.append(v)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# The rank-26 lattice L = U + Lambda
# ---------------------------------------------------------------------------

def l_inner(u, v):
    m, n, lam = u
    mm, nn, ll = v
    return m * nn + mm * n + leech_inner(lam, ll)


def l_norm(u):
    return l_inner(u, u)


def l_add(u, v):
    return (u[0] + v[0], u[1] + v[1],
            tuple(a + b for a, b in zip(u[2], v[2])))


def l_sub(u, v):
    return (u[0] - v[0], u[1] - v[1],
            tuple(a - b for a, b in zip(u[2], v[2])))


def l_scale(c, u):
    return (c * u[0], c * u[1], tuple(c * a for a in u[2]))


WEYL_W = (1, 0, tuple([0] * N))


def leech_root(lam):
    """The norm(-2) vector (-1 - lam^2/2, 1, lam) pairing 1 with (1,0,0)."""
    nrm = leech_inner(lam, lam)
    r = (-1 - nrm // 2, 1, tuple(lam))
    assert l_norm(r) == -2
    assert l_inner(r, WEYL_W) == 1
    return r
