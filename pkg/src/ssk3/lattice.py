"""Even lattices presented by exact integer Gram matrices.

A lattice here is a free Z-module with a fixed basis e_1, ..., e_n and an
integer Gram matrix gram[i][j] = <e_i, e_j>.  Vectors are written as row
vectors of coordinates; isometries act on row vectors from the right, so g
is an isometry iff g * gram * g^t = gram.

Two coordinate systems are used throughout:

* primal coordinates: integer (or rational) combinations of the e_i;
* dual coordinates: a vector of M^v is stored by its pairings with the e_i,
  i.e. in the basis e_1^v, ..., e_n^v.  Conversion dual -> primal is right
  multiplication by gram^-1, primal -> dual by gram.
"""

from .exactmath import (
    QQ, det, mat_inverse, mat_identity, mat_mul, mat_transpose, mat_vec,
    vec_mat, kernel_int, snf_with_transforms, hnf_row, ldl, floor_q,
    vec_add, vec_sub, vec_dot, vec_content, is_integral, to_int_vec,
)
from math import isqrt, gcd


class LatticeError(ValueError):
    pass


class ResourceExhausted(RuntimeError):
    """An enumeration or search exceeded its configured budget."""


class GramLattice:
    """An even non-degenerate lattice given by its Gram matrix."""

    def __init__(self, gram):
        self.gram = [[int(x) for x in row] for row in gram]
        self.rank = len(self.gram)
        for i in range(self.rank):
            if len(self.gram[i]) != self.rank:
                raise LatticeError("gram matrix is not square")
            if self.gram[i][i] % 2 != 0:
                raise LatticeError("lattice is not even")
            for j in range(self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeError("gram matrix is not symmetric")
        self.disc = det(self.gram)
        if self.disc == 0:
            raise LatticeError("gram matrix is degenerate")
        self._inv = None

    @property
    def gram_inverse(self):
        if self._inv is None:
            self._inv = mat_inverse(self.gram)
        return self._inv

    def inner(self, x, y):
        """Pairing of two vectors in primal coordinates."""
        return vec_dot(vec_mat(x, self.gram), y)

    def norm(self, x):
        return self.inner(x, x)

    def inner_dual(self, xi, eta):
        """Pairing of two vectors given in dual coordinates."""
        return vec_dot(vec_mat(xi, self.gram_inverse), eta)

    def dual_to_primal(self, xi):
        return vec_mat(xi, self.gram_inverse)

    def primal_to_dual(self, x):
        return vec_mat(x, self.gram)

    def is_negative_definite(self):
        try:
            ldl([[-x for x in row] for row in self.gram])
        except ValueError:
            return False
        return True

    def signature_hyperbolic(self):
        """True iff the signature is (1, rank-1)."""
        # count sign changes of leading principal minors after a basis
        # permutation is overkill; use the characteristic of the LDL of
        # neither sign: fall back on minors of the rational Gauss reduction.
        m = [[QQ(x) for x in row] for row in self.gram]
        n = self.rank
        pos = neg = 0
        idx = list(range(n))
        for k in range(n):
            piv = None
            for i in range(k, n):
                if m[i][i] != 0:
                    piv = i
                    break
            if piv is None:
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if m[i][j] != 0:
                            for r in range(k, n):
                                m[i][r] += m[j][r]
                            for r in range(k, n):
                                m[r][i] += m[r][j]
                            piv = i
                            break
                    if piv is not None:
                        break
            if piv is None:
                break
            m[k], m[piv] = m[piv], m[k]
            for r in range(n):
                m[r][k], m[r][piv] = m[r][piv], m[r][k]
            d = m[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, n):
                f = m[i][k] / d
                if f != 0:
                    for j in range(k, n):
                        m[i][j] -= f * m[k][j]
                    for j in range(k, n):
                        m[j][i] = m[i][j]
        return pos == 1 and neg == self.rank - 1


def dual_basis(lat):
    """Rows are the primal rational coordinates of e_1^v, ..., e_n^v."""
    return lat.gram_inverse


def reflect(lat, r, x):
    """Reflection s_r(x) = x + <x, r> r for a (-2)-vector r."""
    if lat.norm(r) != -2:
        raise LatticeError("reflection vector must have norm -2")
    c = vec_dot(vec_mat(x, lat.gram), r)
    return tuple(x[i] + c * r[i] for i in range(lat.rank))


class DiscriminantGroup:
    """The finite group A_M = M^v / M with its Q/2Z-valued quadratic form."""

    def __init__(self, lat):
        self.lattice = lat
        d, u, v = snf_with_transforms(lat.gram)
        self._v = v
        self._vinv = mat_inverse(v)
        self._divisors = [d[i][i] for i in range(lat.rank)]
        self.indices = [i for i in range(lat.rank) if self._divisors[i] != 1]
        self.order_list = [self._divisors[i] for i in self.indices]
        # generator i is the class of the dual vector with these dual coords
        self.generator_list = [
            to_int_vec(self._vinv[i]) for i in self.indices]
        self.order = 1
        for m in self.order_list:
            self.order *= m

    def class_coords(self, xi):
        """Coordinates of the class of a dual-coordinate vector xi."""
        w = vec_mat(xi, self._v)
        return tuple(int(w[self.indices[k]]) % self.order_list[k]
                     for k in range(len(self.indices)))

    def lift(self, coords):
        """A dual-coordinate representative of the class with given coords."""
        xi = [0] * self.lattice.rank
        for k, c in enumerate(coords):
            gen = self.generator_list[k]
            xi = [a + c * b for a, b in zip(xi, gen)]
        return tuple(xi)

    def elements(self):
        from itertools import product
        return product(*[range(m) for m in self.order_list])

    def qform(self, coords):
        """q(x) in Q/2Z, represented in [0, 2)."""
        xi = self.lift(coords)
        val = self.lattice.inner_dual(xi, xi)
        two = QQ(2)
        return val - two * floor_q(val / two)

    def bform(self, coords1, coords2):
        """Bilinear form b(x, y) in Q/Z, represented in [0, 1)."""
        xi = self.lift(coords1)
        eta = self.lift(coords2)
        val = self.lattice.inner_dual(xi, eta)
        return val - floor_q(val)

    def qform_matrix(self):
        """Matrix [q(g_i) on diagonal, b(g_i,g_j) off] over Q (mod 2Z / Z)."""
        k = len(self.generator_list)
        out = [[QQ(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                ei = tuple(1 if t == i else 0 for t in range(k))
                ej = tuple(1 if t == j else 0 for t in range(k))
                out[i][j] = self.qform(ei) if i == j else self.bform(ei, ej)
        return out


def discriminant_group(lat):
    disc = DiscriminantGroup(lat)
    assert disc.order == abs(lat.disc)
    return disc


# ---------------------------------------------------------------------------
# Vector enumeration in definite lattices
# ---------------------------------------------------------------------------

def _shifted_enumerate(gram_q, shift, target):
    """All integer z with (z + shift) * gram_q * (z + shift)^t = target.

    gram_q is positive definite rational, shift rational, target rational.
    Yields tuples in lexicographically sorted order.
    """
    n = len(gram_q)
    if n == 0:
        return iter([()] if target == 0 else [])
    if target < 0:
        return iter([])
    lower, diag = ldl(gram_q)
    shift = [QQ(s) for s in shift]
    sols = []
    z = [0] * n

    # Q(x) = sum_i diag[i] * u_i^2 with u_i = x_i + sum_{j>i} x_j L[j][i];
    # DFS from coordinate n-1 down to 0 with exact interval bounds.
    def rec(i, rem, tail):
        # tail[k] = sum_{j>i} (z_j + shift_j) * lower[j][k] for k <= i
        if i < 0:
            if rem == 0:
                sols.append(tuple(z))
            return
        d = diag[i]
        c = shift[i] + tail[i]
        # admissible z_i: d * (z_i + c)^2 <= rem
        bound = rem / d
        num, den = bound.numerator, bound.denominator
        cd = int(c.denominator)
        cn = int(c.numerator)
        # t = floor(cd * sqrt(bound)), exactly
        t = isqrt((int(num) * cd * cd) // int(den))
        # zhi = floor(sqrt(bound) - c): off by at most one, fix exactly
        zhi = (t - cn + 1) // cd
        if d * (QQ(zhi) + c) ** 2 > rem:
            zhi -= 1
        # zlo = ceil(-sqrt(bound) - c)
        zlo = -((t + 1 + cn) // cd)
        if zlo <= zhi and d * (QQ(zlo) + c) ** 2 > rem:
            zlo += 1
        for zi in range(zlo, zhi + 1):
            u = QQ(zi) + c
            rem2 = rem - d * u * u
            if rem2 < 0:
                continue
            z[i] = zi
            if i > 0:
                xf = QQ(zi) + shift[i]
                rec(i - 1, rem2, [tail[k] + xf * lower[i][k] for k in range(i)])
            else:
                rec(-1, rem2, None)
        z[i] = 0

    rec(n - 1, QQ(target), [QQ(0)] * n)
    sols.sort()
    return iter(sols)


def solve_int_system(mat, vals):
    """One integer solution x of x * mat = vals, or None.

    mat is n x m integer, vals length m.
    """
    n = len(mat)
    d, u, v = snf_with_transforms(mat)
    w = vec_mat(vals, v)  # length m
    m = len(vals)
    y = [0] * n
    for i in range(min(n, m)):
        di = d[i][i]
        if di == 0:
            if w[i] != 0:
                return None
        else:
            if w[i] % di != 0:
                return None
            y[i] = w[i] // di
    for i in range(min(n, m), m):
        if w[i] != 0:
            return None
    return vec_mat(y, u)


def enumerate_definite(lat, target_norm, affine_constraints=(), dual=False):
    """All lattice vectors v with v^2 = target_norm and <v, c_i> = k_i.

    The lattice must be negative definite.  With dual=True the search runs
    over the dual lattice and vectors are returned in dual coordinates; the
    constraints c_i are always given in primal coordinates.  The result is
    sorted lexicographically.
    """
    if not lat.is_negative_definite():
        raise LatticeError("enumeration requires a negative definite lattice")
    n = lat.rank
    target = QQ(target_norm)
    if target > 0:
        return []
    if dual:
        gram_q = [[-QQ(x) for x in row] for row in lat.gram_inverse]
    else:
        gram_q = [[-QQ(x) for x in row] for row in lat.gram]
    if affine_constraints:
        cvecs = [c for c, _ in affine_constraints]
        kvals = [k for _, k in affine_constraints]
        if dual:
            cols = [[int(c[i]) for i in range(n)] for c in cvecs]
        else:
            cols = [list(vec_mat(c, lat.gram)) for c in cvecs]
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
        x0 = solve_int_system(mat, [int(k) for k in kvals])
        if x0 is None:
            return []
        kern = kernel_int(mat)
        if not kern:
            val = sum(QQ(a) * QQ(b) for a, b in
                      zip(vec_mat(x0, gram_q), x0))
            return [tuple(x0)] if val == -target else []
        k = len(kern)
        kq = mat_mul([list(r) for r in kern],
                     mat_mul(gram_q, mat_transpose([list(r) for r in kern])))
        rhs = vec_mat(vec_mat(x0, gram_q), mat_transpose([list(r) for r in kern]))
        kq_inv = mat_inverse(kq)
        sigma = vec_mat(rhs, kq_inv)
        const = sum(a * b for a, b in zip(vec_mat(x0, gram_q), x0)) \
            - sum(a * b for a, b in zip(vec_mat(sigma, kq), sigma))
        t2 = -target - const
        out = []
        for z in _shifted_enumerate(kq, sigma, t2):
            v = list(x0)
            for j in range(k):
                for i in range(n):
                    v[i] += z[j] * kern[j][i]
            out.append(tuple(v))
        out.sort()
        return out
    out = [tuple(z) for z in _shifted_enumerate(gram_q, [0] * n, -target)]
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Orthogonal groups
# ---------------------------------------------------------------------------

def is_isometry(lat, g):
    gt = mat_transpose(g)
    return mat_mul(g, mat_mul(lat.gram, gt)) == lat.gram


def orthogonal_group_definite(lat, max_nodes=2_000_000):
    """Complete list of isometries of a negative definite lattice.

    Backtracks over images of the basis vectors among vectors of equal norm,
    pruning with partial Gram compatibility.  Basis positions are processed
    in order of ascending |norm|.
    """
    if not lat.is_negative_definite():
        raise LatticeError("orthogonal group search needs a definite lattice")
    n = lat.rank
    order = sorted(range(n), key=lambda i: (-lat.gram[i][i], i))
    by_norm = {}
    for i in order:
        nm = lat.gram[i][i]
        if nm not in by_norm:
            by_norm[nm] = enumerate_definite(lat, nm)
    pair = {}
    nodes = 0
    images = [None] * n
    found = []

    def rec(pos):
        nonlocal nodes
        if pos == n:
            g = [list(images[i]) for i in range(n)]
            found.append(g)
            return
        i = order[pos]
        for cand in by_norm[lat.gram[i][i]]:
            nodes += 1
            if nodes > max_nodes:
                raise ResourceExhausted("orthogonal group search budget")
            ok = True
            gc = vec_mat(cand, lat.gram)
            for q in range(pos):
                j = order[q]
                if vec_dot(gc, images[j]) != lat.gram[i][j]:
                    ok = False
                    break
            if ok:
                images[i] = cand
                rec(pos + 1)
                images[i] = None

    rec(0)
    for g in found:
        assert is_isometry(lat, g)
    return found


def action_on_discriminant(lat, g, disc=None):
    """Matrix of the induced action of an isometry g on A_M.

    Row k is the coordinate vector of (generator_k)^g in the generator
    basis, with entries reduced modulo the generator orders.
    """
    if not is_isometry(lat, g):
        raise LatticeError("g is not an isometry")
    if disc is None:
        disc = discriminant_group(lat)
    conj = mat_mul(lat.gram_inverse, mat_mul([list(r) for r in g], lat.gram))
    rows = []
    for gen in disc.generator_list:
        img = vec_mat(gen, conj)
        # img must again be integral in dual coordinates
        assert is_integral(img)
        rows.append(list(disc.class_coords(to_int_vec(img))))
    return rows


def orthogonal_group_discriminant(disc):
    """All automorphisms of (A_M, q_M), as matrices in generator basis."""
    from itertools import product
    k = len(disc.generator_list)
    if k == 0:
        return [[]]
    elems = list(disc.elements())
    qv = {e: disc.qform(e) for e in elems}
    auts = []
    gens_q = [qv[tuple(1 if t == i else 0 for t in range(k))] for i in range(k)]

    def order_of(e):
        m = 1
        cur = e
        while any(cur):
            cur = tuple((a + b) % mod for a, b, mod in
                        zip(cur, e, disc.order_list))
            m += 1
        return m

    gen_orders = [order_of(tuple(1 if t == i else 0 for t in range(k)))
                  for i in range(k)]
    cands = [[e for e in elems if qv[e] == gens_q[i] and order_of(e) == gen_orders[i]]
             for i in range(k)]
    for choice in product(*cands):
        # build candidate matrix, check it is an automorphism preserving q
        mat = [list(choice[i]) for i in range(k)]
        seen = set()
        good = True
        for e in elems:
            img = tuple(sum(e[i] * mat[i][j] for i in range(k)) % disc.order_list[j]
                        for j in range(k))
            if qv[img] != qv[e]:
                good = False
                break
            seen.add(img)
        if good and len(seen) == len(elems):
            auts.append(mat)
    return auts


def natural_map_surjective(lat, max_nodes=2_000_000):
    """Whether O(M) -> O(q_M) is onto, for a definite lattice M."""
    disc = discriminant_group(lat)
    oq = orthogonal_group_discriminant(disc)
    og = orthogonal_group_definite(lat, max_nodes=max_nodes)
    images = set()
    for g in og:
        images.add(tuple(tuple(r) for r in action_on_discriminant(lat, g, disc)))
    return len(images) == len(oq)
