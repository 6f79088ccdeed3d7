"""Primitive embeddings of the rank-22 Picard lattice into the rank-26 one.

Four modes are supported.  In "glued" mode the even unimodular lattice L is
assembled from the double-plane Gram matrix and the rank-4 complement by
gluing their discriminant groups along an anti-isometry; in the three
"leech" modes L = U + Lambda and the complement is spanned by the four
explicit vectors of the corresponding configuration.  In all modes the
object carries integer bases of L, S and R, exact projectors, and the glue
correspondence between the two discriminant groups.
"""

from functools import lru_cache

from .exactmath import (
    QQ, det, mat_inverse, mat_mul, mat_transpose, vec_mat, hnf_row,
    kernel_int, is_integral, to_int_vec,
)
from .lattice import GramLattice, discriminant_group
from .fixtures import GRAM_R, GRAM_U, fermat_fixture
from .golay import build_golay
from .leech import nu_mask, leech_inner, N as NPTS
from .configs import LeechConfig


class EmbeddedNS:
    """S + R inside an even unimodular lattice of signature (1, 25).

    All vectors are integer rows in a fixed basis of L; gram_l is the Gram
    matrix in that basis.  s_basis and r_basis are 22 + 4 rows spanning the
    primitive sublattices.
    """

    def __init__(self, gram_l, s_basis, r_basis, mode):
        self.mode = mode
        self.gram_l = gram_l
        self.lat_l = GramLattice(gram_l)
        self.s_basis = [to_int_vec(r) for r in s_basis]
        self.r_basis = [to_int_vec(r) for r in r_basis]
        self.gram_s = [[self.lat_l.inner(a, b) for b in self.s_basis]
                       for a in self.s_basis]
        self.gram_r = [[self.lat_l.inner(a, b) for b in self.r_basis]
                       for a in self.r_basis]
        for a in self.s_basis:
            for b in self.r_basis:
                assert self.lat_l.inner(a, b) == 0
        self.lat_s = GramLattice(self.gram_s)
        self.lat_r = GramLattice(self.gram_r)
        assert abs(self.lat_s.disc) == 25
        assert abs(self.lat_r.disc) == 25
        assert abs(self.lat_l.disc) == 1
        self.disc_s = discriminant_group(self.lat_s)
        self.disc_r = discriminant_group(self.lat_r)
        assert self.disc_s.order_list == [5, 5]
        assert self.disc_r.order_list == [5, 5]
        self._glue = self._compute_glue()

    # --- projections ------------------------------------------------------

    def pair_with_s(self, v):
        """Pairings of an L-vector with the S-basis (integer 22-vector)."""
        w = vec_mat(v, self.gram_l)
        return tuple(sum(w[i] * b[i] for i in range(len(v)))
                     for b in self.s_basis)

    def pair_with_r(self, v):
        w = vec_mat(v, self.gram_l)
        return tuple(sum(w[i] * b[i] for i in range(len(v)))
                     for b in self.r_basis)

    def project_s(self, v):
        """S-component of an L-vector, in rational S-primal coordinates."""
        return vec_mat([QQ(x) for x in self.pair_with_s(v)],
                       self.lat_s.gram_inverse)

    def project_r(self, v):
        return vec_mat([QQ(x) for x in self.pair_with_r(v)],
                       self.lat_r.gram_inverse)

    # --- glue -------------------------------------------------------------

    def _compute_glue(self):
        """Matrix of the correspondence A_S -> A_R induced by L.

        For v in L the classes of v_S and v_R determine each other; the
        map is an anti-isometry delta with q_R(delta x) = -q_S(x).
        """
        rows = {}
        n = len(self.gram_l)
        for i in range(n):
            v = tuple(1 if j == i else 0 for j in range(n))
            cs = self.disc_s.class_coords(self.pair_with_s(v))
            cr = self.disc_r.class_coords(self.pair_with_r(v))
            rows[cs] = cr
        # solve the 2x2 matrix delta over F_5 from the collected pairs
        basis_pairs = []
        for cs, cr in rows.items():
            if cs != (0, 0):
                basis_pairs.append((cs, cr))
        delta = _solve_f5_matrix(basis_pairs)
        for cs, cr in rows.items():
            assert _apply_f5(delta, cs) == cr
        # anti-isometry check
        for x in self.disc_s.elements():
            qx = self.disc_s.qform(x)
            qdx = self.disc_r.qform(_apply_f5(delta, x))
            assert (qx + qdx) % 2 == 0
        return delta

    def glue_s_class_of_r(self, cr):
        """The A_S class glued to a given A_R class."""
        dinv = _inv_f5_matrix(self._glue)
        return _apply_f5(dinv, cr)

    def weyl_vector_w0(self):
        """The canonical starting Weyl vector of the mode."""
        if self.mode == "glued":
            # h_F + u_1: h_F = s_1 + s_2 in the fixture basis
            hf = [a + b for a, b in zip(self.s_basis[0], self.s_basis[1])]
            return to_int_vec([h + u for h, u in zip(hf, self.r_basis[0])])
        # (1, 0, 0) in U + Lambda coordinates
        return tuple(1 if i == 0 else 0 for i in range(26))


def _solve_f5_matrix(pairs):
    x1 = y1 = x2 = y2 = None
    for cs, cr in pairs:
        if x1 is None:
            x1, y1 = cs, cr
            continue
        d = (x1[0] * cs[1] - x1[1] * cs[0]) % 5
        if d:
            x2, y2 = cs, cr
            break
    assert x2 is not None
    m = [[x1[0], x1[1]], [x2[0], x2[1]]]
    mi = _inv_f5_matrix(m)
    rhs = [[y1[0], y1[1]], [y2[0], y2[1]]]
    return [[sum(mi[i][k] * rhs[k][j] for k in range(2)) % 5
             for j in range(2)] for i in range(2)]


def _inv_f5_matrix(m):
    d = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 5
    assert d
    di = pow(d, 3, 5)
    return [[m[1][1] * di % 5, (-m[0][1]) * di % 5],
            [(-m[1][0]) * di % 5, m[0][0] * di % 5]]


def _apply_f5(m, x):
    return ((x[0] * m[0][0] + x[1] * m[1][0]) % 5,
            (x[0] * m[0][1] + x[1] * m[1][1]) % 5)


# --- glued mode -------------------------------------------------------------

def _glued_embedding():
    fx = fermat_fixture()
    gram_s = fx["gram"]
    lat_s = GramLattice(gram_s)
    lat_r = GramLattice(GRAM_R)
    # rational coordinates: (S-primal | R-primal)
    sinv = lat_s.gram_inverse
    rinv = lat_r.gram_inverse
    # glue vectors: alpha_1 = e3^v -> beta_1 = u4^v, alpha_2 = e4^v -> u2^v
    g1 = list(sinv[2]) + list(rinv[3])
    g2 = list(sinv[3]) + list(rinv[1])
    rows = []
    for i in range(26):
        rows.append([5 if j == i else 0 for j in range(26)])
    rows.append([int(5 * x) for x in g1])
    rows.append([int(5 * x) for x in g2])
    h, _ = hnf_row(rows)
    basis5 = [r for r in h if any(r)]
    assert len(basis5) == 26
    gram_block = [[0] * 26 for _ in range(26)]
    for i in range(22):
        for j in range(22):
            gram_block[i][j] = gram_s[i][j]
    for i in range(4):
        for j in range(4):
            gram_block[22 + i][22 + j] = GRAM_R[i][j]
    # gram of L: (basis5/5) G (basis5/5)^t
    gb = mat_mul(basis5, mat_mul(gram_block, mat_transpose(basis5)))
    gram_l = [[x // 25 for x in row] for row in gb]
    for i in range(26):
        for j in range(26):
            assert gb[i][j] % 25 == 0
    binv = mat_inverse([[QQ(x, 5) for x in row] for row in basis5])
    s_rows = []
    for i in range(22):
        e = [QQ(1) if j == i else QQ(0) for j in range(26)]
        x = vec_mat(e, binv)
        assert is_integral(x)
        s_rows.append(to_int_vec(x))
    r_rows = []
    for i in range(4):
        e = [QQ(1) if j == 22 + i else QQ(0) for j in range(26)]
        x = vec_mat(e, binv)
        assert is_integral(x)
        r_rows.append(to_int_vec(x))
    return EmbeddedNS(gram_l, s_rows, r_rows, "glued")


# --- leech modes ------------------------------------------------------------

@lru_cache(maxsize=1)
def _leech_basis():
    """An integer basis of the Leech lattice in frame coordinates."""
    code = build_golay()
    gens = []
    for k in code.octads:
        gens.append([2 * x for x in nu_mask(k)])
    last = [1] * NPTS
    last[0] -= 4
    gens.append(last)
    h, _ = hnf_row(gens)
    basis = [r for r in h if any(r)]
    assert len(basis) == NPTS
    return [tuple(r) for r in basis]


def _leech_coords(lam, basis_inv):
    x = vec_mat([QQ(t) for t in lam], basis_inv)
    assert is_integral(x)
    return to_int_vec(x)


def _leech_embedding(mode):
    cfg = LeechConfig(mode)
    basis = _leech_basis()
    binv = mat_inverse([[QQ(x) for x in row] for row in basis])
    gram_lam = [[leech_inner(a, b) for b in basis] for a in basis]
    gram_l = [[0] * 26 for _ in range(26)]
    gram_l[0][1] = gram_l[1][0] = 1
    for i in range(24):
        for j in range(24):
            gram_l[2 + i][2 + j] = gram_lam[i][j]

    def to_l(v):
        m, n, lam = v
        return (m, n) + _leech_coords(lam, binv)

    r_rows = [to_l(v) for v in cfg.basis]
    pair = [[0] * 4 for _ in range(26)]
    lat_l = GramLattice(gram_l)
    for i in range(26):
        e = tuple(1 if j == i else 0 for j in range(26))
        for k in range(4):
            pair[i][k] = lat_l.inner(e, r_rows[k])
    s_rows = kernel_int(pair)
    assert len(s_rows) == 22
    emb = EmbeddedNS(gram_l, s_rows, r_rows, f"leech-{mode}")
    emb.leech_config = cfg
    return emb


_EMB_CACHE = {}


def build_embedding(mode):
    """mode: 'glued' or 1, 2, 3 for the three Leech configurations."""
    key = mode
    if key not in _EMB_CACHE:
        if mode == "glued":
            _EMB_CACHE[key] = _glued_embedding()
        elif mode in (1, 2, 3):
            _EMB_CACHE[key] = _leech_embedding(mode)
        else:
            raise ValueError(f"unknown embedding mode {mode!r}")
    return _EMB_CACHE[key]
