"""The sextic double plane over F_25 and its rank-22 Picard lattice.

The double cover of the projective plane branched along the Hermitian
sextic x^6 + y^6 + z^6 = 0 carries 252 rational curves of degree one: the
tangent line at each of the 126 F_25-rational points of the sextic meets it
with multiplicity six, so its pullback splits into two components.  This
module computes those components exactly, their full intersection matrix,
a 22-component basis of the lattice they span (determinant -25), and the
isometries induced by the field automorphism sqrt(2) -> -sqrt(2) and by
the deck transformation of the double cover.  The result is persisted as a
JSON fixture; `regenerate()` rebuilds it from scratch.

Restricted to the tangent line at P, written in a parametrization
s Q0 + t Q1, the sextic form becomes c_P * L_P^6 with L_P linear, because
(s a + t b)^6 = s^6 a^6 + s^5 t a^5 b + s t^5 a b^5 + t^6 b^6
in characteristic 5; the two components are w = +- sqrt(c_P) Lambda_P^3
for an ambient linear lift Lambda_P of L_P.
"""

import json

from .gf25 import (
    GF25, GF625, SQRT2, all_gf25, sqrt_gf625, gf25_to_pair, gf25_from_pair,
)
from .exactmath import QQ, det, mat_inverse, mat_mul, mat_transpose, vec_mat
from .lattice import GramLattice, discriminant_group, is_isometry


def _ordered_field():
    return sorted(all_gf25(), key=lambda x: (x.b, x.a))


def _f(p):
    return p[0] ** 6 + p[1] ** 6 + p[2] ** 6


def _herm(p, q):
    """The sesquilinear pairing sum a_i^5 b_i."""
    return sum((a ** 5) * b for a, b in zip(p, q))


def _normalize(p):
    for i in range(3):
        if p[i]:
            inv = p[i].inverse()
            return tuple(x * inv for x in p)
    raise ValueError("zero vector")


def curve_points():
    """The 126 F_25-points of the sextic, in a deterministic order."""
    pts = []
    one = GF25(1)
    zero = GF25(0)
    els = _ordered_field()
    for y in els:
        for z in els:
            p = (one, y, z)
            if not _f(p):
                pts.append(p)
    for z in els:
        p = (zero, one, z)
        if not _f(p):
            pts.append(p)
    if not _f((zero, zero, one)):
        pts.append((zero, zero, one))
    assert len(pts) == 126
    return pts


def tangent_data(p):
    """(Q0, Q1, Lambda, c) for the tangent line at p.

    Q0, Q1 span the line, Lambda is an ambient linear form cutting the
    tangency point on it, and the restricted sextic is c * Lambda^6.
    """
    coeff = (p[0] ** 5, p[1] ** 5, p[2] ** 5)
    # a deterministic basis of the kernel of the coefficient functional
    idx = next(i for i in range(3) if coeff[i])
    others = [i for i in range(3) if i != idx]
    basis = []
    inv = coeff[idx].inverse()
    for j in others:
        v = [GF25(0)] * 3
        v[j] = GF25(1)
        v[idx] = -coeff[j] * inv
        basis.append(tuple(v))
    q0, q1 = basis
    # p = p0 q0 + p1 q1; solve using the two free coordinates
    p0 = p[others[0]]
    p1 = p[others[1]]
    assert _normalize(tuple(p0 * a + p1 * b for a, b in zip(q0, q1))) \
        == _normalize(p)
    # restricted sextic: f(Q0) s^6 + h(Q0,Q1) s^5 t + h(Q1,Q0) s t^5 + f(Q1) t^6
    c6, c51, c15, c0 = _f(q0), _herm(q0, q1), _herm(q1, q0), _f(q1)
    # match against c * (p1 s - p0 t)^6
    lam_line = (p1, -p0)
    cands = []
    if lam_line[0]:
        cands.append(c6 / lam_line[0] ** 6)
    if lam_line[1]:
        cands.append(c0 / lam_line[1] ** 6)
    c = cands[0]
    assert c6 == c * lam_line[0] ** 6
    assert c0 == c * lam_line[1] ** 6
    assert c51 == c * lam_line[0] ** 5 * lam_line[1]
    assert c15 == c * lam_line[0] * lam_line[1] ** 5
    # ambient lift with Lambda(e_idx) = 0: since q_j = e_j + (..) e_idx,
    # setting the j-th coefficient to the target value suffices
    l = [GF25(0)] * 3
    l[others[0]] = p1
    l[others[1]] = -p0
    lam = tuple(l)
    assert sum(a * b for a, b in zip(lam, q0)) == p1
    assert sum(a * b for a, b in zip(lam, q1)) == -p0
    return q0, q1, lam, c


class DoublePlane:
    """The 252 components with their exact intersection data."""

    def __init__(self):
        self.points = curve_points()
        self.tangents = [tangent_data(p) for p in self.points]
        self.sqrts = []
        for (_, _, _, c) in self.tangents:
            s = sqrt_gf625(GF625(c))
            assert s is not None
            self.sqrts.append(s)
        # component (i, eps): w = eps * s_i * Lambda_i^3 on line i
        self.n = 252

    def comp(self, k):
        return divmod(k, 2)  # (line index, 0 for +, 1 for -)

    def comp_index(self, i, eps):
        return 2 * i + eps

    def _w_value(self, i, eps, t_pt):
        _, _, lam, _ = self.tangents[i]
        val = sum(GF625(a) * GF625(b) for a, b in zip(lam, t_pt))
        w = self.sqrts[i] * val ** 3
        return -w if eps else w

    def pairing(self, k1, k2):
        """Intersection number of two components (exact)."""
        i1, e1 = self.comp(k1)
        i2, e2 = self.comp(k2)
        if i1 == i2:
            # components over one tangent line: the splitting forces
            # <+,-> = 3 from (l+ + l-)^2 = h_F^2 = 2
            return -2 if e1 == e2 else 3
        c1 = self.points[i1]
        c2 = self.points[i2]
        n1 = (c1[0] ** 5, c1[1] ** 5, c1[2] ** 5)
        n2 = (c2[0] ** 5, c2[1] ** 5, c2[2] ** 5)
        t = (n1[1] * n2[2] - n1[2] * n2[1],
             n1[2] * n2[0] - n1[0] * n2[2],
             n1[0] * n2[1] - n1[1] * n2[0])
        assert any(t)
        w1 = self._w_value(i1, e1, t)
        w2 = self._w_value(i2, e2, t)
        assert w1 and w2
        return 1 if w1 == w2 else 0

    def frobenius_on_components(self):
        """The permutation of the 252 components induced by x -> x^5."""
        pt_index = {tuple(_normalize(p)): i for i, p in enumerate(self.points)}
        perm = [None] * self.n
        for i, p in enumerate(self.points):
            img = _normalize((p[0] ** 5, p[1] ** 5, p[2] ** 5))
            j = pt_index[img]
            # the image of {w = eps s_i Lambda_i^3} is
            # {w = eps s_i^5 (Lambda_i^(5))^3}; compare with Lambda_j on
            # the image line at a sample point
            _, _, lam_i, _ = self.tangents[i]
            lam_i5 = tuple(GF25(x.a, -x.b) for x in lam_i)
            q0j, q1j, lam_j, _ = self.tangents[j]
            sample = None
            for cf in (GF25(0), GF25(1), SQRT2, GF25(2)):
                cand = tuple(a + cf * b for a, b in zip(q0j, q1j))
                v_i5 = sum(a * b for a, b in zip(lam_i5, cand))
                v_j = sum(a * b for a, b in zip(lam_j, cand))
                if v_i5 and v_j:
                    sample = (v_i5, v_j)
                    break
            mu = sample[0] / sample[1]
            ratio = (self.sqrts[i] ** 5) * GF625(mu) ** 3 / self.sqrts[j]
            assert ratio == GF625(1) or ratio == GF625(-1)
            flip = 0 if ratio == GF625(1) else 1
            perm[self.comp_index(i, 0)] = self.comp_index(j, flip)
            perm[self.comp_index(i, 1)] = self.comp_index(j, 1 - flip)
        return perm


def _rank_of(gram_rows):
    """Rank of a symmetric integer matrix given as list of rows."""
    m = [[QQ(x) for x in row] for row in gram_rows]
    n = len(m)
    if n == 0:
        return 0
    r = 0
    cols = len(m[0])
    lead = 0
    for c in range(cols):
        piv = None
        for i in range(r, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == n:
            break
    return r


def select_basis(dp):
    """Indices of 22 components forming a basis of determinant -25.

    The first two are the mates over the first sextic point; the rest are
    chosen greedily among components pairing 1 with the first, with a swap
    repair phase in case the greedy span is a proper finite-index
    sublattice.
    """
    cand = [k for k in range(2, dp.n)
            if dp.pairing(0, k) == 1]
    basis = [0, 1]

    def gram_for(idx):
        return [[dp.pairing(a, b) for b in idx] for a in idx]

    for k in cand:
        if len(basis) == 22:
            break
        trial = basis + [k]
        if _rank_of(gram_for(trial)) == len(trial):
            basis = trial
    assert len(basis) == 22
    d = det(gram_for(basis))
    if d != -25:
        used = set(basis)
        done = False
        for pos in range(2, 22):
            for k in cand:
                if k in used:
                    continue
                trial = list(basis)
                trial[pos] = k
                if det(gram_for(trial)) == -25:
                    basis = trial
                    done = True
                    break
            if done:
                break
        assert done, "no determinant -25 basis found by single swaps"
    return basis


def arrange_discriminant_positions(dp, basis):
    """Reorder the basis so the third and fourth dual vectors generate the
    discriminant group with form diag(2/5, 4/5)."""
    gram = [[dp.pairing(a, b) for b in basis] for a in basis]
    lat = GramLattice(gram)
    ginv = lat.gram_inverse
    n = 22
    pairs = []
    for i in range(2, n):
        for j in range(2, n):
            if i == j:
                continue
            qi = ginv[i][i] % 2
            qj = ginv[j][j] % 2
            bij = ginv[i][j] % 1
            if qi == QQ(2, 5) and qj == QQ(4, 5) and bij == 0:
                pairs.append((i, j))
    assert pairs, "no discriminant generator pair among dual basis vectors"
    i, j = pairs[0]
    order = list(range(n))
    order.remove(i)
    order.remove(j)
    new_order = order[:2] + [i, j] + order[2:]
    return [basis[t] for t in new_order]


def build_fixture():
    """Compute the full double-plane fixture dictionary."""
    dp = DoublePlane()
    basis = select_basis(dp)
    basis = arrange_discriminant_positions(dp, basis)
    gram = [[dp.pairing(a, b) for b in basis] for a in basis]
    lat = GramLattice(gram)
    assert lat.disc == -25
    disc = discriminant_group(lat)
    assert disc.order_list == [5, 5]
    ginv = lat.gram_inverse
    assert ginv[2][2] % 2 == QQ(2, 5)
    assert ginv[3][3] % 2 == QQ(4, 5)
    assert ginv[2][3] % 1 == 0

    # classes of all 252 components in basis coordinates
    classes = []
    for k in range(dp.n):
        dual = [dp.pairing(k, b) for b in basis]
        prim = vec_mat([QQ(t) for t in dual], ginv)
        assert all(x.denominator == 1 for x in prim), k
        classes.append([int(x) for x in prim])
    # sanity: basis members map to unit vectors, h_F has all-ones duals
    hf = [1, 1] + [0] * 20
    hf_dual = vec_mat([QQ(t) for t in hf], [[QQ(x) for x in r] for r in gram])
    assert list(hf_dual) == [1] * 22

    # Frobenius isometry
    perm = dp.frobenius_on_components()
    frob = [classes[perm[b]] for b in basis]
    assert is_isometry(lat, frob)
    # deck isometry: mate swap, i.e. class -> h_F - class off the first pair
    deck = [classes[b ^ 1] for b in basis]
    assert is_isometry(lat, deck)
    for row, b in zip(deck[2:], basis[2:]):
        assert row == [h - c for h, c in zip(hf, classes[b])]

    # discriminant projectors: alpha_1 = e_3^v, alpha_2 = e_4^v
    t_a = [[1 if c == 2 else 0 for c in range(22)],
           [1 if c == 3 else 0 for c in range(22)]]
    alpha = [disc.class_coords(tuple(r)) for r in t_a]
    amat = [[alpha[0][0], alpha[0][1]], [alpha[1][0], alpha[1][1]]]
    adet = (amat[0][0] * amat[1][1] - amat[0][1] * amat[1][0]) % 5
    assert adet != 0
    ainv = _inv2_mod5(amat)
    t_b = []
    for i in range(22):
        e = tuple(1 if c == i else 0 for c in range(22))
        chi = disc.class_coords(e)
        t_b.append([(chi[0] * ainv[0][0] + chi[1] * ainv[1][0]) % 5,
                    (chi[0] * ainv[0][1] + chi[1] * ainv[1][1]) % 5])
    assert t_b[2] == [1, 0] and t_b[3] == [0, 1]

    return {
        "gram": gram,
        "frobenius": frob,
        "deck": deck,
        "t_a": t_a,
        "t_b": t_b,
        "hf": hf,
        "basis_components": basis,
        "line_classes": classes,
    }


def _inv2_mod5(m):
    d = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 5
    di = pow(d, 3, 5)
    return [[m[1][1] * di % 5, -m[0][1] * di % 5],
            [-m[1][0] * di % 5, m[0][0] * di % 5]]


def regenerate(path=None):
    """Rebuild the JSON fixture (used once; shipped with the package)."""
    import pathlib
    fx = build_fixture()
    if path is None:
        path = pathlib.Path(__file__).parent / "fixtures" / \
            "fermat_fixture.json"
    with open(path, "w") as fh:
        json.dump(fx, fh)
    return fx


if __name__ == "__main__":
    fx = regenerate()
    print("wrote fixture: gram det",
          det(fx["gram"]))
