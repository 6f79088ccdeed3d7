"""Three rank-4 configurations inside U + Lambda and their orthogonal roots.

Each configuration picks vectors a, b, c, d in L = U + Lambda spanning a
negative definite rank-4 lattice with the standard discriminant-25 Gram
matrix; the Leech roots orthogonal to it are the minimal-degree rational
curve classes of the corresponding projective model (252, 168 and 96 of
them).  Everything here is a finite, exact enumeration.
"""

from .golay import build_golay, mask_of, popcount, point_index, REFERENCE_OCTAD
from .leech import (
    nu, nu_mask, NU_OMEGA, leech_inner, enumerate_lambda, leech_root,
    l_inner, l_norm, l_sub, WEYL_W, N,
)
from .fixtures import GRAM_R


def _neg(v):
    return (-v[0], -v[1], tuple(-x for x in v[2]))


def _first_octad(code, require_zero):
    inf_bit = 1 << point_index("inf")
    zero_bit = 1 << point_index("0")
    for k in code.octads:
        if k & inf_bit:
            continue
        if require_zero and not k & zero_bit:
            continue
        return k
    raise AssertionError("no octad with the requested incidence")


class LeechConfig:
    """Vectors a, b, c, d of one configuration, plus derived data."""

    def __init__(self, mode):
        code = build_golay()
        self.mode = mode
        self.code = code
        A = tuple(4 * x + y for x, y in zip(nu(["inf"]), NU_OMEGA))
        B = tuple([0] * N)
        if mode == 1:
            K0 = _first_octad(code, require_zero=True)
            C = tuple(2 * x for x in nu_mask(K0))
            D = tuple(4 * x + y for x, y in zip(nu(["0"]), NU_OMEGA))
            a = _neg((2, 1, A))
            b = (-1, 1, B)
            c = (0, 1, C)
            d = (1, 1, D)
        elif mode == 2:
            K0 = _first_octad(code, require_zero=False)
            C = tuple(2 * x for x in nu_mask(K0))
            D = tuple(y - 4 * x for x, y in zip(nu(["inf"]), NU_OMEGA))
            a = _neg((2, 1, A))
            b = (-1, 1, B)
            c = (0, 1, C)
            d = (0, 0, D)
        elif mode == 3:
            K0 = mask_of(REFERENCE_OCTAD)
            C = tuple(8 * x for x in nu(["inf"]))
            D = tuple(2 * x - 2 * y for x, y in zip(
                nu(["inf", "0", "1", "2"]), nu(["3", "5", "14", "17"])))
            a = _neg((2, 1, A))
            b = (-1, 1, B)
            c = (1, 2, C)
            d = (0, 0, D)
        else:
            raise ValueError("mode must be 1, 2 or 3")
        self.K0 = K0
        self.A, self.B, self.C, self.D = A, B, C, D
        self.basis = [a, b, c, d]
        assert self.gram() == GRAM_R

    def gram(self):
        return [[l_inner(x, y) for y in self.basis] for x in self.basis]

    def orthogonal_leech_roots(self):
        """All Leech roots orthogonal to <a, b, c, d>, sorted."""
        # a root is (1, 1, lam) with lam in Lambda_4; orthogonality to
        # a, c, d translates into frame pairings with A, C, D
        if self.mode == 1:
            cons = [(self.A, -3), (self.C, -1), (self.D, -2)]
        elif self.mode == 2:
            cons = [(self.A, -3), (self.C, -1), (self.D, 0)]
        else:
            cons = [(self.A, -3), (self.C, -3), (self.D, 0)]
        roots = [leech_root(lam) for lam in enumerate_lambda(4, cons)]
        for r in roots:
            assert all(l_inner(r, v) == 0 for v in self.basis)
        return roots

    def weyl_projection(self):
        """(w_S, w_R) for w = (1,0,0), with w_R rational in basis coords.

        Returns w_R as a coefficient 4-vector over Q in the (a,b,c,d) basis
        and w_S = w - w_R as an exact vector of (1/5) L (scaled by 5 to stay
        integral: the second return value is 5*w_S as an L-vector).
        """
        from .exactmath import QQ, mat_inverse, vec_mat
        from .leech import l_add, l_scale
        pair = [l_inner(WEYL_W, v) for v in self.basis]
        ginv = mat_inverse(GRAM_R)
        coeffs = vec_mat([QQ(p) for p in pair], ginv)
        scaled = [QQ(5) * cf for cf in coeffs]
        assert all(cf.denominator == 1 for cf in scaled)
        wr5 = (0, 0, tuple([0] * N))
        for cf, v in zip(scaled, self.basis):
            wr5 = l_add(wr5, l_scale(int(cf), v))
        ws5 = l_sub(l_scale(5, WEYL_W), wr5)
        return coeffs, ws5

    def t_set_label(self, root):
        """Mode-3 partition label of a root: ('T', i) or ('T', i, j).

        The label records which points of {0,1,2} lie on the octad K with
        lam = A - 2 nu_K.
        """
        assert self.mode == 3
        lam = root[2]
        diff = [a - x for a, x in zip(self.A, lam)]
        assert all(t % 2 == 0 for t in diff)
        kmask = 0
        for i, t in enumerate(diff):
            if t:
                assert t == 2
                kmask |= 1 << i
        assert popcount(kmask) == 8 and kmask in self.code.codewords
        pts = [i for i in ("0", "1", "2")
               if kmask >> point_index(i) & 1]
        inter = popcount(kmask & self.K0)
        if inter == 4:
            assert len(pts) == 2
            return ("T", pts[0], pts[1])
        assert inter == 2 and len(pts) == 1
        return ("T", pts[0])

    def t_sets(self):
        """The six 16-element root sets of the mode-3 configuration."""
        assert self.mode == 3
        groups = {}
        for r in self.orthogonal_leech_roots():
            groups.setdefault(self.t_set_label(r), []).append(r)
        return groups
