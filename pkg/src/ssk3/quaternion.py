"""The endomorphism order Z + Z g + Z f + Z gf of the supersingular curve.

Elements are integer 4-vectors in the basis 1, g, f, gf where g is the
order-6 automorphism and f the 2-isogeny; gf means g after f.  The
multiplication table, canonical involution and trace follow the quaternion
order structure (discriminant 5); products are composition, left factor
applied last.
"""

from .exactmath import det

# products of basis elements: TABLE[i][j] = omega_i * omega_j as 4-vectors
_G = (0, 1, 0, 0)
_F = (0, 0, 1, 0)
_GF = (0, 0, 0, 1)
TABLE = {
    (1, 1): (-1, 1, 0, 0),      # g g = g - 1
    (1, 2): (0, 0, 0, 1),       # g f = gf
    (1, 3): (0, 0, -1, 1),      # g gf = -f + gf
    (2, 1): (-1, 0, 1, -1),     # f g = -1 + f - gf
    (2, 2): (-2, 0, 0, 0),      # f f = -2
    (2, 3): (-2, 2, -1, 0),     # f gf = -2 + 2g - f
    (3, 1): (0, -1, 1, 0),      # gf g = -g + f
    (3, 2): (0, -2, 0, 0),      # gf f = -2g
    (3, 3): (-2, 0, 0, -1),     # gf gf = -2 - gf
}


class Endo:
    """An element z1 + z2 g + z3 f + z4 gf of the order."""

    __slots__ = ("z",)

    def __init__(self, z1, z2=0, z3=0, z4=0):
        if isinstance(z1, Endo):
            self.z = z1.z
            return
        if isinstance(z1, (tuple, list)):
            self.z = tuple(int(t) for t in z1)
            assert len(self.z) == 4
            return
        self.z = (int(z1), int(z2), int(z3), int(z4))

    def __add__(self, o):
        o = Endo(o)
        return Endo(tuple(a + b for a, b in zip(self.z, o.z)))

    __radd__ = __add__

    def __neg__(self):
        return Endo(tuple(-a for a in self.z))

    def __sub__(self, o):
        return self + (-Endo(o))

    def __rsub__(self, o):
        return Endo(o) - self

    def __mul__(self, o):
        o = Endo(o)
        a, b = self.z, o.z
        out = [0, 0, 0, 0]
        out[0] += a[0] * b[0]
        for j in range(1, 4):
            out[j] += a[0] * b[j]
            out[j] += a[j] * b[0]
        for i in range(1, 4):
            if not a[i]:
                continue
            for j in range(1, 4):
                if not b[j]:
                    continue
                prod = TABLE[(i, j)]
                for k in range(4):
                    out[k] += a[i] * b[j] * prod[k]
        return Endo(out)

    __rmul__ = __mul__

    def conj(self):
        """Canonical involution: g -> 1 - g, f -> -f, gf -> -1 - gf."""
        z1, z2, z3, z4 = self.z
        return Endo(z1 + z2 - z4, -z2, -z3, -z4)

    def trace(self):
        z1, z2, z3, z4 = self.z
        t = self + self.conj()
        assert t.z[1:] == (0, 0, 0)
        assert t.z[0] == 2 * z1 + z2 - z4
        return t.z[0]

    def norm(self):
        n = self * self.conj()
        assert n.z[1:] == (0, 0, 0)
        return n.z[0]

    def is_scalar(self):
        return self.z[1:] == (0, 0, 0)

    def scalar(self):
        assert self.is_scalar()
        return self.z[0]

    def __eq__(self, o):
        return isinstance(o, Endo) and self.z == o.z or \
            (not isinstance(o, Endo) and self.z == Endo(o).z)

    def __hash__(self):
        return hash(self.z)

    def __repr__(self):
        return f"Endo{self.z}"


ONE = Endo(1)
GAMMA = Endo(_G)
PHI = Endo(_F)
GAMMAPHI = Endo(_GF)
FROBENIUS = Endo(-1, 0, 1, -2)   # -1 + f - 2 gf


def trace_gram():
    """The 4x4 matrix Tr(omega_i omega_j); symmetric with determinant -25."""
    basis = [ONE, GAMMA, PHI, GAMMAPHI]
    m = [[(a * b).trace() for b in basis] for a in basis]
    assert m == [list(r) for r in zip(*m)]
    assert det(m) == -25
    return m


# --- the index map into 2x2 matrices over the order ------------------------

def j_basis():
    """j(B_1), ..., j(B_6) as [[a, b], [c, d]] with c = conj(b).

    B_1, B_2 are the rulings; B_{3..6} are graphs of 1, g, f, gf, and
    j(graph of h) = [[conj(h) h, conj(h)], [h, 1]] up to the sign twist
    coming from (-h x id)^* of the antidiagonal.
    """
    out = [
        [[0, Endo(0)], [Endo(0), 1]],
        [[1, Endo(0)], [Endo(0), 0]],
    ]
    for h in (ONE, GAMMA, PHI, GAMMAPHI):
        a1 = -h
        a2 = ONE
        out.append([
            [a1.conj() * a1, a1.conj() * a2],
            [a2.conj() * a1, a2.conj() * a2],
        ])
    # the corner entries are scalars (degrees)
    cleaned = []
    for m in out:
        a = m[0][0].scalar() if isinstance(m[0][0], Endo) else m[0][0]
        d = m[1][1].scalar() if isinstance(m[1][1], Endo) else m[1][1]
        b = m[0][1] if isinstance(m[0][1], Endo) else Endo(m[0][1])
        c = m[1][0] if isinstance(m[1][0], Endo) else Endo(m[1][0])
        assert c == b.conj()
        cleaned.append([[a, b], [c, d]])
    return cleaned


def j_of_class(vec):
    """j of a divisor class given in the B-basis (j is additive)."""
    bs = j_basis()
    a = sum(int(x) * m[0][0] for x, m in zip(vec, bs))
    d = sum(int(x) * m[1][1] for x, m in zip(vec, bs))
    b = Endo(0)
    c = Endo(0)
    for x, m in zip(vec, bs):
        b = b + int(x) * m[0][1]
        c = c + int(x) * m[1][0]
    assert c == b.conj()
    return [[a, b], [c, d]]


def j_intersection(m1, m2):
    """<L1, L2> = a2 d1 + a1 d2 - c1 b2 - c2 b1 (the last two via trace)."""
    a1, b1 = m1[0][0], m1[0][1]
    c1, d1 = m1[1][0], m1[1][1]
    a2, b2 = m2[0][0], m2[0][1]
    c2, d2 = m2[1][0], m2[1][1]
    cross = c1 * b2 + c2 * b1
    return a2 * d1 + a1 * d2 - cross.scalar()
