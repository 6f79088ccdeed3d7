"""The supersingular elliptic curve y^2 = x^3 - 1 in characteristic 5.

Points are None (the zero point at infinity) or pairs (x, y) over F_25 or
over the tower field F_625; all maps are field generic.  The three
nontrivial 2-torsion points have x in {1, omega, omega^2}.
"""

from .gf25 import (
    GF25, GF625, OMEGA, SQRT2, all_gf25, all_gf625, sqrt_gf25, sqrt_gf625,
)

INF = None


def on_curve(P, F=GF25):
    if P is INF:
        return True
    x, y = P
    return y * y == x * x * x - F(1)


def neg(P):
    if P is INF:
        return INF
    x, y = P
    return (x, -y)


def add(P, Q):
    """Group law; the generic-slope branch is the textbook chord formula."""
    if P is INF:
        return Q
    if Q is INF:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return INF
        # doubling: lam = 3 x^2 / 2 y
        lam = (3 * x1 * x1) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def sub(P, Q):
    return add(P, neg(Q))


def mul(n, P):
    n = int(n)
    if n < 0:
        return mul(-n, neg(P))
    acc = INF
    base = P
    while n:
        if n & 1:
            acc = add(acc, base)
        base = add(base, base)
        n >>= 1
    return acc


def gamma_map(P, F=GF25):
    """The order-6 automorphism x -> omega x, y -> -y."""
    if P is INF:
        return INF
    x, y = P
    return (F(OMEGA) * x, -y)


def phi2_map(P, F=GF25):
    """The 2-isogeny with kernel {0, (1,0)} (quotient by that translation)."""
    if P is INF:
        return INF
    x, y = P
    one = F(1)
    if x == one:
        return INF
    u = (2 * x * x + 3 * x + one) / (x - one)
    v = (2 * F(SQRT2) * y * (x * x + 3 * x + 3 * one)) / ((x - one) * (x - one))
    return (u, v)


def frob_map(P):
    if P is INF:
        return INF
    x, y = P
    return (x.frob(), y.frob())


def translate_p0(P, F=GF25):
    """Translation by P0 = (1, 0) via its closed form."""
    if P is INF:
        return (F(1), F(0))
    x, y = P
    one = F(1)
    if x == one:
        return INF
    return ((x + 2 * one) / (x - one), (2 * y) / ((x - one) * (x - one)))


def two_torsion(F=GF25):
    """[P_inf, P_0, P_1, P_2] with x-coordinates 1, omega, omega^2."""
    om = F(OMEGA)
    z = F(0)
    return [INF, (F(1), z), (om, z), (om * om, z)]


def apply_endo(z, P, F=GF25):
    """Evaluate z1 + z2 g + z3 f + z4 g f (g = gamma, f = phi2) at P."""
    z1, z2, z3, z4 = z
    out = mul(z1, P)
    gp = gamma_map(P, F)
    out = add(out, mul(z2, gp))
    fp = phi2_map(P, F)
    out = add(out, mul(z3, fp))
    gfp = gamma_map(fp, F)
    return add(out, mul(z4, gfp))


def points_gf25():
    pts = [INF]
    one = GF25(1)
    for x in all_gf25():
        s = sqrt_gf25(x * x * x - one)
        if s is None:
            continue
        pts.append((x, s))
        if s:
            pts.append((x, -s))
    return pts


def points_gf625():
    pts = [INF]
    one = GF625(1)
    for x in all_gf625():
        s = sqrt_gf625(x * x * x - one)
        if s is None:
            continue
        pts.append((x, s))
        if s:
            pts.append((x, -s))
    return pts


def kernel_of_mul(n, points):
    return [P for P in points if mul(n, P) is INF]


def torsion_classify(P):
    """Membership flags (in Ker[2], in Ker[4]\\Ker[2], in Ker[6]\\Ker[2]).

    Uses the coordinate criteria: b = 0 for 2-torsion; a in F_25 with b
    outside F_25 for proper 4-torsion; a, b in F_25 with b nonzero for
    proper 6-torsion.  The zero point counts as 2-torsion.
    """
    if P is INF:
        return (True, False, False)
    a, b = P
    if isinstance(a, GF25):
        a, b = GF625(a), GF625(b)
    if not b:
        return (True, False, False)
    if a.in_gf25() and not b.in_gf25():
        return (False, True, False)
    if a.in_gf25() and b.in_gf25():
        return (False, False, True)
    return (False, False, False)


def count_e_fp2(p=5):
    """|E(F_{p^2})| = (p+1)^2; direct enumeration when p = 5."""
    formula = (p + 1) ** 2
    if p == 5:
        assert len(points_gf25()) == formula
    return formula


def count_km_fp2(p=5):
    """Points of the Kummer surface of E x E over F_{p^2}.

    Returns (by_formula, by_enumeration); the enumeration counts the
    (p+1)- and (p-1)-torsion point sets of the abelian surface directly
    and adds the 16 exceptional lines, when p = 5.
    """
    formula = 1 + 22 * p * p + p ** 4
    if p != 5:
        return formula, None
    pts25 = points_gf25()
    # E(F_25) = Ker[p+1]
    assert all(mul(6, P) is INF for P in pts25)
    n_plus = len(pts25) ** 2
    ker4 = kernel_of_mul(4, points_gf625())
    assert len(ker4) == 16
    n_minus = len(ker4) ** 2
    direct = (n_plus - 16) // 2 + (n_minus - 16) // 2 + 16 * (p * p + 1)
    return formula, direct
