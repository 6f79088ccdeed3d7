"""Symmetric curves on A = E x E and their images on the Kummer surface.

A symmetric curve is presented by a hyperelliptic base H : v^2 = f(u) and a
pair of components eta_i = (M_i(u), v N_i(u)) into E, which forces
f N_i^2 = M_i^3 - 1.  Intersection numbers on A are computed as degrees of
one-variable rational functions; classes live in the 6-dimensional lattice
spanned by the two rulings and four endomorphism graphs.  On the Kummer
side a curve is tracked by its class, the set of 2-torsion points it meets,
and its full list of F_25-rational points.
"""

from itertools import product as iproduct

from .gf25 import (
    GF25, GF625, OMEGA, SQRT2, all_gf25, sqrt_gf625, gf25_to_pair,
    gf25_from_pair,
)
from .ratfunc import Poly, RatFunc
from .exactmath import QQ, mat_inverse, vec_mat, vec_dot, is_integral
from .fixtures import GRAM_SA, G1_SA, G2_SA, FLIP_SA
from . import elliptic

F = GF25
INFU = "inf"  # the point u = infinity of the parameter line

TORSION_LABELS = ("inf", "0", "1", "2")


def _x_label(x):
    """Label of a 2-torsion point by its x-coordinate (None = infinity)."""
    if x is None:
        return "inf"
    if x == F(1):
        return "0"
    if x == F(OMEGA):
        return "1"
    if x == F(OMEGA) * F(OMEGA):
        return "2"
    raise ValueError(f"not a 2-torsion x-coordinate: {x}")


def _label_point(lbl, FF=GF25):
    """The 2-torsion point with a given label over the field FF."""
    om = FF(OMEGA)
    z = FF(0)
    return {"inf": None, "0": (FF(1), z), "1": (om, z), "2": (om * om, z)}[lbl]


def poly(coeffs):
    return Poly([F(c) for c in coeffs], F)


def rf(num, den=(1,)):
    return RatFunc(poly(num), poly(den))


class SelfGraphError(ValueError):
    """The degree construction degenerated: the curve IS the graph."""


class CurveMap:
    """eta = (eta_1, eta_2) : H -> E x E with eta_i = (M_i, v N_i)."""

    def __init__(self, f, comps, label=""):
        self.f = f
        self.comps = comps  # [(M1, N1), (M2, N2)] as RatFunc pairs
        self.label = label
        xcube = RatFunc(poly((-1, 0, 0, 1)))
        frf = RatFunc(f)
        for M, N in comps:
            lhs = frf * N * N
            rhs = M * M * M - RatFunc(poly((1,)))
            assert lhs == rhs, f"component is not a map to E ({label})"

    def genus(self):
        return (self.f.degree() - 1) // 2

    def degrees(self):
        return tuple(M.degree() for M, _ in self.comps)

    def compose_base(self, A, B, label=""):
        """Precompose with the base automorphism u -> A(u), v -> v B(u)."""
        comps = [(M.compose(A), B * N.compose(A)) for M, N in self.comps]
        return CurveMap(self.f, comps, label or self.label)

    def post_gamma(self, k1, k2, label=""):
        """Postcompose component i with gamma^{k_i}."""
        out = []
        for (M, N), k in zip(self.comps, (k1, k2)):
            k %= 6
            out.append(((F(OMEGA) ** k) * M, (F(-1) ** k) * N))
        return CurveMap(self.f, out, label or self.label)

    def swap_tau(self, label=""):
        """The image under tau : (P, Q) -> (Q, -P)."""
        (M1, N1), (M2, N2) = self.comps
        return CurveMap(self.f, [(M2, N2), (M1, -1 * N1)],
                        label or ("tau " + self.label))

    def translate(self, t1, t2, label=""):
        """Translate by the 2-torsion pair with labels (t1, t2)."""
        out = []
        for (M, N), lbl in zip(self.comps, (t1, t2)):
            out.append(_translate_component(self.f, M, N, lbl))
        return CurveMap(self.f, out, label or self.label)


def _translate_component(f, M, N, lbl):
    """(M, N) data of (translation by the 2-torsion point lbl) o eta_i."""
    if lbl == "inf":
        return (M, N)
    a = RatFunc.const(_label_point(lbl)[0], F)
    frf = RatFunc(f)
    den = M - a
    if den.num.is_zero():
        raise SelfGraphError("component is the constant 2-torsion point")
    lam2 = frf * N * N / (den * den)       # lambda^2 with lambda = vN/(M-a)
    M2 = lam2 - M - a
    N2 = N * (M - M2) / den - N
    return (M2, N2)


# --- the basic morphisms ----------------------------------------------------

def _lin(c):
    """The monic linear polynomial u + c."""
    return poly((c, 1))


def _ppow(p, k):
    out = poly((1,))
    for _ in range(k):
        out = out * p
    return out


_MAPS = None


def base_maps():
    """The printed morphisms (M, N) and base automorphisms (A, B), by name,
    plus the three base-curve polynomials."""
    global _MAPS
    if _MAPS is not None:
        return _MAPS
    s2 = SQRT2
    mp = {}
    # the 2-isogeny of E as a curve map
    mp["phiE2"] = (rf((1, 3, 2), (-1, 1)),
                   RatFunc(poly((3, 3, 1)).scale(2 * s2),
                           _ppow(_lin(F(-1)), 2)))
    mp["phiF2"] = (rf((0, 0, 1)), rf((1,)))
    mp["phiF3"] = (rf((0, 2), (-1, 0, 0, 1)),
                   rf((1, 0, 0, 2), (1, 0, 0, -2, 0, 0, 1)))
    den3 = _lin(s2) * _lin(1 + 4 * s2) * _lin(2 + 3 * s2)
    num3 = (_ppow(_lin(4 + 3 * s2), 2) * _lin(4 + 2 * s2)).scale(4 * s2)
    mp["phiG3"] = (RatFunc(num3, den3),
                   RatFunc(Poly([4 + 4 * s2], F), den3 * den3))
    g = poly((4 + s2, 0, 1 + 2 * s2, 0, 1))
    mp["phiG4"] = (RatFunc(poly((2, 0, 1 + 4 * s2, 0, 1)), g),
                   RatFunc(poly((0, 1)), g * g))
    # base-curve automorphisms (A, B): u -> A(u), v -> v B(u)
    mp["hF"] = (rf((4, 2 * s2), (2 * s2, 1)),
                RatFunc(poly((1,)), _ppow(_lin(2 * s2), 3)))
    mp["hFp"] = (rf((1, 2 * s2), (3 * s2, 1)),
                 RatFunc(poly((1,)), _ppow(_lin(3 * s2), 3)))
    mp["hG"] = (rf((3, 2), (1, 1)),
                RatFunc(poly((4,)), _ppow(_lin(F(1)), 6)))
    mp["f_F"] = poly((-1, 0, 0, 0, 0, 0, 1))
    mp["f_G"] = poly((s2, 0, 0, 0, 2 * s2, 0, 0, 0, 2 * s2, 0, 0, 0, s2))
    mp["f_E"] = poly((-1, 0, 0, 1))
    _MAPS = mp
    return mp


def seven_curves():
    """The seven symmetric curves whose classes and pairings are pinned."""
    mp = base_maps()
    fF, fG, fE = mp["f_F"], mp["f_G"], mp["f_E"]

    def cm(f, c1, c2, label):
        return CurveMap(f, [c1, c2], label)

    def pre(comp, aut):
        A, B = aut
        M, N = comp
        return (M.compose(A), B * N.compose(A))

    def post_g(comp, k):
        M, N = comp
        return ((F(OMEGA) ** (k % 6)) * M, (F(-1) ** (k % 6)) * N)

    ident = (rf((0, 1)), rf((1,)))
    out = {
        "FF2": cm(fF, mp["phiF2"], pre(mp["phiF2"], mp["hF"]),
                  "Gamma[(phiF2, phiF2 hF)]"),
        "FF3": cm(fF, mp["phiF3"], pre(mp["phiF3"], mp["hFp"]),
                  "Gamma[(phiF3, phiF3 hF')]"),
        "G43": cm(fG, mp["phiG4"], mp["phiG3"],
                  "Gamma[(phiG4, phiG3)]"),
        "G44": cm(fG, post_g(mp["phiG4"], 2), post_g(pre(mp["phiG4"], mp["hG"]), 1),
                  "Gamma[(g^2 phiG4, g phiG4 hG)]"),
        "E12": cm(fE, post_g(ident, 2), post_g(mp["phiE2"], 2),
                  "Gamma[(g^2, g^2 phiE2)]"),
        "E22": cm(fE, pre(mp["phiE2"], (rf((0, OMEGA)), rf((-1,)))),
                  post_g(mp["phiE2"], 1),
                  "Gamma[(phiE2 g, g phiE2)]"),
        "ID2": cm(fE, ident, post_g(ident, 2), "Gamma[(id, g^2)]"),
    }
    return out


# --- Psi/Xi data of endomorphisms and the degree method ---------------------

def psi_xi(name):
    """(Psi, Xi) with g^*x = Psi(x), g^*y = y Xi(x) for a named g.

    Supported: 'id', 'g', 'g2', ..., 'g5', 'phi', 'g phi', 'g2 phi', ...;
    a leading '-' negates (composes with the inversion).
    """
    neg = name.startswith("-")
    if neg:
        name = name[1:].strip()
    om = F(OMEGA)
    x = rf((0, 1))
    one = rf((1,))
    parts = name.split()
    if parts == ["id"]:
        psi, xi = x, one
    elif parts == ["phi"]:
        psi, xi = base_maps()["phiE2"]
    elif parts and parts[0][0] == "g" and parts[1:] in ([], ["phi"]):
        k = 1 if parts[0] == "g" else int(parts[0][1:])
        p, q = (x, one) if not parts[1:] else base_maps()["phiE2"]
        psi, xi = (om ** k) * p, (F(-1) ** k) * q
    else:
        raise ValueError(f"unknown endomorphism {name!r}")
    if neg:
        xi = -1 * xi
    return psi, xi


def graph_intersection(curve, g_name):
    """<Gamma[eta], Phi_g> as the degree of the collapsed one-variable map."""
    psi, xi = psi_xi(g_name)
    (M1, N1), (M2, N2) = curve.comps
    pm = psi.compose(M1)
    den = M2 - pm
    if den.num.is_zero():
        raise SelfGraphError(curve.label + " equals the graph of " + g_name)
    t = N2 + N1 * xi.compose(M1)
    theta = -1 * pm - M2 + RatFunc(curve.f) * t * t / (den * den)
    if theta.is_constant():
        raise SelfGraphError(curve.label + " collapses onto " + g_name)
    return theta.degree()


GRAPH_NAMES = ("id", "g", "phi", "g phi")  # graphs B3..B6


def pairings_with_basis(curve):
    """[<Gamma, B_1>, ..., <Gamma, B_6>] by degrees and the degree method.

    A degenerate construction means the curve is a translate of the graph
    itself, so the pairing is the graph's self-intersection, zero.
    """
    d1, d2 = curve.degrees()
    out = [d2, d1]
    for name in GRAPH_NAMES:
        try:
            out.append(graph_intersection(curve, name))
        except SelfGraphError:
            out.append(0)
    return out


_GSA_INV = None


def class_in_sa(curve):
    """Class of the curve in the B-basis, solved from its pairings."""
    global _GSA_INV
    if _GSA_INV is None:
        _GSA_INV = mat_inverse(GRAM_SA)
    p = pairings_with_basis(curve)
    sol = vec_mat([QQ(t) for t in p], _GSA_INV)
    if not is_integral(sol):
        raise ArithmeticError(f"non-integral class for {curve.label}: {sol}")
    return [int(t) for t in sol]


def sa_inner(c1, c2):
    return vec_dot(vec_mat(c1, GRAM_SA), c2)


def smoothness_check(curve, cls=None):
    """Self-intersection equals 2 genus(H) - 2."""
    if cls is None:
        cls = class_in_sa(curve)
    return sa_inner(cls, cls) == 2 * (curve.genus() - 1)


def two_torsion_trace(curve):
    """The set of 2-torsion labels (a, b) hit by the curve."""
    (M1, N1), (M2, N2) = curve.comps
    out = set()
    for u0 in _weierstrass_points(curve.f):
        if u0 is INFU:
            Mt1, _, _ = _infinity_chart(curve, 0)
            Mt2, _, _ = _infinity_chart(curve, 1)
            x1, x2 = Mt1.eval(F(0)), Mt2.eval(F(0))
        else:
            x1, x2 = M1.eval(u0), M2.eval(u0)
        out.add((_x_label(x1), _x_label(x2)))
    assert len(out) == 2 * curve.genus() + 2
    return out


def _weierstrass_points(f):
    pts = [x for x in all_gf25() if not f.eval(x)]
    if f.degree() % 2 == 1:
        pts.append(INFU)
    assert len(pts) == f.degree() + (f.degree() % 2)
    return pts


def _infinity_chart(curve, i):
    """(M~, N~, f~) of component i in the chart s = 1/u at s = 0."""
    d = curve.f.degree()
    k = (d + 1) // 2
    s = rf((0, 1))
    inv = rf((1,), (0, 1))
    M, N = curve.comps[i]
    ftil = Poly([F(0)] * (2 * k - d) + list(reversed(curve.f.c)), F)
    Mt = M.compose(inv)
    Nt = N.compose(inv) / _rpow(s, k)
    return Mt, Nt, ftil


def _rpow(r, k):
    out = rf((1,))
    for _ in range(k):
        out = out * r
    return out


# --- points of curves on the Kummer surface ---------------------------------

def _p1_gf25():
    """The 26 points of the parameter line, infinity first, then ordered
    with the sqrt(2)-coefficient as the major key."""
    return [INFU] + sorted(all_gf25(), key=lambda x: (x.b, x.a))


def _normalize_tangent(xi0, xi1):
    if xi0:
        inv = xi0.inverse()
        return (F(1), xi1 * inv)
    assert xi1
    return (F(0), F(1))


def _e_point_at(M, N, u0, v625):
    """The E-point (M(u0), v N(u0)) over F_625; None for the zero point."""
    xu = M.eval(u0) if u0 is not INFU else M.eval_infinity()
    if xu is None:
        return None
    nu = N.eval(u0) if u0 is not INFU else N.eval_infinity()
    assert nu is not None
    return (GF625(xu), v625 * GF625(nu))


def _canonical_orbit(p1, p2):
    def neg(p):
        return None if p is None else (p[0], -p[1])
    return ("orb", frozenset([(p1, p2), (neg(p1), neg(p2))]))


class YCurve:
    """A (-2)-curve on the Kummer surface.

    sa is the 6-vector part of the pullback class, exc maps 2-torsion labels
    to the coefficient of the corresponding exceptional curve in the
    pullback (-1 for strict transforms, +2 for the exceptional curves
    themselves), and points is the 26-entry list (param, canonical point).
    """

    def __init__(self, sa, exc, points, label, param_kind="u"):
        self.sa = tuple(int(t) for t in sa)
        self.exc = dict(exc)
        self.points = points
        self.point_set = frozenset(p for _, p in points)
        assert len(self.point_set) == 26, label
        self.label = label
        self.param_kind = param_kind

    def key(self):
        return self.point_set

    def __repr__(self):
        return f"YCurve({self.label})"


def y_pairing(c1, c2):
    """Intersection number on the Kummer surface via pullback classes."""
    s = sa_inner(c1.sa, c2.sa)
    for lbl, m in c1.exc.items():
        mp = c2.exc.get(lbl)
        if mp:
            s -= m * mp
    assert s % 2 == 0
    return s // 2


def exceptional_curve(lbl_pair):
    """The image of the exceptional curve over a 2-torsion point."""
    pts = []
    for t in _p1_gf25():
        if t is INFU:
            xi = (F(0), F(1))
            param = INFU
        else:
            xi = (F(1), t)
            param = t
        pts.append((param, ("node", lbl_pair, xi)))
    return YCurve((0,) * 6, {lbl_pair: 2}, pts,
                  f"Exc{lbl_pair}", param_kind="tangent")


def _sqrt625(x):
    r = sqrt_gf625(GF625(x))
    assert r is not None
    return r


def curve_points(cm):
    """The 26 canonical Kummer points of an embedded symmetric curve."""
    (M1, N1), (M2, N2) = cm.comps
    out = []
    for u0 in _p1_gf25():
        if u0 is INFU:
            Mt1, Nt1, ftil = _infinity_chart(cm, 0)
            Mt2, Nt2, _ = _infinity_chart(cm, 1)
            fval = ftil.eval(F(0))
            if not fval:
                out.append((u0, _node_point(
                    (Mt1, Nt1), (Mt2, Nt2), RatFunc(ftil), F(0))))
                continue
            v = _sqrt625(fval)
            p1 = _e_point_at(Mt1, Nt1, F(0), v)
            p2 = _e_point_at(Mt2, Nt2, F(0), v)
            out.append((u0, _canonical_orbit(p1, p2)))
            continue
        fval = cm.f.eval(u0)
        if not fval:
            out.append((u0, _node_point(
                (M1, N1), (M2, N2), RatFunc(cm.f), u0)))
            continue
        v = _sqrt625(fval)
        p1 = _e_point_at(M1, N1, u0, v)
        p2 = _e_point_at(M2, N2, u0, v)
        out.append((u0, _canonical_orbit(p1, p2)))
    return out


def _node_point(c1, c2, frf, u0):
    """The point on the exceptional line hit at a Weierstrass parameter.

    Tangent coordinates follow the convention of differentiating the
    coordinate functions along the local parameter v: the component is
    N_i(u0) when the i-th coordinate is a finite 2-torsion point and
    (M_i / (f N_i))(u0) when it is the zero point.
    """
    vals = []
    lbls = []
    for M, N in (c1, c2):
        x = M.eval(u0)
        lbls.append(_x_label(x))
        if x is None:
            vals.append((M / (frf * N)).eval(u0))
        else:
            vals.append(N.eval(u0))
    t1, t2 = vals
    assert t1 is not None and t2 is not None
    assert t1 or t2
    return ("node", tuple(lbls), _normalize_tangent(t1, t2))


def ycurve_from_map(cm):
    pts = curve_points(cm)
    cls = class_in_sa(cm)
    assert smoothness_check(cm, cls), cm.label
    trace = two_torsion_trace(cm)
    node_lbls = {p[1] for _, p in pts if p[0] == "node"}
    assert node_lbls == trace, cm.label
    yc = YCurve(cls, {lbl: -1 for lbl in trace}, pts, cm.label)
    assert y_pairing(yc, yc) == -2, cm.label
    return yc


def section_curve(factor, lbl):
    """{P} x E (factor 0) or E x {P} (factor 1) for a 2-torsion point P."""
    torsion_x = {"0": F(1), "1": F(OMEGA), "2": F(OMEGA) * F(OMEGA)}
    pts = []
    for t in _p1_gf25():
        if t is INFU:
            other = "inf"
        else:
            other = None
            for cand, xv in torsion_x.items():
                if t == xv:
                    other = cand
        if other is not None:
            pair = (lbl, other) if factor == 0 else (other, lbl)
            # the tangent points along the moving factor
            xi = (F(0), F(1)) if factor == 0 else (F(1), F(0))
            pts.append((t, ("node", pair, xi)))
            continue
        fixed = _label_point(lbl, GF625)
        y = _sqrt625(GF625(t) ** 3 - 1)
        moving = (GF625(t), y)
        if factor == 0:
            pts.append((t, _canonical_orbit(fixed, moving)))
        else:
            pts.append((t, _canonical_orbit(moving, fixed)))
    sa = (0, 1, 0, 0, 0, 0) if factor == 0 else (1, 0, 0, 0, 0, 0)
    exc = {}
    for _, p in pts:
        if p[0] == "node":
            exc[p[1]] = -1
    name = f"({lbl}) x E" if factor == 0 else f"E x ({lbl})"
    yc = YCurve(sa, exc, pts, name)
    assert y_pairing(yc, yc) == -2
    return yc


# --- the six sixteen-curve sets ---------------------------------------------

ALL_T = [(a, b) for a in TORSION_LABELS for b in TORSION_LABELS]


def _translates(cm):
    """Distinct Kummer images of the 16 translates of a symmetric curve."""
    seen = {}
    for t1, t2 in ALL_T:
        yc = ycurve_from_map(cm.translate(
            t1, t2, label=f"T({t1},{t2}) {cm.label}"))
        seen.setdefault(yc.key(), yc)
    return list(seen.values())


def _with_tau(curves_maps):
    out = []
    for cm in curves_maps:
        out.append(cm)
        out.append(cm.swap_tau())
    return out


_SIX_CACHE = None


def build_six_sets():
    """The six disjoint 16-curve sets, keyed S00, S01, S02, S10, S11, S12."""
    global _SIX_CACHE
    if _SIX_CACHE is not None:
        return _SIX_CACHE
    cs = seven_curves()
    sets = {"S00": [exceptional_curve(p) for p in ALL_T]}
    sets["S01"] = _translates(cs["FF2"])
    sets["S02"] = _translates(cs["FF3"])
    s10 = []
    for cm in _with_tau([cs["G43"], cs["G44"]]):
        s10.extend(_translates(cm))
    sets["S10"] = s10
    s11 = []
    for cm in _with_tau([cs["E12"], cs["E22"]]):
        s11.extend(_translates(cm))
    sets["S11"] = s11
    mp = base_maps()
    ident = (rf((0, 1)), rf((1,)))
    b4 = CurveMap(mp["f_E"], [ident, ((F(OMEGA)) * ident[0], -1 * ident[1])],
                  "Gamma[(id, g)]")
    s12 = [section_curve(1, lbl) for lbl in TORSION_LABELS]
    s12 += [section_curve(0, lbl) for lbl in TORSION_LABELS]
    s12 += _translates(b4)
    s12 += _translates(cs["ID2"])
    sets["S12"] = s12
    for name, curves in sets.items():
        assert len(curves) == 16, (name, len(curves))
        keys = {c.key() for c in curves}
        assert len(keys) == 16, name
    _SIX_CACHE = sets
    return sets


SET_NAMES = ("S00", "S01", "S02", "S10", "S11", "S12")


def configuration_number(name_a, name_b):
    """The r of the (16_r)-configuration between two of the six sets."""
    nu_a, i_a = int(name_a[1]), int(name_a[2])
    nu_b, i_b = int(name_b[1]), int(name_b[2])
    assert (nu_a, i_a) != (nu_b, i_b)
    if nu_a == nu_b:
        return 6
    return 12 if i_a == i_b else 4


def check_six_sets(sets=None):
    """Full 96 x 96 intersection-matrix check of the three configurations.

    Returns the matrix of pairings indexed in SET_NAMES block order.
    """
    if sets is None:
        sets = build_six_sets()
    curves = [(name, c) for name in SET_NAMES for c in sets[name]]
    n = len(curves)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            p = y_pairing(curves[i][1], curves[j][1])
            mat[i][j] = mat[j][i] = p
    for i in range(n):
        assert mat[i][i] == -2
    for a in range(6):
        for b in range(6):
            if a == b:
                block_ok = all(
                    mat[16 * a + i][16 * a + j] == 0
                    for i in range(16) for j in range(16) if i != j)
                assert block_ok, SET_NAMES[a]
                continue
            r = configuration_number(SET_NAMES[a], SET_NAMES[b])
            for i in range(16):
                row = [mat[16 * a + i][16 * b + j] for j in range(16)]
                assert all(v in (0, 1) for v in row), (SET_NAMES[a], i)
                assert sum(row) == r, (SET_NAMES[a], SET_NAMES[b], i, sum(row))
    return mat


def pairing_equals_point_count(sets=None):
    """<C, C'> = |C(F_25) n C'(F_25)| for every pair of distinct curves."""
    if sets is None:
        sets = build_six_sets()
    curves = [c for name in SET_NAMES for c in sets[name]]
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            inter = len(curves[i].point_set & curves[j].point_set)
            if inter != y_pairing(curves[i], curves[j]):
                return False, (curves[i].label, curves[j].label)
    return True, None


# --- the worked example curve and its point table ---------------------------

def example_eta():
    """The printed genus-5 member of the second sixteen-curve family."""
    s2 = SQRT2
    f = base_maps()["f_G"]
    d1 = _lin(4 * s2) * _lin(3 + 3 * s2) * _lin(2 + 2 * s2) * _lin(s2)
    n1 = (poly((4 * s2, 4 + 3 * s2, 1)) * poly((4 * s2, 1 + 2 * s2, 1))
          ).scale(F(2) + 2 * s2)
    M1 = RatFunc(n1, d1)
    N1 = RatFunc(poly((0, 1)), d1 * d1)
    d2 = _lin(4 + s2) * _lin(1 + s2) * _lin(2 + 2 * s2) * _lin(2 + 3 * s2)
    n2 = (poly((4 + 3 * s2, 3 + 4 * s2, 1)) * poly((3 + 4 * s2, 1 + 4 * s2, 1))
          ).scale(F(4) + 3 * s2)
    M2 = RatFunc(n2, d2)
    N2 = RatFunc((_lin(F(4)) * _lin(F(1))).scale(F(1) + s2), d2 * d2)
    return CurveMap(f, [(M1, N1), (M2, N2)], "example eta")


def example_eta_prime():
    """The member of the fifth set through the image of u = infinity."""
    s2 = SQRT2
    f = base_maps()["f_E"]
    den = _ppow(_lin(4 + 3 * s2), 2)
    M1 = RatFunc(poly((1 + 2 * s2, 1 + 3 * s2, 1)), den)
    N1 = RatFunc(_lin(4 + 2 * s2).scale(F(4) + 2 * s2),
                 _ppow(_lin(4 + 3 * s2), 3))
    M2 = rf((0, 2 + 2 * s2))
    N2 = rf((4,))
    return CurveMap(f, [(M1, N1), (M2, N2)], "example eta'")


def example_xi():
    """The member of the second set through a cross-family point."""
    s2 = SQRT2
    f = base_maps()["f_F"]
    M1 = rf((0, 0, 1))
    N1 = rf((1,))
    M2 = RatFunc(_ppow(_lin(s2), 2).scale(F(3)), _ppow(_lin(2 * s2), 2))
    N2 = RatFunc(poly((1,)), _ppow(_lin(2 * s2), 3))
    return CurveMap(f, [(M1, N1), (M2, N2)], "example xi")


def _enc_gf25(x):
    return [x.a, x.b]


def _enc_torsion(lbl):
    om = F(OMEGA)
    vals = {"inf": "inf", "0": _enc_gf25(F(1)), "1": _enc_gf25(om),
            "2": _enc_gf25(om * om)}
    return vals[lbl]


def point_table(yc):
    """The 26-row point table in the fixture encoding (chart form)."""
    rows = []
    for u, p in yc.points:
        u_enc = "inf" if u is INFU else _enc_gf25(u)
        if p[0] == "node":
            lbl = p[1]
            xi = p[2]
            rows.append([u_enc, "exc",
                         [[_enc_torsion(lbl[0]), _enc_torsion(lbl[1])],
                          [_enc_gf25(xi[0]), _enc_gf25(xi[1])]]])
        else:
            pair = next(iter(p[1]))
            p1, p2 = pair
            x1 = p1[0].to_gf25()
            x2 = p2[0].to_gf25()
            w = (p1[1] * p2[1]).to_gf25()
            rows.append([u_enc, "affine",
                         [_enc_gf25(x1), _enc_gf25(x2), _enc_gf25(w)]])
    return rows


# --- the rational-point partition -------------------------------------------

def _point_index(sets):
    idx = {}
    for name in SET_NAMES:
        for c in sets[name]:
            for p in c.point_set:
                idx.setdefault(p, []).append((name, c))
    return idx


def partition_points(yc, own_name, sets=None, index=None):
    """Split the curve's 26 points by which of the six sets meet them.

    Returns a dict piece-name -> list of parameter values, with pieces
    'same' (met by both same-family sets), and 'cross_<set>' for the three
    cross-family sets; verifies the uniqueness property along the way.
    """
    if sets is None:
        sets = build_six_sets()
    if index is None:
        index = _point_index(sets)
    nu = own_name[1]
    same_names = [n for n in SET_NAMES if n[1] == nu and n != own_name]
    cross_names = [n for n in SET_NAMES if n[1] != nu]
    pieces = {"same": []}
    for n in cross_names:
        pieces["cross_" + n] = []
    for u, p in yc.points:
        by_set = {}
        for name, c in index.get(p, ()):
            if c.key() == yc.key():
                continue
            by_set.setdefault(name, []).append(c)
        hit = sorted(by_set)
        if hit == sorted(same_names):
            assert all(len(by_set[n]) == 1 for n in same_names)
            pieces["same"].append(u)
        else:
            assert len(hit) == 1 and hit[0] in cross_names, (yc.label, u, hit)
            assert len(by_set[hit[0]]) == 1
            pieces["cross_" + hit[0]].append(u)
    return pieces


def partition_sizes(pieces, own_name):
    nu, i = own_name[1], own_name[2]
    mu = "1" if nu == "0" else "0"
    same = len(pieces["same"])
    opp = len(pieces["cross_S" + mu + i])
    others = sorted(len(v) for k, v in pieces.items()
                    if k.startswith("cross_") and k != "cross_S" + mu + i)
    return same, opp, others


# --- Moebius normalization of the partition ---------------------------------

def _proj(z):
    if z is INFU:
        return (F(1), F(0))
    return (z, F(1))


def _mat2_apply(m, pt):
    x, y = pt
    return (m[0][0] * x + m[1][0] * y, m[0][1] * x + m[1][1] * y)


def _unproj(pt):
    x, y = pt
    if not y:
        return INFU
    return x / y


def _mat2_inv(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    inv = det.inverse()
    return [[m[1][1] * inv, -m[0][1] * inv], [-m[1][0] * inv, m[0][0] * inv]]


def _mat2_mul(a, b):
    return [[a[0][0] * b[0][0] + a[0][1] * b[1][0],
             a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0],
             a[1][0] * b[0][1] + a[1][1] * b[1][1]]]


def _three_point_matrix(p1, p2, p3):
    """Matrix sending (1:0), (0:1), (1:1) to the three projective points."""
    a, b = p1
    c, d = p2
    e, ff = p3
    det = a * d - b * c
    lam = (e * d - ff * c) / det
    mu = (a * ff - b * e) / det
    return [[lam * a, lam * b], [mu * c, mu * d]]


def moebius_through(src3, dst3):
    """The projective map sending the source triple to the target triple."""
    ms = _three_point_matrix(*[_proj(z) for z in src3])
    md = _three_point_matrix(*[_proj(z) for z in dst3])
    return _mat2_mul(_mat2_inv(ms), md)


def match_partition_to_reference(pieces, own_name):
    """Find a Moebius map carrying the pieces onto P6/P12/P4/P4bar.

    Returns (matrix, which) with which in {'plain', 'swapped'} recording
    whether the two 4-element pieces land on P4, P4bar or the other way.
    """
    from .fixtures import P6, P4, P4BAR
    from itertools import permutations

    def dec(enc):
        return INFU if enc == "inf" else gf25_from_pair(enc)

    p6 = [dec(e) for e in P6]
    p4 = [dec(e) for e in P4]
    p4b = [dec(e) for e in P4BAR]
    p12 = [x for x in _p1_gf25()
           if x not in p6 and x not in p4 and x not in p4b]
    nu, i = own_name[1], own_name[2]
    mu = "1" if nu == "0" else "0"
    same = pieces["same"]
    big = pieces["cross_S" + mu + i]
    smalls = sorted((k, v) for k, v in pieces.items()
                    if k.startswith("cross_") and k != "cross_S" + mu + i)
    (ka, va), (kb, vb) = smalls

    def as_set(vals):
        return frozenset("inf" if v is INFU else (v.a, v.b) for v in vals)

    tgt6, tgt12 = as_set(p6), as_set(p12)
    tgt4, tgt4b = as_set(p4), as_set(p4b)
    for trip in permutations(p6, 3):
        m = moebius_through(same[:3], trip)

        def img(vals):
            return as_set([_unproj(_mat2_apply(m, _proj(z))) for z in vals])

        if img(same) != tgt6 or img(big) != tgt12:
            continue
        ia, ib = img(va), img(vb)
        if ia == tgt4 and ib == tgt4b:
            return m, {ka: "P4", kb: "P4bar"}
        if ia == tgt4b and ib == tgt4:
            return m, {ka: "P4bar", kb: "P4"}
    return None, None
