"""The supersingular curve, its endomorphism order, and point counts."""

import random

import pytest

from ssk3.gf25 import GF25, GF625, OMEGA, all_gf25
from ssk3 import elliptic as E
from ssk3.quaternion import (
    Endo, ONE, GAMMA, PHI, GAMMAPHI, FROBENIUS, trace_gram, j_basis,
    j_of_class, j_intersection,
)
from ssk3.fixtures import GRAM_SA, SEVEN_CURVE_CLASSES


@pytest.fixture(scope="module")
def pts625():
    return E.points_gf625()


@pytest.fixture(scope="module")
def rng():
    return random.Random(17)


def test_curve_counts(pts625):
    assert len(E.points_gf25()) == 36
    assert len(pts625) == 576


def test_group_axioms(pts625, rng):
    for _ in range(100):
        P, Q, R = (rng.choice(pts625) for _ in range(3))
        assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
        assert E.add(P, Q) == E.add(Q, P)
        assert E.add(P, E.neg(P)) is E.INF
        assert E.add(P, E.INF) == P


def test_printed_addition_formula(pts625, rng):
    # the generic chord formula as printed, checked against the group law
    done = 0
    while done < 50:
        P, Q = rng.choice(pts625), rng.choice(pts625)
        if P is E.INF or Q is E.INF or P[0] == Q[0]:
            continue
        x1, y1 = P
        x2, y2 = Q
        x3 = -x1 - x2 + ((y2 - y1) ** 2) / ((x2 - x1) ** 2)
        y3 = (y1 + y2 - ((y2 - y1) ** 3) / ((x2 - x1) ** 3)
              + (3 * (x2 * y1 - x1 * y2)) / (x1 - x2))
        assert E.add(P, Q) == (x3, y3)
        done += 1


def test_doubling_closed_form(pts625, rng):
    # x o [2] = -x + x/y^2 and y o [2] = 2y - 1/y + 1/y^3 (the sign of the
    # first summand is forced by the chord-tangent law)
    done = 0
    while done < 20:
        P = rng.choice(pts625)
        if P is E.INF or not P[1]:
            continue
        x, y = P
        d = E.add(P, P)
        assert d == (-x + x / (y * y), 2 * y - 1 / y + 1 / (y ** 3))
        done += 1


def test_two_torsion():
    tt = E.two_torsion()
    assert len(tt) == 4
    for P in tt:
        assert E.add(P, P) is E.INF
        assert E.on_curve(P)
    P0 = tt[1]
    assert P0 == (GF25(1), GF25(0))


def test_translation_closed_form(rng):
    pts = E.points_gf25()
    P0 = (GF25(1), GF25(0))
    for P in pts:
        assert E.translate_p0(P) == E.add(P, P0)


def test_phi2_squares_to_minus_two(pts625, rng):
    for _ in range(50):
        P = rng.choice(pts625)
        lhs = E.phi2_map(E.phi2_map(P, GF625), GF625)
        assert lhs == E.mul(-2, P)
    # the kernel is {0, P0}
    assert E.phi2_map((GF25(1), GF25(0))) is E.INF
    assert E.phi2_map(E.INF) is E.INF


def test_gamma_order_six(pts625, rng):
    for _ in range(20):
        P = rng.choice(pts625)
        Q = P
        for k in range(1, 6):
            Q = E.gamma_map(Q, GF625)
            if P is not E.INF and k < 6:
                pass
        Q = P
        for _ in range(6):
            Q = E.gamma_map(Q, GF625)
        assert Q == P
    om = GF25(OMEGA)
    assert om ** 3 == GF25(1) and om != GF25(1)


def test_frobenius_squared(pts625, rng):
    for _ in range(50):
        P = rng.choice(pts625)
        assert E.frob_map(E.frob_map(P)) == E.mul(-5, P)


def test_frobenius_fixed_points(pts625):
    fixed = [P for P in pts625 if E.frob_map(P) == P]
    assert len(fixed) == 6  # E(F_5) is cyclic of order 6


def test_frobenius_endomorphism_identity(pts625):
    for P in pts625:
        assert E.apply_endo(FROBENIUS.z, P, GF625) == E.frob_map(P)


def test_endo_ring():
    assert PHI * GAMMA == Endo(-1, 0, 1, -1)
    assert GAMMA * GAMMA == GAMMA - 1
    assert GAMMA * PHI == GAMMAPHI
    a = Endo(1, 2, -1, 3)
    assert ONE * a == a and a * ONE == a
    rng = random.Random(23)
    els = [Endo(*[rng.randrange(-3, 4) for _ in range(4)]) for _ in range(8)]
    for x in els:
        for y in els:
            assert (x * y).conj() == y.conj() * x.conj()
            for z in els[:3]:
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z


def test_endo_acts_as_composition(pts625, rng):
    for _ in range(20):
        P = rng.choice(pts625)
        lhs = E.apply_endo((PHI * GAMMA).z, P, GF625)
        rhs = E.phi2_map(E.gamma_map(P, GF625), GF625)
        assert lhs == rhs


def test_trace_gram_matrix():
    m = trace_gram()
    assert m == [
        [2, 1, 0, -1],
        [1, -1, -1, -1],
        [0, -1, -4, -2],
        [-1, -1, -2, -3],
    ]
    assert m == [list(r) for r in zip(*m)]
    assert FROBENIUS.norm() == 5 and FROBENIUS.trace() == 0


def test_jmap_reproduces_gram():
    jb = j_basis()
    got = [[j_intersection(jb[i], jb[j]) for j in range(6)] for i in range(6)]
    assert got == GRAM_SA


def test_jmap_on_curve_classes():
    for name, cls in SEVEN_CURVE_CLASSES.items():
        jm = j_of_class(cls)
        # self-intersection through the index formula
        self_int = j_intersection(jm, jm)
        want = 0
        for i in range(6):
            for j in range(6):
                want += cls[i] * cls[j] * GRAM_SA[i][j]
        assert self_int == want


def test_torsion_classify(pts625):
    k2 = k4p = k6p = other = 0
    for P in pts625:
        in2, in4p, in6p = E.torsion_classify(P)
        d2 = E.mul(2, P) is E.INF
        d4 = E.mul(4, P) is E.INF
        d6 = E.mul(6, P) is E.INF
        assert in2 == d2
        assert in4p == (d4 and not d2)
        assert in6p == (d6 and not d2)
        k2 += in2
        k4p += in4p
        k6p += in6p
        other += not (in2 or in4p or in6p)
    assert k2 == 4
    assert k4p == 12  # |Ker[4]| = 16 minus the four 2-torsion points
    assert k6p == 32
    assert k2 + k4p + k6p + other == 576


def test_point_counts():
    assert E.count_e_fp2(5) == 36
    formula, direct = E.count_km_fp2(5)
    assert formula == 1176 and direct == 1176
    assert E.count_km_fp2(3)[0] == 280
