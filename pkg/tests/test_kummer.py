"""Curves on the abelian surface and the six sixteen-curve sets."""

from itertools import combinations

import pytest

from ssk3 import kummer as K
from ssk3.gf25 import GF25, OMEGA, gf25_from_pair
from ssk3.exactmath import mat_mul, mat_identity
from ssk3.fixtures import (
    GRAM_SA, G1_SA, G2_SA, FLIP_SA, SEVEN_CURVE_TABLE, SEVEN_CURVE_CLASSES,
    TABLE5, T_ETA, ETA_CLASS, EXAMPLE_PARTITION,
)


@pytest.fixture(scope="module")
def curves():
    return K.seven_curves()


@pytest.fixture(scope="module")
def sets():
    return K.build_six_sets()


@pytest.fixture(scope="module")
def index(sets):
    return K._point_index(sets)


def test_component_identities(curves):
    # f N^2 = M^3 - 1 is asserted in the constructor; reaching here means
    # every printed morphism satisfies it
    assert len(curves) == 7


def test_seven_curve_table(curves):
    for name, cm in curves.items():
        assert K.pairings_with_basis(cm) == SEVEN_CURVE_TABLE[name], name


def test_seven_curve_classes(curves):
    for name, cm in curves.items():
        assert K.class_in_sa(cm) == SEVEN_CURVE_CLASSES[name], name


def test_table_rows_match_classes():
    for name in SEVEN_CURVE_TABLE:
        cls = SEVEN_CURVE_CLASSES[name]
        row = [sum(cls[i] * GRAM_SA[i][j] for i in range(6)) for j in range(6)]
        assert row == SEVEN_CURVE_TABLE[name], name


def test_smoothness(curves):
    for name, cm in curves.items():
        assert K.smoothness_check(cm), name
    assert curves["FF2"].genus() == 2
    assert curves["G44"].genus() == 5


def test_gram_sa_by_degree_method():
    """Reconstruct the full 6x6 Gram matrix from degrees alone."""
    mp = K.base_maps()
    ident = (K.rf((0, 1)), K.rf((1,)))
    graphs = []
    for k, name in ((0, "id"), (1, "g"), (None, "phi"), (None, "g phi")):
        if name == "id":
            comp = ident
        elif name == "g":
            comp = ((GF25(OMEGA)) * ident[0], -1 * ident[1])
        elif name == "phi":
            comp = mp["phiE2"]
        else:
            M, N = mp["phiE2"]
            comp = (GF25(OMEGA) * M, -1 * N)
        graphs.append(K.CurveMap(mp["f_E"], [ident, comp], f"graph {name}"))
    got = [[0, 1, 1, 1, 2, 2], [1, 0, 1, 1, 1, 1]]
    for g in graphs:
        got.append(K.pairings_with_basis(g))
    assert got == GRAM_SA


def test_two_torsion_trace_counts(curves):
    for name, cm in curves.items():
        tr = K.two_torsion_trace(cm)
        assert len(tr) == 2 * cm.genus() + 2


def test_six_sets_shape(sets):
    assert set(sets) == set(K.SET_NAMES)
    for name in K.SET_NAMES:
        assert len(sets[name]) == 16
        for c in sets[name]:
            assert K.y_pairing(c, c) == -2


def test_configurations(sets):
    K.check_six_sets(sets)


def test_pairing_equals_point_count(sets):
    ok, bad = K.pairing_equals_point_count(sets)
    assert ok, bad


def test_example_eta_class_and_trace():
    eta = K.example_eta()
    assert K.class_in_sa(eta) == ETA_CLASS
    assert K.two_torsion_trace(eta) == {tuple(t) for t in T_ETA}


def test_example_eta_table5():
    yc = K.ycurve_from_map(K.example_eta())
    assert K.point_table(yc) == TABLE5


def test_example_eta_in_s10(sets):
    yc = K.ycurve_from_map(K.example_eta())
    assert any(c.key() == yc.key() for c in sets["S10"])


def test_example_incidences(sets):
    """The printed members of other sets pass through the stated points."""
    eta = K.ycurve_from_map(K.example_eta())
    at_inf = dict(eta.points)[K.INFU]
    etap = K.ycurve_from_map(K.example_eta_prime())
    assert any(c.key() == etap.key() for c in sets["S11"])
    assert at_inf in etap.point_set
    # the member of S12 through the same point is {P_2} x E
    s12_members = [c for c in sets["S12"] if at_inf in c.point_set]
    assert [c.label for c in s12_members] == ["(2) x E"]
    # the member of S01 through the image of 3 + sqrt(2)
    at_3s = dict(eta.points)[GF25(3, 1)]
    xi = K.ycurve_from_map(K.example_xi())
    assert any(c.key() == xi.key() for c in sets["S01"])
    assert at_3s in xi.point_set


def test_example_partition(sets, index):
    eta = K.ycurve_from_map(K.example_eta())
    pieces = K.partition_points(eta, "S10", sets, index)

    def enc(vs):
        return sorted(str("inf" if v is K.INFU else (v.a, v.b)) for v in vs)

    def encfix(es):
        return sorted(str("inf" if e == "inf" else tuple(e)) for e in es)

    assert enc(pieces["same"]) == encfix(EXAMPLE_PARTITION["same_family"])
    assert enc(pieces["cross_S01"]) == encfix(EXAMPLE_PARTITION["cross_01"])
    assert enc(pieces["cross_S02"]) == encfix(EXAMPLE_PARTITION["cross_02"])


def test_all_partitions(sets, index):
    for name in K.SET_NAMES:
        for c in sets[name]:
            pieces = K.partition_points(c, name, sets, index)
            same, opp, others = K.partition_sizes(pieces, name)
            assert (same, opp, others) == (6, 12, [4, 4]), c.label
            m, which = K.match_partition_to_reference(pieces, name)
            assert m is not None, c.label
            assert sorted(which.values()) == ["P4", "P4bar"]


def test_sa_isometry_fixtures():
    for g in (G1_SA, G2_SA, FLIP_SA):
        gt = [list(r) for r in zip(*g)]
        assert mat_mul(g, mat_mul(GRAM_SA, gt)) == GRAM_SA
    p6 = mat_identity(6)
    acc = mat_identity(6)
    for _ in range(6):
        acc = mat_mul(acc, G1_SA)
    assert acc == p6
    acc = mat_identity(6)
    for _ in range(6):
        acc = mat_mul(acc, G2_SA)
    assert acc == p6
    assert mat_mul(FLIP_SA, FLIP_SA) == p6
    assert mat_mul(G1_SA, G2_SA) == mat_mul(G2_SA, G1_SA)


def test_tau_class_action(sets):
    """tau on classes agrees with the fixture matrices."""
    cs = K.seven_curves()
    mflip = FLIP_SA
    mg3 = mat_identity(6)
    for _ in range(3):
        mg3 = mat_mul(mg3, G1_SA)
    candidates = {
        "flip.g3": mat_mul(mg3, mflip),
        "g3.flip": mat_mul(mflip, mg3),
    }
    for name, cm in cs.items():
        cls = K.class_in_sa(cm)
        tcls = K.class_in_sa(cm.swap_tau())
        hits = {k for k, m in candidates.items()
                if [sum(cls[i] * m[i][j] for i in range(6))
                    for j in range(6)] == tcls}
        assert hits, name
        candidates = {k: m for k, m in candidates.items() if k in hits}
    assert candidates
