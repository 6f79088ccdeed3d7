"""Tests for the exact lattice core."""

import random

import pytest

from ssk3.exactmath import QQ, det, mat_inverse, mat_mul, mat_transpose
from ssk3.lattice import (
    GramLattice, LatticeError, discriminant_group, dual_basis,
    enumerate_definite, orthogonal_group_definite,
    orthogonal_group_discriminant, natural_map_surjective,
    action_on_discriminant, reflect, is_isometry,
)
from ssk3.fixtures import GRAM_R

U_GRAM = [[0, 1], [1, 0]]


def test_gram_r_basic():
    R = GramLattice(GRAM_R)
    assert R.disc == 25
    assert R.is_negative_definite()


def test_dual_basis_diagonal():
    lat = GramLattice([[2, 0], [0, 2]])
    assert dual_basis(lat) == [[QQ(1, 2), 0], [0, QQ(1, 2)]]
    # round trip dual <-> primal
    xi = (3, -5)
    assert lat.primal_to_dual(lat.dual_to_primal(xi)) == xi


def test_discriminant_group_orders():
    R = GramLattice(GRAM_R)
    disc = discriminant_group(R)
    assert disc.order == 25
    assert disc.order_list == [5, 5]
    # the paper's generators u4^v, u2^v carry q = diag(8/5, 6/5)
    beta1 = (0, 0, 0, 1)
    beta2 = (0, 1, 0, 0)
    q1 = R.inner_dual(beta1, beta1)
    q2 = R.inner_dual(beta2, beta2)
    assert (q1 - QQ(8, 5)) % 2 == 0
    assert (q2 - QQ(6, 5)) % 2 == 0
    assert R.inner_dual(beta1, beta2) % 1 == 0


def test_unimodular_trivial_discriminant():
    disc = discriminant_group(GramLattice(U_GRAM))
    assert disc.order == 1
    assert disc.order_list == []


def test_reflection():
    R = GramLattice(GRAM_R)
    u1 = (1, 0, 0, 0)
    u2 = (0, 1, 0, 0)
    assert reflect(R, u1, u1) == (-1, 0, 0, 0)
    # <u2, u1> = -1 so s_{u1}(u2) = u2 - u1
    assert reflect(R, u1, u2) == (-1, 1, 0, 0)
    # involution and isometry on random vectors
    rng = random.Random(7)
    for _ in range(20):
        x = tuple(rng.randrange(-4, 5) for _ in range(4))
        y = tuple(rng.randrange(-4, 5) for _ in range(4))
        sx, sy = reflect(R, u1, x), reflect(R, u1, y)
        assert reflect(R, u1, sx) == x
        assert R.inner(sx, sy) == R.inner(x, y)


def test_reflect_rejects_wrong_norm():
    R = GramLattice(GRAM_R)
    with pytest.raises(LatticeError):
        reflect(R, (0, 0, 1, 0), (1, 0, 0, 0))


def brute_force_vectors(gram, target, box=6):
    """Bounding-box oracle for definite enumeration."""
    lat = GramLattice(gram)
    n = lat.rank
    out = []

    def rec(prefix):
        if len(prefix) == n:
            if lat.norm(prefix) == target:
                out.append(tuple(prefix))
            return
        for c in range(-box, box + 1):
            rec(prefix + [c])

    rec([])
    return sorted(out)


def test_enumerate_definite_matches_brute_force():
    rng = random.Random(3)
    cases = [
        [[-2]],
        [[-2, 0], [0, -2]],
        [[-2, 1], [1, -2]],
        [[-4, 1], [1, -2]],
        GRAM_R,
    ]
    for gram in cases:
        for target in (0, -2, -4, -6):
            got = enumerate_definite(GramLattice(gram), target)
            want = brute_force_vectors(gram, target, box=8)
            assert got == want, (gram, target)


def test_enumerate_definite_norm_zero():
    R = GramLattice(GRAM_R)
    assert enumerate_definite(R, 0) == [(0, 0, 0, 0)]


def test_enumerate_rank1_scaled():
    lat = GramLattice([[-4]])
    assert enumerate_definite(lat, -4) == [(-1,), (1,)]


def test_enumerate_with_constraints():
    R = GramLattice(GRAM_R)
    u1 = (1, 0, 0, 0)
    all_roots = enumerate_definite(R, -2)
    want = sorted(v for v in all_roots if R.inner(v, u1) == 1)
    got = enumerate_definite(R, -2, [(u1, 1)])
    assert got == want


def test_enumerate_rejects_indefinite():
    with pytest.raises(LatticeError):
        enumerate_definite(GramLattice(U_GRAM), -2)


def test_orthogonal_group_orders():
    assert len(orthogonal_group_definite(GramLattice([[-2]]))) == 2
    # A1 + A1: signs and swap
    a1a1 = orthogonal_group_definite(GramLattice([[-2, 0], [0, -2]]))
    assert len(a1a1) == 8


def test_orthogonal_group_R_order_72():
    R = GramLattice(GRAM_R)
    og = orthogonal_group_definite(R)
    assert len(og) == 72
    mats = {tuple(tuple(r) for r in g) for g in og}
    # group axioms: identity, closure under inverse and composition
    assert tuple(tuple(r) for r in [[1 if i == j else 0 for j in range(4)]
                                    for i in range(4)]) in mats
    roots = set(enumerate_definite(R, -2))
    for g in og:
        assert is_isometry(R, g)
        inv = mat_inverse(g)
        assert tuple(tuple(int(x) for x in r) for r in inv) in mats
        assert {tuple(int(c) for c in mat_mul([list(v)], g)[0])
                for v in roots} == roots
    sample = random.Random(5).sample(og, 10)
    for g in sample:
        for h in sample:
            assert tuple(tuple(r) for r in mat_mul(g, h)) in mats


def test_oq_order_and_surjectivity():
    R = GramLattice(GRAM_R)
    disc = discriminant_group(R)
    oq = orthogonal_group_discriminant(disc)
    assert len(oq) == 12
    assert natural_map_surjective(R)


def test_oq_rank_one():
    lat = GramLattice([[-2]])
    disc = discriminant_group(lat)
    assert disc.order == 2
    assert len(orthogonal_group_discriminant(disc)) == 1
    assert natural_map_surjective(lat)


def test_action_on_discriminant_identity():
    R = GramLattice(GRAM_R)
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    act = action_on_discriminant(R, ident)
    assert act == [[1, 0], [0, 1]]


def test_qform_well_defined_random_lattices():
    rng = random.Random(11)
    made = 0
    while made < 20:
        n = rng.choice([2, 3])
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2 * rng.randrange(1, 4)
            for j in range(i):
                g[i][j] = g[j][i] = rng.randrange(-1, 2)
        if det(g) == 0:
            continue
        lat = GramLattice(g)
        if not lat.is_negative_definite():
            continue
        made += 1
        disc = discriminant_group(lat)
        assert disc.order == abs(lat.disc)
        for coords in disc.elements():
            xi = disc.lift(coords)
            # shift by a lattice vector: q must not change mod 2Z
            m = tuple(rng.randrange(-2, 3) for _ in range(n))
            xi2 = tuple(a + b for a, b in zip(xi, lat.primal_to_dual(m)))
            q1 = lat.inner_dual(xi, xi)
            q2 = lat.inner_dual(xi2, xi2)
            assert (q1 - q2) % 2 == 0
