"""Golay code, Leech lattice and the three root configurations."""

import random
from itertools import combinations

import pytest

from ssk3.golay import (
    build_golay, mask_of, points_of, popcount, point_index,
    octad_pair_cardinality, REFERENCE_OCTAD, N,
)
from ssk3.leech import (
    nu, nu_mask, NU_OMEGA, leech_contains, leech_inner, enumerate_lambda,
    leech_root, l_inner, l_norm, l_add, l_scale, WEYL_W,
)
from ssk3.configs import LeechConfig
from ssk3.fixtures import GRAM_R


@pytest.fixture(scope="module")
def code():
    return build_golay()


def test_code_size_and_weights(code):
    assert len(code.codewords) == 4096
    assert len(code.octads) == 759
    assert {popcount(m) for m in code.codewords} == {0, 8, 12, 16, 24}


def test_reference_octad(code):
    assert mask_of(REFERENCE_OCTAD) in code.codewords


def test_three_points_in_21_octads(code):
    for trip in combinations(range(N), 3):
        m = (1 << trip[0]) | (1 << trip[1]) | (1 << trip[2])
        assert sum(1 for k in code.octads if k & m == m) == 21


def test_five_points_in_one_octad(code):
    counts = {}
    for k in code.octads:
        pos = [i for i in range(N) if k >> i & 1]
        for five in combinations(pos, 5):
            key = sum(1 << i for i in five)
            counts[key] = counts.get(key, 0) + 1
    from math import comb
    assert len(counts) == comb(24, 5)
    assert set(counts.values()) == {1}


def test_code_is_linear(code):
    rng = random.Random(1)
    words = sorted(code.codewords)
    for _ in range(10_000):
        a, b = rng.choice(words), rng.choice(words)
        assert a ^ b in code.codewords
    for k1 in code.octads[:40]:
        for k2 in code.octads[:40]:
            assert k1 ^ k2 in code.codewords


def test_sextet(code):
    tet = mask_of(("inf", "0", "1", "2"))
    tetrads = code.sextet(tet)
    assert len(tetrads) == 6
    for t1, t2 in combinations(tetrads, 2):
        assert t1 | t2 in code.codewords
        assert popcount(t1 | t2) == 8


def test_octad_pair_cardinalities(code):
    k0 = code.octads[0]
    assert octad_pair_cardinality(code, k0, k0) == 8
    inf_bit = 1 << point_index("inf")
    zero_bit = 1 << point_index("0")
    # counts quoted in the two root-counting lemmas
    k0_cfg1 = next(k for k in code.octads
                   if not k & inf_bit and k & zero_bit)
    n126 = sum(1 for k in code.octads
               if k & inf_bit and not k & zero_bit
               and popcount(k & k0_cfg1) == 2)
    assert n126 == 126
    k0_cfg2 = next(k for k in code.octads if not k & inf_bit)
    n168 = sum(1 for k in code.octads
               if k & inf_bit and popcount(k & k0_cfg2) == 2)
    assert n168 == 168
    with pytest.raises(ValueError):
        octad_pair_cardinality(code, (1 << 8) - 1, k0)


def test_leech_membership_generators(code):
    for k in code.octads[:100]:
        v = tuple(2 * x for x in nu_mask(k))
        assert leech_contains(v)
        assert leech_inner(v, v) == -4
    w = tuple(a - 4 * b for a, b in zip(NU_OMEGA, nu(["inf"])))
    assert leech_contains(w)
    assert not leech_contains((1,) + (0,) * 23)


def test_leech_closed_under_addition(code):
    rng = random.Random(2)
    gens = [tuple(2 * x for x in nu_mask(k)) for k in code.octads[:60]]
    gens.append(tuple(a - 4 * b for a, b in zip(NU_OMEGA, nu(["inf"]))))
    for _ in range(1000):
        a, b = rng.choice(gens), rng.choice(gens)
        s = tuple(x + y for x, y in zip(a, b))
        assert leech_contains(s)


def test_lambda4_count_and_shapes():
    lam4 = enumerate_lambda(4)
    assert len(lam4) == 196560
    shapes = {}
    for v in lam4:
        key = tuple(sorted(abs(x) for x in v if x))
        shapes[key] = shapes.get(key, 0) + 1
    assert shapes[(4, 4)] == 2 * 276 * 2
    assert shapes[tuple([2] * 8)] == 759 * 128
    assert shapes[tuple([1] * 23 + [3])] == 24 * 4096
    for v in lam4:
        assert leech_contains(v)
        assert leech_inner(v, v) == -4


def test_no_norm_minus_two_vectors(code):
    # candidate shapes with euclidean square 16: (+-4, 0^23), (+-2^4, 0^20)
    for i in range(N):
        for s in (4, -4):
            v = [0] * N
            v[i] = s
            assert not leech_contains(tuple(v))
    for quad in combinations(range(N), 4):
        for bits in range(16):
            v = [0] * N
            for t, i in enumerate(quad):
                v[i] = -2 if bits >> t & 1 else 2
            assert not leech_contains(tuple(v))


def test_leech_root_basics():
    zero = tuple([0] * N)
    assert leech_root(zero) == (-1, 1, zero)
    r = leech_root(tuple(2 * x for x in nu(REFERENCE_OCTAD)))
    assert r[0] == 1 and r[1] == 1
    assert l_norm(r) == -2
    assert l_inner(r, WEYL_W) == 1


def test_leech_root_pairings():
    cfg = LeechConfig(1)
    roots = cfg.orthogonal_leech_roots()
    rng = random.Random(3)
    for _ in range(200):
        r1, r2 = rng.sample(roots, 2)
        diff = tuple(a - b for a, b in zip(r1[2], r2[2]))
        n = leech_inner(diff, diff)
        p = l_inner(r1, r2)
        if n == -4:
            assert p == 0
        elif n == -6:
            assert p == 1
        if p == 0:
            assert n == -4 and leech_contains(diff)
        if p == 1:
            assert n == -6 and leech_contains(diff)


@pytest.mark.parametrize("mode,count", [(1, 252), (2, 168), (3, 96)])
def test_config_root_counts(mode, count):
    cfg = LeechConfig(mode)
    assert cfg.gram() == GRAM_R
    roots = cfg.orthogonal_leech_roots()
    assert len(roots) == count


def test_config1_mate_pairs():
    cfg = LeechConfig(1)
    roots = cfg.orthogonal_leech_roots()
    coeffs, ws5 = cfg.weyl_projection()
    assert l_norm(ws5) == 50  # (5 w')^2, i.e. w'^2 = 2
    assert list(coeffs) == [1, -1, 0, 0]  # w'' = a - b
    mates = 0
    by_vec = {r: None for r in roots}
    for r in roots:
        partner = None
        for s in roots:
            if s != r and l_inner(r, s) == 3:
                assert partner is None
                partner = s
        assert partner is not None
        # r + r' is the projected Weyl vector
        assert l_scale(5, l_add(r, partner)) == ws5
        mates += 1
    assert mates == 252  # 126 unordered pairs


def test_config2_meeting_number():
    cfg = LeechConfig(2)
    roots = cfg.orthogonal_leech_roots()
    coeffs, ws5 = cfg.weyl_projection()
    assert l_norm(ws5) == 60
    from ssk3.exactmath import QQ
    assert list(coeffs) == [QQ(6, 5), -1, QQ(-1, 5), QQ(2, 5)]
    for r in roots[:40]:
        meets = sum(1 for s in roots if s != r and l_inner(r, s) == 1)
        assert meets == 72
    # and every pairing is 0 or 1
    for r in roots[:10]:
        for s in roots:
            if s != r:
                assert l_inner(r, s) in (0, 1)


def test_config3_t_sets():
    cfg = LeechConfig(3)
    coeffs, ws5 = cfg.weyl_projection()
    assert l_norm(ws5) == 80
    from ssk3.exactmath import QQ
    assert list(coeffs) == [QQ(6, 5), QQ(-4, 5), QQ(-3, 5), QQ(3, 5)]
    groups = cfg.t_sets()
    assert len(groups) == 6
    singles = {k for k in groups if len(k) == 2}
    doubles = {k for k in groups if len(k) == 3}
    assert len(singles) == 3 and len(doubles) == 3
    for members in groups.values():
        assert len(members) == 16
        for r, s in combinations(members, 2):
            assert l_inner(r, s) == 0

    def meets(set_a, set_b):
        counts = set()
        for r in groups[set_a]:
            counts.add(sum(1 for s in groups[set_b] if l_inner(r, s) == 1))
        return counts

    for ka, kb in combinations(sorted(singles), 2):
        assert meets(ka, kb) == {6} and meets(kb, ka) == {6}
    for ka, kb in combinations(sorted(doubles), 2):
        assert meets(ka, kb) == {6} and meets(kb, ka) == {6}
    for ks in singles:
        i = ks[1]
        for kd in doubles:
            if i in kd[1:]:
                assert meets(ks, kd) == {4} and meets(kd, ks) == {4}
            else:
                assert meets(ks, kd) == {12} and meets(kd, ks) == {12}
