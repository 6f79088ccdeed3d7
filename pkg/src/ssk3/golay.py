"""The binary Golay code on the 24-point set P^1(F_23).

Points are labelled infinity, 0, 1, ..., 22 and stored as bit positions
0..23 (bit 0 is the point at infinity, bit i+1 is the residue i).  The code
is built as an extended quadratic-residue code: the F_2-span of the sets
{infinity} + (N + a) for a in F_23, where N is the set of quadratic
non-residues.  Code sets ("C-sets") are 24-bit masks.

Of the two translate conventions (residues vs non-residues) only the
non-residue one reproduces the classical labeling in which
{inf,0,1,2,3,5,14,17} is an octad; that membership is enforced during
construction, so no relabeling permutation is required.
"""

from functools import lru_cache

POINTS = ["inf"] + [str(i) for i in range(23)]
N = 24

REFERENCE_OCTAD = ("inf", "0", "1", "2", "3", "5", "14", "17")


def point_index(p):
    """Index of a point label ('inf' or 0..22)."""
    if p == "inf":
        return 0
    return int(p) + 1


def mask_of(points):
    m = 0
    for p in points:
        m |= 1 << point_index(p)
    return m


def points_of(mask):
    return tuple(POINTS[i] for i in range(N) if mask >> i & 1)


def popcount(m):
    return bin(m).count("1")


class GolayCode:
    """The 4096 codewords, with octad machinery."""

    def __init__(self, codewords):
        self.codewords = frozenset(codewords)
        self.octads = sorted(m for m in self.codewords if popcount(m) == 8)
        self._verify()

    def _verify(self):
        assert len(self.codewords) == 4096, "wrong codeword count"
        weights = {popcount(m) for m in self.codewords}
        assert weights <= {0, 8, 12, 16, 24}, f"bad weights {weights}"
        assert len(self.octads) == 759, "wrong octad count"
        assert mask_of(REFERENCE_OCTAD) in self.codewords, \
            "reference octad is not a codeword"

    def __contains__(self, mask):
        return mask in self.codewords

    def octads_containing(self, points_mask):
        return [k for k in self.octads if k & points_mask == points_mask]

    def octad_through(self, five_points_mask):
        """The unique octad containing five given points."""
        assert popcount(five_points_mask) == 5
        hits = self.octads_containing(five_points_mask)
        assert len(hits) == 1
        return hits[0]

    def sextet(self, tetrad_mask):
        """The six tetrads of the sextet determined by a 4-point set."""
        assert popcount(tetrad_mask) == 4
        tetrads = {tetrad_mask}
        for k in self.octads:
            if k & tetrad_mask == tetrad_mask:
                tetrads.add(k ^ tetrad_mask)
        tetrads = sorted(tetrads)
        assert len(tetrads) == 6
        cover = 0
        for t in tetrads:
            assert cover & t == 0
            cover |= t
        assert cover == (1 << N) - 1
        return tetrads

    def dodecads(self):
        return [m for m in self.codewords if popcount(m) == 12]


def octad_pair_cardinality(code, k, k0):
    """|K n K0| for two octads; always 0, 2, 4 or 8."""
    if k not in code.codewords or popcount(k) != 8:
        raise ValueError("first argument is not an octad")
    if k0 not in code.codewords or popcount(k0) != 8:
        raise ValueError("second argument is not an octad")
    c = popcount(k & k0)
    assert c in (0, 2, 4, 8)
    return c


def _qr_generators():
    residues = {(i * i) % 23 for i in range(1, 23)}
    nonresidues = sorted(set(range(1, 23)) - residues)
    gens = []
    for a in range(23):
        pts = ["inf"] + [str((a + q) % 23) for q in nonresidues]
        gens.append(mask_of(pts))
    return gens


def _span(gens):
    space = {0}
    for g in gens:
        space |= {g ^ w for w in space}
    return space


@lru_cache(maxsize=1)
def build_golay():
    """Construct and verify the code (cached)."""
    words = _span(_qr_generators())
    return GolayCode(words)
