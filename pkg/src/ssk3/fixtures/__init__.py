"""Static data used across the package.

Elements of F_25 = F_5(sqrt 2) are encoded as [a, b] meaning a + b*sqrt(2);
"inf" encodes the point at infinity of P^1 or of an elliptic curve factor.
The generated double-plane fixture (Gram matrix of the rank-22 Picard
lattice, Frobenius and deck matrices, discriminant projectors) lives in
fermat_fixture.json and is loaded lazily.
"""

import json
from importlib import resources

# Gram matrix of the negative definite rank-4 lattice of discriminant 25
# used as the orthogonal complement of the K3 Picard lattice in the rank-26
# even unimodular lattice.
GRAM_R = [
    [-2, -1, 0, 1],
    [-1, -2, -1, 0],
    [0, -1, -4, -2],
    [1, 0, -2, -4],
]

# Hyperbolic plane.
GRAM_U = [[0, 1], [1, 0]]

# The order-6 stabilizer of the period inside O(q) for q = diag(2/5, 4/5),
# as matrices over F_5 acting on the discriminant generators from the right.
SIX_MATRICES = [
    [[1, 0], [0, 1]],
    [[2, 1], [3, 2]],
    [[2, 4], [2, 2]],
    [[3, 1], [3, 3]],
    [[3, 4], [2, 3]],
    [[4, 0], [0, 4]],
]

# Gram matrix of the Neron-Severi lattice of the abelian surface E x E in
# the basis B1..B6 (two rulings and four endomorphism graphs).
GRAM_SA = [
    [0, 1, 1, 1, 2, 2],
    [1, 0, 1, 1, 1, 1],
    [1, 1, 0, 1, 3, 4],
    [1, 1, 1, 0, 2, 3],
    [2, 1, 3, 2, 0, 2],
    [2, 1, 4, 3, 2, 0],
]

# Action of (gamma^a x gamma^b) on S_A: row vector -> row * G1^a * G2^b.
G1_SA = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [1, 1, -1, 1, 0, 0],
    [2, 3, -1, 0, 1, -1],
    [1, 1, 0, -1, 1, 0],
]
G2_SA = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 1, 1, -1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 2, 0, 0, 1, -1],
    [0, 0, 0, 0, 1, 0],
]

# Action of the swap (P, Q) -> (Q, P) on S_A.
FLIP_SA = [
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 1, 1, -1, 0, 0],
    [3, 3, 0, 0, -1, 0],
    [4, 4, -1, 0, 0, -1],
]

# Pairings of the seven symmetric curves with B1..B6, and their classes.
# Each row equals class * GRAM_SA for the class below it, and is reproduced
# independently by the degree method and by the quaternion index formula.
SEVEN_CURVE_TABLE = {
    "FF2": [2, 2, 4, 2, 8, 7],
    "FF3": [3, 3, 6, 3, 12, 13],
    "G43": [3, 4, 7, 4, 14, 15],
    "G44": [4, 4, 7, 3, 14, 16],
    "E12": [2, 1, 3, 2, 5, 7],
    "E22": [2, 2, 5, 2, 6, 8],
    "ID2": [1, 1, 3, 1, 2, 2],
}
SEVEN_CURVE_CLASSES = {
    "FF2": [2, 3, -1, 2, -1, 0],
    "FF3": [4, 6, -2, 3, -1, -1],
    "G43": [5, 6, -2, 3, -1, -1],
    "G44": [4, 6, -2, 4, -1, -1],
    "E12": [2, 4, -1, 1, 0, -1],
    "E22": [3, 4, -2, 2, 0, -1],
    "ID2": [1, 1, -1, 1, 0, 0],
}

# The four subsets of P^1(F_25) entering the rational-point partition.
P6 = ["inf", [0, 0], [1, 0], [2, 0], [3, 0], [4, 0]]
P4 = [[0, 1], [1, 2], [3, 3], [4, 4]]
P4BAR = [[0, 4], [1, 3], [3, 2], [4, 1]]

# 2-torsion trace of the worked example curve (a genus-5 member of the
# second sixteen-curve family): the twelve nodes its image passes through.
T_ETA = [
    ["inf", "inf"], ["inf", "0"], ["inf", "1"], ["inf", "2"],
    ["0", "inf"], ["0", "0"], ["0", "1"], ["0", "2"],
    ["1", "inf"], ["1", "2"], ["2", "inf"], ["2", "2"],
]
ETA_CLASS = [4, 6, -2, 4, -1, -1]

# The F_25-point list of the worked example curve: 26 rows, one per point
# of the u-line.  Affine rows are [x1, x2, w] on w^2 = (x1^3-1)(x2^3-1);
# exceptional rows give the node (by the x-coordinates of the 2-torsion
# point) and the tangent direction in the invariant frame.
TABLE5 = [
    ["inf", "affine", [[2, 2], [4, 3], [0, 0]]],
    [[0, 0], "affine", [[2, 3], [4, 3], [0, 0]]],
    [[1, 0], "affine", [[1, 3], [1, 0], [0, 0]]],
    [[2, 0], "affine", [[1, 3], [4, 3], [4, 3]]],
    [[3, 0], "affine", [[1, 3], [4, 3], [1, 2]]],
    [[4, 0], "affine", [[1, 3], [2, 3], [0, 0]]],
    [[0, 1], "exc", [["inf", [1, 0]], [[1, 0], [0, 2]]]],
    [[1, 1], "exc", [[[2, 3], [2, 2]], [[1, 0], [2, 0]]]],
    [[2, 1], "affine", [[0, 2], [2, 1], [3, 0]]],
    [[3, 1], "affine", [[4, 4], [4, 1], [3, 0]]],
    [[4, 1], "exc", [[[2, 2], [2, 2]], [[1, 0], [4, 1]]]],
    [[0, 2], "exc", [[[1, 0], [2, 3]], [[1, 0], [4, 2]]]],
    [[1, 2], "affine", [[0, 3], [2, 1], [1, 1]]],
    [[2, 2], "exc", [["inf", [2, 2]], [[1, 0], [0, 2]]]],
    [[3, 2], "exc", [[[1, 0], "inf"], [[1, 0], [2, 1]]]],
    [[4, 2], "affine", [[3, 4], [4, 1], [4, 4]]],
    [[0, 3], "exc", [[[1, 0], [1, 0]], [[1, 0], [0, 1]]]],
    [[1, 3], "affine", [[3, 4], [2, 4], [1, 4]]],
    [[2, 3], "exc", [[[1, 0], [2, 2]], [[1, 0], [0, 1]]]],
    [[3, 3], "exc", [["inf", "inf"], [[1, 0], [4, 2]]]],
    [[4, 3], "affine", [[0, 3], [3, 4], [3, 0]]],
    [[0, 4], "exc", [["inf", [2, 3]], [[1, 0], [3, 4]]]],
    [[1, 4], "exc", [[[2, 2], "inf"], [[1, 0], [1, 0]]]],
    [[2, 4], "affine", [[4, 4], [2, 4], [4, 4]]],
    [[3, 4], "affine", [[0, 2], [3, 4], [1, 4]]],
    [[4, 4], "exc", [[[2, 3], "inf"], [[1, 0], [2, 2]]]],
]

# Preimages of the point-partition pieces for the worked example curve.
EXAMPLE_PARTITION = {
    "same_family": ["inf", [0, 0], [1, 0], [2, 0], [3, 0], [4, 0]],
    "cross_01": [[3, 1], [4, 2], [1, 3], [2, 4]],
    "cross_02": [[2, 1], [1, 2], [4, 3], [3, 4]],
}


def _load_json(name):
    with resources.files(__package__).joinpath(name).open() as fh:
        return json.load(fh)


_fermat_cache = None


def fermat_fixture():
    """The generated double-plane fixture (see ssk3.fermat)."""
    global _fermat_cache
    if _fermat_cache is None:
        _fermat_cache = _load_json("fermat_fixture.json")
    return _fermat_cache
