"""Induced chambers: candidate hyperplanes, walls, automorphisms, walks.

For a Weyl vector w of the rank-26 lattice, the induced chamber is cut out
by the projections r_S of the roots r with <r, w> = 1 and r_S^2 < 0.  The
candidate list is finite and canonical: the R-components range over the
finitely many dual vectors of norm > -2, and for each the S-components
form a constrained negative-definite enumeration.  The projection w_S is
an interior point, so an isometry of S lies in Aut(D) as soon as it
preserves the Gram matrix and w_S-degrees of a spanning set of candidates;
automorphism and congruence searches therefore run on the typed candidate
set without any facet filtering.  Facet status (needed for wall lists,
rational-curve walls, and chamber walks) is decided by an
interior-projection witness with an exact-LP fallback.

Candidates are stored by their primitive dual-coordinate vectors xi; for a
point x in S-primal coordinates the pairing <x, v> is the plain dot
product x . xi.
"""

import time
from math import gcd, isqrt

from .exactmath import (
    QQ, mat_inverse, mat_mul, mat_transpose, vec_mat, kernel_int,
    to_int_vec, is_integral, ldl, floor_q,
)
from .lattice import (
    GramLattice, enumerate_definite, solve_int_system, ResourceExhausted,
)
from .linprog import feasible
from .fixtures import SIX_MATRICES

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None


class DegenerateChamber(ValueError):
    """The Weyl projection lies on or behind a candidate hyperplane."""


def _reduce_basis_gram(a_mat, max_passes=40):
    """Size-reduce a positive definite Gram matrix by unimodular row ops.

    Returns (a_red, u) with a_red = u a u^t; a cheap Lagrange-style sweep
    that shrinks off-diagonal entries and sorts the diagonal, which cuts
    the enumeration tree substantially in rank ~21.
    """
    n = len(a_mat)
    a = [row[:] for row in a_mat]
    u = mat_identity_int(n)

    def rowop(i, j, t):
        # basis_i -= t * basis_j
        for k in range(n):
            u[i][k] -= t * u[j][k]
        for k in range(n):
            a[i][k] -= t * a[j][k]
        for k in range(n):
            a[k][i] -= t * a[k][j]

    for _ in range(max_passes):
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                d = a[j][j]
                t = (2 * a[i][j] + d) // (2 * d)
                if t:
                    rowop(i, j, t)
                    changed = True
        if not changed:
            break
    order = sorted(range(n), key=lambda i: a[i][i])  # large diag last
    a2 = [[a[i][j] for j in order] for i in order]
    u2 = [u[i] for i in order]
    return a2, u2


def mat_identity_int(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class WalkBudget(RuntimeError):
    pass


def _ldl_enumerate(lower, diag, shift, target):
    """Integer z with (z + shift) . Q . (z + shift)^t = target, where
    Q = L diag L^t is the given LDL data (positive definite)."""
    n = len(diag)
    if n == 0:
        return [()] if target == 0 else []
    if target < 0:
        return []
    shift = [QQ(s) for s in shift]
    sols = []
    z = [0] * n

    def rec(i, rem, tail):
        d = diag[i]
        c = shift[i] + tail[i]
        bound = rem / d
        num, den = bound.numerator, bound.denominator
        cd = int(c.denominator)
        cn = int(c.numerator)
        t = isqrt((int(num) * cd * cd) // int(den))
        zhi = (t - cn + 1) // cd
        if d * (QQ(zhi) + c) ** 2 > rem:
            zhi -= 1
        zlo = -((t + 1 + cn) // cd)
        if zlo <= zhi and d * (QQ(zlo) + c) ** 2 > rem:
            zlo += 1
        for zi in range(zlo, zhi + 1):
            u = QQ(zi) + c
            rem2 = rem - d * u * u
            if rem2 < 0:
                continue
            z[i] = zi
            if i > 0:
                xf = QQ(zi) + shift[i]
                rec(i - 1, rem2,
                    [tail[k] + xf * lower[i][k] for k in range(i)])
            elif rem2 == 0:
                sols.append(tuple(z))
        z[i] = 0

    rec(n - 1, QQ(target), [QQ(0)] * n)
    return sols


# ---------------------------------------------------------------------------
# static per-embedding data
# ---------------------------------------------------------------------------

class WallEngine:
    def __init__(self, emb):
        self.emb = emb
        self.lat_s = emb.lat_s
        self.inv25 = [[int(25 * x) for x in row]
                      for row in self.lat_s.gram_inverse]
        self.rho_list = self._enumerate_rho()
        self.class_lift = {}
        for cs in emb.disc_s.elements():
            xi = emb.disc_s.lift(cs)
            y = vec_mat([QQ(5 * t) for t in xi], self.lat_s.gram_inverse)
            assert is_integral(y)
            self.class_lift[cs] = to_int_vec(y)

    def _enumerate_rho(self):
        """All rho in R^v with -2 < rho^2 <= 0, keyed by (rho^2, class)."""
        lat_r = self.emb.lat_r
        out = [((0,) * 4, QQ(0), (0, 0))]
        for znorm in range(-2, -50, -2):
            for z in enumerate_definite(lat_r, znorm):
                dual = vec_mat(z, lat_r.gram)
                if any(d % 5 for d in dual):
                    continue
                rho_dual = tuple(d // 5 for d in dual)
                cls = self.emb.disc_r.class_coords(rho_dual)
                out.append((tuple(z), QQ(znorm, 25), cls))
        return out


_ENGINES = {}


def wall_engine(emb):
    key = id(emb)
    if key not in _ENGINES:
        _ENGINES[key] = WallEngine(emb)
    return _ENGINES[key]


# ---------------------------------------------------------------------------
# the chamber object
# ---------------------------------------------------------------------------

class Chamber:
    def __init__(self, emb, w):
        self.emb = emb
        self.w = to_int_vec(w)
        self.eng = wall_engine(emb)
        assert emb.lat_l.norm(self.w) == 0
        pair_s = emb.pair_with_s(self.w)
        h5 = vec_mat([5 * QQ(t) for t in pair_s], emb.lat_s.gram_inverse)
        assert is_integral(h5)
        self.h5 = to_int_vec(h5)       # 5 w_S, integral and primal
        self.ws_norm = QQ(emb.lat_s.norm(self.h5), 25)
        assert self.ws_norm > 0
        self._roots_by_xi = {}
        self._enumerate_candidates()
        self._facet = {}
        self._aut = None
        self._aut_x = None

    # --- candidates ---------------------------------------------------------

    def _enumerate_candidates(self):
        emb, eng = self.emb, self.eng
        lat_s = emb.lat_s
        m_col = vec_mat(self.h5, lat_s.gram)
        kern = [to_int_vec(r) for r in kernel_int([[c] for c in m_col])]
        assert len(kern) == 21
        kb = [list(r) for r in kern]
        a_mat = [[-x for x in row] for row in
                 mat_mul(kb, mat_mul(lat_s.gram, mat_transpose(kb)))]
        lower, diag = ldl([[QQ(x) for x in row] for row in a_mat])
        diag25 = [25 * d for d in diag]
        a_inv = mat_inverse(a_mat)

        jobs = {}
        for z, rho_norm, cls_r in eng.rho_list:
            zl = [0] * len(self.w)
            for c, rvec in zip(z, emb.r_basis):
                if c:
                    for i in range(len(self.w)):
                        zl[i] += c * rvec[i]
            a = 1 - QQ(emb.lat_l.inner(zl, self.w), 5)
            n_t = -2 - rho_norm
            cs = emb.glue_s_class_of_r(cls_r)
            jobs.setdefault((n_t, a), set()).add(cs)

        cands = {}
        for (n_t, a), classes in sorted(jobs.items()):
            for cs in sorted(classes):
                for y in self._job_solutions(
                        n_t, a, cs, kern, lower, diag25, a_mat, a_inv,
                        m_col):
                    xi = vec_mat(y, lat_s.gram)
                    assert all(t % 5 == 0 for t in xi)
                    xi = [t // 5 for t in xi]
                    g = 0
                    for t in xi:
                        g = gcd(g, int(t))
                    xi_prim = tuple(int(t) // g for t in xi)
                    self._roots_by_xi.setdefault(xi_prim, []).append(
                        (tuple(y), cs, n_t, a))
                    if xi_prim not in cands:
                        av = QQ(sum(p * q for p, q in
                                    zip(xi_prim, self.h5)), 5)
                        if av <= 0:
                            raise DegenerateChamber(
                                "w_S is not an interior point")
                        nv = QQ(sum(p * q for p, q in zip(
                            vec_mat(xi_prim, eng.inv25), xi_prim)), 25)
                        cands[xi_prim] = (av, nv)
        self.cands = sorted((xi, av, nv)
                            for xi, (av, nv) in cands.items())
        self.xi_index = {c[0]: i for i, c in enumerate(self.cands)}

    def _job_solutions(self, n_t, a, cs, kern, lower, diag25, a_mat, a_inv,
                       m_col):
        """y in S with y = 5 r_S, r_S of class cs, norm n_t, degree a."""
        eng = self.eng
        lat_s = self.emb.lat_s
        y_c = eng.class_lift[cs]
        t25 = 25 * a
        assert t25.denominator == 1
        rhs = int(t25) - sum(p * q for p, q in zip(y_c, m_col))
        assert rhs % 5 == 0
        u0 = solve_int_system([[c] for c in m_col], [rhs // 5])
        if u0 is None:
            return
        base = [yc + 5 * u for yc, u in zip(y_c, u0)]
        c0 = lat_s.norm(base)
        gb = vec_mat(vec_mat(base, lat_s.gram),
                     mat_transpose([list(r) for r in kern]))
        sigma = [-QQ(x) / 5 for x in vec_mat([QQ(t) for t in gb], a_inv)]
        n25 = 25 * n_t
        assert n25.denominator == 1
        # T = c0 - 25 n + sigma (25A) sigma^t
        quad = QQ(0)
        for x, s in zip(vec_mat(sigma, a_mat), sigma):
            quad += x * s
        t_total = QQ(c0) - int(n25) + 25 * quad
        for z in _ldl_enumerate(lower, diag25, sigma, t_total):
            y = list(base)
            for j, zj in enumerate(z):
                if zj:
                    for i in range(len(y)):
                        y[i] += 5 * zj * kern[j][i]
            yield tuple(y)

    # --- facet decisions ------------------------------------------------

    def _cand_arrays(self):
        if not hasattr(self, "_xi_rows"):
            self._xi_rows = [c[0] for c in self.cands]
            if _np is not None:
                self._xi_np = _np.array(self._xi_rows, dtype=_np.int64)
                assert int(abs(self._xi_np).max()) < 2 ** 20
        return self._xi_rows

    def is_facet(self, idx):
        """Whether candidate idx supports a wall of the chamber."""
        if idx in self._facet:
            return self._facet[idx]
        xi, av, nv = self.cands[idx]
        rows = self._cand_arrays()
        # witness: projection of w_S onto the hyperplane, scaled integral:
        # x0 = n * h5 - <h5, v> * v_primal  (direction flipped since n < 0)
        prim = vec_mat(xi, self.eng.inv25)  # 25 * primal coordinates of v
        n25 = int(25 * nv)
        a5 = int(5 * av)
        # projection of w_S onto the hyperplane, scaled positive: since
        # n < 0 the scaled vector n25*h5 - a5*prim points the wrong way
        x0 = [a5 * p - n25 * h for h, p in zip(self.h5, prim)]
        assert sum(p * q for p, q in zip(x0, xi)) == 0
        ok = True
        if _np is not None:
            vals = self._xi_np.dot(_np.array(x0, dtype=_np.int64))
            assert int(abs(vals).max()) < 2 ** 62
            bad = int((vals <= 0).sum()) - 1  # the candidate itself is 0
            ok = bad == 0
        else:
            bad = 0
            for j, row in enumerate(rows):
                if j == idx:
                    continue
                if sum(p * q for p, q in zip(x0, row)) <= 0:
                    bad += 1
                    ok = False
                    break
        if ok:
            self._facet[idx] = (True, tuple(x0))
            return self._facet[idx]
        # exact LP fallback with delayed constraint generation
        res = self._facet_lp(idx)
        self._facet[idx] = res
        return res

    def _facet_lp(self, idx):
        xi = self.cands[idx][0]
        rows = self._cand_arrays()
        n = len(xi)
        active = set()
        for j in range(len(rows)):
            if j != idx:
                active.add(j)
                if len(active) >= 30:
                    break
        for _ in range(400):
            ok, x = feasible([list(xi)],
                             [list(rows[j]) for j in sorted(active)], n)
            if not ok:
                return (False, None)
            den = 1
            for t in x:
                d = int(QQ(t).denominator)
                den = den * d // gcd(den, d)
            x_int = [int(QQ(t) * den) for t in x]
            viol = []
            if _np is not None and max(abs(t) for t in x_int) < 2 ** 40:
                vals = self._xi_np.dot(_np.array(x_int, dtype=_np.int64))
                viol = [j for j in _np.nonzero(vals <= 0)[0].tolist()
                        if j != idx]
            else:
                for j, row in enumerate(rows):
                    if j != idx and sum(
                            p * q for p, q in zip(x_int, row)) <= 0:
                        viol.append(j)
            if not viol:
                return (True, tuple(x_int))
            grew = False
            for j in viol[:32]:
                if j not in active:
                    active.add(j)
                    grew = True
            if not grew:
                return (False, None)
        raise ResourceExhausted("facet LP did not converge")

    def walls(self):
        """Indices of the candidates that support facets."""
        return [i for i in range(len(self.cands)) if self.is_facet(i)[0]]

    def wall_list(self):
        """The wall data: (xi, a, n) for each facet, sorted."""
        return [self.cands[i] for i in self.walls()]

    # --- invariants -------------------------------------------------------

    def type_multiset(self):
        from collections import Counter
        return Counter((str(av), str(nv)) for _, av, nv in self.cands)

    def type_key(self):
        return tuple(sorted(self.type_multiset().items()))

    def nc_indices(self):
        """Candidates satisfying the rational-curve wall criterion."""
        out = []
        for i, (xi, av, nv) in enumerate(self.cands):
            if av.numerator != 1:
                continue
            c = av.denominator
            if nv * c * c != -2:
                continue
            cxi = tuple(int(c) * t for t in xi)
            if self.emb.disc_s.class_coords(cxi) != (0,) * len(
                    self.emb.disc_s.order_list):
                continue
            out.append(i)
        return out

    def nc_wall_indices(self):
        return [i for i in self.nc_indices() if self.is_facet(i)[0]]

    def nc_class_vectors(self):
        """Primal classes c * v_W of the rational-curve walls."""
        out = []
        for i in self.nc_wall_indices():
            xi, av, nv = self.cands[i]
            c = av.denominator
            prim = vec_mat([int(c) * t for t in xi],
                           self.emb.lat_s.gram_inverse)
            assert is_integral(prim)
            out.append(to_int_vec(prim))
        return sorted(out)


    # --- batch facet computation -----------------------------------------

    def facet_status(self, indices=None):
        """Facet flags for the given candidate indices (default: all).

        Pipeline: interior-projection witness (vectorized), then two-term
        positive decompositions u = v1 + v2 over the candidate set (which
        force <x,u> = 0 to pin a codimension-2 face), then exact LP.
        """
        rows = self._cand_arrays()
        m = len(rows)
        if indices is None:
            indices = range(m)
        todo = [i for i in indices if i not in self._facet]
        if not todo:
            return {i: self._facet[i][0] for i in indices}
        xi_set = set(rows)
        for i in todo:
            xi, av, nv = self.cands[i]
            prim = vec_mat(xi, self.eng.inv25)
            n25 = int(25 * nv)
            a5 = int(5 * av)
            x0 = [a5 * p - n25 * h for h, p in zip(self.h5, prim)]
            if self._all_positive_except(x0, i):
                self._facet[i] = (True, tuple(x0))
                continue
            # two-term certificate
            cert = False
            for v1 in rows:
                v2 = tuple(a - b for a, b in zip(xi, v1))
                if v2 != xi and any(v2) and v2 in xi_set and v1 != xi:
                    cert = True
                    break
            if cert:
                self._facet[i] = (False, None)
                continue
            self._facet[i] = self._facet_lp(i)
        return {i: self._facet[i][0] for i in indices}

    def _all_positive_except(self, x0, idx):
        rows = self._cand_arrays()
        if _np is not None and max(abs(t) for t in x0) < 2 ** 40:
            vals = self._xi_np.dot(_np.array(x0, dtype=_np.int64))
            return int((vals <= 0).sum()) == 1 and vals[idx] == 0
        for j, row in enumerate(rows):
            v = sum(p * q for p, q in zip(x0, row))
            if j == idx:
                if v != 0:
                    return False
            elif v <= 0:
                return False
        return True

    # --- pair values -------------------------------------------------------

    def _pair_arrays(self):
        if not hasattr(self, "_phat"):
            rows = self._cand_arrays()
            if _np is not None:
                inv = _np.array(self.eng.inv25, dtype=_np.int64)
                self._phat = self._xi_np.dot(inv)
                assert int(abs(self._phat).max()) < 2 ** 40
            else:
                self._phat = [vec_mat(r, self.eng.inv25) for r in rows]
        return self._phat

    def pair25(self, i, j):
        """25 <v_i, v_j> as an integer."""
        ph = self._pair_arrays()
        if _np is not None:
            return int(ph[i].dot(self._xi_np[j]))
        return sum(p * q for p, q in zip(ph[i], self.cands[j][0]))

    def _type_classes(self):
        if not hasattr(self, "_tclasses"):
            cl = {}
            for i, (xi, av, nv) in enumerate(self.cands):
                cl.setdefault((av, nv), []).append(i)
            self._tclasses = cl
        return self._tclasses

    def _base_indices(self):
        """A spanning base drawn from the smallest type classes."""
        if hasattr(self, "_base"):
            return self._base
        classes = sorted(self._type_classes().items(),
                         key=lambda kv: (len(kv[1]), kv[0]))
        n = len(self.cands[0][0])
        base = []
        echelon = []  # rows in reduced form, paired with pivot column
        for _, idxs in classes:
            for i in idxs:
                row = [QQ(x) for x in self.cands[i][0]]
                for piv, erow in echelon:
                    if row[piv] != 0:
                        f = row[piv]
                        row = [a - f * b for a, b in zip(row, erow)]
                piv = next((c for c in range(n) if row[c] != 0), None)
                if piv is None:
                    continue
                inv = 1 / row[piv]
                row = [a * inv for a in row]
                echelon.append((piv, row))
                base.append(i)
                if len(base) == n:
                    self._base = base
                    return base
        raise AssertionError("candidates do not span")

    # --- automorphisms ------------------------------------------------------

    def _leaf_solver(self):
        """Cached integer data for solving g from base images.

        g = gram . XB^-1 . XI . gram^-1 = (GB . XI . inv25) / (25 d) with
        GB = gram . adj(XB) and d = det(XB); everything stays integral and
        the divisibility check doubles as the lattice-preservation test.
        """
        if not hasattr(self, "_leaf"):
            base = self._base_indices()
            xb = [list(self.cands[b][0]) for b in base]
            from .exactmath import det as idet
            d = idet(xb)
            inv = mat_inverse(xb)
            adj = [[int(QQ(x) * d) for x in row] for row in inv]
            gb = mat_mul(self.emb.lat_s.gram, adj)
            self._leaf = (gb, 25 * d)
        return self._leaf

    def _matrix_from_images(self, xi_img_rows, solver):
        gb, denom = solver
        t1 = mat_mul(gb, xi_img_rows)
        inv25 = self.eng.inv25
        n = len(t1)
        g = []
        for i in range(n):
            row = []
            ti = t1[i]
            for j in range(n):
                s = 0
                for k in range(n):
                    s += ti[k] * inv25[k][j]
                if s % denom:
                    return None
                row.append(s // denom)
            g.append(row)
        return g

    def _matrix_from_base(self, base, images):
        """The isometry with base -> images, or None if not integral."""
        xi_img = [list(self.cands[c][0]) for c in images]
        return self._matrix_from_images(xi_img, self._leaf_solver())

    def _aut_subset(self):
        """A spanning, type-invariant vertex set for the searches.

        Type classes are added smallest first until the union spans; the
        returned colors are the class indices in that canonical order.
        """
        if hasattr(self, "_subset"):
            return self._subset
        classes = sorted(self._type_classes().items(),
                         key=lambda kv: (len(kv[1]), kv[0]))
        n = len(self.cands[0][0])
        chosen = []
        colors = []
        echelon = []
        rank = 0
        for ci, (_, idxs) in enumerate(classes):
            for i in idxs:
                chosen.append(i)
                colors.append(ci)
                if rank < n:
                    row = [QQ(x) for x in self.cands[i][0]]
                    for piv, erow in echelon:
                        if row[piv] != 0:
                            f = row[piv]
                            row = [a - f * b for a, b in zip(row, erow)]
                    piv = next((c for c in range(n) if row[c] != 0), None)
                    if piv is not None:
                        inv = 1 / row[piv]
                        echelon.append((piv, [a * inv for a in row]))
                        rank += 1
            if rank == n:
                break
        assert rank == n, "candidate subset does not span"
        self._subset = (chosen, colors)
        return self._subset

    def _subset_solver(self, chosen):
        """Cached (positions, GB, denom) for solving isometries from the
        images of 22 independent subset members."""
        if hasattr(self, "_subsolver"):
            return self._subsolver
        n = len(self.cands[0][0])
        pos = []
        echelon = []
        for k, i in enumerate(chosen):
            row = [QQ(x) for x in self.cands[i][0]]
            for piv, erow in echelon:
                if row[piv] != 0:
                    f = row[piv]
                    row = [a - f * b for a, b in zip(row, erow)]
            piv = next((c for c in range(n) if row[c] != 0), None)
            if piv is not None:
                inv = 1 / row[piv]
                echelon.append((piv, [a * inv for a in row]))
                pos.append(k)
            if len(pos) == n:
                break
        xb = [list(self.cands[chosen[k]][0]) for k in pos]
        from .exactmath import det as idet
        d = idet(xb)
        inv = mat_inverse(xb)
        adj = [[int(QQ(x) * d) for x in row] for row in inv]
        gb = mat_mul(self.emb.lat_s.gram, adj)
        self._subsolver = (pos, gb, 25 * d)
        return self._subsolver

    def _subset_graph(self):
        if hasattr(self, "_graph"):
            return self._graph
        from .colorref import ColoredGraph
        chosen, colors = self._aut_subset()
        ph = self._pair_arrays()
        idx = _np.array(chosen, dtype=_np.int64)
        pair = ph[idx].dot(self._xi_np[idx].T)
        assert int(abs(pair).max()) < 2 ** 60
        self._graph = ColoredGraph(pair, colors)
        return self._graph

    def aut(self):
        """(order, generators) of the full chamber automorphism group."""
        if self._aut is not None:
            return self._aut
        from .colorref import AutSearch
        chosen, colors = self._aut_subset()
        graph = self._subset_graph()
        pos, gb, denom = self._subset_solver(chosen)

        def accept(perm):
            xi_img = [list(self.cands[chosen[perm[k]]][0]) for k in pos]
            return self._matrix_from_images(xi_img, (gb, denom))

        order, gens = AutSearch(graph, accept).run()
        self._aut = (order, gens)
        return self._aut

    def _complete_integral(self, base, images, level, class_of):
        """Find one integral completion, most-constrained position first.

        `images` holds images of base[0:level]; the remaining positions
        are placed in a dynamically chosen order, which collapses the
        search tree on highly symmetric chambers.
        """
        placed = {base[j]: images[j] for j in range(level)}
        return self._dyn_complete(base, placed,
                                  [base[j] for j in range(level, len(base))],
                                  class_of)

    def _cand_np(self, class_of, b):
        key = (b, "np")
        arr = class_of.get(key)
        if arr is None:
            arr = _np.array(class_of[b], dtype=_np.int64)
            class_of[key] = arr
        return arr

    def _compatible(self, b, placed, class_of):
        """Images compatible with the placed part for base position b."""
        own = class_of[b]
        if _np is not None and len(own) > 8:
            ph = self._pair_arrays()
            arr = self._cand_np(class_of, b)
            mask = _np.ones(len(own), dtype=bool)
            for pos, img in placed.items():
                target = self.pair25(b, pos)
                vals = self._xi_np[arr].dot(ph[img])
                mask &= vals == target
                if not mask.any():
                    return []
            return arr[mask].tolist()
        out = []
        for c in own:
            ok = True
            for pos, img in placed.items():
                if self.pair25(c, img) != self.pair25(b, pos):
                    ok = False
                    break
            if ok:
                out.append(c)
        return out

    def _dyn_complete(self, base, placed, remaining, class_of):
        if not remaining:
            order = {b: i for i, b in enumerate(base)}
            images = [None] * len(base)
            for pos, img in placed.items():
                images[order[pos]] = img
            return self._matrix_from_base(base, images)
        best_pos = None
        best = None
        for b in remaining:
            cands = self._compatible(b, placed, class_of)
            if not cands:
                return None
            if best is None or len(cands) < len(best):
                best = cands
                best_pos = b
                if len(cands) == 1:
                    break
        rest = [b for b in remaining if b != best_pos]
        for c in best:
            placed[best_pos] = c
            res = self._dyn_complete(base, placed, rest, class_of)
            if res is not None:
                return res
            del placed[best_pos]
        if best_pos in placed:
            del placed[best_pos]
        return None


    # --- period filtering (Picard-lattice frame only) -----------------------

    def period_image(self, g):
        return period_image_matrix(self.emb, g)

    def aut_image_group(self):
        """The image of Aut(D) in the discriminant-form group, as a set."""
        if not hasattr(self, "_img_group"):
            order, gens = self.aut()
            imgs = {_mat2key(self.period_image(g)) for g in gens}
            self._img_group = _f5_closure(imgs)
        return self._img_group

    def aut_x_order(self):
        """Order of the period-preserving chamber automorphism group."""
        order, _ = self.aut()
        img = self.aut_image_group()
        six = {_mat2key(m) for m in SIX_MATRICES}
        keep = len(img & six)
        assert len(img) % keep == 0
        return order * keep // len(img)

    # --- orbits of candidates under Aut and Aut_X ---------------------------

    def _gen_perms(self):
        """Candidate permutations and period images of the generators."""
        if hasattr(self, "_perms"):
            return self._perms
        order, gens = self.aut()
        perms = []
        for g in gens:
            ghat = mat_mul(self.emb.lat_s.gram_inverse,
                           mat_mul(g, self.emb.lat_s.gram))
            imgs = []
            for xi, _, _ in self.cands:
                eta = vec_mat(xi, ghat)
                assert is_integral(eta)
                imgs.append(self.xi_index[to_int_vec(eta)])
            perms.append((imgs, _mat2key(self.period_image(g))))
        self._perms = perms
        return perms

    def orbits(self, indices=None, period_filter=True):
        """Orbits of candidates under Aut_X (or all of Aut).

        Uses the coset-covering trick: Aut acts on pairs (candidate, right
        coset of Aut_X-image); the Aut_X-orbit of x consists of the
        candidates reachable with trivial coset.  The index set, when
        given, must be invariant (e.g. the rational-curve walls).
        """
        perms = self._gen_perms()
        img = self.aut_image_group()
        six = {_mat2key(m) for m in SIX_MATRICES}
        sub = img & six if period_filter else img

        def coset_key(c):
            return min(_f5_mul_key(s, c) for s in sub)

        ident_rep = coset_key(((1, 0), (0, 1)))
        idxs = list(range(len(self.cands))) if indices is None \
            else list(indices)
        idset = set(idxs)
        seen = set()
        out = []
        for start in idxs:
            if start in seen:
                continue
            comp = set()
            state0 = (start, ident_rep)
            visited = {state0}
            frontier = [state0]
            while frontier:
                i, c = frontier.pop()
                if c == ident_rep:
                    comp.add(i)
                for perm, pk in perms:
                    st = (perm[i], coset_key(_f5_mul_key(c, pk)))
                    if st not in visited:
                        visited.add(st)
                        frontier.append(st)
            if indices is not None:
                assert comp <= idset, "index set is not invariant"
            seen |= comp
            out.append(sorted(comp))
        return out


    # --- adjacency ---------------------------------------------------------

    def adjacent_weyl(self, idx, max_steps=64):
        """A Weyl vector of the chamber adjacent along candidate idx.

        The candidate must be a facet.  The walk reflects the Weyl vector
        in the roots lying over the crossed wall, which span a negative
        definite rank-5 sublattice, so each step is a tiny enumeration.
        """
        is_f, witness = self.is_facet(idx)
        assert is_f, "can only cross a wall, not a redundant candidate"
        xi = self.cands[idx][0]
        emb = self.emb
        prim25 = vec_mat(xi, self.eng.inv25)
        # p' = N x* + 25 prim(v): crossed only the chosen hyperplane
        rows = self._cand_arrays()
        if _np is not None:
            wvals = self._xi_np.dot(_np.array(witness, dtype=_np.int64))
            dvals = self._xi_np.dot(_np.array(prim25, dtype=_np.int64))
        else:
            wvals = [sum(p * q for p, q in zip(witness, r)) for r in rows]
            dvals = [sum(p * q for p, q in zip(prim25, r)) for r in rows]
        nfac = 1
        for j in range(len(rows)):
            if j == idx:
                continue
            if int(dvals[j]) < 0:
                need = (-int(dvals[j])) // int(wvals[j]) + 1
                nfac = max(nfac, need)
        for attempt in range(6):
            pprime = [nfac * x + p for x, p in zip(witness, prim25)]
            w2 = self._walk(idx, pprime, max_steps)
            if w2 is not None:
                return w2, tuple(pprime)
            nfac *= 16
        raise WalkBudget("could not certify the adjacent chamber")

    def _wall_sublattice(self, idx):
        """Basis (rows, L-coords) of {x in L : x_S parallel to the wall}."""
        xi = self.cands[idx][0]
        perp = kernel_int([[t] for t in xi])  # rank-21 sublattice of S
        conds = []
        for y in perp:
            yl = [0] * len(self.w)
            for c, svec in zip(y, self.emb.s_basis):
                if c:
                    for i in range(len(self.w)):
                        yl[i] += c * svec[i]
            conds.append(vec_mat(yl, self.emb.gram_l))
        mat = [[conds[j][i] for j in range(len(conds))]
               for i in range(len(self.w))]
        sub = kernel_int(mat)
        assert len(sub) == 5
        return sub

    def _walk(self, idx, pprime, max_steps):
        emb = self.emb
        sub = self._wall_sublattice(idx)
        gram5 = [[emb.lat_l.inner(a, b) for b in sub] for a in sub]
        lat5 = GramLattice(gram5)
        roots5 = enumerate_definite(lat5, -2)
        roots_l = []
        for z in roots5:
            rl = [0] * len(self.w)
            for c, bvec in zip(z, sub):
                if c:
                    for i in range(len(self.w)):
                        rl[i] += c * bvec[i]
            roots_l.append(tuple(rl))
        # <r, p'> with p' in S-primal coordinates
        pair_p = []
        for rl in roots_l:
            ps = emb.pair_with_s(rl)
            pair_p.append(sum(a * b for a, b in zip(ps, pprime)))
        w_cur = self.w
        for _ in range(max_steps):
            sep = [k for k, rl in enumerate(roots_l)
                   if pair_p[k] < 0 and emb.lat_l.inner(rl, w_cur) == 1]
            if not sep:
                break
        # no progress guard
            k = sep[0]
            w_cur = tuple(a + b for a, b in zip(w_cur, roots_l[k]))
        else:
            return None
        if w_cur == self.w:
            return None
        return w_cur


# ---------------------------------------------------------------------------
# module-level helpers
# ---------------------------------------------------------------------------

_FERMAT_TA_TB = None


def period_image_matrix(emb, g):
    """Image of an isometry of the Picard lattice in the 2x2 period frame."""
    global _FERMAT_TA_TB
    from .fixtures import fermat_fixture
    if _FERMAT_TA_TB is None:
        fx = fermat_fixture()
        _FERMAT_TA_TB = (fx["t_a"], fx["t_b"])
    t_a, t_b = _FERMAT_TA_TB
    m = mat_mul(t_a, mat_mul(emb.lat_s.gram_inverse,
                             mat_mul(g, mat_mul(emb.lat_s.gram, t_b))))
    out = [[int(x) % 5 for x in row] for row in m]
    return out


def _mat2key(m):
    return (tuple(int(x) % 5 for x in m[0]), tuple(int(x) % 5 for x in m[1]))


def _f5_mul_key(a, b):
    return (
        ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % 5,
         (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % 5),
        ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % 5,
         (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % 5),
    )


def _f5_closure(gens):
    group = {((1, 0), (0, 1))}
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        if x in group:
            continue
        group.add(x)
        for y in list(group):
            for z in (_f5_mul_key(x, y), _f5_mul_key(y, x)):
                if z not in group:
                    frontier.append(z)
    return group


def is_wall_of_nc(emb, xi, av, nv):
    """The rational-curve wall criterion for a typed primitive wall."""
    if av.numerator != 1:
        return False
    c = int(av.denominator)
    if nv * c * c != -2:
        return False
    cxi = tuple(c * t for t in xi)
    zero = (0,) * len(emb.disc_s.order_list)
    return emb.disc_s.class_coords(cxi) == zero


def weyl_project(emb, w):
    """(w_S, w_R) as rational vectors in the primal S- and R-bases."""
    return emb.project_s(w), emb.project_r(w)


# ---------------------------------------------------------------------------
# congruence and breadth-first classification
# ---------------------------------------------------------------------------

def congruent(ch1, ch2, period_filter=True):
    """An isometry carrying the first chamber to the second, if one exists.

    Matches the typed candidate sets on a spanning base; when
    period_filter is set the result must also preserve the period, which
    is decided on the image coset of the first chamber's automorphisms.
    """
    if ch1.type_key() != ch2.type_key():
        return None
    from .colorref import graph_isomorphism
    chosen1, _ = ch1._aut_subset()
    chosen2, _ = ch2._aut_subset()
    pos, gb, denom = ch1._subset_solver(chosen1)

    def accept(perm):
        xi_img = [list(ch2.cands[chosen2[perm[k]]][0]) for k in pos]
        return ch1._matrix_from_images(xi_img, (gb, denom))

    g = graph_isomorphism(ch1._subset_graph(), ch2._subset_graph(), accept)
    if g is None:
        return None
    if not period_filter:
        return g
    img = ch1.aut_image_group()
    six = {_mat2key(m) for m in SIX_MATRICES}
    gk = _mat2key(period_image_matrix(ch1.emb, g))
    # need h in Aut(ch1) with bar(h g) in six
    for h in img:
        if _f5_mul_key(h, gk) in six:
            hmat = _find_aut_with_image(ch1, h)
            return mat_mul(hmat, g)
    return None


def _cross_complete(ch1, ch2, base, images, level, class_of):
    if level == len(base):
        xi_img = [list(ch2.cands[c][0]) for c in images]
        return ch1._matrix_from_images(xi_img, ch1._leaf_solver())
    b = base[level]
    targets = [ch1.pair25(b, base[j]) for j in range(level)]
    for c in class_of[b]:
        ok = True
        for j in range(level):
            if ch2.pair25(c, images[j]) != targets[j]:
                ok = False
                break
        if ok:
            images.append(c)
            res = _cross_complete(ch1, ch2, base, images, level + 1,
                                  class_of)
            if res is not None:
                return res
            images.pop()
    return None


def _find_aut_with_image(ch, target_key):
    """An automorphism of the chamber with the given period image."""
    order, gens = ch.aut()
    ident = [[1 if i == j else 0 for j in range(len(ch.h5))]
             for i in range(len(ch.h5))]
    have = {_mat2key(period_image_matrix(ch.emb, ident)): ident}
    frontier = [ident] + [list(map(list, g)) for g in gens]
    while target_key not in have:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = mat_mul(g, h)
                k = _mat2key(period_image_matrix(ch.emb, gh))
                if k not in have:
                    have[k] = gh
                    nxt.append(gh)
        frontier = nxt
        assert frontier, "image group exhausted without the target"
    return have[target_key]
