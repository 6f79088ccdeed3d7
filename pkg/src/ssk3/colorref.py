"""Colored-graph automorphisms by individualization and refinement.

The graphs here are complete graphs on a few hundred vertices whose edges
carry exact integer labels (scaled lattice pairings) and whose vertices
carry initial colors (wall types).  Refinement is the standard 1-WL pass:
a vertex color is replaced by (color, sorted multiset of (edge label,
neighbour color)); individualization assigns a fresh color and refines.
The stabilizer-chain search returns the exact group order and generators,
with an acceptance callback so callers can reject bijections that do not
extend to lattice isometries (rejections are sound because the accepted
maps form a subgroup).
"""

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None


class ColoredGraph:
    def __init__(self, pair, colors):
        self.n = len(colors)
        if _np is not None:
            self.pair = _np.asarray(pair, dtype=_np.int64)
            self.colors0 = self._canon(_np.asarray(colors))
        else:
            self.pair = [list(r) for r in pair]
            self.colors0 = list(colors)

    @staticmethod
    def _canon(colors):
        _, inv = _np.unique(colors, return_inverse=True)
        return inv.astype(_np.int64)

    def refine(self, colors):
        """Stable refinement of a coloring (numpy int64 vector)."""
        colors = colors.copy()
        while True:
            ncol = int(colors.max()) + 1
            enc = self.pair * ncol + colors[None, :]
            enc = _np.sort(enc, axis=1)
            table = _np.concatenate([colors[:, None], enc], axis=1)
            _, inv = _np.unique(table, axis=0, return_inverse=True)
            inv = inv.astype(_np.int64)
            if int(inv.max()) == int(colors.max()) and \
                    bool((inv == colors).all()):
                return colors
            # keep ids stable relative to the old colors for determinism
            colors = self._canon(colors * (int(inv.max()) + 1) + inv)

    def cells(self, colors):
        out = {}
        for i, c in enumerate(colors.tolist()):
            out.setdefault(c, []).append(i)
        return out


def _histogram(colors):
    vals, counts = _np.unique(colors, return_counts=True)
    return dict(zip(vals.tolist(), counts.tolist()))


class AutSearch:
    """Stabilizer-chain automorphism search with refinement pruning."""

    def __init__(self, graph, accept):
        self.g = graph
        self.accept = accept

    def _individualize(self, colors, v):
        colors = colors.copy()
        colors[v] = int(colors.max()) + 1
        return self.g.refine(colors)

    def _find_map(self, cs, ct):
        """DFS for one accepted bijection compatible with the colorings."""
        if _histogram(cs) != _histogram(ct):
            return None
        cells_s = self.g.cells(cs)
        target = None
        for c, mem in sorted(cells_s.items()):
            if len(mem) > 1:
                target = (c, mem)
                break
        if target is None:
            # discrete: read the bijection
            perm = [0] * self.g.n
            pos_t = {}
            for i, c in enumerate(ct.tolist()):
                if c in pos_t:
                    return None
                pos_t[c] = i
            for i, c in enumerate(cs.tolist()):
                if c not in pos_t:
                    return None
                perm[i] = pos_t[c]
            p = _np.array(perm)
            if not bool((self.g.pair[p][:, p] == self.g.pair).all()):
                return None
            return self.accept(perm)
        c, mem = target
        v = mem[0]
        cs2 = self._individualize(cs, v)
        cells_t = self.g.cells(ct)
        for u in cells_t.get(c, []):
            ct2 = self._individualize(ct, u)
            res = self._find_map(cs2, ct2)
            if res is not None:
                return res
        return None

    def run(self):
        """(order, accepted generators) of the automorphism group."""
        base_colors = self.g.refine(self.g.colors0)
        order = 1
        gens = []
        cs = base_colors
        ct_chain = [base_colors]
        while True:
            cells = self.g.cells(cs)
            tgt = None
            for c, mem in sorted(cells.items()):
                if len(mem) > 1:
                    tgt = (c, mem)
                    break
            if tgt is None:
                break
            c, mem = tgt
            b = mem[0]
            cs_next = self._individualize(cs, b)
            orbit = 0
            for u in mem:
                if u == b:
                    orbit += 1
                    continue
                ct2 = self._individualize(cs, u)
                res = self._find_map(cs_next, ct2)
                if res is not None:
                    orbit += 1
                    gens.append(res)
            order *= orbit
            cs = cs_next
        return order, gens


def graph_isomorphism(graph_s, graph_t, accept):
    """One accepted isomorphism between two colored graphs, or None."""
    if graph_s.n != graph_t.n:
        return None
    cs = graph_s.refine(graph_s.colors0)
    ct = graph_t.refine(graph_t.colors0)

    class _Cross(AutSearch):
        def __init__(self):
            self.gs = graph_s
            self.gt = graph_t
            self.accept = accept

        def _find(self, cs, ct):
            if _histogram(cs) != _histogram(ct):
                return None
            cells_s = self.gs.cells(cs)
            tgt = None
            for c, mem in sorted(cells_s.items()):
                if len(mem) > 1:
                    tgt = (c, mem)
                    break
            if tgt is None:
                perm = [0] * self.gs.n
                pos_t = {}
                for i, c in enumerate(ct.tolist()):
                    if c in pos_t:
                        return None
                    pos_t[c] = i
                for i, c in enumerate(cs.tolist()):
                    if c not in pos_t:
                        return None
                    perm[i] = pos_t[c]
                p = _np.array(perm)
                if not bool((self.gt.pair[p][:, p] == self.gs.pair).all()):
                    return None
                return self.accept(perm)
            c, mem = tgt
            v = mem[0]
            cs2 = graph_s.refine(_bump(cs, v))
            for u in self.gt.cells(ct).get(c, []):
                ct2 = graph_t.refine(_bump(ct, u))
                res = self._find(cs2, ct2)
                if res is not None:
                    return res
            return None

    return _Cross()._find(cs, ct)


def _bump(colors, v):
    colors = colors.copy()
    colors[v] = int(colors.max()) + 1
    return colors
