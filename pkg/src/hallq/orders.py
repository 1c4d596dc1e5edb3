"""Degeneration orders: the extension order and its hom-order surrogate."""

from __future__ import annotations

import itertools

from .catalog import IsoClass
from .halln import HallNumbers
from .quiver import DimVector


class DegenerationOrders:
    def __init__(self, engine: HallNumbers):
        self.engine = engine
        self.cat = engine.cat

    # -- extension order --

    def ext_leq(self, N: IsoClass, M: IsoClass):
        """(reachable, witness): breadth-first closure of elementary moves
        X -> U + V over exact sequences 0 -> U -> X -> V -> 0."""
        if N.dim != M.dim:
            return False, None
        if N == M:
            return True, []
        parent: dict[IsoClass, tuple] = {M: None}
        frontier = [M]
        while frontier:
            nxt = []
            for X in frontier:
                for U, V in self._elementary_moves(X):
                    Y = U + V
                    if Y not in parent:
                        parent[Y] = (X, U, V)
                        nxt.append(Y)
            frontier = nxt
        if N not in parent:
            return False, None
        chain = []
        cur = N
        while parent[cur] is not None:
            X, U, V = parent[cur]
            chain.append(
                {"from": X.label, "sub": U.label, "quotient": V.label, "to": cur.label}
            )
            cur = X
        chain.reverse()
        return True, chain

    def _elementary_moves(self, X: IsoClass):
        """All (U, V) with an exact sequence 0 -> U -> X -> V -> 0 and
        U + V != X."""
        quiver = self.cat.quiver
        out = []
        for tup in itertools.product(*(range(e + 1) for e in X.dim.entries)):
            du = DimVector(quiver.vertices, tup)
            dv = X.dim - du
            for U in self.cat.enumerate_classes(du):
                for V in self.cat.enumerate_classes(dv):
                    if U + V == X:
                        continue
                    if self.engine.hall_number(X, V, U) > 0:
                        out.append((U, V))
        return out

    def verify_witness(self, M: IsoClass, chain: list) -> bool:
        """Re-verify an ext_leq witness chain starting from M."""
        cur = M
        for step in chain:
            if step["from"] != cur.label:
                return False
            found = None
            for U, V in self._elementary_moves(cur):
                if U.label == step["sub"] and V.label == step["quotient"]:
                    found = (U, V)
                    break
            if found is None:
                return False
            cur = found[0] + found[1]
            if cur.label != step["to"]:
                return False
        return True

    # -- hom order --

    def hom_leq(self, N: IsoClass, M: IsoClass) -> bool:
        """dim N == dim M and, for every indecomposable probe X up to
        dim M, both dim Hom(X, N) >= dim Hom(X, M) and
        dim Hom(N, X) >= dim Hom(M, X).

        Degeneration implies both inequality families for arbitrary X;
        testing both over the bounded probe window removes false
        positives that one-sided bounded probing cannot separate."""
        if N.dim != M.dim:
            return False
        for probe in self.cat.indecomposables_upto(M.dim):
            if self.cat.hom_dim_reps(probe.rep, N.rep) < self.cat.hom_dim_reps(
                probe.rep, M.rep
            ):
                return False
            if self.cat.hom_dim_reps(N.rep, probe.rep) < self.cat.hom_dim_reps(
                M.rep, probe.rep
            ):
                return False
        return True

    # -- agreement report --

    def orders_agree(self, d: DimVector) -> dict:
        """Compare ext and hom order on every ordered pair at dimension d."""
        d = self.cat.quiver.dim(d)
        classes = self.cat.enumerate_classes(d)
        pairs = []
        disagreements = []
        for N in classes:
            for M in classes:
                ext, witness = self.ext_leq(N, M)
                hom = self.hom_leq(N, M)
                rec = {
                    "N": N.label,
                    "M": M.label,
                    "ext_leq": ext,
                    "hom_leq": hom,
                    "witness": witness,
                }
                pairs.append(rec)
                if ext != hom:
                    disagreements.append(rec)
        return {
            "dimension": list(d.entries),
            "classes": [c.label for c in classes],
            "pairs": pairs,
            "agree": not disagreements,
            "disagreements": disagreements,
        }
