"""Tame-quiver module structure: tubes, regular simples, classification.

The regular simples of the non-homogeneous tubes are computed from
first principles (they are the rigid defect-zero indecomposables below
delta admitting no map from a smaller regular), then partitioned into
tubes by Hom/Ext connectivity and ordered cyclically by the extension
successor.  The acceptance suite checks the resulting dimension-vector
tables verbatim against the known lists.
"""

from __future__ import annotations

import itertools

from .errors import DEFAULT_GUARDS, GuardExceeded, Guards, InputError, ValidationFailure
from .gf import GF, SubfieldLayout
from .quiver import DimVector, Quiver, TameType, euler_form, symmetric_form
from .reps import (
    Representation,
    find_real_root_indec,
    frobenius_twist,
    hom_ext_dims,
    hom_dim,
    intertwiner_matrix,
    is_indecomposable,
    is_isomorphic,
    kernels,
    restriction_of_scalars,
    scan_isoclasses,
)

import numpy as np


class Partition:
    """Weakly decreasing positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        tup = tuple(int(p) for p in parts)
        if any(p <= 0 for p in tup):
            raise InputError(f"partition parts must be positive: {tup}")
        if any(tup[i] < tup[i + 1] for i in range(len(tup) - 1)):
            raise InputError(f"partition must be weakly decreasing: {tup}")
        object.__setattr__(self, "parts", tup)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def partitions_of(n: int):
    """All partitions of n, largest part first, deterministic order."""

    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def nonsplit_extension(
    top: Representation, sub: Representation, expected_ext: int = 1
) -> Representation:
    """Middle term of a non-split extension 0 -> sub -> Y -> top -> 0.

    The caller must guarantee that all non-split extensions share one
    middle term (inside a tube the Ext space is one orbit under the
    endomorphism units, so this holds with expected_ext = the degree of
    the tube's point); the cocycle is chosen deterministically.
    """
    h, e = hom_ext_dims(top, sub)
    if e != expected_ext:
        raise ValidationFailure(
            f"nonsplit_extension expected a {expected_ext}-dimensional Ext space, got {e}"
        )
    gf = top.field
    q = top.quiver
    A = intertwiner_matrix(top, sub)  # columns: graded maps; colspace = coboundaries
    base_rank = kernels.rank(gf, A)
    nrows = A.shape[0]
    cocycle = None
    for i in range(nrows):
        e_i = np.zeros((nrows, 1), dtype=np.uint8)
        e_i[i, 0] = 1
        if kernels.rank(gf, np.concatenate([A, e_i], axis=1)) > base_rank:
            cocycle = i
            break
    assert cocycle is not None, "Ext is nonzero but every unit cocycle is a coboundary"
    # decode flat row index back to (arrow, entry) in intertwiner row layout
    mats = {}
    off = 0
    cvals = {}
    for aid, s, t in q.arrows:
        rows = sub.dim[t] * top.dim[s]
        block = np.zeros((sub.dim[t], top.dim[s]), dtype=np.uint8)
        if off <= cocycle < off + rows:
            local = cocycle - off
            block[local // top.dim[s], local % top.dim[s]] = 1
        cvals[aid] = block
        off += rows
    dim = sub.dim + top.dim
    for aid, s, t in q.arrows:
        m = np.zeros((dim[t], dim[s]), dtype=np.uint8)
        m[: sub.dim[t], : sub.dim[s]] = sub.mats[aid]
        m[sub.dim[t] :, sub.dim[s] :] = top.mats[aid]
        m[: sub.dim[t], sub.dim[s] :] = cvals[aid]
        mats[aid] = m
    return Representation(q, gf, dim, mats)


class TameStructure:
    """Computed tube data of a tame quiver over a fixed finite field."""

    def __init__(self, quiver: Quiver, field: GF, ttype: TameType | None = None,
                 guards: Guards = DEFAULT_GUARDS):
        from .quiver import recognize_tame

        self.quiver = quiver
        self.field = field
        self.guards = guards
        self.ttype = ttype or recognize_tame(quiver)
        if self.ttype is None:
            raise InputError("quiver is not tame (extended Dynkin)")
        self.delta = self.ttype.delta
        self._mouths: list[list[Representation]] | None = None
        self._tube_indec_cache: dict[tuple[int, int, int], Representation] = {}
        self._homog_cache: dict[int, list[Representation]] = {}
        self._homog_indec_cache: dict[tuple[int, int], Representation] = {}

    # -- defect --

    def defect(self, d: DimVector) -> int:
        """<delta, d>; negative on preprojectives, positive on preinjectives."""
        return euler_form(self.quiver, self.delta, self.quiver.dim(d))

    # -- regular simples / mouths --

    def mouths(self) -> list[list[Representation]]:
        """Per tube, the cyclically ordered regular simple representations."""
        if self._mouths is None:
            self._mouths = self._compute_mouths()
        return self._mouths

    def regular_simples(self) -> list[list[DimVector]]:
        return [[m.dim for m in tube] for tube in self.mouths()]

    def _regular_root_candidates(self) -> list[DimVector]:
        q = self.quiver
        ranges = [range(e + 1) for e in self.delta.entries]
        out = []
        for tup in itertools.product(*ranges):
            d = DimVector(q.vertices, tup)
            if d.is_zero() or d == self.delta:
                continue
            if self.defect(d) != 0:
                continue
            if symmetric_form(q, d, d) == 2:
                out.append(d)
        return out

    def _compute_mouths(self) -> list[list[Representation]]:
        cands = [
            find_real_root_indec(self.quiver, self.field, d, self.guards)
            for d in self._regular_root_candidates()
        ]
        cands.sort(key=lambda r: (r.total_dim(), r.key()))
        # regular simple <=> no nonzero map from a strictly smaller regular
        simples = []
        for rep in cands:
            if any(
                other.total_dim() < rep.total_dim() and hom_dim(other, rep) > 0
                for other in cands
            ):
                continue
            simples.append(rep)
        # partition into tubes by Hom/Ext connectivity
        n = len(simples)
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(n):
            for j in range(i + 1, n):
                hij, eij = hom_ext_dims(simples[i], simples[j])
                hji, eji = hom_ext_dims(simples[j], simples[i])
                if hij or eij or hji or eji:
                    parent[find(i)] = find(j)
        groups: dict[int, list[Representation]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(simples[i])
        tubes = []
        for group in groups.values():
            tubes.append(self._order_tube(group))
        tubes.sort(key=lambda tube: (len(tube), tube[0].key()))
        periods = tuple(sorted((len(t) for t in tubes), reverse=True))
        if periods != self.ttype.periods:
            raise ValidationFailure(
                f"computed tube periods {periods} != expected {self.ttype.periods}"
            )
        for tube in tubes:
            total = tube[0].dim
            for m in tube[1:]:
                total = total + m.dim
            if total != self.delta:
                raise ValidationFailure("tube dimension vectors do not sum to delta")
        return tubes

    def _order_tube(self, group: list[Representation]) -> list[Representation]:
        """Cyclic order: successor(S) is the unique T with Ext^1(T, S) != 0."""
        start = min(group, key=lambda r: r.key())
        ordered = [start]
        if len(group) == 1:
            return ordered
        cur = start
        while len(ordered) < len(group):
            nxt = [
                t
                for t in group
                if t is not cur and hom_ext_dims(t, cur)[1] > 0
            ]
            if len(nxt) != 1:
                raise ValidationFailure("tube mouth successor is not unique")
            ordered.append(nxt[0])
            cur = nxt[0]
        # closure: the last one must extend back to the start
        if hom_ext_dims(start, cur)[1] == 0:
            raise ValidationFailure("tube mouth cycle does not close")
        return ordered

    # -- tube modules --

    def tube_indec(self, tube: int, socle: int, length: int) -> Representation:
        """Indecomposable in non-homogeneous tube `tube` with regular socle
        at mouth position `socle` and regular length `length`."""
        key = (tube, socle, length)
        if key not in self._tube_indec_cache:
            mouths = self.mouths()[tube]
            r = len(mouths)
            rep = mouths[socle % r]
            for k in range(1, length):
                top = mouths[(socle + k) % r]
                rep = nonsplit_extension(top, rep)
            self._tube_indec_cache[key] = rep
        return self._tube_indec_cache[key]

    # -- homogeneous tubes --

    def homogeneous_simples(self, degree: int = 1) -> list[Representation]:
        """Homogeneous regular simples of dimension degree * delta.

        degree 1: the rational points (scan at delta, guarded).
        degree m >= 2: Galois descent, i.e. restriction of scalars of the
        size-m Frobenius orbits of rational points over GF(q**m).
        """
        if degree in self._homog_cache:
            return self._homog_cache[degree]
        if degree == 1:
            sims = []
            for rep, _size in scan_isoclasses(self.quiver, self.field, self.delta, self.guards):
                if not is_indecomposable(rep, self.guards):
                    continue
                if self._mouth_tube_of(rep) is None:
                    sims.append(rep)
            sims.sort(key=lambda r: r.key())
            self._homog_cache[1] = sims
            return sims
        ext_q = self.field.q**degree
        if ext_q > 256:
            raise GuardExceeded(f"extension field GF({ext_q}) out of supported range")
        ext = GF(ext_q)
        layout = SubfieldLayout(self.field, ext)
        ts_ext = TameStructure(self.quiver, ext, self.ttype, self.guards)
        sims_ext = ts_ext.homogeneous_simples(1)
        used = [False] * len(sims_ext)

        def locate(rep):
            for i, s in enumerate(sims_ext):
                if s.dim == rep.dim and is_isomorphic(s, rep, self.guards):
                    return i
            raise ValidationFailure("Frobenius twist left the homogeneous simples")

        out = []
        for i, H in enumerate(sims_ext):
            if used[i]:
                continue
            orbit = [i]
            used[i] = True
            cur = H
            while True:
                cur = frobenius_twist(cur, self.field.q)
                j = locate(cur)
                if j == i:
                    break
                used[j] = True
                orbit.append(j)
            if len(orbit) == degree:
                member = sims_ext[min(orbit)]
                res = restriction_of_scalars(member, layout, self.quiver)
                assert is_indecomposable(res, self.guards)
                out.append(res)
        out.sort(key=lambda r: r.key())
        self._homog_cache[degree] = out
        return out

    def homogeneous_indec(self, slot: int, length: int, degree: int = 1) -> Representation:
        """Regular length `length` module in the homogeneous tube at the
        slot-th point of the given degree (slots index the deterministic
        order of homogeneous_simples)."""
        key = (degree, slot, length)
        if key not in self._homog_indec_cache:
            sims = self.homogeneous_simples(degree)
            if slot >= len(sims):
                raise InputError(
                    f"only {len(sims)} homogeneous points of degree {degree} over "
                    f"GF({self.field.q}); slot {slot} unavailable"
                )
            rep = sims[slot]
            for _ in range(1, length):
                rep = nonsplit_extension(sims[slot], rep, expected_ext=degree)
            if length > 1:
                assert is_indecomposable(rep, self.guards)
            self._homog_indec_cache[key] = rep
        return self._homog_indec_cache[key]

    # -- classification --

    def _mouth_tube_of(self, rep: Representation) -> int | None:
        for i, tube in enumerate(self.mouths()):
            for S in tube:
                if hom_dim(S, rep) > 0 or hom_dim(rep, S) > 0:
                    return i
        return None

    def classify_indec(self, rep: Representation):
        """('preprojective',) | ('preinjective',) | ('tube', i) |
        ('homogeneous', point_label) for an indecomposable rep."""
        d = self.defect(rep.dim)
        if d < 0:
            return ("preprojective",)
        if d > 0:
            return ("preinjective",)
        tube = self._mouth_tube_of(rep)
        if tube is not None:
            return ("tube", tube)
        return ("homogeneous", self._homog_point_label(rep))

    def _homog_point_label(self, rep: Representation) -> str:
        """Orbit label of the homogeneous point carrying rep: the index of
        the rational dim-delta simple mapping into it, or a degree tag."""
        try:
            sims = self.homogeneous_simples(1)
        except GuardExceeded:
            return "?"
        for i, H in enumerate(sims):
            if hom_dim(H, rep) > 0:
                return f"x{i}"
        degree = rep.total_dim() // self.delta.total()
        for m in range(2, degree + 1):
            if degree % m == 0:
                try:
                    for i, H in enumerate(self.homogeneous_simples(m)):
                        if hom_dim(H, rep) > 0:
                            return f"deg{m}.{i}"
                except GuardExceeded:
                    break
        return "?"
