"""Hall numbers and their independent cross-check oracles.

The primary path counts x-stable graded subspaces of the bigger module
directly (column-echelon walk per vertex, then arrow-stability filter).
Two independent routes validate it: a Riedtmann/Peng-style count from
extension cocycles, and the function-convolution model.
"""

from __future__ import annotations

import itertools

import numpy as np

from .catalog import IsoClass, ModuleCatalog
from .coeffs import QSqrt
from .errors import ValidationFailure
from .quiver import DimVector
from .reps import Representation, stable_sub_quotients


class HallNumbers:
    """Hall-number engine over one catalog, with memo and optional disk cache."""

    def __init__(self, catalog: ModuleCatalog, disk_cache=None):
        self.cat = catalog
        self.guards = catalog.guards
        self.disk = disk_cache
        self._g: dict[tuple, int] = {}
        self._tables: dict[tuple, dict[tuple[IsoClass, IsoClass], int]] = {}
        self._middles: dict[tuple, dict[IsoClass, int]] = {}

    # ------------------------------------------------------------- primary --

    def sub_table(self, L: IsoClass, sub_dim: DimVector) -> dict:
        """One subspace walk of L at sub_dim, tabulating every
        (quotient class, sub class) count.  All Hall-number queries with
        the same (L, dim N) share this walk."""
        key = (L.summands, tuple(sub_dim.entries))
        if key in self._tables:
            return self._tables[key]
        counts: dict[tuple[IsoClass, IsoClass], int] = {}
        for sub, quo in stable_sub_quotients(L.rep, sub_dim, self.guards):
            pair = (self.cat.classify_rep(quo), self.cat.classify_rep(sub))
            counts[pair] = counts.get(pair, 0) + 1
        self._tables[key] = counts
        return counts

    def hall_number(self, L: IsoClass, M: IsoClass, N: IsoClass) -> int:
        """g^L_{MN}: submodules W of L with W iso N and L/W iso M."""
        if L.dim != M.dim + N.dim:
            return 0
        if N.is_zero():
            return 1 if L == M else 0
        if M.is_zero():
            return 1 if L == N else 0
        key = (L.summands, M.summands, N.summands)
        if key in self._g:
            return self._g[key]
        if self.disk is not None:
            hit = self.disk.get(
                L.canonical_serial(), M.canonical_serial(), N.canonical_serial()
            )
            if hit is not None:
                self._g[key] = hit
                return hit
        count = self.sub_table(L, N.dim).get((M, N), 0)
        self._g[key] = count
        if self.disk is not None:
            self.disk.put(
                L.canonical_serial(), M.canonical_serial(), N.canonical_serial(), count
            )
        return count

    def iterated_hall_number(self, L: IsoClass, parts) -> int:
        """Number of filtrations of L with top quotient parts[0], then
        parts[1], ...; agrees with the coefficient of u_L in
        u_{parts[0]} * ... * u_{parts[-1]} (untwisted)."""
        parts = tuple(parts)
        if not parts:
            return 1 if L.is_zero() else 0
        if L.dim != sum((p.dim for p in parts), self.cat.quiver.zero_dim()):
            return 0
        if len(parts) == 1:
            return 1 if L == parts[0] else 0
        if len(parts) == 2:
            return self.hall_number(L, parts[0], parts[1])
        total = 0
        rest_dim = L.dim - parts[0].dim
        for X in self.cat.enumerate_classes(rest_dim):
            g1 = self.hall_number(L, parts[0], X)
            if g1:
                total += g1 * self.iterated_hall_number(X, parts[1:])
        return total

    # ---------------------------------------------------- extension middles --

    def ext_middles(self, M: IsoClass, N: IsoClass) -> dict[IsoClass, int]:
        """Cocycle counts of middle terms of extensions 0->N->L->M->0."""
        key = (M.summands, N.summands)
        if key in self._middles:
            return self._middles[key]
        quiver, gf = self.cat.quiver, self.cat.field
        cells = []
        for aid, s, t in quiver.arrows:
            cells.append((aid, N.dim[t], M.dim[s]))
        dim_c = sum(r * c for _, r, c in cells)
        self.guards.check_scan(gf.q**dim_c, "extension cocycle enumeration")
        Mrep, Nrep = M.rep, N.rep
        dim = M.dim + N.dim
        counts: dict[IsoClass, int] = {}
        for digits in itertools.product(range(gf.q), repeat=dim_c):
            mats = {}
            off = 0
            for aid, s, t in quiver.arrows:
                nt, ms = N.dim[t], M.dim[s]
                c_block = np.array(digits[off : off + nt * ms], dtype=np.uint8).reshape(nt, ms)
                off += nt * ms
                block = np.zeros((dim[t], dim[s]), dtype=np.uint8)
                block[:nt, : N.dim[s]] = Nrep.mats[aid]
                block[nt:, N.dim[s] :] = Mrep.mats[aid]
                block[:nt, N.dim[s] :] = c_block
                mats[aid] = block
            middle = self.cat.classify_rep(Representation(quiver, gf, dim, mats))
            counts[middle] = counts.get(middle, 0) + 1
        self._middles[key] = counts
        return counts

    def extension_targets(self, M: IsoClass, N: IsoClass) -> list[tuple[IsoClass, int]]:
        """All L with g^L_{MN} > 0, each with its Hall number."""
        out = []
        for L in self.ext_middles(M, N):
            g = self.hall_number(L, M, N)
            if g <= 0:
                raise ValidationFailure(
                    f"extension middle {L.label} has zero Hall number g^L({M.label},{N.label})"
                )
            out.append((L, g))
        out.sort(key=lambda pair: pair[0].summands)
        return out

    def generic_extension(self, M: IsoClass, N: IsoClass) -> IsoClass:
        """The unique extension target with maximal orbit dimension."""
        targets = self.extension_targets(M, N)
        best = max(t.orbit_dim() for t, _ in targets)
        winners = [t for t, _ in targets if t.orbit_dim() == best]
        if len(winners) != 1:
            raise ValidationFailure(
                f"generic extension of ({M.label}, {N.label}) is not unique: "
                f"{[w.label for w in winners]}"
            )
        return winners[0]

    # ------------------------------------------------------------- oracles --

    def hall_number_via_ext_oracle(self, L: IsoClass, M: IsoClass, N: IsoClass) -> int:
        """Riedtmann/Peng route:
        g^L_{MN} = |Ext^1(M,N)_L| * a_L / (|Hom(M,N)| * a_M * a_N)."""
        if L.dim != M.dim + N.dim:
            return 0
        if M.is_zero() or N.is_zero():
            return self.hall_number(L, M, N)
        gf = self.cat.field
        counts = self.ext_middles(M, N)
        raw = counts.get(L, 0)
        if raw == 0:
            return 0
        hom_mn = self.cat.hom_dim_reps(M.rep, N.rep)
        dim_cob = sum(M.dim[v] * N.dim[v] for v in self.cat.quiver.vertices) - hom_mn
        assert raw % gf.q**dim_cob == 0, "middle counts not constant on coboundary cosets"
        ext_classes = raw // gf.q**dim_cob
        num = ext_classes * L.aut_order()
        den = gf.q**hom_mn * M.aut_order() * N.aut_order()
        if num % den:
            raise ValidationFailure("ext-oracle count is not an integer")
        return num // den

    # ------------------------------------------- function convolution model --

    def conv_function(self, M: IsoClass) -> "ConvFunction":
        """f_[M] = v^(-dim O_M) * 1_[M]."""
        q = self.cat.field.q
        return ConvFunction(
            self, M.dim, {M: QSqrt.v_power(q, -M.orbit_dim())}
        )

    def conv_indicator(self, M: IsoClass) -> "ConvFunction":
        return ConvFunction(self, M.dim, {M: QSqrt(self.cat.field.q, 1)})


class ConvFunction:
    """A G-invariant function on E_gamma^F: values per iso-class."""

    def __init__(self, engine: HallNumbers, degree: DimVector, values: dict[IsoClass, QSqrt]):
        self.engine = engine
        self.degree = degree
        self.values = {k: v for k, v in values.items() if v}

    def __getitem__(self, cls: IsoClass) -> QSqrt:
        return self.values.get(cls, QSqrt(self.engine.cat.field.q, 0))

    def circ(self, other: "ConvFunction") -> "ConvFunction":
        """(f o g)(x) = sum over x-stable W of f(x|quotient) * g(x|sub);
        computed per iso-class representative."""
        eng = self.engine
        cat = eng.cat
        q = cat.field.q
        gamma = self.degree + other.degree
        out: dict[IsoClass, QSqrt] = {}
        for W in cat.enumerate_classes(gamma):
            acc = QSqrt(q, 0)
            for (quo_cls, sub_cls), count in eng.sub_table(W, other.degree).items():
                fval = self[quo_cls]
                gval = other[sub_cls]
                if fval and gval:
                    acc = acc + fval * gval * count
            if acc:
                out[W] = acc
        return ConvFunction(eng, gamma, out)

    def star(self, other: "ConvFunction") -> "ConvFunction":
        """Twisted product f * g = v^(-m(alpha, beta)) f o g with
        m(alpha, beta) = sum a_i b_i + sum over arrows a_s b_t."""
        quiver = self.engine.cat.quiver
        a, b = self.degree, other.degree
        m = sum(x * y for x, y in zip(a.entries, b.entries))
        for _, s, t in quiver.arrows:
            m += a.entries[quiver.vertex_index(s)] * b.entries[quiver.vertex_index(t)]
        res = self.circ(other)
        tw = QSqrt.v_power(self.engine.cat.field.q, -m)
        return ConvFunction(self.engine, res.degree, {k: tw * v for k, v in res.values.items()})

    def __eq__(self, other):
        return (
            isinstance(other, ConvFunction)
            and self.degree == other.degree
            and self.values == other.values
        )
