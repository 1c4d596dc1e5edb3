"""The module catalog: iso-classes, decomposition, classification.

An IsoClass is identified by its Krull-Schmidt decomposition into
registered indecomposables.  The registry is built structurally (real
roots by rigid sampling, n*delta dims from tube theory), so the
expensive orbit scans are only needed as an independent cross-check;
both enumeration modes must agree wherever both run.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DEFAULT_GUARDS, GuardExceeded, Guards, InputError, ValidationFailure
from .gf import GF
from .quiver import DimVector, Quiver, recognize_tame, symmetric_form
from .reps import (
    Representation,
    aut_order,
    find_real_root_indec,
    hom_dim,
    injective_rep,
    is_isomorphic,
    projective_rep,
    scan_isoclasses,
    split_summands,
)
from .tame import TameStructure


@dataclass(frozen=True)
class Indec:
    """A registered indecomposable: representation plus a stable label."""

    rep: Representation
    label: str
    index: int  # position inside its dimension's registry list


class IsoClass:
    """Iso-class of a module, identified by its summand multiset.

    Equality and hashing use (quiver, q, summands); the canonical
    representative is the block-diagonal direct sum of the registered
    indecomposables in registry order, so equal classes always have
    bit-identical representatives.
    """

    __slots__ = ("catalog", "summands", "dim", "_rep", "_end", "_aut", "_ser")

    def __init__(self, catalog: "ModuleCatalog", summands: tuple):
        self.catalog = catalog
        self.summands = summands  # tuple of (dim_entries, index, mult), sorted
        dim = catalog.quiver.zero_dim()
        for entries, _idx, mult in summands:
            dim = dim + catalog.quiver.dim(entries) * mult
        self.dim = dim
        self._rep = None
        self._end = None
        self._aut = None
        self._ser = None

    @property
    def rep(self) -> Representation:
        if self._rep is None:
            rep = Representation.zero(self.catalog.quiver, self.catalog.field, self.dim * 0)
            for entries, idx, mult in self.summands:
                piece = self.catalog.indec(self.catalog.quiver.dim(entries), idx).rep
                for _ in range(mult):
                    rep = rep.direct_sum(piece)
            self._rep = rep
        return self._rep

    @property
    def label(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for entries, idx, mult in self.summands:
            lab = self.catalog.indec(self.catalog.quiver.dim(entries), idx).label
            parts.extend([lab] * mult)
        return "+".join(parts)

    def canonical_serial(self) -> str:
        """Canonical representative in the representation serialization
        format (stable disk-cache key)."""
        if self._ser is None:
            self._ser = self.rep.serialize()
        return self._ser

    def end_dim(self) -> int:
        if self._end is None:
            total = 0
            for e1, i1, m1 in self.summands:
                for e2, i2, m2 in self.summands:
                    z1 = self.catalog.indec(self.catalog.quiver.dim(e1), i1).rep
                    z2 = self.catalog.indec(self.catalog.quiver.dim(e2), i2).rep
                    total += m1 * m2 * self.catalog.hom_dim_reps(z1, z2)
            self._end = total
        return self._end

    def aut_order(self) -> int:
        """|Aut| via the End-radical factorization:
        q^{dim rad End} * prod_i |GL_{m_i}(End(Z_i)/rad)|.

        Unit counts of the indecomposables themselves are brute-forced
        (reference semantics), which keeps the searches tiny.
        """
        if self._aut is None:
            from .reps import gl_order

            q = self.catalog.field.q
            semisimple = 0
            units = 1
            for entries, idx, mult in self.summands:
                d = self.catalog.indec_division_degree(entries, idx)
                semisimple += d * mult * mult
                units *= gl_order(mult, q**d)
            rad_dim = self.end_dim() - semisimple
            assert rad_dim >= 0
            self._aut = q**rad_dim * units
        return self._aut

    def aut_order_bruteforce(self) -> int:
        """Reference semantics: exhaustive unit count in End (guarded)."""
        return aut_order(self.rep, self.catalog.guards)

    def orbit_dim(self) -> int:
        return sum(d * d for d in self.dim.entries) - self.end_dim()

    def total_dim(self) -> int:
        return self.dim.total()

    def is_zero(self) -> bool:
        return not self.summands

    def summand_classes(self) -> list[tuple["IsoClass", int]]:
        return [
            (self.catalog.class_from_summands(((entries, idx, 1),)), mult)
            for entries, idx, mult in self.summands
        ]

    def __add__(self, other: "IsoClass") -> "IsoClass":
        """Direct-sum of classes."""
        assert self.catalog is other.catalog
        merged: dict = {}
        for entries, idx, mult in self.summands + other.summands:
            merged[(entries, idx)] = merged.get((entries, idx), 0) + mult
        return self.catalog.class_from_summands(
            tuple(sorted((e, i, m) for (e, i), m in merged.items()))
        )

    def __eq__(self, other):
        return (
            isinstance(other, IsoClass)
            and self.catalog.quiver == other.catalog.quiver
            and self.catalog.field.q == other.catalog.field.q
            and self.summands == other.summands
        )

    def __hash__(self):
        return hash((self.catalog.field.q, self.summands))

    def __repr__(self):
        return f"IsoClass[{self.label}]@q{self.catalog.field.q}"


class ModuleCatalog:
    """Registry of indecomposables and iso-classes over one (quiver, GF(q))."""

    def __init__(self, quiver: Quiver, field: GF, guards: Guards = DEFAULT_GUARDS):
        self.quiver = quiver
        self.field = field
        self.guards = guards
        self.tame = recognize_tame(quiver) if quiver.is_connected() else None
        self._ts: TameStructure | None = None
        self._indecs: dict[tuple, list[Indec]] = {}
        self._interned: dict[tuple, IsoClass] = {}
        self._hom_memo: dict[tuple[bytes, bytes], int] = {}
        self._classify_memo: dict[bytes, IsoClass] = {}
        self._enum_memo: dict[tuple, list[IsoClass]] = {}
        self._proj_keys: dict[bytes, str] | None = None

    # -- structure helpers --

    @property
    def ts(self) -> TameStructure:
        if self._ts is None:
            if self.tame is None:
                raise InputError("quiver is not tame")
            self._ts = TameStructure(self.quiver, self.field, self.tame, self.guards)
        return self._ts

    @functools.lru_cache(maxsize=None)
    def finite_type(self) -> bool:
        """Positive definite symmetric form (Dynkin underlying graph)."""
        from .quiver import cartan_matrix

        C = cartan_matrix(self.quiver)
        n = C.shape[0]
        M = [[Fraction(int(C[i, j])) for j in range(n)] for i in range(n)]
        # Cholesky-style: all leading principal minors positive
        for k in range(n):
            piv = M[k][k]
            if piv <= 0:
                return False
            for i in range(k + 1, n):
                f = M[i][k] / piv
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
        return True

    def structured_available(self) -> bool:
        return self.tame is not None or self.finite_type()

    # -- indecomposable registry --

    def indecomposables(self, d: DimVector) -> list[Indec]:
        """All indecomposables of dimension vector exactly d, in registry order."""
        d = self.quiver.dim(d)
        key = d.entries
        if key in self._indecs:
            return self._indecs[key]
        out: list[Indec] = []
        if d.is_zero():
            self._indecs[key] = out
            return out
        if not self.structured_available():
            # generic fallback: filter a guarded orbit scan for local
            # endomorphism rings (no structural theory assumed)
            from .reps import is_indecomposable

            for rep, _size in scan_isoclasses(self.quiver, self.field, d, self.guards):
                if is_indecomposable(rep, self.guards):
                    lab = f"R({','.join(str(e) for e in d.entries)})#{len(out)}"
                    out.append(Indec(rep, lab, len(out)))
            self._indecs[key] = out
            return out
        if symmetric_form(self.quiver, d, d) == 2:
            if self.tame is not None and self.ts.defect(d) == 0:
                # regular real roots of length >= period are not rigid;
                # construct them inside their tube instead of sampling
                rep, label = self._tube_indec_by_dim(d)
                out.append(Indec(rep, label, 0))
            else:
                rep = find_real_root_indec(self.quiver, self.field, d, self.guards)
                out.append(Indec(rep, self._real_root_label(rep), 0))
        elif self.tame is not None:
            delta = self.tame.delta
            n = d.total() // delta.total() if delta.total() else 0
            if n >= 1 and d == delta * n:
                ts = self.ts
                for i, tube in enumerate(ts.mouths()):
                    r = len(tube)
                    for j in range(r):
                        rep = ts.tube_indec(i, j, n * r)
                        out.append(Indec(rep, f"T{i}.{j}.{n * r}", len(out)))
                for m in range(1, n + 1):
                    if n % m:
                        continue
                    length = n // m
                    for slot, _H in enumerate(ts.homogeneous_simples(m)):
                        rep = ts.homogeneous_indec(slot, length, m)
                        lab = f"H{slot}.{length}" if m == 1 else f"Hd{m}.{slot}.{length}"
                        out.append(Indec(rep, lab, len(out)))
        self._indecs[key] = out
        return out

    def _tube_indec_by_dim(self, d: DimVector):
        """The unique regular indecomposable at a defect-zero real root:
        locate the tube, socle position and regular length by dimension."""
        ts = self.ts
        for i, tube in enumerate(ts.mouths()):
            r = len(tube)
            for j in range(r):
                acc = self.quiver.zero_dim()
                m = 0
                while acc.total() < d.total():
                    acc = acc + tube[(j + m) % r].dim
                    m += 1
                if acc == d:
                    rep = ts.tube_indec(i, j, m)
                    if rep.total_dim() == 1:
                        v = next(v for v in self.quiver.vertices if rep.dim[v] == 1)
                        return rep, f"S{v}"
                    return rep, f"T{i}.{j}.{m}"
        raise ValidationFailure(
            f"no tube module matches the regular real root {d.entries}"
        )

    def _real_root_label(self, rep: Representation) -> str:
        q = self.quiver
        if rep.total_dim() == 1:
            v = next(v for v in q.vertices if rep.dim[v] == 1)
            return f"S{v}"
        if self._proj_keys is None:
            keys = {}
            for v in q.vertices:
                keys[("P", v)] = projective_rep(q, self.field, v)
                keys[("I", v)] = injective_rep(q, self.field, v)
            self._proj_keys = keys
        for (kind, v), pr in self._proj_keys.items():
            if pr.dim == rep.dim and is_isomorphic(pr, rep, self.guards):
                return f"{kind}{v}"
        if self.tame is not None and self.ts.defect(rep.dim) == 0:
            ts = self.ts
            for i, tube in enumerate(ts.mouths()):
                r = len(tube)
                for j in range(r):
                    if hom_dim(tube[j], rep) == 0:
                        continue
                    length = next(
                        (
                            k
                            for k in range(1, r)
                            if ts.tube_indec(i, j, k).dim == rep.dim
                        ),
                        None,
                    )
                    if length is not None:
                        return f"T{i}.{j}.{length}"
        return "R(" + ",".join(str(e) for e in rep.dim.entries) + ")"

    def indec(self, d: DimVector, index: int) -> Indec:
        return self.indecomposables(d)[index]

    def indecomposables_upto(self, d: DimVector) -> list[Indec]:
        """All indecomposables with dimension vector <= d, deterministic order."""
        d = self.quiver.dim(d)
        out = []
        for tup in itertools.product(*(range(e + 1) for e in d.entries)):
            dv = DimVector(self.quiver.vertices, tup)
            if dv.is_zero():
                continue
            out.extend(self.indecomposables(dv))
        return out

    # -- iso-classes --

    def class_from_summands(self, summands: tuple) -> IsoClass:
        summands = tuple(sorted((tuple(e), int(i), int(m)) for e, i, m in summands if m))
        if summands not in self._interned:
            self._interned[summands] = IsoClass(self, summands)
        return self._interned[summands]

    def zero_class(self) -> IsoClass:
        return self.class_from_summands(())

    def class_of_indec(self, d: DimVector, index: int) -> IsoClass:
        d = self.quiver.dim(d)
        return self.class_from_summands(((d.entries, index, 1),))

    def simple_class(self, v: str) -> IsoClass:
        return self.classify_rep(Representation.zero(self.quiver, self.field, self.quiver.simple_dim(v)))

    # -- hom dims with memo --

    def hom_dim_reps(self, M: Representation, N: Representation) -> int:
        key = (M.key(), N.key())
        if key not in self._hom_memo:
            self._hom_memo[key] = hom_dim(M, N)
        return self._hom_memo[key]

    @functools.lru_cache(maxsize=None)
    def indec_division_degree(self, entries: tuple, index: int) -> int:
        """d with End(Z)/rad = F_{q^d} for a registered indecomposable,
        recovered from the exact unit count q^{h-d} (q^d - 1)."""
        rep = self.indec(self.quiver.dim(entries), index).rep
        h = self.hom_dim_reps(rep, rep)
        a = aut_order(rep, self.guards)
        q = self.field.q
        for d in range(1, h + 1):
            if q ** (h - d) * (q**d - 1) == a:
                return d
        raise ValidationFailure(
            f"unit count {a} is not of local-ring shape for {entries}#{index}"
        )

    # -- decomposition --

    def classify_rep(self, rep: Representation) -> IsoClass:
        """The iso-class of an arbitrary representation (Krull-Schmidt)."""
        if rep.quiver != self.quiver or rep.field is not self.field:
            raise InputError("representation belongs to a different catalog")
        key = rep.key()
        if key in self._classify_memo:
            return self._classify_memo[key]
        if rep.total_dim() == 0:
            cls = self.zero_class()
        else:
            summands = self._decompose_probe(rep)
            if summands is None:
                summands = self._decompose_split(rep)
            cls = self.class_from_summands(summands)
        self._classify_memo[key] = cls
        return cls

    def decompose(self, rep: Representation) -> list[tuple[IsoClass, int]]:
        """Summand multiset of rep as (indecomposable class, multiplicity)."""
        return self.classify_rep(rep).summand_classes()

    def _decompose_probe(self, rep: Representation):
        """Multiplicities from dim Hom(X, rep) = sum_i m_i dim Hom(X, Z_i)
        over all catalog indecomposables X, Z_i of dimension <= dim rep."""
        try:
            indecs = self.indecomposables_upto(rep.dim)
        except GuardExceeded:
            return None
        if not indecs:
            return None
        cols = []
        rhs = []
        for X in indecs:
            rhs.append(Fraction(self.hom_dim_reps(X.rep, rep)))
            cols.append([Fraction(self.hom_dim_reps(X.rep, Z.rep)) for Z in indecs])
        n = len(indecs)
        A = [[cols[r][c] for c in range(n)] for r in range(n)]
        sol = _solve_unique(A, rhs)
        if sol is None:
            return None
        summands = []
        total = self.quiver.zero_dim()
        for Z, m in zip(indecs, sol):
            if m.denominator != 1 or m < 0:
                return None
            mi = int(m)
            if mi:
                summands.append((Z.rep.dim.entries, Z.index, mi))
                total = total + Z.rep.dim * mi
        if total != rep.dim:
            return None
        return tuple(sorted(summands))

    def _decompose_split(self, rep: Representation):
        """Fallback: idempotent splitting plus iso-matching into the registry."""
        summands: dict = {}
        for piece in split_summands(rep, self.guards):
            idx = self._match_indec(piece)
            k = (piece.dim.entries, idx)
            summands[k] = summands.get(k, 0) + 1
        return tuple(sorted((e, i, m) for (e, i), m in summands.items()))

    def _match_indec(self, piece: Representation) -> int:
        for cand in self.indecomposables(piece.dim):
            if is_isomorphic(cand.rep, piece, self.guards):
                return cand.index
        raise ValidationFailure(
            f"indecomposable of dimension {piece.dim.entries} missing from catalog"
        )

    # -- enumeration --

    def enumerate_classes(self, d: DimVector, mode: str = "auto") -> list[IsoClass]:
        """Complete duplicate-free list of iso-classes at d, sorted by label.

        mode = "catalog" (multisets of indecomposables), "scan" (orbit
        partition of E_d), or "auto" (catalog when available).
        """
        d = self.quiver.dim(d)
        if mode == "auto":
            mode = "catalog" if self.structured_available() else "scan"
        memo_key = (d.entries, mode)
        if memo_key in self._enum_memo:
            return self._enum_memo[memo_key]
        if mode == "catalog":
            classes = self._enumerate_catalog(d)
        elif mode == "scan":
            classes = [
                self.classify_rep(rep)
                for rep, _size in scan_isoclasses(self.quiver, self.field, d, self.guards)
            ]
        else:
            raise InputError(f"unknown enumeration mode {mode!r}")
        classes = sorted(set(classes), key=lambda c: (c.summands,))
        self._enum_memo[memo_key] = classes
        return classes

    def _enumerate_catalog(self, d: DimVector) -> list[IsoClass]:
        indecs = self.indecomposables_upto(d)
        out: list[IsoClass] = []
        n = len(indecs)
        limit = self.guards.scan_limit

        def rec(i: int, remaining: DimVector, chosen: list):
            if remaining.is_zero():
                if len(out) >= limit:
                    raise GuardExceeded(
                        f"catalog enumeration at {d.entries}: more than {limit} classes"
                    )
                out.append(self.class_from_summands(tuple(chosen)))
                return
            if i == n:
                return
            Z = indecs[i]
            rec(i + 1, remaining, chosen)
            cur = remaining
            mult = 0
            while Z.rep.dim.leq(cur):
                cur = cur - Z.rep.dim
                mult += 1
                rec(i + 1, cur, chosen + [(Z.rep.dim.entries, Z.index, mult)])

        rec(0, d, [])
        return out

    # -- tame classification report --

    @functools.lru_cache(maxsize=None)
    def indec_part(self, entries: tuple, index: int):
        """Classification tag of a registered indecomposable (tame only)."""
        rep = self.indec(self.quiver.dim(entries), index).rep
        return self.ts.classify_indec(rep)

    def classify(self, rep_or_class) -> "ModuleClassReport":
        cls = (
            rep_or_class
            if isinstance(rep_or_class, IsoClass)
            else self.classify_rep(rep_or_class)
        )
        if self.tame is None:
            raise InputError("classification requires a tame quiver")
        details = []
        kinds = set()
        for entries, idx, mult in cls.summands:
            tag = self.indec_part(entries, idx)
            kinds.add(tag[0])
            lab = self.indec(self.quiver.dim(entries), idx).label
            details.append((lab, tag, mult))
        if not details:
            part = "zero"
        elif kinds <= {"preprojective"}:
            part = "preprojective"
        elif kinds <= {"preinjective"}:
            part = "preinjective"
        elif kinds <= {"tube", "homogeneous"}:
            part = "regular"
        else:
            part = "mixed"
        return ModuleClassReport(part, tuple(details))


@dataclass(frozen=True)
class ModuleClassReport:
    """Classification of a module: overall part plus per-summand detail."""

    part: str  # zero | preprojective | regular | preinjective | mixed
    summands: tuple  # ((label, tag, mult), ...)

    def to_json(self) -> dict:
        return {
            "part": self.part,
            "summands": [
                {"label": lab, "class": list(tag), "mult": mult}
                for lab, tag, mult in self.summands
            ],
        }


def _solve_unique(A: list[list[Fraction]], b: list[Fraction]):
    """Solve A x = b when A has full column rank; None when rank-deficient."""
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < ncols:
        return None
    for i in range(r, nrows):
        if M[i][ncols] != 0:
            raise ValidationFailure("inconsistent decomposition system")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = M[i][ncols]
    return x
