"""The twisted Ringel-Hall algebra at a fixed prime power q.

Elements are finite formal sums of iso-classes with coefficients in
Q(sqrt(q)); the product is the Euler-form-twisted Hall product.  The
module also provides the rescaled basis, divided-power Serre checks,
the regular-part decomposition of the n*delta degree pieces, PBW-type
products, and exact graded rank computations.
"""

from __future__ import annotations

import itertools

from .catalog import IsoClass, ModuleCatalog
from .coeffs import QSqrt, matrix_rank, v_factorial
from .errors import InputError, ValidationFailure
from .halln import HallNumbers
from .quiver import DimVector, euler_form
from .tame import Partition


class HallElement:
    """Finite map iso-class -> coefficient; immutable by convention."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "HallAlgebra", terms: dict[IsoClass, QSqrt]):
        self.alg = alg
        self.terms = {c: x for c, x in terms.items() if x}

    def coeff(self, cls: IsoClass) -> QSqrt:
        return self.terms.get(cls, QSqrt(self.alg.q, 0))

    def support_degrees(self) -> set[tuple]:
        return {c.dim.entries for c in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> DimVector:
        degs = self.support_degrees()
        if len(degs) != 1:
            raise InputError(f"element is not homogeneous: degrees {sorted(degs)}")
        return self.alg.cat.quiver.dim(next(iter(degs)))

    def __add__(self, other: "HallElement") -> "HallElement":
        out = dict(self.terms)
        for c, x in other.terms.items():
            out[c] = out.get(c, QSqrt(self.alg.q, 0)) + x
        return HallElement(self.alg, out)

    def __sub__(self, other: "HallElement") -> "HallElement":
        return self + other.scale(-1)

    def scale(self, x) -> "HallElement":
        x = QSqrt.of(self.alg.q, x) if isinstance(x, QSqrt) else QSqrt(self.alg.q, x)
        return HallElement(self.alg, {c: x * y for c, y in self.terms.items()})

    def __mul__(self, other: "HallElement") -> "HallElement":
        return self.alg.product(self, other)

    def __eq__(self, other):
        return isinstance(other, HallElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({x})*u[{c.label}]" for c, x in sorted(self.terms.items(), key=lambda t: t[0].summands)]
        return " + ".join(bits)

    def to_json(self) -> list:
        out = []
        for c, x in sorted(self.terms.items(), key=lambda t: t[0].summands):
            a, b = x.to_pair()
            out.append({"class": c.label, "a": a, "b": b})
        return out


class HallAlgebra:
    """Twisted Hall algebra engine over one ModuleCatalog."""

    def __init__(self, catalog: ModuleCatalog, disk_cache=None):
        self.cat = catalog
        self.q = catalog.field.q
        self.engine = HallNumbers(catalog, disk_cache)

    # -- element constructors --

    def zero(self) -> HallElement:
        return HallElement(self, {})

    def one(self) -> HallElement:
        return self.u(self.cat.zero_class())

    def u(self, cls: IsoClass) -> HallElement:
        return HallElement(self, {cls: QSqrt(self.q, 1)})

    def simple(self, v: str) -> HallElement:
        return self.u(self.cat.simple_class(v))

    def rescaled(self, cls: IsoClass) -> HallElement:
        """<M> = v^(-dim_Fq M + dim End M) u_[M]."""
        expo = -cls.total_dim() + cls.end_dim()
        return HallElement(self, {cls: QSqrt.v_power(self.q, expo)})

    # -- product --

    def product(self, x: HallElement, y: HallElement, twisted: bool = True) -> HallElement:
        out: dict[IsoClass, QSqrt] = {}
        for A, ca in x.terms.items():
            for B, cb in y.terms.items():
                if twisted:
                    tw = QSqrt.v_power(self.q, euler_form(self.cat.quiver, A.dim, B.dim))
                else:
                    tw = QSqrt(self.q, 1)
                factor = ca * cb * tw
                for L, g in self.engine.extension_targets(A, B):
                    out[L] = out.get(L, QSqrt(self.q, 0)) + factor * g
        return HallElement(self, out)

    def power(self, x: HallElement, n: int) -> HallElement:
        out = self.one()
        for _ in range(n):
            out = self.product(out, x)
        return out

    def divided_power(self, x: HallElement, p: int, twisted: bool = True) -> HallElement:
        """x^(p) = x^p / [p]!."""
        out = self.one()
        for _ in range(p):
            out = self.product(out, x, twisted=twisted)
        return out.scale(v_factorial(self.q, p).inverse())

    # -- Serre relations --

    def serre_check(self, i: str, j: str, twisted: bool = True) -> bool:
        """sum_{p+p'=1-a_ij} (-1)^p x_i^(p) x_j x_i^(p') == 0."""
        from .quiver import cartan_matrix

        quiver = self.cat.quiver
        if i == j:
            raise InputError("Serre relation needs distinct vertices")
        C = cartan_matrix(quiver)
        a_ij = int(C[quiver.vertex_index(i), quiver.vertex_index(j)])
        n = 1 - a_ij
        xi, xj = self.simple(i), self.simple(j)
        total = self.zero()
        for p in range(n + 1):
            term = self.product(
                self.product(self.divided_power(xi, p, twisted), xj, twisted),
                self.divided_power(xi, n - p, twisted),
                twisted,
            )
            total = total + term.scale((-1) ** p)
        return total.is_zero()

    # -- regular-part components at n*delta --

    def _regular_split(self, cls: IsoClass) -> str | None:
        """'nonhom' / 'hom' / 'mixed' for regular classes, None otherwise."""
        kinds = set()
        for entries, idx, _m in cls.summands:
            part = self.cat.indec_part(entries, idx)[0]
            if part in ("preprojective", "preinjective"):
                return None
            kinds.add("nonhom" if part == "tube" else "hom")
        if kinds == {"nonhom"}:
            return "nonhom"
        if kinds == {"hom"}:
            return "hom"
        return "mixed"

    def e_delta_components(self, n: int) -> tuple[HallElement, HallElement, HallElement]:
        """E_{n delta,1/2/3}: v^(-n|delta|)-scaled sums of the regular
        classes of dimension n*delta, split by summand location
        (all non-homogeneous / mixed / all homogeneous)."""
        if self.cat.tame is None:
            raise InputError("E components require a tame quiver")
        delta = self.cat.tame.delta
        pref = QSqrt.v_power(self.q, -n * delta.total())
        sums = {"nonhom": {}, "mixed": {}, "hom": {}}
        for cls in self.cat.enumerate_classes(delta * n):
            if cls.is_zero():
                continue
            kind = self._regular_split(cls)
            if kind is not None:
                sums[kind][cls] = pref
        return (
            HallElement(self, sums["nonhom"]),
            HallElement(self, sums["mixed"]),
            HallElement(self, sums["hom"]),
        )

    def e_w_delta_3(self, w: Partition) -> HallElement:
        out = self.one()
        for part in w:
            out = self.product(out, self.e_delta_components(part)[2])
        return out

    # -- PBW --

    def pbw_element(
        self, P: IsoClass, M: IsoClass, w: Partition, I: IsoClass
    ) -> HallElement:
        """<P> * <M> * E_{w delta,3} * <I> with the parts validated."""
        self._require_part(P, {"preprojective"}, "P")
        self._require_part(M, {"tube"}, "M")
        self._require_part(I, {"preinjective"}, "I")
        out = self.rescaled(P)
        out = self.product(out, self.rescaled(M))
        out = self.product(out, self.e_w_delta_3(w))
        out = self.product(out, self.rescaled(I))
        return out

    def _require_part(self, cls: IsoClass, allowed: set, name: str) -> None:
        for entries, idx, _m in cls.summands:
            part = self.cat.indec_part(entries, idx)[0]
            if part not in allowed:
                raise ValidationFailure(
                    f"PBW factor {name}={cls.label} has a {part} summand"
                )

    def pbw_members_at(self, degree: DimVector) -> list[HallElement]:
        """All PBW set members of the given degree."""
        degree = self.cat.quiver.dim(degree)
        delta = self.cat.tame.delta
        members = []
        max_n = min(
            degree.entries[i] // delta.entries[i]
            for i in range(len(delta.entries))
            if delta.entries[i]
        )
        for n in range(max_n + 1):
            for w in _partitions_upto(n):
                rest = degree - delta * n
                for P in self._part_classes(rest, {"preprojective"}):
                    rem1 = rest - P.dim
                    for M in self._part_classes(rem1, {"tube"}):
                        rem2 = rem1 - M.dim
                        for I in self._part_classes(rem2, {"preinjective"}, exact=True):
                            members.append(self.pbw_element(P, M, w, I))
        return members

    def _part_classes(self, bound: DimVector, allowed: set, exact: bool = False):
        """Classes whose summands lie in `allowed`, of dim <= bound
        (or == bound when exact)."""
        out = []
        dims = (
            [bound]
            if exact
            else [
                self.cat.quiver.dim(t)
                for t in itertools.product(*(range(e + 1) for e in bound.entries))
            ]
        )
        for d in dims:
            for cls in self.cat.enumerate_classes(d):
                if cls.is_zero():
                    if d.is_zero():
                        out.append(cls)
                    continue
                ok = all(
                    self.cat.indec_part(entries, idx)[0] in allowed
                    for entries, idx, _m in cls.summands
                )
                if ok:
                    out.append(cls)
        return out

    # -- graded pieces and ranks --

    def full_graded_dim(self, degree: DimVector) -> int:
        return len(self.cat.enumerate_classes(degree))

    def graded_rank(self, elements: list[HallElement], degree: DimVector) -> int:
        """Rank of the coefficient matrix of the elements restricted to
        one degree piece."""
        degree = self.cat.quiver.dim(degree)
        basis = self.cat.enumerate_classes(degree)
        index = {c: i for i, c in enumerate(basis)}
        rows = []
        for el in elements:
            row = [QSqrt(self.q, 0)] * len(basis)
            for c, x in el.terms.items():
                if c.dim == degree:
                    row[index[c]] = x
            rows.append(row)
        if not rows:
            return 0
        return matrix_rank(rows)

    def composition_generators(self) -> list[HallElement]:
        return [self.simple(v) for v in self.cat.quiver.vertices]

    def rational_generators(self, upto: DimVector) -> list[HallElement]:
        """Simples plus all classes supported in the non-homogeneous
        tubes, of dimension <= upto."""
        gens = self.composition_generators()
        for tup in itertools.product(*(range(e + 1) for e in upto.entries)):
            d = self.cat.quiver.dim(tup)
            if d.is_zero():
                continue
            for cls in self.cat.enumerate_classes(d):
                if cls.is_zero() or cls.total_dim() == 1:
                    continue
                if all(
                    self.cat.indec_part(entries, idx)[0] == "tube"
                    for entries, idx, _m in cls.summands
                ):
                    gens.append(self.u(cls))
        return gens

    def word_span(self, generators: list[HallElement], degree: DimVector) -> list[HallElement]:
        """All products of homogeneous generators with degrees summing to
        `degree` (the spanning set of the subalgebra's degree piece)."""
        degree = self.cat.quiver.dim(degree)
        gens = [(g, g.homogeneous_degree()) for g in generators]
        words: list[HallElement] = []

        def rec(current: HallElement, remaining: DimVector):
            if remaining.is_zero():
                words.append(current)
                return
            for g, gd in gens:
                if gd.leq(remaining) and not gd.is_zero():
                    rec(self.product(current, g), remaining - gd)

        rec(self.one(), degree)
        return words

    def subalgebra_graded_dim(self, generators: list[HallElement], degree: DimVector) -> int:
        """Dimension of the degree piece of the subalgebra generated by
        homogeneous generators: rank of the span of all products whose
        degrees sum to `degree`."""
        degree = self.cat.quiver.dim(degree)
        return self.graded_rank(self.word_span(generators, degree), degree)

    def coeff_rows(self, elements: list[HallElement], degree: DimVector) -> list[list[QSqrt]]:
        """Coefficient vectors of the elements in the class basis at degree."""
        degree = self.cat.quiver.dim(degree)
        basis = self.cat.enumerate_classes(degree)
        index = {c: i for i, c in enumerate(basis)}
        rows = []
        for el in elements:
            row = [QSqrt(self.q, 0)] * len(basis)
            for c, x in el.terms.items():
                if c.dim == degree:
                    row[index[c]] = x
            rows.append(row)
        return rows


def _partitions_upto(n: int):
    from .tame import partitions_of

    if n == 0:
        return [Partition(())]
    return partitions_of(n)
