"""Hall polynomials: multi-prime evaluation, exact interpolation, validation.

A ModuleSpec describes a module independently of the field: real-root
indecomposables by dimension vector, non-homogeneous tube modules by
(tube, socle, length), homogeneous ones by an abstract parameter slot.
Hall numbers are measured at several primes, interpolated exactly over
Q, validated on held-out primes (two consecutive successes), and the
coefficients are asserted integral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import IsoClass, ModuleCatalog
from .errors import DEFAULT_GUARDS, Guards, InputError, ValidationFailure
from .gf import GF
from .halln import HallNumbers
from .quiver import Quiver, symmetric_form
from .reps import injective_rep, projective_rep


@dataclass(frozen=True)
class ModuleSpec:
    """Field-independent description: multiset of indecomposable labels."""

    entries: tuple  # ((kind, params, mult), ...)

    @classmethod
    def parse(cls, quiver: Quiver, text: str) -> "ModuleSpec":
        text = text.strip()
        if text == "0":
            return cls(())
        counts: dict = {}
        for token in text.split("+"):
            kind, params = _parse_token(quiver, token.strip())
            counts[(kind, params)] = counts.get((kind, params), 0) + 1
        return cls(tuple(sorted((k, p, m) for (k, p), m in counts.items())))

    def text(self) -> str:
        bits = []
        for kind, params, mult in self.entries:
            bits.extend([_format_token(kind, params)] * mult)
        return "+".join(bits) if bits else "0"


def _parse_token(quiver: Quiver, token: str):
    m = re.fullmatch(r"([SPI])(.+)", token)
    if m and m.group(2) in quiver.vertices:
        kind, v = m.group(1), m.group(2)
        if kind == "S":
            dim = quiver.simple_dim(v)
        elif kind == "P":
            dim = projective_rep(quiver, GF(2), v).dim
        else:
            dim = injective_rep(quiver, GF(2), v).dim
        return ("root", dim.entries)
    m = re.fullmatch(r"R\(([\d,]+)\)", token)
    if m:
        entries = tuple(int(x) for x in m.group(1).split(","))
        dim = quiver.dim(entries)
        if symmetric_form(quiver, dim, dim) != 2:
            raise InputError(f"{token}: not a real root")
        return ("root", entries)
    m = re.fullmatch(r"T(\d+)\.(\d+)\.(\d+)", token)
    if m:
        return ("tube", (int(m.group(1)), int(m.group(2)), int(m.group(3))))
    m = re.fullmatch(r"H(\d+)\.(\d+)", token)
    if m:
        return ("homog", (int(m.group(1)), int(m.group(2))))
    raise InputError(f"cannot parse module label {token!r}")


def _format_token(kind: str, params) -> str:
    if kind == "root":
        return "R(" + ",".join(str(x) for x in params) + ")"
    if kind == "tube":
        return f"T{params[0]}.{params[1]}.{params[2]}"
    return f"H{params[0]}.{params[1]}"


def instantiate(spec: ModuleSpec, cat: ModuleCatalog, slot_offset: int = 0) -> IsoClass:
    """Concrete iso-class over cat's field with the requested
    Krull-Schmidt type; slots map to distinct rational points."""
    cls = cat.zero_class()
    nslots = None
    for kind, params, mult in spec.entries:
        if kind == "root":
            d = cat.quiver.dim(params)
            indecs = cat.indecomposables(d)
            if len(indecs) != 1:
                raise InputError(f"no unique indecomposable at {params}")
            piece = cat.class_of_indec(d, 0)
        elif kind == "tube":
            i, j, m = params
            piece = cat.classify_rep(cat.ts.tube_indec(i, j, m))
        else:
            slot, length = params
            if nslots is None:
                nslots = len(cat.ts.homogeneous_simples(1))
            if nslots == 0:
                raise InputError("no rational homogeneous points over this field")
            if slot >= nslots:
                raise InputError(
                    f"homogeneous slot {slot} unavailable: only {nslots} rational "
                    f"points over GF({cat.field.q})"
                )
            piece = cat.classify_rep(
                cat.ts.homogeneous_indec((slot + slot_offset) % nslots, length)
            )
        for _ in range(mult):
            cls = cls + piece
    return cls


@dataclass
class HallPolynomial:
    """An interpolated Hall polynomial with its provenance."""

    coefficients: list[int]  # low degree first
    primes_used: list[int]
    validated_at: list[int]
    evaluations: dict  # prime -> measured Hall number
    spec_labels: tuple[str, str, str]

    @property
    def degree(self) -> int:
        return max((i for i, c in enumerate(self.coefficients) if c), default=0)

    def evaluate(self, x: int) -> int:
        return sum(c * x**i for i, c in enumerate(self.coefficients))

    def to_json(self) -> dict:
        return {
            "spec": list(self.spec_labels),
            "coefficients": self.coefficients,
            "degree": self.degree,
            "primes": self.primes_used,
            "validated_at": self.validated_at,
            "points": {str(p): g for p, g in sorted(self.evaluations.items())},
            "status": "ok",
        }


def lagrange_fit(points: list[tuple[int, int]]) -> list[Fraction]:
    """Exact interpolating polynomial coefficients (low degree first)."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x - xj)
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _more_primes(after: int, count: int) -> list[int]:
    out = []
    n = after + 1
    while len(out) < count:
        if all(n % p for p in range(2, int(n**0.5) + 1)):
            out.append(n)
        n += 1
    return out


class HallPolynomialFitter:
    """Fits Hall polynomials for one quiver across several primes.

    With cache_dir set, every per-prime Hall number goes through the
    persistent disk cache, so repeated fits reuse earlier measurements.
    """

    def __init__(
        self,
        quiver: Quiver,
        guards: Guards = DEFAULT_GUARDS,
        max_extra: int = 6,
        cache_dir: str | None = None,
    ):
        self.quiver = quiver
        self.guards = guards
        self.max_extra = max_extra
        self.cache_dir = cache_dir
        self._engines: dict[int, HallNumbers] = {}

    def engine(self, q: int) -> HallNumbers:
        if q not in self._engines:
            disk = None
            if self.cache_dir is not None:
                from .cache import HallCache

                disk = HallCache(self.cache_dir, self.quiver, q)
            self._engines[q] = HallNumbers(
                ModuleCatalog(self.quiver, GF(q), self.guards), disk
            )
        return self._engines[q]

    def flush_caches(self) -> None:
        for eng in self._engines.values():
            if eng.disk is not None:
                eng.disk.flush()

    def evaluate(self, triple, q: int) -> int:
        """Measured Hall number of the spec triple (L; M, N) at prime q,
        cross-checked under a cyclic slot permutation."""
        eng = self.engine(q)
        L, M, N = (instantiate(s, eng.cat) for s in triple)
        g = eng.hall_number(L, M, N)
        if any(kind == "homog" for s in triple for kind, _p, _m in s.entries):
            Lp, Mp, Np = (instantiate(s, eng.cat, slot_offset=1) for s in triple)
            g_perm = eng.hall_number(Lp, Mp, Np)
            if g_perm != g:
                raise ValidationFailure(
                    f"Hall number depends on the homogeneous slot assignment at q={q}: "
                    f"{g} vs {g_perm} (finding, not suppressed)"
                )
        return g

    def fit(self, triple, primes: list[int], validation: int) -> HallPolynomial:
        """Adaptive interpolation: grow the fit set until two consecutive
        held-out primes validate; assert integer coefficients."""
        labels = tuple(s.text() for s in triple)
        fit_primes = list(primes)
        pool = [validation] + _more_primes(
            max(fit_primes + [validation]), self.max_extra
        )
        evaluations = {q: self.evaluate(triple, q) for q in fit_primes}
        validated: list[int] = []
        streak = 0
        coeffs = lagrange_fit([(q, evaluations[q]) for q in fit_primes])
        while streak < 2:
            if not pool:
                raise ValidationFailure(
                    f"interpolation failed to stabilize for {labels}: "
                    f"points {sorted(evaluations.items())}"
                )
            probe = pool.pop(0)
            evaluations[probe] = self.evaluate(triple, probe)
            if sum(c * Fraction(probe) ** i for i, c in enumerate(coeffs)) == evaluations[probe]:
                validated.append(probe)
                streak += 1
            else:
                fit_primes.append(probe)
                validated = []
                streak = 0
                coeffs = lagrange_fit([(q, evaluations[q]) for q in fit_primes])
        for c in coeffs:
            if c.denominator != 1:
                raise ValidationFailure(
                    f"non-integral Hall polynomial coefficient {c} for {labels}"
                )
        poly = HallPolynomial(
            coefficients=[int(c) for c in coeffs],
            primes_used=fit_primes,
            validated_at=validated,
            evaluations=evaluations,
            spec_labels=labels,
        )
        for q, g in evaluations.items():
            assert poly.evaluate(q) == g, "fit does not reproduce a measured point"
        return poly
