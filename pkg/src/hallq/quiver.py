"""Quivers, dimension vectors, Euler/symmetric forms, tame-type recognition."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError


class Quiver:
    """A finite acyclic quiver with string vertex ids.

    Vertices carry a fixed total order (declaration order); every
    enumeration downstream is made deterministic by it.  Instances are
    immutable after construction.
    """

    def __init__(self, vertices, arrows):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        self.arrows: tuple[tuple[str, str, str], ...] = tuple(
            (str(a), str(s), str(t)) for a, s, t in arrows
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex ids")
        ids = [a for a, _, _ in self.arrows]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate arrow ids")
        vset = set(self.vertices)
        for a, s, t in self.arrows:
            if s not in vset or t not in vset:
                raise InputError(f"arrow {a}: endpoint not a declared vertex")
            if s == t:
                raise InputError(f"arrow {a}: loops are not supported")
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        indeg = {v: 0 for v in self.vertices}
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for _, s, t in self.arrows:
            indeg[t] += 1
            out[s].append(t)
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if seen != len(self.vertices):
            raise InputError("quiver has an oriented cycle")

    # -- basics --

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for _, s, t in self.arrows:
            adj[s].add(t)
            adj[t].add(s)
        stack, seen = [self.vertices[0]], {self.vertices[0]}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def dim(self, entries) -> "DimVector":
        """Build a DimVector from a mapping or a sequence in vertex order."""
        if isinstance(entries, DimVector):
            if entries.vertices != self.vertices:
                raise InputError("dimension vector keyed by a different vertex set")
            return entries
        if isinstance(entries, dict):
            if set(entries) != set(self.vertices):
                raise InputError("dimension vector must be keyed exactly by the vertex set")
            tup = tuple(int(entries[v]) for v in self.vertices)
        else:
            tup = tuple(int(x) for x in entries)
            if len(tup) != self.n:
                raise InputError("dimension vector has wrong length")
        return DimVector(self.vertices, tup)

    def zero_dim(self) -> "DimVector":
        return DimVector(self.vertices, (0,) * self.n)

    def simple_dim(self, v: str) -> "DimVector":
        tup = tuple(1 if w == v else 0 for w in self.vertices)
        return DimVector(self.vertices, tup)

    # -- serialization --

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, obj) -> "Quiver":
        try:
            return cls(obj["vertices"], obj["arrows"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad quiver spec: {exc}") from exc

    @classmethod
    def load(cls, path) -> "Quiver":
        try:
            with open(path) as fh:
                return cls.from_json(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read quiver file {path}: {exc}") from exc

    def content_key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({list(self.vertices)}, {len(self.arrows)} arrows)"


class DimVector:
    """Non-negative integer vector keyed by a quiver's ordered vertex set."""

    __slots__ = ("vertices", "entries")

    def __init__(self, vertices: tuple[str, ...], entries: tuple[int, ...]):
        if len(vertices) != len(entries):
            raise InputError("dimension vector has wrong length")
        if any(e < 0 for e in entries):
            raise InputError(f"negative entry in dimension vector {entries}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))

    def __setattr__(self, *a):
        raise AttributeError("DimVector is immutable")

    def __getitem__(self, v: str) -> int:
        return self.entries[self.vertices.index(v)]

    def total(self) -> int:
        return sum(self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __add__(self, other: "DimVector") -> "DimVector":
        self._compat(other)
        return DimVector(self.vertices, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "DimVector") -> "DimVector":
        self._compat(other)
        return DimVector(self.vertices, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, k: int) -> "DimVector":
        return DimVector(self.vertices, tuple(k * a for a in self.entries))

    __rmul__ = __mul__

    def leq(self, other: "DimVector") -> bool:
        """Entrywise partial order."""
        self._compat(other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def _compat(self, other: "DimVector") -> None:
        if self.vertices != other.vertices:
            raise InputError("dimension vectors over different vertex sets")

    def __eq__(self, other):
        return (
            isinstance(other, DimVector)
            and self.vertices == other.vertices
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.vertices, self.entries))

    def __repr__(self):
        return f"DimVector{self.entries}"


def euler_form(q: Quiver, a: DimVector, b: DimVector) -> int:
    """<a, b> = sum a_i b_i - sum over arrows a_{s} b_{t}."""
    _check_keying(q, a, b)
    total = sum(x * y for x, y in zip(a.entries, b.entries))
    for _, s, t in q.arrows:
        total -= a.entries[q.vertex_index(s)] * b.entries[q.vertex_index(t)]
    return total


def symmetric_form(q: Quiver, a: DimVector, b: DimVector) -> int:
    """(a, b) = <a, b> + <b, a>."""
    return euler_form(q, a, b) + euler_form(q, b, a)


def symmetric_form_raw(q: Quiver, a, b) -> int:
    """Symmetric form on raw integer tuples (entries may be negative,
    as needed for torus exponents)."""
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    total = 2 * sum(x * y for x, y in zip(a, b))
    for _, s, t in q.arrows:
        si, ti = q.vertex_index(s), q.vertex_index(t)
        total -= a[si] * b[ti] + a[ti] * b[si]
    return total


def cartan_matrix(q: Quiver) -> np.ndarray:
    """Symmetric generalized Cartan matrix a_ij = (e_i, e_j), int64."""
    n = q.n
    C = 2 * np.eye(n, dtype=np.int64)
    for _, s, t in q.arrows:
        i, j = q.vertex_index(s), q.vertex_index(t)
        C[i, j] -= 1
        C[j, i] -= 1
    return C


def _check_keying(q: Quiver, *dims: DimVector) -> None:
    for d in dims:
        if d.vertices != q.vertices:
            raise InputError("dimension vector keyed by a different vertex set")


def _integer_kernel(C: np.ndarray) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel of an integer matrix (exact)."""
    n = C.shape[0]
    M = [[Fraction(int(C[i, j])) for j in range(n)] for i in range(n)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, n) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for rr, pc in enumerate(pivots):
            vec[pc] = -M[rr][fc]
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class TameType:
    """Invariants of a connected extended Dynkin (tame) quiver."""

    family: str  # "A", "D", "E6", "E7", "E8"
    params: tuple[int, ...]  # (p, q) for A-tilde, (n,) for D-tilde, () for E
    tube_count: int  # l, number of non-homogeneous tubes
    periods: tuple[int, ...]  # r_1 >= ... >= r_l, all >= 2
    delta: DimVector
    extending_vertex: str  # some vertex with delta_e == 1

    @property
    def name(self) -> str:
        if self.family == "A":
            return f"A~({self.params[0]},{self.params[1]})"
        if self.family == "D":
            return f"D~{self.params[0]}"
        return f"E~{self.family[1]}"


def recognize_tame(q: Quiver) -> TameType | None:
    """Recognize an extended Dynkin quiver; None for anything else.

    delta is computed as the primitive positive radical vector of the
    Cartan matrix, so it is independent of any table labeling; family
    and tube periods come from the underlying graph shape.
    """
    if not q.is_connected():
        raise InputError("tame recognition requires a connected quiver")
    if q.n < 2:
        return None
    kernel = _integer_kernel(cartan_matrix(q))
    if len(kernel) != 1:
        return None
    vec = kernel[0]
    denom = 1
    for x in vec:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        return None
    g = 0
    for x in ints:
        g = _gcd(g, x)
    ints = [x // g for x in ints]
    delta = DimVector(q.vertices, tuple(ints))

    shape = _graph_shape(q)
    if shape is None:
        return None
    family, params, periods = shape
    periods = tuple(sorted((r for r in periods if r >= 2), reverse=True))
    if sum(r - 1 for r in periods) != q.n - 2:
        return None
    ext = next((v for v in q.vertices if delta[v] == 1), None)
    if ext is None:
        return None
    return TameType(family, params, len(periods), periods, delta, ext)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _graph_shape(q: Quiver) -> tuple[str, tuple[int, ...], tuple[int, ...]] | None:
    """Classify the underlying multigraph as an extended Dynkin shape."""
    nv, ne = q.n, len(q.arrows)
    deg = {v: 0 for v in q.vertices}
    for _, s, t in q.arrows:
        deg[s] += 1
        deg[t] += 1
    if ne == nv and all(d == 2 for d in deg.values()):
        pq = _cycle_orientation(q)
        if pq is None:
            return None
        p, qq = pq
        return "A", (p, qq), (p, qq)
    if ne != nv - 1:
        return None
    # tree: classify by branch vertices and arm lengths
    branch = [v for v in q.vertices if deg[v] >= 3]
    if len(branch) == 1:
        c = branch[0]
        arms = sorted(_arm_lengths(q, c))
        if deg[c] == 4 and arms == [1, 1, 1, 1]:
            return "D", (4,), (2, 2, 2)
        if deg[c] == 3:
            if arms == [2, 2, 2]:
                return "E6", (), (2, 3, 3)
            if arms == [1, 3, 3]:
                return "E7", (), (2, 3, 4)
            if arms == [1, 2, 5]:
                return "E8", (), (2, 3, 5)
        return None
    if len(branch) == 2:
        b1, b2 = branch
        if deg[b1] != 3 or deg[b2] != 3:
            return None
        arms1 = sorted(_arm_lengths(q, b1))
        arms2 = sorted(_arm_lengths(q, b2))
        # D~n, n >= 5: each branch vertex has two length-1 arms plus the chain
        if arms1[:2] != [1, 1] or arms2[:2] != [1, 1]:
            return None
        n = nv - 1
        return "D", (n,), (2, 2, n - 2)
    return None


def _arm_lengths(q: Quiver, center: str) -> list[int]:
    adj: dict[str, list[str]] = {v: [] for v in q.vertices}
    for _, s, t in q.arrows:
        adj[s].append(t)
        adj[t].append(s)
    lengths = []
    for start in adj[center]:
        ln, prev, cur = 1, center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    return lengths


def _cycle_orientation(q: Quiver) -> tuple[int, int] | None:
    """Walk the unique cycle; count arrows along (p) and against (qq)."""
    arrows = list(q.arrows)
    edges: dict[str, list[tuple[int, str]]] = {v: [] for v in q.vertices}
    for idx, (_, s, t) in enumerate(arrows):
        edges[s].append((idx, t))
        edges[t].append((idx, s))
    start = q.vertices[0]
    used: set[int] = set()
    v, p, qq = start, 0, 0
    while True:
        nxt = next(((idx, w) for idx, w in edges[v] if idx not in used), None)
        if nxt is None:
            return None
        idx, w = nxt
        used.add(idx)
        _, s, _ = arrows[idx]
        if s == v:
            p += 1
        else:
            qq += 1
        v = w
        if v == start and len(used) == len(arrows):
            break
        if len(used) > len(arrows):
            return None
    if p < qq:
        p, qq = qq, p
    return p, qq
