"""Exact arithmetic in small finite fields GF(q), q = p**deg <= 256.

Elements are encoded as integers 0..q-1.  For prime fields the code is
the residue itself; for extension fields the base-p digits of the code
are the coefficients of a polynomial in the canonical generator, taken
modulo a fixed defining polynomial.  The defining polynomial is the
lexicographically smallest monic *primitive* polynomial of the right
degree, so the construction is deterministic and the canonical
generator x always generates the multiplicative group.

All arithmetic is table-driven (numpy uint8 tables), which is what the
matrix kernels consume.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import InputError

MAX_Q = 256


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, adequate for the tiny integers here."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, deg) with q = p**deg, or raise InputError."""
    if q < 2:
        raise InputError(f"q must be >= 2, got {q}")
    fac = factorize(q)
    if len(fac) != 1:
        raise InputError(f"q must be a prime power, got {q} = {fac}")
    ((p, deg),) = fac.items()
    return p, deg


# -- dense polynomial helpers over F_p (coefficient lists, low degree first) --


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo monic f
    n = len(f) - 1
    for i in range(len(prod) - 1, n - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(n):
                prod[i - n + j] = (prod[i - n + j] - c * f[j]) % p
    return _poly_trim(prod[:n])


def _poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _is_primitive_poly(f: list[int], p: int) -> bool:
    """Monic f of degree n is primitive iff x has order p**n - 1 mod f.

    Primitivity implies irreducibility, so a single test suffices.
    """
    n = len(f) - 1
    order = p**n - 1
    x = [0, 1]
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    for ell in factorize(order):
        if _poly_powmod(x, order // ell, f, p) == [1]:
            return False
    return True


def _defining_poly(p: int, deg: int) -> list[int]:
    """Lex-smallest monic primitive polynomial of degree deg over F_p."""
    if deg == 1:
        for g in range(1, p):  # smallest primitive root
            ok = all(pow(g, (p - 1) // ell, p) != 1 for ell in factorize(p - 1)) if p > 2 else True
            if ok:
                return [(-g) % p, 1]
    for code in range(p**deg):
        coeffs = [(code // p**i) % p for i in range(deg)] + [1]
        if _is_primitive_poly(coeffs, p):
            return coeffs
    raise AssertionError(f"no primitive polynomial found for p={p}, deg={deg}")


class GF:
    """A concrete finite field with table-driven arithmetic.

    Attributes:
        q, p, deg: the order, characteristic and extension degree.
        poly: defining polynomial coefficients (low degree first), monic.
        add, mul: (q, q) uint8 tables; neg, inv: (q,) uint8 tables
            (inv[0] is a 0 sentinel).
        generator: code of a fixed generator of the multiplicative group.
    """

    _instances: dict[int, "GF"] = {}

    def __new__(cls, q: int):
        if q in cls._instances:
            return cls._instances[q]
        self = super().__new__(cls)
        cls._instances[q] = self
        return self

    def __init__(self, q: int):
        if getattr(self, "q", None) == q:
            return  # interned instance already built
        p, deg = prime_power(q)
        if q > MAX_Q:
            raise InputError(f"q={q} exceeds the supported bound {MAX_Q}")
        self.q = q
        self.p = p
        self.deg = deg
        self.poly = tuple(_defining_poly(p, deg))
        self._build_tables()
        self.generator = p if deg > 1 else (-self.poly[0]) % p

    def _build_tables(self) -> None:
        q, p, deg = self.q, self.p, self.deg
        if deg == 1:
            r = np.arange(q, dtype=np.int64)
            self.add = ((r[:, None] + r[None, :]) % p).astype(np.uint8)
            self.mul = ((r[:, None] * r[None, :]) % p).astype(np.uint8)
            self.neg = ((-r) % p).astype(np.uint8)
        else:
            f = list(self.poly)
            digits = [[(c // p**i) % p for i in range(deg)] for c in range(q)]
            add = np.zeros((q, q), dtype=np.uint8)
            mul = np.zeros((q, q), dtype=np.uint8)
            for a in range(q):
                da = digits[a]
                for b in range(a, q):
                    db = digits[b]
                    s = sum((da[i] + db[i]) % p * p**i for i in range(deg))
                    add[a, b] = add[b, a] = s
                    pr = _poly_mulmod(_poly_trim(list(da)), _poly_trim(list(db)), f, p)
                    m = sum(c * p**i for i, c in enumerate(pr))
                    mul[a, b] = mul[b, a] = m
            self.add = add
            self.mul = mul
            neg = np.zeros(q, dtype=np.uint8)
            for a in range(q):
                neg[a] = sum((-d) % p * p**i for i, d in enumerate(digits[a]))
            self.neg = neg
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        self.inv = inv

    # -- scalar helpers (ints in, ints out) --

    def addf(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def mulf(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def negf(self, a: int) -> int:
        return int(self.neg[a])

    def invf(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.inv[a])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.invf(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            e >>= 1
        return result

    def frobenius(self, a: int, k: int = 1) -> int:
        """a ** p**k (the k-fold arithmetic Frobenius)."""
        return self.pow(a, self.p**k % (self.q - 1) if self.q > 2 else 1) if a else 0

    def element_digits(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.deg))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __reduce__(self):
        return (GF, (self.q,))

    # -- subfield embeddings --

    @functools.lru_cache(maxsize=None)
    def embedding_into(self, ext: "GF") -> np.ndarray:
        """Code table of the canonical embedding GF(self.q) -> GF(ext.q).

        The image of the generator is the lex-smallest root of this
        field's defining polynomial in the extension, which makes the
        embedding deterministic.  Requires self.q**k == ext.q for some k.
        """
        if ext.p != self.p or ext.deg % self.deg != 0:
            raise InputError(f"no embedding GF({self.q}) -> GF({ext.q})")
        if ext.q == self.q:
            return np.arange(self.q, dtype=np.uint8)
        table = np.zeros(self.q, dtype=np.uint8)
        if self.deg == 1:
            # constant polynomials: code c < p encodes c * 1 in both fields
            table[: self.p] = np.arange(self.p, dtype=np.uint8)
            return table
        root = None
        for z in range(ext.q):
            acc, zp = 0, 1
            for c in self.poly:
                acc = ext.addf(acc, ext.mulf(c % self.p, zp))
                zp = ext.mulf(zp, z)
            if acc == 0:
                root = z
                break
        assert root is not None, "defining polynomial must split in the extension"
        powers = [1]
        for _ in range(1, self.deg):
            powers.append(ext.mulf(powers[-1], root))
        for a in range(self.q):
            acc = 0
            for digit, zp in zip(self.element_digits(a), powers):
                acc = ext.addf(acc, ext.mulf(digit, zp))
            table[a] = acc
        return table


class SubfieldLayout:
    """GF(q**m) as an m-dimensional vector space over GF(q).

    Provides coordinates with respect to the power basis of the
    extension's canonical generator, and the multiplication matrix of
    any element (its left-multiplication action written over GF(q)).
    Used for restriction of scalars of representations.
    """

    def __init__(self, base: GF, ext: GF):
        if ext.deg % base.deg != 0 or ext.p != base.p:
            raise InputError(f"GF({ext.q}) is not an extension of GF({base.q})")
        self.base = base
        self.ext = ext
        self.m = ext.deg // base.deg
        self.embed = base.embedding_into(ext)
        gamma = ext.generator
        basis = [1]
        for _ in range(1, self.m):
            basis.append(ext.mulf(basis[-1], gamma))
        self.basis = basis
        # coordinate table: enumerate all base**m combinations once
        coords = np.zeros((ext.q, self.m), dtype=np.uint8)
        seen = np.zeros(ext.q, dtype=bool)
        for code in range(base.q**self.m):
            cs = [(code // base.q**i) % base.q for i in range(self.m)]
            acc = 0
            for c, b in zip(cs, basis):
                acc = ext.addf(acc, ext.mulf(int(self.embed[c]), b))
            assert not seen[acc], "power basis failed to be a basis"
            seen[acc] = True
            coords[acc] = cs
        assert seen.all()
        self.coords = coords

    def mult_matrix(self, a: int) -> np.ndarray:
        """(m, m) GF(base) matrix of x -> a*x in the power basis."""
        cols = []
        for b in self.basis:
            cols.append(self.coords[self.ext.mulf(a, b)])
        return np.stack(cols, axis=1).astype(np.uint8)

    def frobenius_orbit(self, codes: np.ndarray) -> np.ndarray:
        """Apply x -> x**(base.q) entrywise (one Frobenius step over base)."""
        flat = codes.reshape(-1)
        out = np.array([self.ext.pow(int(a), self.base.q) for a in flat], dtype=np.uint8)
        return out.reshape(codes.shape)
