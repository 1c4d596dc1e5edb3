import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallq.errors import InputError
from hallq.gf import GF, SubfieldLayout, prime_power

FIELD_SIZES = [2, 3, 4, 5, 7, 8, 9, 11, 13]


def test_prime_power_parsing():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    with pytest.raises(InputError):
        prime_power(6)
    with pytest.raises(InputError):
        prime_power(1)


@pytest.mark.parametrize("q", FIELD_SIZES)
def test_generator_has_full_order(q):
    gf = GF(q)
    x, seen = 1, set()
    for _ in range(q - 1):
        seen.add(x)
        x = gf.mulf(x, gf.generator)
    assert len(seen) == q - 1
    assert x == 1


@settings(max_examples=300, deadline=None)
@given(
    q=st.sampled_from(FIELD_SIZES),
    data=st.data(),
)
def test_field_axioms(q, data):
    gf = GF(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    c = data.draw(st.integers(0, q - 1))
    assert gf.addf(a, b) == gf.addf(b, a)
    assert gf.mulf(a, b) == gf.mulf(b, a)
    assert gf.addf(gf.addf(a, b), c) == gf.addf(a, gf.addf(b, c))
    assert gf.mulf(gf.mulf(a, b), c) == gf.mulf(a, gf.mulf(b, c))
    assert gf.mulf(a, gf.addf(b, c)) == gf.addf(gf.mulf(a, b), gf.mulf(a, c))
    assert gf.addf(a, gf.negf(a)) == 0
    if a:
        assert gf.mulf(a, gf.invf(a)) == 1


@pytest.mark.parametrize("base,ext", [(2, 4), (2, 8), (2, 16), (3, 9), (4, 16), (5, 25)])
def test_embeddings_are_field_maps(base, ext):
    K, E = GF(base), GF(ext)
    emb = K.embedding_into(E)
    assert emb[0] == 0 and emb[1] == 1
    for x in range(base):
        for y in range(base):
            assert emb[K.addf(x, y)] == E.addf(int(emb[x]), int(emb[y]))
            assert emb[K.mulf(x, y)] == E.mulf(int(emb[x]), int(emb[y]))


def test_frobenius_fixes_prime_field():
    gf = GF(9)
    for a in range(3):
        assert gf.frobenius(a) == a  # F_3 inside F_9 under x -> x^3
    # frobenius is a field automorphism
    for a in range(9):
        for b in range(9):
            assert gf.frobenius(gf.mulf(a, b)) == gf.mulf(gf.frobenius(a), gf.frobenius(b))


@pytest.mark.parametrize("base,ext", [(2, 4), (2, 8), (3, 9), (4, 16)])
def test_subfield_layout(base, ext):
    K, E = GF(base), GF(ext)
    lay = SubfieldLayout(K, E)
    assert lay.m == E.deg // K.deg
    for a in range(E.q):
        Ma = lay.mult_matrix(a)
        for z in range(E.q):
            lhs = lay.coords[E.mulf(a, z)]
            rhs = []
            for i in range(lay.m):
                acc = 0
                for j in range(lay.m):
                    acc = K.addf(acc, K.mulf(int(Ma[i, j]), int(lay.coords[z][j])))
                rhs.append(acc)
            assert list(lhs) == rhs
