from fractions import Fraction

import pytest

from hallq.coeffs import QSqrt
from hallq.hopf import ExtendedAlgebra

from helpers import algebra


def ext_alg(name, q, volume="dimension"):
    return ExtendedAlgebra(algebra(name, q), volume=volume)


def small_classes(name, q, bound):
    import itertools

    cat = algebra(name, q).cat
    out = []
    for tup in itertools.product(*[range(bound + 1)] * cat.quiver.n):
        if 0 < sum(tup) <= bound:
            out.extend(cat.enumerate_classes(cat.quiver.dim(tup)))
    return out


def test_comultiply_simple():
    ext = ext_alg("a2", 2)
    S1 = ext.cat.simple_class("1")
    d = ext.comultiply(ext.u(S1))
    zero = ext.cat.zero_class()
    expect = {
        (((0, 0), S1), ((0, 0), zero)): QSqrt(2, 1),
        (((1, 0), zero), ((0, 0), S1)): QSqrt(2, 1),
    }
    assert d.terms == expect


def test_comultiply_k_grouplike():
    ext = ext_alg("a2", 2)
    dk = ext.comultiply(ext.k((2, -1)))
    assert dk.terms == {(((2, -1), ext.cat.zero_class()),) * 2: QSqrt(2, 1)}


def test_comultiply_split_class_coefficients():
    # Delta(u_{S1+S2}) at q=2 has the four decompositions with the stated
    # coefficient v^<a,b> a_a a_b g / a_lam
    ext = ext_alg("a2", 2)
    cat = ext.cat
    S1, S2 = cat.simple_class("1"), cat.simple_class("2")
    lam = S1 + S2
    d = ext.comultiply(ext.u(lam))
    assert len(d.terms) == 4
    # a_lam = (q-1)^2 = 1 at q=2; g = 1 in each direction
    key_s1s2 = (((0, 1), S1), ((0, 0), S2))  # alpha=S1, beta=S2
    coeff = d.terms[key_s1s2]
    # v^{<S1,S2>} * v^{-(S2,S1)} = v^{-1} * v^{1} = 1
    assert coeff == QSqrt(2, 1)


def test_antipode_examples():
    ext = ext_alg("a2", 2)
    cat = ext.cat
    S1 = cat.simple_class("1")
    s = ext.antipode(ext.u(S1))
    assert s.terms == {((-1, 0), S1): QSqrt(2, -1)}
    assert ext.antipode(ext.k((3, -2))) == ext.k((-3, 2))
    assert ext.antipode(ext.one()) == ext.one()


@pytest.mark.parametrize("name,q", [("a2", 2), ("kr", 2)])
def test_hopf_axiom_suite_dim3(name, q):
    ext = ext_alg(name, q)
    for lam in small_classes(name, q, 3):
        assert ext.hopf_axiom_check(lam), lam.label
        assert ext.counit_axiom_check(lam), lam.label
        assert ext.coassociativity_check(lam), lam.label


@pytest.mark.parametrize("name,q", [("a2", 2), ("a2", 3), ("kr", 2), ("kr", 3), ("a21", 2), ("a21", 3)])
def test_green_compatibility_simples(name, q):
    ext = ext_alg(name, q)
    cat = ext.cat
    for i in cat.quiver.vertices:
        for j in cat.quiver.vertices:
            assert ext.green_compatibility_check(
                cat.simple_class(i), cat.simple_class(j)
            ), (i, j)


def test_green_trivial_when_one_factor_zero():
    ext = ext_alg("a2", 2)
    cat = ext.cat
    assert ext.green_compatibility_check(cat.zero_class(), cat.simple_class("1"))


def test_pairing_values():
    ext = ext_alg("a2", 2)
    cat = ext.cat
    S1, S2 = cat.simple_class("1"), cat.simple_class("2")
    # delta_{ab} factor
    assert ext.pairing(ext.u(S1), ext.u(S2)).is_zero()
    # phi(u_i, u_i) = q/(q-1) under the dimension volume
    assert ext.pairing(ext.u(S1), ext.u(S1)) == QSqrt(2, Fraction(2, 1))
    ext3 = ext_alg("a2", 3)
    S1_3 = ext3.cat.simple_class("1")
    assert ext3.pairing(ext3.u(S1_3), ext3.u(S1_3)) == QSqrt(3, Fraction(3, 2))
    # phi(K_mu, K_nu) = v^{-(mu,nu)}
    from hallq.quiver import symmetric_form_raw

    mu, nu = (1, 0), (0, 1)
    expo = -symmetric_form_raw(cat.quiver, mu, nu)
    assert ext.pairing(ext.k(mu), ext.k(nu)) == QSqrt.v_power(2, expo)


def test_pairing_orbit_alternative_differs():
    ext_dim = ext_alg("a2", 2, "dimension")
    ext_orb = ext_alg("a2", 2, "orbit")
    S1 = ext_dim.cat.simple_class("1")
    a = ext_dim.pairing(ext_dim.u(S1), ext_dim.u(S1))
    b = ext_orb.pairing(ext_orb.u(S1), ext_orb.u(S1))
    assert a != b
    # the dimension volume is the one satisfying the double-relation
    # normalization phi(u_i, u_i) = 1/(1 - v^-2)
    v = QSqrt.v_power(2, 1)
    one = QSqrt(2, 1)
    assert a == one / (one - (one / (v * v)))


def test_orthogonal_complement_dimensions():
    ext = ext_alg("a21", 2)
    quiv = ext.cat.quiver
    # degree < delta: empty
    assert ext.orthogonal_complement(quiv.dim((1, 1, 0))) == []
    # degree delta: dimension l = 1
    comp = ext.orthogonal_complement(quiv.dim((1, 1, 1)))
    assert len(comp) == 1
    # the complement element pairs to zero against composition words
    alg = ext.halg
    words = alg.word_span(alg.composition_generators(), quiv.dim((1, 1, 1)))
    for w in words:
        assert ext.pairing_hall(comp[0], w).is_zero()
    # and is inside the rational piece support
    extkr = ext_alg("kr", 2)
    assert extkr.orthogonal_complement(extkr.cat.quiver.dim((1, 1))) == []


def test_complement_element_is_central_in_rational_half():
    """Stretch check: the degree-delta complement element commutes with
    every rational generator (centrality of the imaginary layer)."""
    alg = algebra("a21", 2)
    ext = ext_alg("a21", 2)
    delta = alg.cat.tame.delta
    (x,) = ext.orthogonal_complement(delta)
    for g in alg.rational_generators(delta):
        assert alg.product(x, g) == alg.product(g, x)


def test_extended_multiplication_k_relation():
    # K_mu u_alpha = v^{(mu, alpha)} u_alpha K_mu
    ext = ext_alg("a2", 3)
    cat = ext.cat
    S1 = cat.simple_class("1")
    mu = (1, 1)
    from hallq.quiver import symmetric_form_raw

    lhs = ext.multiply(ext.k(mu), ext.u(S1))
    rhs = ext.multiply(ext.u(S1), ext.k(mu)).scale(
        QSqrt.v_power(3, symmetric_form_raw(cat.quiver, mu, S1.dim.entries))
    )
    assert lhs == rhs
