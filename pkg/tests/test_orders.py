import pytest

from hallq.orders import DegenerationOrders
from hallq.quiver import euler_form

from helpers import class_by_label, classes_at, engine


def orders(name, q):
    return DegenerationOrders(engine(name, q))


def test_ext_leq_examples():
    o = orders("a2", 2)
    cat = o.cat
    S1, S2 = cat.simple_class("1"), cat.simple_class("2")
    P1 = class_by_label("a2", 2, (1, 1), "P1")
    split = S1 + S2
    ok, wit = o.ext_leq(P1, P1)
    assert ok and wit == []
    ok, wit = o.ext_leq(split, P1)
    assert ok and len(wit) == 1
    assert o.verify_witness(P1, wit)
    ok, _ = o.ext_leq(P1, split)
    assert not ok
    # different dims
    ok, _ = o.ext_leq(S1, P1)
    assert not ok


def test_hom_leq_examples():
    o = orders("a2", 2)
    cat = o.cat
    S1, S2 = cat.simple_class("1"), cat.simple_class("2")
    P1 = class_by_label("a2", 2, (1, 1), "P1")
    split = S1 + S2
    assert o.hom_leq(P1, P1)
    assert o.hom_leq(split, P1)
    assert not o.hom_leq(P1, split)
    assert not o.hom_leq(S1, P1)


@pytest.mark.parametrize(
    "name,dims,q,npairs",
    [("a2", (1, 1), 2, 4), ("kr", (1, 1), 2, 16), ("kr", (2, 2), 2, 256)],
)
def test_orders_agree(name, dims, q, npairs):
    o = orders(name, q)
    report = o.orders_agree(o.cat.quiver.dim(dims))
    assert report["agree"], report["disagreements"]
    assert len(report["pairs"]) == npairs


def test_ext_implies_hom_and_orbit_decrease():
    for name, dims, q in [("a2", (1, 1), 2), ("kr", (1, 1), 2), ("kr", (2, 2), 2)]:
        o = orders(name, q)
        classes = classes_at(name, q, dims)
        for N in classes:
            for M in classes:
                ok, _ = o.ext_leq(N, M)
                if ok:
                    assert o.hom_leq(N, M)
                    if N != M:
                        assert N.orbit_dim() < M.orbit_dim()


def test_generic_extension_is_ext_maximum():
    """Where a dense orbit exists the generic extension is the unique
    ext-maximum; where no dense orbit exists (imaginary-root families,
    e.g. Kronecker S1 by S2) the non-uniqueness error is raised loudly."""
    from hallq.errors import ValidationFailure

    defined = 0
    for name, q in [("a2", 2), ("kr", 2)]:
        o = orders(name, q)
        eng = o.engine
        cat = o.cat
        simples = [cat.simple_class(v) for v in cat.quiver.vertices]
        for M in simples:
            for N in simples:
                try:
                    gen = eng.generic_extension(M, N)
                except ValidationFailure:
                    continue
                defined += 1
                for L, _g in eng.extension_targets(M, N):
                    ok, _ = o.ext_leq(L, gen)
                    assert ok, (M.label, N.label, L.label)
    assert defined >= 5


def test_generic_extension_nonunique_aborts_loudly():
    from hallq.errors import ValidationFailure

    eng = engine("kr", 2)
    cat = eng.cat
    S1, S2 = cat.simple_class("1"), cat.simple_class("2")
    with pytest.raises(ValidationFailure):
        eng.generic_extension(S1, S2)  # a P^1 family of maximal orbits


def test_reineke_codimension_window():
    """codim(O_M * O_N) = codim O_M + codim O_N - <dim N, dim M> + r with
    0 <= r <= dim Hom(N, M), on pairs where a dense orbit pins down the
    extension-set dimension."""
    from hallq.errors import ValidationFailure

    checked = 0
    for name, q in [("a2", 2), ("kr", 2), ("a21", 2)]:
        eng = engine(name, q)
        cat = eng.cat
        quiv = cat.quiver

        def e_dim(d):
            return sum(d[t] * d[s] for _, s, t in quiv.arrows)

        simples = [cat.simple_class(v) for v in quiv.vertices]
        for M in simples:
            for N in simples:
                try:
                    gen = eng.generic_extension(M, N)
                except ValidationFailure:
                    continue
                codim_star = e_dim(M.dim + N.dim) - gen.orbit_dim()
                codim_m = e_dim(M.dim) - M.orbit_dim()
                codim_n = e_dim(N.dim) - N.orbit_dim()
                r = codim_star - (
                    codim_m + codim_n - euler_form(quiv, N.dim, M.dim)
                )
                bound = cat.hom_dim_reps(N.rep, M.rep)
                assert 0 <= r <= bound, (name, q, M.label, N.label, r, bound)
                checked += 1
    assert checked >= 10


def test_single_class_dimension_trivially_agrees():
    o = orders("a2", 2)
    report = o.orders_agree(o.cat.quiver.dim((2, 0)))
    assert report["agree"] and len(report["pairs"]) == 1
