import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallq.errors import InputError
from hallq.quiver import (
    Quiver,
    cartan_matrix,
    euler_form,
    recognize_tame,
    symmetric_form,
    symmetric_form_raw,
)

from helpers import quiver


def test_construction_validation():
    with pytest.raises(InputError):
        Quiver(["1", "1"], [])
    with pytest.raises(InputError):
        Quiver(["1", "2"], [["a", "1", "3"]])
    with pytest.raises(InputError):
        Quiver(["1", "2"], [["a", "1", "2"], ["a", "2", "1"]])
    with pytest.raises(InputError):  # oriented cycle
        Quiver(["1", "2"], [["a", "1", "2"], ["b", "2", "1"]])
    with pytest.raises(InputError):  # loop
        Quiver(["1"], [["a", "1", "1"]])


def test_euler_form_examples():
    kr, a2 = quiver("kr"), quiver("a2")
    assert euler_form(kr, kr.dim((1, 0)), kr.dim((0, 1))) == -2
    assert euler_form(a2, a2.dim((1, 0)), a2.dim((0, 1))) == -1
    assert euler_form(a2, a2.dim((2, 1)), a2.dim((0, 0))) == 0


@settings(max_examples=100, deadline=None)
@given(
    a=st.tuples(*[st.integers(0, 4)] * 3),
    b=st.tuples(*[st.integers(0, 4)] * 3),
    c=st.tuples(*[st.integers(0, 4)] * 3),
)
def test_euler_bilinear_symmetric(a, b, c):
    q = quiver("a21")
    da, db, dc = q.dim(a), q.dim(b), q.dim(c)
    assert euler_form(q, da + db, dc) == euler_form(q, da, dc) + euler_form(q, db, dc)
    assert euler_form(q, da, db + dc) == euler_form(q, da, db) + euler_form(q, da, dc)
    assert symmetric_form(q, da, db) == symmetric_form(q, db, da)
    assert symmetric_form_raw(q, a, b) == symmetric_form(q, da, db)


def test_cartan_matrix():
    kr = quiver("kr")
    C = cartan_matrix(kr)
    assert C.tolist() == [[2, -2], [-2, 2]]
    for name in ("a2", "a3", "a21", "d4", "e6"):
        q = quiver(name)
        C = cartan_matrix(q)
        assert (C == C.T).all()
        assert all(C[i, i] == 2 for i in range(q.n))


@pytest.mark.parametrize(
    "name,family,l,periods,delta",
    [
        ("a21", "A", 1, (2,), (1, 1, 1)),
        ("kr", "A", 0, (), (1, 1)),
        ("d4", "D", 3, (2, 2, 2), (1, 1, 2, 1, 1)),
        ("e6", "E6", 3, (3, 3, 2), (1, 2, 3, 2, 1, 2, 1)),
    ],
)
def test_recognize_tame(name, family, l, periods, delta):
    t = recognize_tame(quiver(name))
    assert t is not None
    assert t.family == family
    assert t.tube_count == l
    assert t.periods == periods
    assert t.delta.entries == delta
    assert t.delta[t.extending_vertex] == 1
    # Cartan annihilates delta (radical statement)
    C = cartan_matrix(quiver(name))
    assert not (C @ np.array(t.delta.entries)).any()
    # period identity: sum (r_i - 1) = |I| - 2
    assert sum(r - 1 for r in t.periods) == quiver(name).n - 2


def test_dynkin_not_tame():
    assert recognize_tame(quiver("a2")) is None
    assert recognize_tame(quiver("a3")) is None


def test_recognize_d5_two_branch_vertices():
    d5 = Quiver(
        ["1", "2", "3", "4", "5", "6"],
        [
            ["a", "1", "3"],
            ["b", "2", "3"],
            ["c", "3", "4"],
            ["d", "5", "4"],
            ["e", "6", "4"],
        ],
    )
    t = recognize_tame(d5)
    assert t is not None and t.family == "D" and t.params == (5,)
    assert t.periods == (3, 2, 2)
    assert t.delta.entries == (1, 1, 2, 2, 1, 1)


def test_recognize_requires_connected():
    disconnected = Quiver(["1", "2", "3"], [["a", "1", "2"]])
    with pytest.raises(InputError):
        recognize_tame(disconnected)


def test_tame_orientation_counting():
    # A~(2,2): cycle of 4 with alternating orientation has two period-2 tubes
    z4 = Quiver(
        ["1", "2", "3", "4"],
        [["a", "1", "2"], ["b", "3", "2"], ["c", "3", "4"], ["d", "1", "4"]],
    )
    t = recognize_tame(z4)
    assert t.family == "A" and t.params == (2, 2)
    assert t.periods == (2, 2)


def test_quiver_json_roundtrip(tmp_path):
    q = quiver("a21")
    path = tmp_path / "q.json"
    path.write_text(__import__("json").dumps(q.to_json()))
    q2 = Quiver.load(path)
    assert q2 == q
    with pytest.raises(InputError):
        Quiver.load(tmp_path / "missing.json")


def test_dim_vector_ops():
    q = quiver("a2")
    d = q.dim((1, 2))
    assert d.total() == 3
    assert (d + d).entries == (2, 4)
    assert (2 * d).entries == (2, 4)
    assert d["2"] == 2
    assert q.dim((2, 1)).leq(d) is False
    assert q.dim((1, 1)).leq(q.dim((1, 2)))
    with pytest.raises(InputError):
        q.dim((1,))
    with pytest.raises(InputError):
        q.dim({"1": 1})
