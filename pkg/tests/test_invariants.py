import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import brute_jones, torus_alexander_closed_form
from tlinks.braid import BraidWord, torus_braid
from tlinks.invariants import (
    _burau_det_minus_identity,
    _kronecker_burau_det,
    alexander,
    bundle,
    euler_char,
    jones,
    reduced_burau,
    torus_reference,
)
from tlinks.laurent import LaurentPoly, PolyMatrix
from tlinks.tlink import FullTwistForm, absorb_strands

TREFOIL = BraidWord(2, (1, 1, 1))
UNKNOT = BraidWord(2, (1,))


@st.composite
def words(draw, max_strands=4, max_letters=12):
    n = draw(st.integers(min_value=2, max_value=max_strands))
    k = draw(st.integers(min_value=0, max_value=max_letters))
    letters = tuple(
        draw(st.integers(min_value=1, max_value=n - 1)) * (1 if draw(st.booleans()) else -1)
        for _ in range(k)
    )
    return BraidWord(n, letters)


def test_reduced_burau_examples():
    assert reduced_burau(BraidWord(4, ())) == PolyMatrix.identity(3)
    assert reduced_burau(UNKNOT).entries[0][0] == LaurentPoly.term(-1, 1)
    assert reduced_burau(TREFOIL).entries[0][0] == LaurentPoly.term(-1, 3)


def test_reduced_burau_is_a_representation():
    for n, u, v in [
        (4, (1, 2, 1), (2, 1, 2)),
        (4, (2, 3, 2), (3, 2, 3)),
        (4, (1, 3), (3, 1)),
        (5, (2, 4), (4, 2)),
    ]:
        assert reduced_burau(BraidWord(n, u)) == reduced_burau(BraidWord(n, v))
    for n in range(2, 6):
        for i in range(1, n):
            assert reduced_burau(BraidWord(n, (i, -i))) == PolyMatrix.identity(n - 1)


def test_alexander_examples():
    assert alexander(TREFOIL) == LaurentPoly({0: 1, 1: -1, 2: 1})
    assert alexander(UNKNOT) == LaurentPoly.one()
    assert alexander(torus_braid(5, 2)) == LaurentPoly({0: 1, 1: -1, 2: 1, 3: -1, 4: 1})
    assert alexander(BraidWord(1, ())) == LaurentPoly.one()
    # split closures have vanishing Alexander polynomial
    assert alexander(BraidWord(2, ())).is_zero


def test_alexander_closed_form_cross_check():
    for p, q in [(3, 2), (5, 2), (5, 3), (7, 4)]:
        assert alexander(torus_braid(p, q)) == torus_alexander_closed_form(p, q)


def test_alexander_at_one_is_a_unit_for_knots():
    for w in [TREFOIL, torus_braid(5, 2), torus_braid(7, 3), torus_braid(5, 4)]:
        assert w.component_count() == 1
        assert abs(alexander(w).evaluate(1)) == 1


def test_kronecker_path_matches_generic_path():
    random.seed(20240209)
    for _ in range(25):
        n = random.randint(2, 6)
        length = random.randint(30, 50)
        letters = tuple(random.randint(1, n - 1) for _ in range(length))
        w = BraidWord(n, letters)
        assert _kronecker_burau_det(w) == _burau_det_minus_identity(w)


def test_jones_examples():
    assert jones(UNKNOT) == LaurentPoly.one()
    assert jones(BraidWord(1, ())) == LaurentPoly.one()
    # right trefoil: t + t^3 - t^4 (quarter exponents 4, 12, -16)
    expected = LaurentPoly({4: 1, 12: 1, 16: -1})
    assert jones(TREFOIL) == expected
    assert brute_jones(TREFOIL) == expected


def test_jones_guard():
    assert jones(TREFOIL, guard=2) is None
    assert jones(TREFOIL, guard=3) is not None


def test_jones_matches_brute_enumeration():
    random.seed(99)
    for _ in range(25):
        n = random.randint(2, 4)
        length = random.randint(0, 8)
        letters = tuple(
            random.choice((1, -1)) * random.randint(1, n - 1) for _ in range(length)
        )
        w = BraidWord(n, letters)
        assert jones(w, guard=20) == brute_jones(w)


def test_jones_at_one():
    for w in [UNKNOT, TREFOIL, torus_braid(4, 2), torus_braid(6, 3), BraidWord(3, ())]:
        value = jones(w, guard=30).evaluate(1)
        assert value == (-2) ** (w.component_count() - 1)


def test_euler_char():
    assert euler_char(torus_braid(3, 2)) == -1  # 2 + 3 - 6
    assert euler_char(BraidWord(1, ())) == 1
    for p in range(2, 10):
        for q in range(2, p + 1):
            assert euler_char(torus_braid(p, q)) == p + q - p * q
    with pytest.raises(ValueError):
        euler_char(BraidWord(2, (-1,)))


def test_euler_char_constant_along_trace():
    trace = absorb_strands(FullTwistForm(((3, 1),), (5, 2)))
    values = {euler_char(s) for s in trace.steps}
    assert values == {-9}


def test_bundle_examples():
    b = bundle(TREFOIL)
    assert (b.components, b.euler_char, b.braid_index) == (1, -1, 2)
    assert b.alexander == LaurentPoly({0: 1, 1: -1, 2: 1})
    assert bundle(torus_braid(4, 2)).components == 2
    split = bundle(BraidWord(2, ()))
    assert split.components == 2 and split.jones is not None
    mixed = bundle(BraidWord(3, (1, -2)))
    assert mixed.euler_char is None and mixed.braid_index is None


def test_torus_reference_examples():
    ref = torus_reference(3, 2)
    assert ref.alexander == LaurentPoly({0: 1, 1: -1, 2: 1})
    assert ref.braid_index == 2
    unknot_ref = torus_reference(9, 1)
    assert (unknot_ref.components, unknot_ref.euler_char) == (1, 1)
    assert unknot_ref.alexander == LaurentPoly.one()
    assert unknot_ref.jones == LaurentPoly.one()
    assert torus_reference(4, 2).components == 2
    with pytest.raises(ValueError):
        torus_reference(2, 3)


@settings(max_examples=60, deadline=None)
@given(words(), words(max_letters=4))
def test_alexander_jones_markov_invariance(w, g):
    g = BraidWord(w.strands, tuple(e for e in g.letters if abs(e) < w.strands))
    conj = w.conjugated_by(g)
    stab = w.stabilized()
    alex = alexander(w)
    assert alexander(conj) == alex
    assert alexander(stab) == alex
    jn = jones(w, guard=40)
    assert jones(stab, guard=40) == jn
    assert jones(conj, guard=40) == jn
