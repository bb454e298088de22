from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import relation_closure
from tlinks.braid import BraidWord, torus_braid
from tlinks.garside import (
    braid_index_by_full_twist,
    contains_full_twist,
    delta_word,
    finishing_set,
    infimum,
    normal_form,
    starting_set,
)


@st.composite
def positive_words(draw, max_strands=5, max_letters=10):
    n = draw(st.integers(min_value=2, max_value=max_strands))
    k = draw(st.integers(min_value=0, max_value=max_letters))
    letters = tuple(draw(st.integers(min_value=1, max_value=n - 1)) for _ in range(k))
    return BraidWord(n, letters)


def test_delta_word():
    assert delta_word(2).letters == (1,)
    assert delta_word(3).letters == (1, 2, 1)
    d4 = delta_word(4)
    assert len(d4.letters) == 6
    assert d4.permutation().images == (4, 3, 2, 1)
    with pytest.raises(ValueError):
        delta_word(1)


def test_normal_form_examples():
    nf = normal_form(BraidWord(3, (1, 2, 1)))
    assert (nf.infimum, nf.factors) == (1, ())
    assert normal_form(BraidWord(3, (2, 1, 2))) == nf
    nf2 = normal_form(BraidWord(3, (1, 1)))
    assert nf2.infimum == 0
    assert nf2.factor_words() == [(1,), (1,)]


def test_normal_form_rejects_negative_letters():
    with pytest.raises(ValueError):
        normal_form(BraidWord(3, (1, -2)))


def test_infimum_examples():
    d = delta_word(3)
    assert infimum(d.concat(d)) == 2
    assert infimum(BraidWord(3, (1,))) == 0
    assert infimum(torus_braid(5, 3)) >= 2  # (s1 s2)^3 is the full twist


def test_contains_full_twist():
    assert contains_full_twist(torus_braid(3, 3))
    assert not contains_full_twist(BraidWord(3, (1, 2)))
    assert contains_full_twist(BraidWord(1, ()))


def test_braid_index_by_full_twist():
    assert braid_index_by_full_twist(torus_braid(5, 3)) == 3
    assert braid_index_by_full_twist(BraidWord(3, (1,))) is None
    assert braid_index_by_full_twist(BraidWord(1, ())) == 1
    assert braid_index_by_full_twist(BraidWord(2, (1, 1, 1))) == 2


def test_delta_squared_normal_forms():
    for n in range(2, 7):
        d2 = delta_word(n).concat(delta_word(n))
        nf = normal_form(d2)
        assert (nf.infimum, nf.factors) == (2, ())


def test_left_weighted_condition_holds_structurally():
    words = [
        torus_braid(7, 4),
        BraidWord(4, (1, 1, 2, 3, 2, 1, 1, 3)),
        BraidWord(5, (4, 3, 2, 1, 2, 3, 4, 1, 1)),
    ]
    for w in words:
        nf = normal_form(w)
        for a, b in zip(nf.factors, nf.factors[1:]):
            assert starting_set(b) <= finishing_set(a), (w, nf)


@settings(max_examples=80, deadline=None)
@given(positive_words(max_strands=4, max_letters=8))
def test_prepending_full_twist_shifts_infimum(w):
    d2 = delta_word(w.strands).concat(delta_word(w.strands))
    assert infimum(d2.concat(w)) == infimum(w) + 2


@settings(max_examples=80, deadline=None)
@given(positive_words(max_strands=4, max_letters=8))
def test_normal_form_product_reconstructs_word(w):
    nf = normal_form(w)
    letters = tuple(delta_word(w.strands).letters) * nf.infimum if w.strands > 1 else ()
    for fw in nf.factor_words():
        letters += fw
    # same positive braid element: identical normal forms
    assert normal_form(BraidWord(w.strands, letters)) == nf
    # every adjacent pair of the produced form is left-weighted
    for a, b in zip(nf.factors, nf.factors[1:]):
        assert starting_set(b) <= finishing_set(a)
    # no factor is trivial or the half twist
    n = w.strands
    for f in nf.factors:
        assert not f.is_identity()
        assert f.images != tuple(range(n, 0, -1))


def test_word_problem_smoke_n3():
    # complete invariance on short words over 3 strands
    n = 3
    by_class: dict[frozenset, object] = {}
    for length in range(0, 5):
        for letters in product(range(1, n), repeat=length):
            cls = relation_closure(letters, n)
            nf = normal_form(BraidWord(n, letters))
            if cls in by_class:
                assert by_class[cls] == nf
            else:
                assert nf not in by_class.values()
                by_class[cls] = nf
