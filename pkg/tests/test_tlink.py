import pytest

from tlinks.braid import BraidWord
from tlinks.invariants import alexander, euler_char
from tlinks.tlink import (
    FullTwistForm,
    TLinkParseError,
    TLinkSpec,
    absorb_strands,
    flip_base,
    markov_reduce,
    parse_tlink,
    remove_trailing_twists,
    render_tlink,
    standard_braid,
    to_full_twist_form,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        TLinkSpec(((5, 2), (3, 3)))
    with pytest.raises(ValueError):
        TLinkSpec(((1, 2),))
    with pytest.raises(ValueError):
        TLinkSpec(((2, 0),))


def test_standard_braid():
    assert standard_braid(TLinkSpec(((2, 3),))) == BraidWord(2, (1, 1, 1))
    w = standard_braid(TLinkSpec(((3, 2), (5, 2))))
    assert w.strands == 5 and len(w.letters) == 12
    assert w.letters == (1, 2, 1, 2, 1, 2, 3, 4, 1, 2, 3, 4)
    assert standard_braid(TLinkSpec(((2, 1),))) == BraidWord(2, (1,))


def test_to_full_twist_form():
    f = to_full_twist_form(TLinkSpec(((3, 3), (5, 2))))
    assert f is not None and f.twist_pairs == ((3, 1),) and f.base == (5, 2)
    assert to_full_twist_form(TLinkSpec(((3, 4), (5, 2)))) is None
    f2 = to_full_twist_form(TLinkSpec(((2, 2), (3, 6), (7, 4))))
    assert f2 is not None and f2.twist_pairs == ((2, 1), (3, 2)) and f2.base == (7, 4)
    # a_i = q is rejected by the constraint block
    assert to_full_twist_form(TLinkSpec(((2, 2), (5, 2)))) is None
    # a single pair is a plain torus link, not the constrained shape
    assert to_full_twist_form(TLinkSpec(((5, 3),))) is None


def test_full_twist_form_validation():
    with pytest.raises(ValueError):
        FullTwistForm(((3, 1),), (5, 1))  # q must exceed 1
    with pytest.raises(ValueError):
        FullTwistForm(((3, 1),), (3, 2))  # a_n < p fails
    with pytest.raises(ValueError):
        FullTwistForm(((2, 1),), (5, 2))  # a_i = q


def test_flip_base():
    spec = flip_base(FullTwistForm(((2, 1),), (7, 5)))
    assert spec.pairs == ((2, 2), (5, 7))
    spec2 = flip_base(FullTwistForm(((2, 1),), (5, 3)))
    assert spec2.pairs == ((2, 2), (3, 5))
    with pytest.raises(ValueError):
        flip_base(FullTwistForm(((3, 1),), (5, 2)))


def test_absorb_strands_trace():
    f = FullTwistForm(((3, 1),), (5, 2))
    trace = absorb_strands(f)
    assert [s.strands for s in trace.steps] == [5, 4, 3]
    assert trace.final.letters == (2, 2) + (1, 2) * 5
    # one crossing absorbed per strand, so chi is constant along the trace
    assert len({euler_char(s) for s in trace.steps}) == 1
    assert len({s.component_count() for s in trace.steps}) == 1
    assert len({alexander(s) for s in trace.steps}) == 1
    with pytest.raises(ValueError):
        absorb_strands(FullTwistForm(((2, 1),), (5, 3)))


def test_absorb_letter_count_identity():
    # q(p-1) + sum s_i a_i (a_i - 1) letters at the start, one fewer per step
    f = FullTwistForm(((2, 1), (4, 2)), (7, 3))
    trace = absorb_strands(f)
    first = len(trace.first.letters)
    assert first == 3 * 6 + 1 * 2 * 1 + 2 * 4 * 3
    for j, step in enumerate(trace.steps):
        assert len(step.letters) == first - j


def test_markov_reduce():
    assert markov_reduce(TLinkSpec(((2, 2), (3, 3), (4, 1)))).pairs == ((2, 2), (3, 4))
    assert markov_reduce(TLinkSpec(((2, 3),))).pairs == ((2, 3),)
    assert markov_reduce(TLinkSpec(((2, 2), (3, 1)))).pairs == ((2, 3),)
    # a merge bumps the new trailing exponent past 1, so one step suffices
    assert markov_reduce(TLinkSpec(((2, 1), (3, 1), (4, 1)))).pairs == ((2, 1), (3, 2))


def test_markov_reduce_is_iterated_destabilization():
    # dropping a trailing (r_k, 1) syllable is exactly r_k - r_{k-1} braid
    # destabilizations of the standard word
    cases = [
        TLinkSpec(((2, 2), (3, 3), (4, 1))),
        TLinkSpec(((2, 2), (5, 1))),
        TLinkSpec(((3, 4), (7, 1))),
    ]
    for spec in cases:
        word = standard_braid(spec)
        target = standard_braid(markov_reduce(spec))
        while word.strands > target.strands:
            word = word.destabilized()
        assert word == target, spec


def test_small_traces_and_flips_preserve_jones():
    from tlinks.invariants import jones
    from tlinks.oracle import enumerate_forms

    checked = 0
    for form in enumerate_forms(8, max_n=2, max_s=2):
        if form.q < form.a_max:
            trace = absorb_strands(form)
            if len(trace.first.letters) <= 26:
                values = [jones(s, guard=26) for s in trace.steps]
                assert all(v is not None and v == values[0] for v in values), form
                checked += 1
        elif len(standard_braid(form.spec()).letters) <= 26:
            original = standard_braid(form.spec())
            flipped = standard_braid(flip_base(form))
            assert jones(original, guard=30) == jones(flipped, guard=30), form
            checked += 1
    assert checked >= 30


def test_markov_reduce_preserves_closure_invariants():
    specs = [
        TLinkSpec(((r1, s1), (r2, 1)))
        for r1 in range(2, 8)
        for r2 in range(r1 + 1, 10)
        for s1 in (1, 2, 3)
    ]
    specs.append(TLinkSpec(((2, 2), (3, 3), (4, 1))))
    specs.append(TLinkSpec(((3, 6), (5, 5), (7, 1))))
    for spec in specs:
        reduced = markov_reduce(spec)
        assert reduced != spec
        w_in, w_out = standard_braid(spec), standard_braid(reduced)
        assert alexander(w_in) == alexander(w_out), spec
        assert w_in.component_count() == w_out.component_count()


def test_remove_trailing_twists():
    w = BraidWord(3, (2, 2) + (1, 2) * 5)
    out = remove_trailing_twists(w, 3, 3)
    assert out.letters == (2, 2) + (1, 2) * 2
    assert remove_trailing_twists(BraidWord(2, (1, 1, 1, 1)), 2, 4).letters == ()
    with pytest.raises(ValueError):
        remove_trailing_twists(BraidWord(3, (1, 2, 1)), 3, 1)


def test_parse_tlink():
    assert parse_tlink("T((2,3))").pairs == ((2, 3),)
    assert parse_tlink("T((3,3),(5,2))").pairs == ((3, 3), (5, 2))
    assert parse_tlink(" T( (2, 4) , (6,1) ) ").pairs == ((2, 4), (6, 1))


def test_parse_tlink_errors_carry_offsets():
    with pytest.raises(TLinkParseError) as exc:
        parse_tlink("T((5,2),(3,3))")
    assert "increasing" in str(exc.value)
    assert exc.value.offset == 9  # the second r-value
    with pytest.raises(TLinkParseError) as exc:
        parse_tlink("T((2,3)")
    assert exc.value.offset == 7
    with pytest.raises(TLinkParseError) as exc:
        parse_tlink("T((2,3)) tail")
    assert "trailing" in str(exc.value)
    with pytest.raises(TLinkParseError) as exc:
        parse_tlink("T((1,3))")
    assert "at least 2" in str(exc.value)
    with pytest.raises(TLinkParseError):
        parse_tlink("T((2,x))")


def test_render_parse_round_trip():
    for text in ["T((2,3))", "T((3,3),(5,2))", "T((2,2),(3,6),(7,4))"]:
        spec = parse_tlink(text)
        assert parse_tlink(render_tlink(spec)) == spec
