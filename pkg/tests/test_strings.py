# encoding: utf8

from hypothesis import given, strategies as st
import pytest

from gentlear import (
    IndexOutOfRange, WalkError, bundled, enumerate_homotopy_strings, is_band,
    is_string, parse_walk, sign_table, string_compose, substring_s,
    substring_t, alpha, sigma,
)
from gentlear.strings import compose_all, invert, is_simple

q1, q2, q3 = bundled('Q1'), bundled('Q2'), bundled('Q3')

def test_walks():
    w = parse_walk(q3, 'a b-')
    assert (w.t, w.s, w.T, w.S) == ('2', '2', 1, -1)
    assert w.vertices == ['2', '1', '2']
    assert w.letter(2).inverse
    assert str(w.inverse()) == 'b a-'
    assert invert(w) == w.inverse()
    assert repr(w) == "Walk('a b-')"
    assert w == parse_walk(q3, 'a  b-')
    assert w != parse_walk(q3, 'a- b')

    e = parse_walk(q1, '1:(2,-)')
    assert (e.vertex, e.sign, e.t, e.s, e.S, e.T) == ('2', -1, '2', '2', -1, 1)
    assert str(e.inverse()) == '1:(2,+)'
    assert e < parse_walk(q1, 'a')
    assert parse_walk(q1, '1:(1,+)') < e

    with pytest.raises(WalkError) as exception:
        parse_walk(q1, 'z')
    assert str(exception.value) == 'z: unknown arrow.'
    assert exception.value.kwargs == dict(culprit='z')

    with pytest.raises(WalkError) as exception:
        parse_walk(q1, '1:(9,+)')
    assert str(exception.value) == '9: unknown vertex.'

    with pytest.raises(WalkError) as exception:
        parse_walk(q1, '  ')
    assert str(exception.value) == 'empty walk literal.'

    with pytest.raises(WalkError) as exception:
        parse_walk(q2, 'a b')
    assert str(exception.value) == 'a b: letters do not compose.'

    with pytest.raises(IndexOutOfRange) as exception:
        w.letter(3)
    assert str(exception.value) == '3: index out of range, expected 0 ≤ i ≤ 2.'
    assert exception.value.kwargs == dict(bound=2)


def test_strings():
    assert is_string(parse_walk(q2, 'a'))
    assert not is_string(parse_walk(q2, 'b a'))
    assert not is_string(parse_walk(q2, 'a- b-'))
    assert not is_string(parse_walk(q1, 'a a-'))
    assert is_string(parse_walk(q3, 'a b- a b-'))
    assert is_simple(parse_walk(q2, 'b'))
    assert not is_simple(parse_walk(q3, 'a b-'))

    assert is_band(parse_walk(q3, 'a b-'))
    assert is_band(parse_walk(q3, 'b- a'))
    assert not is_band(parse_walk(q3, 'a b- a b-'))
    assert not is_band(parse_walk(q1, 'a'))


def test_composition():
    a, b_inv = parse_walk(q3, 'a'), parse_walk(q3, 'b-')
    assert str(string_compose(a, b_inv)) == 'a b-'
    assert string_compose(a, parse_walk(q3, 'a-')) is None
    assert string_compose(parse_walk(q2, 'b'), parse_walk(q2, 'a')) is None
    assert str(string_compose(parse_walk(q1, '1:(2,-)'), parse_walk(q1, 'a'))) == 'a'
    assert string_compose(parse_walk(q1, '1:(2,+)'), parse_walk(q1, 'a')) is None
    assert compose_all(string_compose, a, parse_walk(q3, 'a-'), b_inv) is None


def test_substrings():
    w = parse_walk(q3, 'a b-')
    assert str(substring_t(w, 0)) == '1:(2,-)'
    assert str(substring_t(w, 1)) == 'a'
    assert str(substring_s(w, 1)) == 'b-'
    assert str(substring_s(w, 2)) == '1:(2,-)'
    assert string_compose(substring_t(w, 1), substring_s(w, 1)) == w

    with pytest.raises(IndexOutOfRange) as exception:
        substring_s(w, 3)
    assert exception.value.args == (3,)


def test_sign_table():
    table = sign_table(q2)
    assert str(table.sigma['1', 1]) == 'a'
    assert str(table.sigma['2', 1]) == 'b'
    assert str(table.sigma['3', 1]) == '1:(3,+)'
    assert str(table.sigma_prime['3', 1]) == 'b'
    assert [str(s) for s in table.Sigma['1', 1]] == ['1:(1,+)', 'a']
    assert table.alpha['3', 1] is None
    assert table.is_chain()

    assert alpha(q1, '1', 1) == 'a'
    assert alpha(q1, '1', -1) is None
    assert alpha(q1, '2', 1) is None
    assert str(sigma(q3, '1', -1)) == 'b'


@given(st.sampled_from(list(enumerate_homotopy_strings(q3, 4))))
def test_inversion_properties(w):
    inverse = w.inverse()
    assert inverse.inverse() == w
    assert (inverse.s, inverse.t) == (w.t, w.s)
    assert (inverse.S, inverse.T) == (w.T, w.S)
    assert is_string(inverse) == is_string(w)
    assert is_band(inverse) == is_band(w)


@given(st.sampled_from([w for w in enumerate_homotopy_strings(q2, 3) if is_string(w)]))
def test_substring_recomposition(w):
    for i in range(1, w.length):
        assert string_compose(substring_t(w, i), substring_s(w, i)) == w
    assert string_compose(substring_t(w, 0), w) == w
    assert string_compose(w, substring_s(w, w.length)) == w


if __name__ == '__main__':
    # As a debugging aid allow the tests to be run on their own, outside pytest.
    # This makes it easier to see and interpret and textual output.

    defined = dict(globals())
    for k, v in defined.items():
        if callable(v) and k.startswith('test_'):
            print()
            print('Calling:', k)
            print((len(k)+9)*'=')
            v()
