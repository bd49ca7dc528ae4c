# encoding: utf8

from hypothesis import given, strategies as st
import pytest

from gentlear import (
    IndexOutOfRange, NotABand, WalkError, antipaths, bundled, canonical_band,
    enumerate_homotopy_bands, enumerate_homotopy_strings, hcompose,
    hstring_compose, is_homotopy_band, parse_homotopy_string, sigma_omega,
    theta_max,
)
from gentlear.homotopy import (
    as_homotopy_string, band_rotations, check_homotopy_identities,
    directed_decomposition, rotate,
)

q1, q2, q3 = bundled('Q1'), bundled('Q2'), bundled('Q3')

def test_decomposition():
    w = parse_homotopy_string(q2, 'b a')
    assert (w.L, w.deg) == (2, 2)
    assert [str(p) for p in w.pieces] == ['b', 'a']
    assert w.degrees == [0, 1, 2]
    assert w.summand_data() == [(0, '3'), (1, '2'), (2, '1')]
    assert str(w.prefix(1)) == 'b'
    assert str(w.suffix(1)) == 'a'
    assert str(w.prefix(0)) == '1:(3,+)'
    assert str(w.suffix(2)) == '1:(1,+)'

    v = parse_homotopy_string(q3, 'a b-')
    assert (v.L, v.deg, v.degrees) == (2, 0, [0, 1, 0])
    assert v.piece_is_path(1) and not v.piece_is_path(2)

    u = parse_homotopy_string(q2, 'a- b-')
    assert (u.L, u.deg) == (2, -2)

    x = parse_homotopy_string(q3, 'b')
    assert (x.L, x.deg) == (1, 1)

    L, pieces, degrees = directed_decomposition(w)
    assert (L, [str(p) for p in pieces], degrees) == (2, ['b', 'a'], [0, 1, 2])

    e = parse_homotopy_string(q1, '1:(1,+)')
    assert (e.L, e.deg, e.degrees) == (0, 0, [0])

    with pytest.raises(WalkError) as exception:
        parse_homotopy_string(q1, 'a a-')
    assert str(exception.value) == 'a a-: not a homotopy string.'

    with pytest.raises(IndexOutOfRange) as exception:
        w.prefix(3)
    assert exception.value.kwargs == dict(bound=2)


def test_composition():
    b, a = parse_homotopy_string(q2, 'b'), parse_homotopy_string(q2, 'a')
    assert str(hstring_compose(b, a)) == 'b a'
    assert str(hcompose(parse_homotopy_string(q2, '1:(3,+)'), b, a)) == 'b a'
    assert hstring_compose(parse_homotopy_string(q2, '1:(3,-)'), b) is None
    assert hstring_compose(parse_homotopy_string(q1, 'a'), parse_homotopy_string(q1, 'a-')) is None
    assert str(hstring_compose(
        parse_homotopy_string(q3, 'a'), parse_homotopy_string(q3, 'b-')
    )) == 'a b-'

    p = parse_homotopy_string(q1, 'a')
    assert hstring_compose(p, parse_homotopy_string(q1, '1:(1,+)')) == p
    assert hstring_compose(p, parse_homotopy_string(q1, '1:(1,-)')) is None


def test_antipaths():
    assert [str(t) for t in antipaths(q2, '3', 1)] == ['1:(3,-)', 'b', 'b a']
    assert str(theta_max(q2, '3', 1)) == 'b a'
    assert str(theta_max(q1, '2', 1)) == 'a'
    assert str(theta_max(q1, '1', 1)) == '1:(1,-)'
    assert str(sigma_omega(parse_homotopy_string(q2, 'a'))) == 'b'
    assert str(sigma_omega(parse_homotopy_string(q2, 'b'))) == '1:(3,+)'


def test_bands():
    w = parse_homotopy_string(q3, 'a b-')
    assert is_homotopy_band(w)
    assert not is_homotopy_band(parse_homotopy_string(q3, 'a b- a b-'))
    assert not is_homotopy_band(parse_homotopy_string(q3, 'a'))
    assert not is_homotopy_band(parse_homotopy_string(q2, 'b a'))

    rotated, ok = rotate(w, 1)
    assert str(rotated) == 'b- a' and ok
    assert [str(b) for b in band_rotations(w)] == ['a b-', 'b- a']
    assert str(canonical_band(parse_homotopy_string(q3, 'b- a'))) == 'a b-'
    assert str(canonical_band(parse_homotopy_string(q3, 'b a-'))) == 'a b-'
    assert [str(b) for b in enumerate_homotopy_bands(q3, 2)] == ['a b-']
    assert enumerate_homotopy_bands(q2, 4) == []

    with pytest.raises(NotABand) as exception:
        canonical_band(parse_homotopy_string(q1, 'a'))
    assert str(exception.value) == 'a: not a band.'

    with pytest.raises(IndexOutOfRange):
        rotate(w, 2)


def test_enumeration():
    found = [str(w) for w in enumerate_homotopy_strings(q1, 4)]
    assert found == ['1:(1,+)', '1:(1,-)', '1:(2,+)', '1:(2,-)', 'a', 'a-']

    found = [str(w) for w in enumerate_homotopy_strings(q2, 2)]
    assert found[6:] == ['a', 'a-', 'b', 'b-', 'a- b-', 'b a']

    lengths = [len(w) for w in enumerate_homotopy_strings(q3, 3)]
    assert lengths == sorted(lengths)


@given(st.sampled_from(
    list(enumerate_homotopy_strings(q2, 3)) + list(enumerate_homotopy_strings(q3, 4))
))
def test_homotopy_identities(w):
    assert check_homotopy_identities(w)
    inverse = as_homotopy_string(w.inverse())
    assert inverse.deg == -w.deg
    assert inverse.L == w.L
    assert hcompose(w.prefix(0), w, w.suffix(w.L)) == w
    assert is_homotopy_band(inverse) == is_homotopy_band(w)


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
