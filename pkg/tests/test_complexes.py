# encoding: utf8

import pytest

from gentlear import (
    ChainMap, NotABand, NotIndecomposable, Settings, SingularMatrix,
    UndefinedComposition, Automorphism, band_complex, bundled,
    complexes_isomorphic, jordan, mapping_cone, parse_homotopy_string, shift,
    stalk, string_complex, upsilon, verify_complexes,
)
from gentlear.complexes import map_F_prime, map_F_dblprime, structural_maps

Settings.reset_prefs()
q1, q2, q3 = bundled('Q1'), bundled('Q2'), bundled('Q3')

def test_string_complexes():
    w = parse_homotopy_string(q2, 'b a')
    x = string_complex(0, w)
    assert str(x) == '0: P3\n1: P2\n2: P1\nd0: [b]\nd1: [a]'
    assert x.degrees == [0, 1, 2]
    assert x.total_rank == 3
    assert x.ranks() == {0: {'3': 1}, 1: {'2': 1}, 2: {'1': 1}}
    assert x.is_complex()
    assert x.check() is x
    assert x.name == 'X(0, b a)'
    assert x.to_text().startswith('X(0, b a)\n0: P3\n')
    assert x.to_json() == dict(
        name='X(0, b a)',
        field='F5',
        terms={
            '0': [dict(vertex='3', dim=1)],
            '1': [dict(vertex='2', dim=1)],
            '2': [dict(vertex='1', dim=1)],
        },
        differentials={
            '0': [dict(row=0, col=0, path='b', coefficient=[[1]])],
            '1': [dict(row=0, col=0, path='a', coefficient=[[1]])],
        },
    )

    y = string_complex(0, parse_homotopy_string(q1, 'a-'))
    assert y.degrees == [-1, 0]
    assert [s.vertex for s in y.term(-1)] == ['2']
    assert [s.vertex for s in y.term(0)] == ['1']
    assert str(y.d(-1)) == 'a'

    e = string_complex(3, parse_homotopy_string(q1, '1:(2,+)'))
    assert e.degrees == [3]
    assert not e.differentials
    assert complexes_isomorphic(e, stalk(q1, '2', 3))


def test_band_complexes():
    w = parse_homotopy_string(q3, 'a b-')
    with Settings.prefs(field='F5'):
        y = band_complex(0, w, jordan(2, 1))
        assert y.degrees == [0, 1]
        assert [str(s) for s in y.term(0)] == ['P2⊗k^2']
        assert [str(s) for s in y.term(1)] == ['P1⊗k^2']
        assert y.total_rank == 4
        assert y.is_complex()
        assert y.name == 'Y(0, a b-, J2(1))'

        y1 = band_complex(0, w, [[2]])
        y2 = band_complex(0, w, [[3]])
        assert complexes_isomorphic(y1, band_complex(0, w, [[2]]))
        assert not complexes_isomorphic(y1, y2)

        with pytest.raises(NotABand) as exception:
            band_complex(0, parse_homotopy_string(q3, 'a'), jordan(1, 1))
        assert str(exception.value) == 'a: not a band.'

        with pytest.raises(SingularMatrix) as exception:
            band_complex(0, w, [[0]])
        assert str(exception.value) == 'μ: matrix is singular.'


def test_automorphisms():
    with Settings.prefs(field='F5'):
        mu = jordan(3, 2)
        assert mu.dim == 3
        assert mu.jordan_form() == (3, 2)
        assert str(mu) == 'J3(2)'
        assert mu.is_indecomposable()
        assert mu.inverse().is_indecomposable()
        assert mu == jordan(3, 2)

        split = Automorphism([[1, 0], [0, 2]])
        assert not split.is_indecomposable()
        assert str(split) == '[[1, 0], [0, 2]]'
        with pytest.raises(NotIndecomposable) as exception:
            split.jordan_form()
        assert exception.value.args == ('not a single Jordan block',)


def test_upsilon_and_shift():
    w = parse_homotopy_string(q2, 'b a')
    u = upsilon(0, w)
    assert u.target.name == 'X(2, a- b-)'
    assert u.is_chain_map() and u.is_isomorphism()
    back = upsilon(w.deg, w.inverse())
    assert back.compose(u) == ChainMap.identity(u.source)

    x = string_complex(0, w)
    s = shift(x, -1)
    assert s.degrees == [1, 2, 3]
    assert s.name == 'X(0, b a)[-1]'
    assert s.is_complex()
    assert complexes_isomorphic(string_complex(1, w), s)
    assert not complexes_isomorphic(string_complex(0, w), s)


def test_structural_maps():
    a = parse_homotopy_string(q2, 'a')
    f = map_F_prime(0, 'b', a)
    assert f.is_chain_map()
    assert f.source.name == 'X(0, 1:(3,-))'
    assert f.target.name == 'X(0, a)'

    with pytest.raises(UndefinedComposition) as exception:
        map_F_prime(0, 'a', parse_homotopy_string(q2, 'b'))
    assert str(exception.value) == 'a · b: composition is undefined in homotopy strings.'

    g = map_F_dblprime(0, 'a', parse_homotopy_string(q1, '1:(2,-)'))
    assert g.is_chain_map()

    for f in structural_maps(parse_homotopy_string(q2, 'b a')):
        assert f.check() is f


def test_mapping_cone():
    x = string_complex(0, parse_homotopy_string(q1, 'a'))
    cone = mapping_cone(ChainMap.identity(x))
    assert cone.is_complex()
    assert cone.total_rank == 2 * x.total_rank
    assert cone.degrees == [-1, 0, 1]


def test_verify_complexes():
    report = verify_complexes(q1, max_len=1)
    assert report['d² = 0'] == 30
    assert report['Υ∘Υ = id'] == 6

    report = verify_complexes(q3, max_len=2, shifts=[0])
    assert report['band d² = 0'] == 12


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
