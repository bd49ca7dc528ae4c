# encoding: utf8

import pytest

from gentlear import (
    Delta_inverse, NotABand, RepQuiver, Settings, WalkError, band_module,
    bundled, certify_ar_sequence, hat_ar_sequence, hom_space, is_isomorphic,
    is_indecomposable, parse_hat_string, projective, string_module, syzygy,
    jordan,
)
from gentlear.modules import (
    band_syzygy, direct_sum, f_map, is_exact, projective_cover, string_sequence,
    string_syzygy_matches, upsilon_map,
)
from gentlear.repetitive import HatVertex, enumerate_hat_strings

Settings.reset_prefs()
rq1 = RepQuiver(bundled('Q1'), window=(-4, 4))
rq2 = RepQuiver(bundled('Q2'), window=(-4, 4))
rq3 = RepQuiver(bundled('Q3'), window=(-4, 4))

def module(text, rq=rq1):
    return string_module(parse_hat_string(rq, text))

def test_string_modules():
    v = module('a[0]')
    assert str(v) == 'V(a[0])'
    assert v.dim == 2
    assert v.dimension_vector() == {HatVertex('1', 0): 1, HatVertex('2', 0): 1}
    assert v.is_representation()
    assert v.check() is v
    data = v.to_json()
    assert data['name'] == 'V(a[0])'
    assert data['dimension_vector'] == {'1[0]': 1, '2[0]': 1}
    assert list(data['arrows']) == ['a[0]']
    assert sum(map(sum, data['arrows']['a[0]'])) == 1

    s1, s2 = module('1:(1[0],+)'), module('1:(2[0],-)')
    assert len(hom_space(v, v)) == 1
    assert len(hom_space(s2, v)) == 1
    assert len(hom_space(v, s2)) == 0
    assert len(hom_space(s1, v)) == 0
    assert len(hom_space(v, s1)) == 1

    assert is_isomorphic(v, module('a[0]-'))
    assert not is_isomorphic(v, s1)
    assert upsilon_map(parse_hat_string(rq1, 'a[0]')).is_isomorphism()
    assert is_indecomposable(v)
    assert not is_indecomposable(direct_sum(s1, s2)[0])

    with pytest.raises(WalkError) as exception:
        f_map(parse_hat_string(rq1, 'a[0]'), parse_hat_string(rq1, '1:(1[0],+)'))
    assert str(exception.value) == 'a[0], 1:(1[0],+): not ordered by ≤_t.'


def test_projectives_and_syzygies():
    p = projective(rq1, HatVertex('1', 0))
    assert p.dim == 3
    assert p.is_representation()
    assert is_indecomposable(p)

    cover, pi = projective_cover(module('a[0]'))
    assert cover.dim == 3
    assert is_isomorphic(cover, p)

    zeta = parse_hat_string(rq1, '1:(1[0],+)')
    omega = syzygy(string_module(zeta)).module
    assert omega.dim == 2
    assert is_isomorphic(omega, string_module(Delta_inverse(zeta)))

    for zeta in enumerate_hat_strings(rq1, 1):
        inclusion, cover = string_sequence(zeta)
        assert is_exact(inclusion, cover), str(zeta)
        assert string_syzygy_matches(zeta), str(zeta)


def test_projectives_are_representations():
    # full paths of length 2 act by nonzero maps on projectives
    for rq in (rq1, rq2, rq3):
        for v in rq.base.vertices:
            p = projective(rq, HatVertex(v, 0))
            assert not p.violations(), (rq.name, v, p.violations())
            assert p.is_representation()
            assert p.check() is p


def test_ar_sequences():
    sequence = hat_ar_sequence(parse_hat_string(rq1, '1:(2[0],+)'))
    zeta, left, right, both = sequence.strings
    assert (str(left), right, str(both)) == ('a[0]-', None, '1:(1[0],-)')
    assert (sequence.start.dim, sequence.middle.dim, sequence.end.dim) == (1, 2, 1)
    assert certify_ar_sequence(sequence)


def test_band_modules():
    omega = parse_hat_string(rq3, 'a[0] b[0]-')
    with Settings.prefs(field='F5'):
        w = band_module(omega, jordan(1, 2))
        assert str(w) == 'W(a[0] b[0]-, J1(2))'
        assert w.dim == 2
        assert w.is_representation()
        assert is_indecomposable(w)
        assert not is_isomorphic(w, band_module(omega, jordan(1, 3)))

        w2 = band_module(omega, jordan(2, 1))
        assert w2.dim == 4
        assert is_indecomposable(w2)

        assert band_syzygy(omega, jordan(1, 2)) is not None

        with pytest.raises(NotABand) as exception:
            band_module(parse_hat_string(rq3, 'a[0]'), jordan(1, 1))
        assert str(exception.value) == 'a[0]: not a band.'


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
