# encoding: utf8

import pytest

from gentlear import (
    Delta, Delta_inverse, RepQuiver, Settings, WalkError, WindowExhausted,
    build_repetitive, bundled, enumerate_hat_strings, hat_plus_both, hat_plus_left,
    hat_plus_right, lift, parse_hat_string, parse_walk, plus, repetitive_quiver, times,
    verify_repetitive, xi_star,
)
from gentlear.repetitive import (
    HatArrow, HatVertex, hat_plus, leq_t, partial, partials_and_deltas, widening,
)

Settings.reset_prefs()
q1, q2, q3 = bundled('Q1'), bundled('Q2'), bundled('Q3')
rq1 = RepQuiver(q1, window=(-4, 4))

def test_incidence():
    a0 = rq1.arrow('a', 0)
    dual = rq1.dual(('a',), 0)
    assert str(dual) == 'a*[0]'
    assert rq1.source(a0) == HatVertex('1', 0)
    assert rq1.target(a0) == HatVertex('2', 0)
    assert rq1.source(dual) == HatVertex('2', 1)
    assert rq1.target(dual) == HatVertex('1', 0)
    assert rq1.arrows_from(HatVertex('2', 1)) == (dual,)
    assert rq1.arrows_to(HatVertex('1', 0)) == (dual,)
    assert (rq1.S(dual), rq1.T(dual)) == (-1, -1)

    assert rq1.is_relation(a0, rq1.dual(('a',), 0))
    assert rq1.is_relation(rq1.dual(('a',), -1), a0)
    assert not rq1.is_path([rq1.dual(('a',), -1), a0])
    assert rq1.is_full_path([rq1.dual(('a',), -1), a0])
    assert not rq1.is_zero_relation(rq1.dual(('a',), -1), a0)
    assert not rq1.is_zero_relation(a0, rq1.dual(('a',), 0))
    assert (rq1.S(a0), rq1.T(rq1.dual(('a',), 0))) == (1, -1)
    assert (rq1.S(rq1.dual(('a',), -1)), rq1.T(a0)) == (-1, 1)
    rq2 = RepQuiver(q2, window=(-2, 2))
    assert rq2.is_zero_relation(rq2.arrow('b', 0), rq2.arrow('a', 0))
    assert str(rq1.chosen_full_path(HatVertex('1', 0))) == 'a*[-1] a[0]'
    assert [str(p) for p in rq1.paths_from(HatVertex('1', 0))] == ['1_1[0]', 'a[0]', 'a*[-1] a[0]']

    assert rq1.nu(HatVertex('1', 0), 2) == HatVertex('1', 2)
    assert str(rq1.nu(parse_hat_string(rq1, 'a[0]'), -3)) == 'a[-3]'
    assert str(lift(rq1, parse_walk(q1, 'a-'), 2)) == 'a[2]-'
    assert str(lift(rq1, parse_walk(q1, '1:(1,-)'), 1)) == '1:(1[1],-)'

    with Settings.prefs(max_len=6, margin=2):
        assert RepQuiver(q1).window == (-9, 9)
    assert build_repetitive(q1, [-2, 2]) is repetitive_quiver(q1, (-2, 2))
    assert build_repetitive(q1, [-2, 2]).window == (-2, 2)


def test_window():
    small = RepQuiver(q1, window=(-1, 1))
    with pytest.raises(WindowExhausted) as exception:
        small.arrows_from(HatVertex('1', 5))
    assert str(exception.value) == 'layer 5 lies outside window [-1, 1].'
    assert exception.value.kwargs == dict(needed=5, window='[-1, 1]')
    assert isinstance(exception.value, IndexError)

    found = widening(lambda rq, y: rq.arrows_from(y), small, HatVertex('1', 5))
    assert found == (HatArrow('a', 5, False),)
    assert small.widened().window == (-3, 3)


def test_parsing():
    assert str(parse_hat_string(rq1, 'a[0]- a*[-1]-')) == 'a[0]- a*[-1]-'
    assert parse_hat_string(rq1, '1:(2[3],+)').vertex == HatVertex('2', 3)

    with pytest.raises(WalkError) as exception:
        rq1.parse_arrow('a')
    assert str(exception.value) == 'a: malformed arrow.'

    with pytest.raises(WalkError) as exception:
        rq1.parse_arrow('z[0]')
    assert str(exception.value) == 'z[0]: unknown arrow.'

    with pytest.raises(WalkError) as exception:
        rq1.parse_arrow('b*[0]')
    assert exception.value.kwargs == dict(culprit='b*[0]')

    with pytest.raises(WalkError) as exception:
        parse_hat_string(rq1, '1:(7[0],+)')
    assert str(exception.value) == '7[0]: unknown vertex.'


def test_hat_calculus():
    e1 = parse_hat_string(rq1, '1:(1[0],+)')
    e2 = parse_hat_string(rq1, '1:(2[0],+)')
    a0 = parse_hat_string(rq1, 'a[0]')
    assert str(xi_star(rq1, rq1.path_of([rq1.arrow('a', 0)]))) == 'a*[0]'
    assert str(times(e1)) == '1:(1[1],-)'
    assert plus(times(e1)) == e1
    assert str(Delta(e2)) == 'a*[0]'
    assert Delta_inverse(Delta(e2)) == e2
    assert str(partial(a0)) == '1:(1[0],+)'
    assert leq_t(a0, a0)
    assert not leq_t(a0, e1)

    assert str(hat_plus_left(e2)) == 'a[0]-'
    assert hat_plus_right(e2) is None
    assert str(hat_plus_both(e2)) == '1:(1[0],-)'

    assert tuple(None if z is None else str(z) for z in hat_plus(e2)) == ('a[0]-', None, '1:(1[0],-)')

    ops = partials_and_deltas(a0)
    assert str(ops['∂']) == '1:(1[0],+)'
    assert '∂' not in partials_and_deltas(e1)
    assert len(partials_and_deltas(e1)) == 8

    with pytest.raises(WalkError) as exception:
        partial(e1)
    assert exception.value.args == ('∂ of a trivial string',)


def test_enumeration():
    found = [str(w) for w in enumerate_hat_strings(rq1, 1)]
    assert found == [
        '1:(1[0],+)', '1:(1[0],-)', '1:(2[0],+)', '1:(2[0],-)',
        'a*[-1]-', 'a[0]', 'a[0]-', 'a*[0]',
    ]
    for zeta in enumerate_hat_strings(rq1, 2):
        assert Delta_inverse(Delta(zeta)) == zeta
        assert Delta(Delta_inverse(zeta)) == zeta


def test_almost_gentle():
    for q in (q1, q2, q3):
        rq = RepQuiver(q, window=(-3, 3))
        assert not rq.check_almost_gentle(), q.name

    data = rq1.to_json()
    assert data['window'] == [-4, 4]
    assert dict(name='a*[0]', source='2[1]', target='1[0]', S=-1, T=-1) in data['arrows']
    assert data['full_paths']['1[0]'] == 'a*[-1] a[0]'
    assert '"2[1]" -> "1[0]" [label="a*[0]" style=dashed];' in rq1.to_dot()


def test_verify_repetitive():
    with Settings.prefs(max_len=2):
        report = verify_repetitive(q1, max_len=1)
    assert report['almost gentle'] == 1
    assert report['Δ⁻¹Δ = id'] == 8
    assert report['Ω V'] == 8


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
