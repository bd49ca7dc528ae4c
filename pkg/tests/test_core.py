# encoding: utf8

from fractions import Fraction
import pytest

from gentlear import (
    FieldError, IdentityFailure, QuiverSyntaxError, Settings, SingularMatrix,
    UnknownPreference, WalkError, make_field,
)
from gentlear.linalg import find_invertible

def test_prefs():
    Settings.reset_prefs()
    assert Settings.get_pref('field') == 'F5'
    assert Settings.get_pref('max_len') == 6
    assert Settings.get_pref('checked') is False

    Settings.set_prefs(max_len=3, field='Q')
    assert Settings.get_pref('max_len') == 3
    assert str(Settings.field()) == 'Q'

    with Settings.prefs(max_len=4, seed=7):
        assert Settings.get_pref('max_len') == 4
        assert Settings.get_pref('seed') == 7
        assert str(Settings.field()) == 'Q'
        with Settings.prefs(field='F7'):
            assert str(Settings.field()) == 'F7'
        assert str(Settings.field()) == 'Q'
    assert Settings.get_pref('max_len') == 3
    assert Settings.get_pref('seed') == 0

    Settings.set_prefs(max_len=None, field=None)
    assert Settings.get_pref('max_len') == 6
    assert str(Settings.field()) == 'F5'

    with pytest.raises(UnknownPreference) as exception:
        Settings.set_prefs(colour='red')
    assert str(exception.value) == 'colour: unknown preference.'
    assert isinstance(exception.value, KeyError)

    with pytest.raises(UnknownPreference) as exception:
        Settings.get_pref('colour')
    assert exception.value.args == ('colour',)
    Settings.reset_prefs()


def test_errors():
    e = WalkError('unknown arrow', culprit='z')
    assert str(e) == 'z: unknown arrow.'
    assert e.render('{culprit} is unknown') == 'z is unknown'
    assert str(WalkError('backtrack')) == 'backtrack.'
    assert isinstance(e, ValueError)

    e = QuiverSyntaxError('malformed arrow', line=3, col=7)
    assert str(e) == 'line 3, col 7: malformed arrow'
    assert e.kwargs == dict(line=3, col=7)

    e = IdentityFailure('Δ⁻¹Δζ ≠ ζ', culprit='Q2', details='b a')
    assert str(e) == 'Q2: Δ⁻¹Δζ ≠ ζ: b a'
    assert str(IdentityFailure('Δ⁻¹Δζ ≠ ζ', culprit='Q2')) == 'Q2: Δ⁻¹Δζ ≠ ζ'
    assert isinstance(e, AssertionError)

    assert str(SingularMatrix()) == 'matrix is singular.'
    assert str(SingularMatrix(culprit='2×3')) == '2×3: matrix is singular.'


def test_fields():
    f7 = make_field('F7')
    assert str(f7) == 'F7'
    assert f7 == make_field('f7')
    assert f7.inv(3) == 5
    assert f7.array([[8, -1]]).tolist() == [[1, 6]]

    q = make_field('Q')
    assert q.inv(3) == Fraction(1, 3)
    a = q.array([[1, 2], [3, 4]])
    assert q.equal(q.matmul(a, q.inverse(a)), q.identity(2))

    f5 = make_field('F5')
    assert f5.rank([[1, 2], [2, 4]]) == 1
    null = f5.nullspace(f5.array([[1, 2], [2, 4]]))
    assert null.shape == (2, 1)
    assert f5.is_zero(f5.matmul([[1, 2], [2, 4]], null))
    assert f5.solve([[1, 0], [0, 2]], [3, 4]).tolist() == [3, 2]
    assert f5.solve([[1, 2], [2, 4]], [1, 0]) is None
    assert f5.in_span([[1, 0], [0, 1]], [2, 3]) == [2, 3]
    assert f5.power([[1, 1], [0, 1]], 5).tolist() == [[1, 0], [0, 1]]

    with pytest.raises(SingularMatrix):
        f5.inverse([[1, 2], [2, 4]])

    for bad in ['F4', 'R', 'F']:
        with pytest.raises(FieldError) as exception:
            make_field(bad)
        assert str(exception.value) == f'{bad}: unknown field, expected Q or F<p> with p prime.'


def test_find_invertible():
    f3 = make_field('F3')
    nilpotent = f3.array([[0, 1], [0, 0]])
    identity = f3.identity(2)
    combine = lambda c: f3.add(f3.scale(c[0], nilpotent), f3.scale(c[1], identity))
    with Settings.prefs(field='F3'):
        found = find_invertible([nilpotent, identity], combine, f3.is_invertible)
        assert f3.is_invertible(found)
        assert find_invertible([nilpotent], lambda c: f3.scale(c[0], nilpotent), f3.is_invertible) is None
        assert find_invertible([], combine, f3.is_invertible) is None


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
