# encoding: utf8

import pytest

from gentlear import (
    NotABand, Settings, WalkError, bundled, happel_oracle, parse_homotopy_string,
    psi, psi_band, psi_prime, psi_trace, string_complex, string_oracle,
    verify_section5,
)
from gentlear.happel import exponents, normalizing_shift, replay

Settings.reset_prefs()
q1, q2, q3 = bundled('Q1'), bundled('Q2'), bundled('Q3')

def test_psi():
    a = parse_homotopy_string(q1, 'a')
    result = psi(a)
    assert str(result) == 'a*[-1]-'
    assert str(psi(parse_homotopy_string(q1, '1:(1,+)'))) == 'a[0]'
    assert replay(result)

    lines = psi_trace(a)
    assert len(lines) == 2
    assert lines[0].startswith('ψ(1:(1,') and lines[0].endswith('[base]')
    assert lines[-1] == 'ψ(a) = a*[-1]-    [path]'


def test_psi_prime():
    assert exponents(parse_homotopy_string(q3, 'a b-')) == [-1, -1]
    assert exponents(parse_homotopy_string(q2, 'b a')) == [-1, -2]
    assert normalizing_shift(parse_homotopy_string(q2, 'b a')) == 0
    assert normalizing_shift(parse_homotopy_string(q2, 'a- b-')) == 2

    with pytest.raises(WalkError) as exception:
        psi_prime(parse_homotopy_string(q1, '1:(1,+)'))
    assert str(exception.value) == '1:(1,+): ψ′ needs a walk of positive length.'

    image = psi_band(parse_homotopy_string(q3, 'a b-'))
    assert image.exponent == 1

    with pytest.raises(NotABand) as exception:
        psi_band(parse_homotopy_string(q3, 'a'))
    assert str(exception.value) == 'a: not a band.'


def test_oracle():
    a = parse_homotopy_string(q1, 'a')
    assert str(string_oracle(a)) == 'a*[-1]-'

    with pytest.raises(WalkError) as exception:
        happel_oracle(string_complex(0, parse_homotopy_string(q1, 'a-')))
    assert str(exception.value) == 'X(0, a-): shift the complex into nonnegative degrees.'


def test_verify_happel():
    report = verify_section5(q1, max_len=1, oracle=False)
    assert report['trace replays'] == 6
    assert report['injective up to Δ'] == 6
    assert report['inversion'] == 6
    assert report['ψ′ closed form'] == 2
    assert report['band oracle'] == 0


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
