# encoding: utf8

from gentlear import Settings
import pytest
import doctest
import glob


def test_README():
    Settings.reset_prefs()
    rv = doctest.testfile('../README.rst', optionflags=doctest.ELLIPSIS)
    assert rv.failed == 0
    assert rv.attempted == 12

def test_gentlear():
    # these targets should be updated when the number of doctests change
    expected_test_count = {
        '../gentlear/__init__.py': 0,
        '../gentlear/ar.py': 7,
        '../gentlear/cli.py': 0,
        '../gentlear/complexes.py': 14,
        '../gentlear/core.py': 3,
        '../gentlear/happel.py': 4,
        '../gentlear/homotopy.py': 16,
        '../gentlear/linalg.py': 4,
        '../gentlear/modules.py': 9,
        '../gentlear/quiver.py': 7,
        '../gentlear/repetitive.py': 10,
        '../gentlear/strings.py': 14,
    }
    found = glob.glob('../gentlear/*.py')
    for f in found:
        assert f in expected_test_count, f
    for path, tests in expected_test_count.items():
        Settings.reset_prefs()
        rv = doctest.testfile(path, optionflags=doctest.ELLIPSIS)
        assert rv.failed == 0, path
        assert rv.attempted == tests, path

def test_manual():
    expected_test_count = {
        '../doc/index.rst': 13,
        '../doc/api.rst': 0,
        '../doc/releases.rst': 0,
    }
    found = glob.glob('../doc/*.rst')
    for f in found:
        assert f in expected_test_count, f
    for path, tests in expected_test_count.items():
        Settings.reset_prefs()
        rv = doctest.testfile(path, optionflags=doctest.ELLIPSIS)
        assert rv.failed == 0, path
        assert rv.attempted == tests, path

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
