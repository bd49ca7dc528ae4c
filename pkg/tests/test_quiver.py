# encoding: utf8

from parametrize_from_file import parametrize
import pytest
from functools import partial
from voluptuous import Schema, Optional, Required, Any, Coerce

from gentlear import (
    BoundQuiver, GentleError, NotGentle, QuiverError, Settings, bundled,
    check_string_functions, compute_string_functions, is_almost_gentle,
    parse_quiver, require_gentle, validate_gentle,
)
Settings.reset_prefs()

def name_from_dict_keys(cases):
    return [{**v, 'name': k} for k,v in cases.items()]

parametrize_from_file = partial(parametrize, preprocess=name_from_dict_keys)

def as_bool(text):
    return {'yes': True, 'no': False}[text]

def as_list(text):
    return [w.strip() for w in text.split(',') if w.strip()]

# Schema for test cases
# Errors are indicated by a lack of a gentle field.
schema = Schema({
    Required('name'): str,
    Required('given'): str,
    Optional('gentle', default=None): Any(None, as_bool),
    Optional('dimension', default=None): Any(None, Coerce(int)),
    Optional('maximal', default=''): as_list,
    Optional('clauses', default=''): as_list,
    Optional('error', default=''): str,
})

@parametrize_from_file(schema=schema)
def test_quiver_parsing(name, given, gentle, dimension, maximal, clauses, error):
    try:
        q = parse_quiver(given, name=name)
    except GentleError as e:
        assert gentle is None, name
        assert str(e) == error, name
        return
    assert not error, name

    report = validate_gentle(q)
    assert report.is_gentle == gentle, name
    assert sorted({str(v.clause) for v in report}) == sorted(clauses), name
    if gentle:
        assert str(report) == 'gentle'
        assert q.dimension() == dimension, name
        assert [str(p) for p in q.maximal_paths()] == maximal, name
        assert require_gentle(q) is q
    else:
        with pytest.raises(NotGentle):
            require_gentle(q)


def test_bundled():
    q1, q2, q3 = bundled('Q1'), bundled('Q2'), bundled('Q3')
    assert q1.vertices == ('1', '2')
    assert q1.arrows == ('a',)
    assert q2.relations == (('b', 'a'),)
    assert q3.arrows == ('a', 'b')
    assert q2.name == 'Q2'
    assert parse_quiver(q2.to_text()).relations == q2.relations
    assert 'label="a"' in q1.to_dot()

    with pytest.raises(QuiverError) as exception:
        bundled('Q9')
    assert str(exception.value) == 'Q9: no such bundled quiver.'
    assert exception.value.args == ('no such bundled quiver',)
    assert exception.value.kwargs == dict(culprit='Q9')


def test_string_functions():
    q1 = bundled('Q1')
    assert (q1.S('a'), q1.T('a')) == (1, 1)

    q2 = bundled('Q2')
    assert all(q2.S(a) == 1 and q2.T(a) == 1 for a in q2.arrows)

    q3 = bundled('Q3')
    assert (q3.S('a'), q3.S('b')) == (1, -1)
    assert (q3.T('a'), q3.T('b')) == (1, -1)
    assert compute_string_functions(q3) == q3.string_functions
    assert not check_string_functions(q3)
    assert is_almost_gentle(q3)
    assert not is_almost_gentle(q3, S={'a': 1, 'b': 1}, T={'a': 1, 'b': -1})
    assert not is_almost_gentle(q3, S={'a': 1, 'b': -1}, T={'a': 1, 'b': 1})


def test_relation_errors():
    with pytest.raises(QuiverError) as exception:
        BoundQuiver(['1'], [('x', '1', '1')], [('x', 'y')])
    assert str(exception.value) == 'y: unknown arrow in relation.'

    with pytest.raises(QuiverError) as exception:
        BoundQuiver(['1'], [('x', '1', '1')], [('x', 'x'), ('x', 'x')])
    assert str(exception.value) == 'x x: duplicate relation.'

    with pytest.raises(QuiverError) as exception:
        BoundQuiver(['1', '2'], [('1', '1', '2')])
    assert str(exception.value) == '1: duplicate name.'


def test_paths():
    q2 = bundled('Q2')
    assert [str(p) for p in q2.projective_paths('1')] == ['1_1', 'a']
    assert [str(p) for p in q2.projective_paths('2')] == ['1_2', 'b']
    assert [str(p) for p in q2.injective_paths('3')] == ['1_3', 'b']
    assert q2.path_compose(q2.path('b'), q2.path('a')) is None
    assert q2.left_multiply('a', q2.trivial_path('1')) == q2.path('a')
    assert q2.left_multiply('b', q2.trivial_path('1')) is None

    with Settings.prefs(field='F5'):
        assert q2.projective_action('1', 'a').tolist() == [[0, 0], [1, 0]]
        assert q2.projective_action('1', 'b').tolist() == [[0, 0], [0, 0]]
        assert q2.path_map(q2.path('a')).tolist() == [[0, 0], [1, 0]]
        assert q2.path_map(q2.trivial_path('2')).tolist() == [[1, 0], [0, 1]]


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
