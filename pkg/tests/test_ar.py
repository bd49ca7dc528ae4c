# encoding: utf8

import json
from parametrize_from_file import parametrize
import pytest
from functools import partial
import networkx as nx
from voluptuous import Schema, Optional, Required, Any, Coerce

from gentlear import (
    BandObject, Settings, StringObject, WalkError, ar_component,
    ar_triangle_band, ar_triangle_string, bundled, certify_jordan_sequence,
    classify_boundary, emit_component, enumerate_homotopy_strings, jordan,
    omega_prime, parse_homotopy_string, plus_both, plus_left, r_of, verify_section6,
)
Settings.reset_prefs()

def name_from_dict_keys(cases):
    return [{**v, 'name': k} for k,v in cases.items()]

parametrize_from_file = partial(parametrize, preprocess=name_from_dict_keys)

# Fields left out are not checked.
schema = Schema({
    Required('name'): str,
    Required('quiver'): str,
    Required('walk'): str,
    Required('r'): Coerce(int),
    Optional('prime', default=None): Any(None, str),
    Optional('left', default=None): Any(None, str),
    Optional('shift', default=None): Any(None, Coerce(int)),
    Optional('case', default=None): Any(None, str),
})

@parametrize_from_file(schema=schema)
def test_neighbours(name, quiver, walk, r, prime, left, shift, case):
    omega = parse_homotopy_string(bundled(quiver), walk)
    assert r_of(omega) == r, name
    if prime is not None:
        assert str(omega_prime(omega)) == prime, name
    neighbour = plus_left(omega)
    if left is not None:
        found = '∅' if neighbour.walk is None else str(neighbour.walk)
        assert found == left, name
    if shift is not None:
        assert neighbour.shift == shift, name
    if case is not None:
        assert neighbour.case == case, name


def test_string_triangles():
    q1 = bundled('Q1')
    triangle = ar_triangle_string(0, parse_homotopy_string(q1, '1:(2,-)'))
    assert len(triangle.middle) == 1
    assert str(triangle.shifted) == '(-1, 1:(2,-))'
    assert triangle.hat is None
    data = triangle.to_json()
    assert data['direction'] == 'tau-inverse'
    assert data['certified'] is False
    assert data['shifted'] == '(-1, 1:(2,-))'

    for omega in enumerate_homotopy_strings(q1, 2):
        assert classify_boundary(omega).boundary, str(omega)
        triangle = ar_triangle_string(2, omega)
        assert len(triangle.middle) == 1, str(omega)
        assert triangle.shifted == StringObject(1, omega)


def test_boundary_successors():
    q1 = bundled('Q1')
    boundary = classify_boundary(parse_homotopy_string(q1, '1:(1,+)'))
    assert (boundary.vertex, boundary.sign, boundary.power) == ('1', -1, 1)
    assert str(boundary.successor) == '1:(2,+)'
    assert boundary.successor == plus_both(parse_homotopy_string(q1, '1:(1,+)')).walk
    assert str(classify_boundary(parse_homotopy_string(q1, '1:(2,+)')).successor) == 'a'
    successor = classify_boundary(parse_homotopy_string(q1, 'a')).successor
    assert successor.is_trivial
    assert successor.vertex == '1'

    for omega in enumerate_homotopy_strings(q1, 2):
        successor = classify_boundary(omega).successor
        both = plus_both(omega).walk
        assert successor in (both, both.inverse()), str(omega)


def test_band_triangles():
    w = parse_homotopy_string(bundled('Q3'), 'a b-')
    with Settings.prefs(field='F5'):
        triangle = ar_triangle_band(0, w, jordan(1, 1))
        assert [o.n for o in triangle.middle] == [2]
        assert triangle.end == triangle.start
        assert triangle.shifted == BandObject(-1, w, 1, 1)

        triangle = ar_triangle_band(0, w, jordan(2, 1))
        assert [o.n for o in triangle.middle] == [1, 3]

        for n in (1, 2, 3):
            seq = certify_jordan_sequence(n, 2)
            assert seq.middle.dim == 2 * n

    with pytest.raises(WalkError) as exception:
        classify_boundary(w)
    assert str(exception.value) == 'a b-: bands have their own triangles.'

    with pytest.raises(WalkError):
        ar_triangle_band(0, parse_homotopy_string(bundled('Q3'), 'a'), jordan(1, 1))


def test_components():
    q1, q3 = bundled('Q1'), bundled('Q3')
    w = parse_homotopy_string(q3, 'a b-')
    graph = ar_component(BandObject(0, w, 1, 1), 3)
    assert sorted(node.n for node in graph.nodes) == [1, 2, 3, 4]
    kinds = {kind for _, _, kind in graph.edges(data='kind')}
    assert kinds == {'irreducible', 'tau'}

    seed = StringObject(0, parse_homotopy_string(q1, '1:(2,-)'))
    single = ar_component(seed, 0)
    assert single.number_of_nodes() == 1
    assert single.number_of_edges() == 0

    patch = ar_component(seed, 2)
    assert patch.number_of_nodes() > 1
    text = emit_component(patch)
    assert text.startswith('digraph component {\n')
    assert '[style=dashed]' in text
    data = json.loads(emit_component(patch, 'json'))
    assert len(data['nodes']) == patch.number_of_nodes()
    assert len(data['edges']) == patch.number_of_edges()

    assert emit_component(nx.MultiDiGraph()) == 'digraph component {\n}\n'
    assert json.loads(emit_component(nx.MultiDiGraph(), 'json')) == dict(
        direction='tau-inverse', nodes=[], edges=[],
    )


def test_verify_ar():
    report = verify_section6(bundled('Q1'), max_len=1)
    assert report['string triangles'] == 6
    assert report['boundary'] == 6
    assert report['₊(ψω)'] == 6
    assert report['Jordan sequences'] == 6


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
