# encoding: utf8

# Description {{{1
"""
Bound quivers with monomial relations of length two.

A quiver is read from a small line oriented text format::

    # the A3 quiver with one relation
    vertex 1
    vertex 2
    vertex 3
    arrow a : 1 -> 2
    arrow b : 2 -> 3
    relation b a

``relation b a`` states that the path *b a* (first *a*, then *b*) is zero.
Paths are written in composition order: the first arrow is the one nearest
the target.

    >>> from gentlear import parse_quiver
    >>> q = parse_quiver('''
    ...     vertex 1
    ...     vertex 2
    ...     vertex 3
    ...     arrow a : 1 -> 2
    ...     arrow b : 2 -> 3
    ...     relation b a
    ... ''')
    >>> print(q.S('b'), q.T('a'))
    1 1
    >>> print(q.path_compose(q.path('b'), q.path('a')))
    None
    >>> print(*q.maximal_paths())
    a b

"""

# MIT License {{{1
# Copyright (C) 2024-2026 The gentlear developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

# Imports {{{1
import re
from collections import namedtuple
from functools import cached_property
from pathlib import Path as FilePath
from .core import (
    NotGentle, QuiverError, QuiverSyntaxError, Settings, UnsatisfiableSigns, WalkError,
)


# Globals {{{1
IDENTIFIER = r"[\w']+"
BUNDLED = FilePath(__file__).parent / 'quivers'

_VERTEX = re.compile(rf"vertex\s+(?P<id>{IDENTIFIER})\s*$")
_ARROW = re.compile(
    rf"arrow\s+(?P<id>{IDENTIFIER})\s*:\s*(?P<src>{IDENTIFIER})\s*->\s*(?P<tgt>{IDENTIFIER})\s*$"
)
_RELATION = re.compile(rf"relation\s+(?P<first>{IDENTIFIER})\s+(?P<second>{IDENTIFIER})\s*$")
_KEYWORD = re.compile(r"(?P<kw>\S+)")


# Small types {{{1
StringFunctions = namedtuple('StringFunctions', 'S T')
StringFunctions.__doc__ = "Sign maps *S* and *T* from arrow ids to ±1."

Violation = namedtuple('Violation', 'clause culprit message')


class GentleReport(list):
    """List of :class:`Violation`; empty exactly when the quiver is gentle."""

    @property
    def is_gentle(self):
        return not self

    def __str__(self):
        if not self:
            return 'gentle'
        return '; '.join(f'({v.clause}) {v.culprit}: {v.message}' for v in self)


# Path {{{1
class Path(namedtuple('Path', 'arrows source target')):
    """A path in a bound quiver.

    *arrows* is the tuple of arrows in composition order, so ``arrows[0]``
    ends at *target* and ``arrows[-1]`` starts at *source*.  A trivial path
    has no arrows and equal source and target.
    """
    __slots__ = ()

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def __str__(self):
        if self.arrows:
            return ' '.join(str(a) for a in self.arrows)
        return f'1_{self.source}'


# BoundQuiver {{{1
class BoundQuiver:
    """A finite quiver with relations given by pairs of arrows.

    :arg vertices:
        The vertex ids, in order.
    :arg arrows:
        A sequence of triples *(id, source, target)*.
    :arg relations:
        A sequence of pairs *(α′, α″)* meaning the path α′α″ is zero; it
        requires *s α′ = t α″*.
    :arg str name:
        Optional name used in reports.

    :raises QuiverError(GentleError, ValueError):
        Duplicate ids, dangling endpoints, unknown arrows in relations or
        relations that do not compose.
    """

    def __init__(self, vertices, arrows, relations=(), name=None, string_functions=None):
        self.name = name
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            dups = sorted({v for v in self.vertices if self.vertices.count(v) > 1})
            raise QuiverError('duplicate vertex', culprit=', '.join(dups))
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}

        self._ends = {}
        order = []
        for arrow, src, tgt in arrows:
            if arrow in self._ends or arrow in self._vertex_index:
                raise QuiverError('duplicate name', culprit=arrow)
            for end in (src, tgt):
                if end not in self._vertex_index:
                    raise QuiverError(f'unknown endpoint {end}', culprit=arrow)
            self._ends[arrow] = (src, tgt)
            order.append(arrow)
        self.arrows = tuple(order)
        self._arrow_index = {a: i for i, a in enumerate(self.arrows)}

        rels = []
        for first, second in relations:
            for a in (first, second):
                if a not in self._ends:
                    raise QuiverError('unknown arrow in relation', culprit=a)
            if self.source(first) != self.target(second):
                raise QuiverError('relation does not compose', culprit=f'{first} {second}')
            if (first, second) in rels:
                raise QuiverError('duplicate relation', culprit=f'{first} {second}')
            rels.append((first, second))
        self.relations = tuple(rels)
        self._relation_set = frozenset(rels)

        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._out[self.source(a)].append(a)
            self._in[self.target(a)].append(a)
        if string_functions is not None:
            self.__dict__['string_functions'] = string_functions

    # loaders {{{2
    @classmethod
    def from_file(cls, path):
        """Read a quiver from a file in the text format."""
        path = FilePath(path)
        return parse_quiver(path.read_text(encoding='utf8'), name=path.stem)

    def __repr__(self):
        return f'BoundQuiver({self.name or "?"}: {len(self.vertices)} vertices, {len(self.arrows)} arrows, {len(self.relations)} relations)'

    # incidence {{{2
    def source(self, arrow):
        try:
            return self._ends[arrow][0]
        except KeyError:
            raise WalkError('unknown arrow', culprit=arrow)

    def target(self, arrow):
        try:
            return self._ends[arrow][1]
        except KeyError:
            raise WalkError('unknown arrow', culprit=arrow)

    def arrows_from(self, vertex):
        return tuple(self._out[vertex])

    def arrows_to(self, vertex):
        return tuple(self._in[vertex])

    def has_arrow(self, arrow):
        return arrow in self._ends

    def has_vertex(self, vertex):
        return vertex in self._vertex_index

    def arrow_key(self, arrow):
        return self._arrow_index[arrow]

    def vertex_key(self, vertex):
        return self._vertex_index[vertex]

    def arrow_name(self, arrow):
        return str(arrow)

    def is_relation(self, first, second):
        """True if the length two path *first second* is a relation."""
        return (first, second) in self._relation_set

    def is_path(self, arrows):
        """True if the arrow sequence composes and avoids every relation."""
        for first, second in zip(arrows, arrows[1:]):
            if self.source(first) != self.target(second):
                return False
            if self.is_relation(first, second):
                return False
        return True

    @property
    def max_relation_length(self):
        return 2

    # string functions {{{2
    @cached_property
    def string_functions(self):
        return compute_string_functions(self)

    def S(self, arrow):
        return self.string_functions.S[arrow]

    def T(self, arrow):
        return self.string_functions.T[arrow]

    def with_string_functions(self, string_functions):
        """Return a copy of this quiver that uses the given string functions."""
        arrows = [(a, *self._ends[a]) for a in self.arrows]
        return BoundQuiver(
            self.vertices, arrows, self.relations, self.name, string_functions
        )

    # paths {{{2
    def path(self, *arrows, vertex=None):
        """Build a path from arrow ids, or the trivial path at *vertex*."""
        if not arrows:
            if vertex not in self._vertex_index:
                raise WalkError('unknown vertex', culprit=vertex)
            return Path((), vertex, vertex)
        if not self.is_path(arrows):
            raise WalkError('not a path', culprit=' '.join(arrows))
        return Path(tuple(arrows), self.source(arrows[-1]), self.target(arrows[0]))

    def trivial_path(self, vertex):
        return self.path(vertex=vertex)

    def path_compose(self, p, r):
        """Compose paths, *p* after *r*.

        Returns the concatenation, or *None* when it contains a relation
        (that is, the product is zero in the path algebra).

        :raises WalkError(GentleError, ValueError):
            *s p ≠ t r*.
        """
        if p.source != r.target:
            raise WalkError('paths do not compose', culprit=f'{p} ∘ {r}')
        if p.is_trivial:
            return r
        if r.is_trivial:
            return p
        if self.is_relation(p.arrows[-1], r.arrows[0]):
            return None
        return Path(p.arrows + r.arrows, r.source, p.target)

    def paths(self):
        """All paths, trivial ones first, then by increasing length.

        :raises NotGentle(GentleError, ValueError):
            the quiver has infinitely many paths.
        """
        return list(self._paths)

    @cached_property
    def _paths(self):
        result = [Path((), v, v) for v in self.vertices]
        layer = [Path((a,), self.source(a), self.target(a)) for a in self.arrows]
        while layer:
            result.extend(layer)
            longer = []
            for p in layer:
                for b in self.arrows_to(p.source):
                    if self.is_relation(p.arrows[-1], b):
                        continue
                    if b in p.arrows:
                        raise NotGentle(report=f'path {p} {b} repeats an arrow')
                    longer.append(Path(p.arrows + (b,), self.source(b), p.target))
            layer = longer
        return tuple(result)

    def paths_between(self, source, target):
        return [p for p in self._paths if p.source == source and p.target == target]

    def dimension(self):
        """Dimension of the path algebra."""
        return len(self._paths)

    def maximal_paths(self):
        """The paths of positive length that extend on neither side."""
        maximal = []
        for p in self._paths:
            if p.is_trivial:
                continue
            left = any(
                not self.is_relation(b, p.arrows[0]) for b in self.arrows_from(p.target)
            )
            right = any(
                not self.is_relation(p.arrows[-1], b) for b in self.arrows_to(p.source)
            )
            if not left and not right:
                maximal.append(p)
        return maximal

    # projective and injective representations {{{2
    def projective_paths(self, vertex):
        """Basis of *P_x*: the paths that start at *x*."""
        return [p for p in self._paths if p.source == vertex]

    def injective_paths(self, vertex):
        """Basis of the dual of *Q_x*: the paths that end at *x*."""
        return [p for p in self._paths if p.target == vertex]

    def left_multiply(self, arrow, path):
        """The product *arrow · path*, or *None* when it vanishes."""
        return self.path_compose(self.path(arrow), path) if self.source(arrow) == path.target else None

    def projective_action(self, vertex, arrow, field=None):
        """The matrix of *arrow* on the basis :meth:`projective_paths` of *P_x*."""
        field = field or Settings.field()
        paths = self.projective_paths(vertex)
        index = {p.arrows: i for i, p in enumerate(paths)}
        m = field.zeros(len(paths), len(paths))
        for i, p in enumerate(paths):
            product = self.left_multiply(arrow, p)
            if product is not None:
                m[index[product.arrows], i] = 1
        return m

    def path_map(self, rho, field=None):
        """The matrix of *p_ρ : P_{tρ} → P_{sρ}*, *ξ ↦ ξρ*."""
        field = field or Settings.field()
        source = self.projective_paths(rho.target)
        target = self.projective_paths(rho.source)
        index = {p.arrows: i for i, p in enumerate(target)}
        m = field.zeros(len(target), len(source))
        for j, xi in enumerate(source):
            eta = self.path_compose(xi, rho)
            if eta is not None:
                m[index[eta.arrows], j] = 1
        return m

    # output {{{2
    def to_text(self):
        lines = [f'vertex {v}' for v in self.vertices]
        lines += [f'arrow {a} : {self.source(a)} -> {self.target(a)}' for a in self.arrows]
        lines += [f'relation {f} {s}' for f, s in self.relations]
        return '\n'.join(lines) + '\n'

    def to_dot(self):
        lines = [f'digraph "{self.name or "quiver"}" {{']
        for v in self.vertices:
            lines.append(f'    "{v}";')
        for a in self.arrows:
            lines.append(f'    "{self.source(a)}" -> "{self.target(a)}" [label="{a}"];')
        for f, s in self.relations:
            lines.append(f'    // relation {f} {s}')
        lines.append('}')
        return '\n'.join(lines) + '\n'


# parse_quiver {{{1
def parse_quiver(text, name=None):
    """Parse the text format into a :class:`BoundQuiver`.

    Blank lines and ``#`` comments are ignored.

    :raises QuiverSyntaxError(GentleError, ValueError):
        A line could not be parsed; *line* and *col* locate the problem.
    :raises QuiverError(GentleError, ValueError):
        The description is structurally invalid.
    """
    vertices, arrows, relations = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        col = len(line) - len(stripped) + 1
        keyword = _KEYWORD.match(stripped).group('kw')
        if keyword == 'vertex':
            match = _VERTEX.match(stripped)
            if match:
                vertices.append(match.group('id'))
                continue
        elif keyword == 'arrow':
            match = _ARROW.match(stripped)
            if match:
                arrows.append((match.group('id'), match.group('src'), match.group('tgt')))
                continue
        elif keyword == 'relation':
            match = _RELATION.match(stripped)
            if match:
                relations.append((match.group('first'), match.group('second')))
                continue
        else:
            raise QuiverSyntaxError(f'unknown keyword ‘{keyword}’', line=lineno, col=col)
        raise QuiverSyntaxError(
            f'malformed {keyword}', line=lineno, col=col + len(keyword) + 1
        )

    seen = set()
    for v in vertices:
        if v in seen:
            raise QuiverError('duplicate vertex', culprit=v)
        seen.add(v)
    return BoundQuiver(vertices, arrows, relations, name=name)


def bundled(name):
    """Load one of the bundled quivers: ``'Q1'``, ``'Q2'`` or ``'Q3'``."""
    path = BUNDLED / f'{name.lower()}.quiver'
    if not path.exists():
        raise QuiverError('no such bundled quiver', culprit=name)
    q = BoundQuiver.from_file(path)
    q.name = name.upper()
    return q


# validate_gentle {{{1
def check_almost_gentle(q, arrows=None):
    """Check the three almost gentle clauses.

    Works with any object that offers the quiver incidence protocol
    (*source*, *target*, *arrows_from*, *arrows_to*, *is_relation*).  Only
    the given *arrows* (default: all arrows of *q*) are examined.
    """
    arrows = q.arrows if arrows is None else arrows
    report = GentleReport()
    vertices = []
    for a in arrows:
        for v in (q.source(a), q.target(a)):
            if v not in vertices:
                vertices.append(v)
    for v in vertices:
        if len(q.arrows_from(v)) > 2:
            report.append(Violation(1, v, 'more than two arrows start here'))
        if len(q.arrows_to(v)) > 2:
            report.append(Violation(1, v, 'more than two arrows end here'))
    for a in arrows:
        after = q.arrows_from(q.target(a))
        before = q.arrows_to(q.source(a))
        if sum(not q.is_relation(b, a) for b in after) > 1:
            report.append(Violation(2, a, 'two non-relation continuations at the target'))
        if sum(not q.is_relation(a, b) for b in before) > 1:
            report.append(Violation(2, a, 'two non-relation continuations at the source'))
        if sum(q.is_relation(b, a) for b in after) > 1:
            report.append(Violation(3, a, 'two relation continuations at the target'))
        if sum(q.is_relation(a, b) for b in before) > 1:
            report.append(Violation(3, a, 'two relation continuations at the source'))
    return report


def validate_gentle(q):
    """Report every violated gentle condition.

    Returns a :class:`GentleReport`, empty exactly when *q* is gentle.  Each
    violation names the clause (1–3 of the almost gentle conditions, or
    *'admissible'* when some path never stops) and the culprit.

    >>> from gentlear import bundled, validate_gentle
    >>> print(validate_gentle(bundled('Q2')))
    gentle

    """
    report = check_almost_gentle(q)
    isolated = [v for v in q.vertices if not q.arrows_from(v) and not q.arrows_to(v)]
    for v in isolated:
        report.append(Violation('isolated', v, 'vertex has no arrows'))
    try:
        q.paths()
    except NotGentle as e:
        report.append(Violation('admissible', q.name or 'quiver', e.kwargs['report']))
    return report


def require_gentle(q):
    report = validate_gentle(q)
    if report:
        raise NotGentle(report=str(report))
    return q


def is_almost_gentle(q, S=None, T=None, arrows=None):
    """True if *q* is almost gentle and *S*, *T* are string functions for it.

    *S* and *T* map arrows to ±1; they default to those of *q*.
    """
    sf = StringFunctions(S, T) if S is not None and T is not None else None
    return not check_almost_gentle(q, arrows) and not check_string_functions(q, sf, arrows)


# string functions {{{1
def _sign_relation(q, first, second):
    # a full path of length 2 carries the signs of a path
    full = getattr(q, 'is_full_path', None)
    return q.is_relation(first, second) and not (full and full((first, second)))


def _sign_constraints(q):
    # yields (var1, var2, same) with variables ('S'|'T', arrow)
    for v in q.vertices:
        out = q.arrows_from(v)
        for i, a in enumerate(out):
            for b in out[i+1:]:
                yield ('S', a), ('S', b), False
        into = q.arrows_to(v)
        for i, a in enumerate(into):
            for b in into[i+1:]:
                yield ('T', a), ('T', b), False
    for first in q.arrows:
        for second in q.arrows_to(q.source(first)):
            yield ('S', first), ('T', second), _sign_relation(q, first, second)


def compute_string_functions(q):
    """Deterministic string functions for an almost gentle quiver.

    Variables are visited in the order *S(α₁), T(α₁), S(α₂), …*; the first
    unassigned variable of each connected constraint component gets +1.

    :raises UnsatisfiableSigns(GentleError, ValueError):
        the constraints are contradictory.
    """
    graph = {}
    for u, v, same in _sign_constraints(q):
        graph.setdefault(u, []).append((v, same))
        graph.setdefault(v, []).append((u, same))
    value = {}
    for a in q.arrows:
        for var in (('S', a), ('T', a)):
            if var in value:
                continue
            value[var] = 1
            stack = [var]
            while stack:
                u = stack.pop()
                for v, same in graph.get(u, ()):
                    wanted = value[u] if same else -value[u]
                    if v not in value:
                        value[v] = wanted
                        stack.append(v)
                    elif value[v] != wanted:
                        raise UnsatisfiableSigns(f'{v[0]}({v[1]})')
    return StringFunctions(
        {a: value['S', a] for a in q.arrows},
        {a: value['T', a] for a in q.arrows},
    )


def check_string_functions(q, sf=None, arrows=None):
    """Independently re-test the four string function conditions.

    Returns a :class:`GentleReport` of violated conditions.
    """
    S = (lambda a: sf.S[a]) if sf else q.S
    T = (lambda a: sf.T[a]) if sf else q.T
    arrows = q.arrows if arrows is None else list(arrows)
    report = GentleReport()
    for a in arrows:
        for b in arrows:
            if a == b:
                continue
            if q.source(a) == q.source(b) and S(a) != -S(b):
                report.append(Violation(1, f'{a}, {b}', 'shared source needs opposite S'))
            if q.target(a) == q.target(b) and T(a) != -T(b):
                report.append(Violation(2, f'{a}, {b}', 'shared target needs opposite T'))
    arrow_set = set(arrows)
    for a in arrows:
        for b in q.arrows_to(q.source(a)):
            if b not in arrow_set:
                continue
            if _sign_relation(q, a, b):
                if S(a) != T(b):
                    report.append(Violation(4, f'{a} {b}', 'relation needs S = T'))
            elif S(a) != -T(b):
                report.append(Violation(3, f'{a} {b}', 'composable pair needs S = −T'))
    return report
