# encoding: utf8

# Description {{{1
"""
Perfect complexes over a gentle bound quiver.

A complex is a bounded sequence of direct sums of indecomposable projectives
*P_x*.  Differentials and chain maps are matrices whose entries are formal
combinations of the maps *p_ρ : P_{tρ} → P_{sρ}*.  Entries are reduced with
the path composition of the quiver, so *d² = 0* and the chain map law become
exact identities that do not depend on the field::

    >>> from gentlear import bundled, parse_homotopy_string, string_complex
    >>> x = string_complex(0, parse_homotopy_string(bundled('Q2'), 'b a'))
    >>> print(x)
    0: P3
    1: P2
    2: P1
    d0: [b]
    d1: [a]
    >>> x.is_complex()
    True

Band complexes carry an automorphism *μ* of a vector space *K*; every summand
is then *P_x ⊗ K* and coefficients are *dim K × dim K* blocks.
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
from collections import Counter, namedtuple
from inform import narrate
import numpy as np
from .core import (
    IdentityFailure, NotABand, NotIndecomposable, Settings, SingularMatrix,
    UndefinedComposition,
)
from .homotopy import (
    HomotopyString, as_homotopy_string, enumerate_homotopy_strings,
    hstring_compose, is_homotopy_band,
)
from .linalg import find_invertible


# Summand {{{1
class Summand(namedtuple('Summand', 'vertex dim position')):
    """One summand *P_x ⊗ K* of a term; *position* is its index in the walk."""
    __slots__ = ()

    def __str__(self):
        name = f'P{self.vertex}'
        return name if self.dim == 1 else f'{name}⊗k^{self.dim}'


def _coefficient_text(field, c):
    c = np.asarray(c)
    if c.shape == (1, 1):
        value = c[0, 0]
        return '' if value == 1 else f'{value}·'
    return f'{c.tolist()}·'


# PathMatrix {{{1
class PathMatrix:
    """A map between direct sums of projectives.

    :arg quiver: the bound quiver.
    :arg rows: summands of the codomain.
    :arg cols: summands of the domain.

    The entry at *(i, j)* maps summand *j* to summand *i*; it is a dictionary
    that takes a path *ρ* to the coefficient block of *p_ρ*.
    """

    def __init__(self, quiver, rows, cols, field=None):
        self.quiver = quiver
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.field = field or Settings.field()
        self.entries = {}

    @classmethod
    def identity(cls, quiver, summands, field=None):
        result = cls(quiver, summands, summands, field)
        for i, s in enumerate(result.rows):
            result.add_entry(i, i, quiver.trivial_path(s.vertex), result.field.identity(s.dim))
        return result

    def _empty(self, rows=None, cols=None):
        return PathMatrix(
            self.quiver,
            self.rows if rows is None else rows,
            self.cols if cols is None else cols,
            self.field,
        )

    # entries {{{2
    def add_entry(self, i, j, path, coefficient=1):
        """Add *coefficient · p_path* to entry *(i, j)*.

        :raises IdentityFailure(GentleError, AssertionError):
            the path does not run between the summand vertices.
        """
        field = self.field
        row, col = self.rows[i], self.cols[j]
        if path.target != col.vertex or path.source != row.vertex:
            raise IdentityFailure(
                'entry endpoints do not match summands',
                culprit=f'{path} at ({i}, {j})',
            )
        if np.ndim(coefficient) == 0:
            coefficient = field.scale(coefficient, field.identity(row.dim)) \
                if row.dim == col.dim else field.array(np.full((row.dim, col.dim), coefficient))
        coefficient = field.array(coefficient)
        entry = self.entries.setdefault((i, j), {})
        total = field.add(entry[path], coefficient) if path in entry else coefficient
        if field.is_zero(total):
            entry.pop(path, None)
            if not entry:
                del self.entries[(i, j)]
        else:
            entry[path] = total
        return self

    def items(self):
        """Yield *(i, j, path, coefficient)* in a stable order."""
        for (i, j) in sorted(self.entries):
            entry = self.entries[(i, j)]
            for path in sorted(entry, key=lambda p: (p.length, p.arrows)):
                yield i, j, path, entry[path]

    # algebra {{{2
    def compose(self, other):
        """*self ∘ other*."""
        if len(self.cols) != len(other.rows):
            raise IdentityFailure('maps do not compose', culprit=f'{len(self.cols)} ≠ {len(other.rows)}')
        result = self._empty(self.rows, other.cols)
        by_col = {}
        for i, k, path, c in self.items():
            by_col.setdefault(k, []).append((i, path, c))
        for k, j, inner, c_in in other.items():
            for i, outer, c_out in by_col.get(k, ()):
                path = self.quiver.path_compose(inner, outer)
                if path is not None:
                    result.add_entry(i, j, path, self.field.matmul(c_out, c_in))
        return result

    def __matmul__(self, other):
        return self.compose(other)

    def add(self, other):
        result = self.copy()
        for i, j, path, c in other.items():
            result.add_entry(i, j, path, c)
        return result

    def scale(self, c):
        result = self._empty()
        for i, j, path, coefficient in self.items():
            result.add_entry(i, j, path, self.field.scale(c, coefficient))
        return result

    def neg(self):
        return self.scale(-1)

    def sub(self, other):
        return self.add(other.neg())

    def copy(self):
        result = self._empty()
        for i, j, path, c in self.items():
            result.add_entry(i, j, path, c)
        return result

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, PathMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.sub(other).is_zero()

    __hash__ = None

    # linear coordinates {{{2
    def coordinates(self):
        """The entries as a flat dictionary keyed by *(i, j, path, a, b)*."""
        flat = {}
        for i, j, path, c in self.items():
            for (a, b), value in np.ndenumerate(np.asarray(c)):
                if value:
                    flat[(i, j, path, a, b)] = value
        return flat

    def top(self):
        """Block matrix of the trivial path coefficients.

        A map between sums of indecomposable projectives is invertible iff its
        top is.
        """
        offsets_r = np.cumsum([0] + [s.dim for s in self.rows])
        offsets_c = np.cumsum([0] + [s.dim for s in self.cols])
        result = self.field.zeros(offsets_r[-1], offsets_c[-1])
        for i, j, path, c in self.items():
            if path.is_trivial:
                result[offsets_r[i]:offsets_r[i+1], offsets_c[j]:offsets_c[j+1]] = c
        return result

    def is_invertible(self):
        top = self.top()
        return top.shape[0] == top.shape[1] and self.field.is_invertible(top)

    def to_rows(self):
        """Entries rendered as nested lists of strings."""
        table = [['0'] * len(self.cols) for _ in self.rows]
        terms = {}
        for i, j, path, c in self.items():
            terms.setdefault((i, j), []).append(f'{_coefficient_text(self.field, c)}{path}')
        for (i, j), parts in terms.items():
            table[i][j] = ' + '.join(parts)
        return table

    def __str__(self):
        return '; '.join(', '.join(row) for row in self.to_rows())


# ProjComplex {{{1
class ProjComplex:
    """A bounded complex of projectives.

    :arg quiver: the bound quiver.
    :arg terms: dictionary that maps a degree to its summands.
    :arg differentials:
        dictionary that maps degree *m* to the :class:`PathMatrix`
        *d^m : X^m → X^{m+1}*.
    :arg str name: optional description, for example ``X(0, b a)``.
    """

    def __init__(self, quiver, terms, differentials=None, name=None, field=None):
        self.quiver = quiver
        self.field = field or Settings.field()
        self.terms = {k: tuple(v) for k, v in sorted(terms.items()) if v}
        self.differentials = {}
        for k, d in (differentials or {}).items():
            if not d.is_zero():
                self.differentials[k] = d
        self.name = name

    # access {{{2
    def term(self, degree):
        return self.terms.get(degree, ())

    def d(self, degree):
        if degree in self.differentials:
            return self.differentials[degree]
        return PathMatrix(self.quiver, self.term(degree + 1), self.term(degree), self.field)

    @property
    def degrees(self):
        return sorted(self.terms)

    @property
    def total_rank(self):
        return sum(s.dim for summands in self.terms.values() for s in summands)

    def ranks(self):
        """Dictionary that maps a degree to the multiset of its vertices."""
        result = {}
        for k, summands in self.terms.items():
            counts = result[k] = Counter()
            for s in summands:
                counts[s.vertex] += s.dim
        return result

    def locate(self, position):
        """The *(degree, index)* of the summand at a walk position."""
        for k, summands in self.terms.items():
            for i, s in enumerate(summands):
                if s.position == position:
                    return k, i
        raise IndexError(position)

    # checks {{{2
    def is_complex(self):
        for k in self.degrees:
            if not self.d(k + 1).compose(self.d(k)).is_zero():
                return False
        return True

    def check(self):
        """Raise :class:`IdentityFailure` unless *d² = 0*."""
        for k in self.degrees:
            square = self.d(k + 1).compose(self.d(k))
            if not square.is_zero():
                raise IdentityFailure('d² ≠ 0', culprit=self.name or 'complex', details=f'degree {k}: {square}')
        return self

    # output {{{2
    def __str__(self):
        lines = [f'{k}: ' + ' ⊕ '.join(str(s) for s in self.terms[k]) for k in self.degrees]
        for k in sorted(self.differentials):
            lines.append(f'd{k}: [' + '; '.join(', '.join(r) for r in self.differentials[k].to_rows()) + ']')
        return '\n'.join(lines)

    def to_text(self):
        header = f'{self.name}\n' if self.name else ''
        return header + str(self) + '\n'

    def to_json(self):
        """A JSON serializable description with a stable layout."""
        return dict(
            name=self.name,
            field=str(self.field),
            terms={str(k): [dict(vertex=str(s.vertex), dim=s.dim) for s in self.terms[k]] for k in self.degrees},
            differentials={
                str(k): [
                    dict(row=i, col=j, path=str(path), coefficient=_json_matrix(c))
                    for i, j, path, c in self.differentials[k].items()
                ]
                for k in sorted(self.differentials)
            },
        )

    def __repr__(self):
        return f'ProjComplex({self.name or "?"}: degrees {self.degrees})'


def _json_matrix(c):
    return [[int(v) if v == int(v) else str(v) for v in row] for row in np.asarray(c).tolist()]


# ChainMap {{{1
class ChainMap:
    """A degreewise map between two complexes of projectives."""

    def __init__(self, source, target, components=None, name=None):
        self.source = source
        self.target = target
        self.name = name
        self.components = {}
        for k, f in (components or {}).items():
            if not f.is_zero():
                self.components[k] = f

    @classmethod
    def identity(cls, complex):
        return cls(complex, complex, {
            k: PathMatrix.identity(complex.quiver, complex.term(k), complex.field)
            for k in complex.degrees
        })

    @property
    def field(self):
        return self.source.field

    def component(self, degree):
        if degree in self.components:
            return self.components[degree]
        return PathMatrix(
            self.source.quiver, self.target.term(degree), self.source.term(degree), self.field
        )

    @property
    def degrees(self):
        return sorted(set(self.source.degrees) | set(self.target.degrees))

    def compose(self, other):
        """*self ∘ other*."""
        return ChainMap(other.source, self.target, {
            k: self.component(k).compose(other.component(k)) for k in other.degrees
        })

    def add(self, other):
        return ChainMap(self.source, self.target, {
            k: self.component(k).add(other.component(k)) for k in self.degrees
        })

    def scale(self, c):
        return ChainMap(self.source, self.target, {
            k: f.scale(c) for k, f in self.components.items()
        })

    def residual(self, degree):
        """*d_Y ∘ f − f ∘ d_X* in the given degree."""
        left = self.target.d(degree).compose(self.component(degree))
        right = self.component(degree + 1).compose(self.source.d(degree))
        return left.sub(right)

    def is_chain_map(self):
        return all(self.residual(k).is_zero() for k in range(self.degrees[0] - 1, self.degrees[-1] + 1)) \
            if self.degrees else True

    def check(self):
        if not self.is_chain_map():
            raise IdentityFailure('chain map law fails', culprit=self.name or 'map')
        return self

    def is_isomorphism(self):
        for k in self.degrees:
            if not self.component(k).is_invertible():
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        return all(self.component(k) == other.component(k) for k in set(self.degrees) | set(other.degrees))

    __hash__ = None

    def __str__(self):
        return '\n'.join(f'f{k}: [{self.components[k]}]' for k in sorted(self.components))


# Automorphism {{{1
class Automorphism:
    """An automorphism *μ* of a finite dimensional vector space.

    >>> from gentlear import jordan
    >>> mu = jordan(2, 3)
    >>> mu.dim, mu.jordan_form()
    (2, (2, 3))

    """

    def __init__(self, matrix, field=None):
        self.field = field or Settings.field()
        self.matrix = self.field.array(matrix)
        if self.matrix.ndim != 2 or not self.field.is_invertible(self.matrix):
            raise SingularMatrix(culprit='μ')

    @property
    def dim(self):
        return self.matrix.shape[0]

    def inverse(self):
        return Automorphism(self.field.inverse(self.matrix), self.field)

    def scale(self, c):
        return Automorphism(self.field.scale(c, self.matrix), self.field)

    def _eigenvalues(self):
        if self.field.order:
            return [self.field.scalar(v) for v in range(1, self.field.order)]
        return [self.field.scalar(np.trace(self.matrix)) / self.dim]

    def jordan_form(self):
        """Return *(n, λ)* when *μ* is a single Jordan block *J_n(λ)*.

        :raises NotIndecomposable(GentleError, ValueError):
            *μ* is not a single Jordan block over the field.
        """
        n = self.dim
        field = self.field
        for lam in self._eigenvalues():
            nilpotent = field.sub(self.matrix, field.scale(lam, field.identity(n)))
            if field.is_zero(field.power(nilpotent, n)) and field.rank(nilpotent) == n - 1:
                return n, _plain(lam)
        raise NotIndecomposable('not a single Jordan block', culprit=str(self.matrix.tolist()))

    def is_indecomposable(self):
        try:
            self.jordan_form()
            return True
        except NotIndecomposable:
            return False

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.field.equal(self.matrix, other.matrix)

    __hash__ = None

    def __str__(self):
        try:
            n, lam = self.jordan_form()
            return f'J{n}({lam})'
        except NotIndecomposable:
            return str(self.matrix.tolist())


def _plain(value):
    try:
        if value == int(value):
            return int(value)
    except (TypeError, ValueError):
        pass
    return value


def jordan(n, lam, field=None):
    """The Jordan block *J_n(λ)*: *λ* on the diagonal, 1 above it."""
    field = field or Settings.field()
    m = field.scale(lam, field.identity(n))
    for i in range(n - 1):
        m[i, i+1] = field.scalar(1)
    return Automorphism(m, field)


def as_automorphism(mu, field=None):
    if isinstance(mu, Automorphism):
        return mu
    return Automorphism(mu, field)


# string and band complexes {{{1
def _piece_path(w, j):
    """The path underlying piece *j* and whether it runs forward."""
    piece = w.piece(j)
    forward = w.piece_is_path(j)
    arrows = piece.arrows if forward else piece.inverse().arrows
    return w.quiver.path(*arrows), forward


def _assemble(w, m, positions, wrap, dim, coefficient, name):
    q = w.quiver
    field = Settings.field()
    terms = {}
    for i in positions:
        terms.setdefault(m + w.degrees[i], []).append(Summand(w.position_vertex(i), dim, i))
    complex = ProjComplex(q, terms, name=name, field=field)
    index = {s.position: (k, n) for k, summands in complex.terms.items() for n, s in enumerate(summands)}
    differentials = {}
    for j in range(1, w.L + 1):
        path, forward = _piece_path(w, j)
        before = wrap(j - 1)
        start, stop = (before, j) if forward else (j, before)
        k, col = index[start]
        k2, row = index[stop]
        assert k2 == k + 1
        if k not in differentials:
            differentials[k] = PathMatrix(q, complex.term(k + 1), complex.term(k), field)
        differentials[k].add_entry(row, col, path, coefficient(j))
    complex.differentials = {k: d for k, d in differentials.items() if not d.is_zero()}
    return complex


def string_complex(m, w):
    """The string complex *X_{m,ω}*.

    Position *i* of the walk contributes *P_{s ω^{[i]}}* in degree
    *m + deg ω^{[i]}*; every directed piece gives one entry of the
    differential.
    """
    w = as_homotopy_string(w)
    field = Settings.field()
    return _assemble(
        w, m, range(w.L + 1), lambda i: i, 1,
        lambda j: field.identity(1), f'X({m}, {w})',
    )


def band_complex(m, w, mu):
    """The band complex *Y_{m,ω,μ}*.

    Positions run from 1 to *L* with position 0 identified with *L*; *μ* sits
    on the entry of the first piece.

    :raises NotABand(GentleError, ValueError): *ω* is not a homotopy band.
    :raises SingularMatrix(GentleError, ArithmeticError): *μ* is singular.
    """
    w = as_homotopy_string(w)
    if not is_homotopy_band(w):
        raise NotABand(str(w))
    mu = as_automorphism(mu)
    field = mu.field
    identity = field.identity(mu.dim)
    return _assemble(
        w, m, range(1, w.L + 1), lambda i: i if i else w.L, mu.dim,
        lambda j: mu.matrix if j == 1 else identity, f'Y({m}, {w}, {mu})',
    )


def stalk(quiver, vertex, degree=0, dim=1):
    """*P_x* concentrated in a single degree."""
    return ProjComplex(quiver, {degree: [Summand(vertex, dim, 0)]}, name=f'P{vertex}[{-degree}]')


# Υ and the structural maps {{{1
def upsilon(m, w):
    """The isomorphism *Υ_{m,ω} : X_{m,ω} → X_{m + deg ω, ω⁻¹}*.

    >>> from gentlear import bundled, parse_homotopy_string, upsilon
    >>> u = upsilon(0, parse_homotopy_string(bundled('Q1'), 'a'))
    >>> print(u.target.name, u.is_chain_map(), u.is_isomorphism())
    X(1, a-) True True

    """
    w = as_homotopy_string(w)
    source = string_complex(m, w)
    target = string_complex(m + w.deg, w.inverse())
    components = {}
    for j in range(w.L + 1):
        k, col = source.locate(j)
        _, row = target.locate(w.L - j)
        if k not in components:
            components[k] = PathMatrix(w.quiver, target.term(k), source.term(k), source.field)
        vertex = source.term(k)[col].vertex
        components[k].add_entry(row, col, w.quiver.trivial_path(vertex), 1)
    return ChainMap(source, target, components, name=f'Υ({m}, {w})')


def _as_path(quiver, sigma):
    if hasattr(sigma, 'letters'):
        if not sigma.is_direct:
            raise UndefinedComposition(str(sigma), '', context='a path of positive length')
        return quiver.path(*sigma.arrows)
    if isinstance(sigma, str):
        return quiver.path(*sigma.split())
    return sigma


def _path_walk(quiver, path):
    return HomotopyString.of_arrows(quiver, path.arrows)


def map_F_prime(m, sigma, w):
    """*F′_{m,σ,ω} : X_{m, 1_{tσ,−Tσ}} → X_{m,ω}*, the single entry *p_σ*.

    :raises UndefinedComposition(GentleError, ValueError): *σω* is undefined.
    """
    w = as_homotopy_string(w)
    q = w.quiver
    path = _as_path(q, sigma)
    walk = _path_walk(q, path)
    if hstring_compose(walk, w) is None:
        raise UndefinedComposition(str(walk), str(w), context='homotopy strings')
    source = string_complex(m, HomotopyString(q, (), walk.t, -walk.T))
    target = string_complex(m, w)
    _, row = target.locate(0)
    f = PathMatrix(q, target.term(m), source.term(m), source.field)
    f.add_entry(row, 0, path, 1)
    return ChainMap(source, target, {m: f}, name=f"F′({m}, {walk}, {w})")


def map_F_dblprime(m, sigma, w):
    """*F″_{m,σ,ω} : X_{m,ω} → X_{m, 1_{sσ,Sσ}}*, the single entry *p_σ*.

    :raises UndefinedComposition(GentleError, ValueError): *σ⁻¹ω* is undefined.
    """
    w = as_homotopy_string(w)
    q = w.quiver
    path = _as_path(q, sigma)
    walk = _path_walk(q, path)
    if hstring_compose(walk.inverse(), w) is None:
        raise UndefinedComposition(f'{walk.inverse()}', str(w), context='homotopy strings')
    source = string_complex(m, w)
    target = string_complex(m, HomotopyString(q, (), walk.s, walk.S))
    _, col = source.locate(0)
    f = PathMatrix(q, target.term(m), source.term(m), source.field)
    f.add_entry(0, col, path, 1)
    return ChainMap(source, target, {m: f}, name=f"F″({m}, {walk}, {w})")


def map_G_prime(m, sigma, w):
    """*G′_{m,σ,ω} : X_{m + deg ω, 1_{tσ,Tσ}} → X_{m,ω}*, defined when *ωσ⁻¹* is."""
    w = as_homotopy_string(w)
    q = w.quiver
    walk = _path_walk(q, _as_path(q, sigma))
    n = m + w.deg
    f = upsilon(n, w.inverse()).compose(
        map_F_prime(n, sigma, w.inverse())
    ).compose(upsilon(n, HomotopyString(q, (), walk.t, walk.T)))
    f.name = f"G′({m}, {walk}, {w})"
    return f


def map_G_dblprime(m, sigma, w):
    """*G″_{m,σ,ω} : X_{m,ω} → X_{m + deg ω, 1_{sσ,−Sσ}}*, defined when *ωσ* is."""
    w = as_homotopy_string(w)
    q = w.quiver
    walk = _path_walk(q, _as_path(q, sigma))
    n = m + w.deg
    f = upsilon(n, HomotopyString(q, (), walk.s, walk.S)).compose(
        map_F_dblprime(n, sigma, w.inverse())
    ).compose(upsilon(m, w))
    f.name = f"G″({m}, {walk}, {w})"
    return f


# shift and cone {{{1
def shift(x, n):
    """*X[n]*: *(X[n])^k = X^{k+n}* with the differential multiplied by *(−1)^n*."""
    sign = -1 if n % 2 else 1
    return ProjComplex(
        x.quiver,
        {k - n: v for k, v in x.terms.items()},
        {k - n: d.scale(sign) for k, d in x.differentials.items()},
        name=f'{x.name}[{n}]' if x.name else None,
        field=x.field,
    )


def mapping_cone(f):
    """The mapping cone of *f : X → Y*.

    *C^k = X^{k+1} ⊕ Y^k* with differential *[[−d_X, 0], [f, d_Y]]*.
    """
    x, y = f.source, f.target
    q = x.quiver
    degrees = sorted({k - 1 for k in x.degrees} | set(y.degrees))
    terms = {k: list(x.term(k + 1)) + list(y.term(k)) for k in degrees}
    cone = ProjComplex(q, terms, name=f'cone({f.name})' if f.name else None, field=x.field)
    differentials = {}
    for k in degrees:
        d = PathMatrix(q, cone.term(k + 1), cone.term(k), x.field)
        nx0, nx1 = len(x.term(k + 1)), len(x.term(k + 2))
        for i, j, path, c in x.d(k + 1).items():
            d.add_entry(i, j, path, x.field.neg(c))
        for i, j, path, c in f.component(k + 1).items():
            d.add_entry(nx1 + i, j, path, c)
        for i, j, path, c in y.d(k).items():
            d.add_entry(nx1 + i, nx0 + j, path, c)
        differentials[k] = d
    cone.differentials = {k: d for k, d in differentials.items() if not d.is_zero()}
    return cone


# chain map spaces and isomorphism {{{1
def chain_map_space(x, y):
    """A basis of the space of chain maps *X → Y*."""
    q = x.quiver
    field = x.field
    degrees = sorted(set(x.degrees) & set(y.degrees))
    unknowns = []
    for k in degrees:
        for i, row in enumerate(y.term(k)):
            for j, col in enumerate(x.term(k)):
                for path in q.paths_between(row.vertex, col.vertex):
                    for a in range(row.dim):
                        for b in range(col.dim):
                            unit = field.zeros(row.dim, col.dim)
                            unit[a, b] = field.scalar(1)
                            f = PathMatrix(q, y.term(k), x.term(k), field)
                            f.add_entry(i, j, path, unit)
                            unknowns.append(ChainMap(x, y, {k: f}))
    if not unknowns:
        return []
    span = range(min(x.degrees + y.degrees) - 1, max(x.degrees + y.degrees) + 1)
    columns = []
    keys = {}
    for f in unknowns:
        column = {}
        for k in span:
            for key, value in f.residual(k).coordinates().items():
                column[(k,) + key] = value
                keys.setdefault((k,) + key, len(keys))
        columns.append(column)
    system = field.zeros(len(keys), len(unknowns))
    for c, column in enumerate(columns):
        for key, value in column.items():
            system[keys[key], c] = value
    null = field.nullspace(system)
    basis = []
    for n in range(null.shape[1]):
        total = ChainMap(x, y)
        for c, value in enumerate(null[:, n]):
            if value:
                total = total.add(unknowns[c].scale(value))
        basis.append(total)
    return basis


def _combine(basis, x, y):
    def combine(coefficients):
        total = ChainMap(x, y)
        for c, f in zip(coefficients, basis):
            if c:
                total = total.add(f.scale(c))
        return total
    return combine


def find_isomorphism(x, y):
    """A chain isomorphism *X → Y*, or *None* when none was found."""
    if x.ranks() != y.ranks():
        return None
    if not x.terms:
        return ChainMap(x, y)
    basis = chain_map_space(x, y)
    return find_invertible(basis, _combine(basis, x, y), ChainMap.is_isomorphism, x.field)


def complexes_isomorphic(x, y):
    """True if the complexes are isomorphic as complexes.

    >>> from gentlear import bundled, parse_homotopy_string, string_complex, shift
    >>> from gentlear import complexes_isomorphic
    >>> w = parse_homotopy_string(bundled('Q2'), 'b a')
    >>> complexes_isomorphic(string_complex(1, w), shift(string_complex(0, w), -1))
    True

    """
    return find_isomorphism(x, y) is not None


# verification {{{1
def structural_maps(w):
    """Every F/G map attached to *ω* and an arrow-bounded path *σ*."""
    w = as_homotopy_string(w)
    q = w.quiver
    maps = []
    for path in q.paths():
        if path.is_trivial:
            continue
        walk = _path_walk(q, path)
        if hstring_compose(walk, w) is not None:
            maps.append(map_F_prime(0, path, w))
        if hstring_compose(walk.inverse(), w) is not None:
            maps.append(map_F_dblprime(0, path, w))
        if hstring_compose(w, walk.inverse()) is not None:
            maps.append(map_G_prime(0, path, w))
        if hstring_compose(w, walk) is not None:
            maps.append(map_G_dblprime(0, path, w))
    return maps


def verify_complexes(quiver, max_len=None, shifts=range(-2, 3), automorphisms=None):
    """Check *d² = 0*, ranks, *Υ∘Υ = id* and the F/G maps on an enumeration.

    Returns a :class:`collections.Counter` of passed checks.

    :raises IdentityFailure(GentleError, AssertionError): a check fails.
    """
    max_len = Settings.get_pref('max_len') if max_len is None else max_len
    if automorphisms is None:
        automorphisms = [jordan(1, 1), jordan(1, 2), jordan(2, 1)]
    report = Counter()
    for w in enumerate_homotopy_strings(quiver, max_len):
        for m in shifts:
            x = string_complex(m, w).check()
            if x.total_rank != w.L + 1:
                raise IdentityFailure('rank of X differs from L + 1', culprit=str(w))
            report['d² = 0'] += 1
        u = upsilon(0, w).check()
        back = upsilon(w.deg, w.inverse())
        if back.compose(u) != ChainMap.identity(u.source):
            raise IdentityFailure('Υ∘Υ ≠ id', culprit=str(w))
        report['Υ∘Υ = id'] += 1
        for f in structural_maps(w):
            f.check()
            report['F/G chain maps'] += 1
        if w.letters and is_homotopy_band(w):
            for mu in automorphisms:
                y = band_complex(0, w, mu).check()
                if y.total_rank != w.L * mu.dim:
                    raise IdentityFailure('rank of Y differs from L·dim K', culprit=str(w))
                report['band d² = 0'] += 1
    narrate(f'{quiver.name}: complexes verified', dict(report))
    return report
