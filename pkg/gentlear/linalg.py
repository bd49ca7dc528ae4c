# encoding: utf8

# Description {{{1
"""
Exact linear algebra over prime fields and the rationals.

Matrices are numpy arrays.  Over ``F_p`` they hold ``int64`` entries reduced
modulo *p*; over ``Q`` they are object arrays of
:class:`fractions.Fraction`.  A field object owns the reduction rule and the
elimination routines, so code above this module never cares which field is
in use::

    >>> from gentlear.linalg import make_field
    >>> F5 = make_field('F5')
    >>> F5.rank([[1, 2], [2, 4]])
    1
    >>> F5.inverse([[2]]).tolist()
    [[3]]

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
import itertools
from fractions import Fraction
from functools import lru_cache
import numpy as np
from .core import FieldError, SingularMatrix, Settings


# Field base class {{{1
class Field:
    """Common elimination code; subclasses supply the arithmetic."""

    name = None
    order = None
    dtype = None

    def __repr__(self):
        return f'{self.__class__.__name__}({self.name!r})'

    def __str__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    # construction {{{2
    def array(self, data):
        """Convert *data* to a normalized 2-d (or 1-d) array."""
        return self.normalize(np.array(data, dtype=self.dtype))

    def zeros(self, rows, cols):
        return self.normalize(np.zeros((rows, cols), dtype=self.dtype))

    def identity(self, n):
        return self.normalize(np.eye(n, dtype=int).astype(self.dtype))

    def scalar(self, value):
        return self.array([[value]])[0, 0]

    # arithmetic {{{2
    def matmul(self, a, b):
        a = np.asarray(a, dtype=self.dtype)
        b = np.asarray(b, dtype=self.dtype)
        if a.shape[-1] == 0:
            return self.zeros(a.shape[0], b.shape[-1]) if b.ndim == 2 else \
                self.normalize(np.zeros(a.shape[0], dtype=self.dtype))
        return self.normalize(a @ b)

    def chain(self, *matrices):
        """Product of matrices, left to right."""
        result = matrices[0]
        for m in matrices[1:]:
            result = self.matmul(result, m)
        return result

    def add(self, a, b):
        return self.normalize(np.asarray(a, dtype=self.dtype) + np.asarray(b, dtype=self.dtype))

    def sub(self, a, b):
        return self.normalize(np.asarray(a, dtype=self.dtype) - np.asarray(b, dtype=self.dtype))

    def scale(self, c, a):
        return self.normalize(np.asarray(a, dtype=self.dtype) * c)

    def neg(self, a):
        return self.normalize(-np.asarray(a, dtype=self.dtype))

    def power(self, a, n):
        if n < 0:
            return self.power(self.inverse(a), -n)
        result = self.identity(len(a))
        for _ in range(n):
            result = self.matmul(result, a)
        return result

    def is_zero(self, a):
        return np.count_nonzero(np.asarray(a)) == 0

    def equal(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        return a.shape == b.shape and self.is_zero(self.sub(a, b))

    # elimination {{{2
    def rref(self, a):
        """Reduced row echelon form.

        Returns the reduced matrix and the list of pivot columns.
        """
        m = self.array(a).copy()
        if m.ndim != 2:
            m = m.reshape(len(m), -1)
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nonzero = [i for i in range(r, rows) if m[i, c] != 0]
            if not nonzero:
                continue
            i = nonzero[0]
            if i != r:
                m[[r, i]] = m[[i, r]]
            m[r] = self.normalize(m[r] * self.inv(m[r, c]))
            column = m[:, c].copy()
            column[r] = 0
            if np.count_nonzero(column):
                m = self.normalize(m - np.outer(column, m[r]))
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self, a):
        a = np.asarray(a)
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def nullspace(self, a):
        """Basis of the null space, as the columns of the returned matrix."""
        a = np.asarray(a, dtype=self.dtype)
        rows, cols = a.shape
        if rows == 0:
            return self.identity(cols)
        r, pivots = self.rref(a)
        free = [c for c in range(cols) if c not in pivots]
        basis = self.zeros(cols, len(free))
        for k, f in enumerate(free):
            basis[f, k] = 1
            for j, p in enumerate(pivots):
                basis[p, k] = self.normalize(np.array([-r[j, f]], dtype=self.dtype))[0]
        return basis

    def column_space(self, a):
        """Basis of the column space, as a subset of the columns of *a*."""
        a = np.asarray(a, dtype=self.dtype)
        if a.size == 0:
            return self.zeros(a.shape[0], 0)
        _, pivots = self.rref(a)
        return a[:, pivots]

    def solve(self, a, b):
        """Return one solution *x* of *a x = b*, or *None* if none exists.

        *b* may be a vector or a matrix.
        """
        a = np.asarray(a, dtype=self.dtype)
        b = np.asarray(b, dtype=self.dtype)
        vector = b.ndim == 1
        if vector:
            b = b.reshape(-1, 1)
        rows, cols = a.shape
        if rows == 0:
            x = self.zeros(cols, b.shape[1])
            return x[:, 0] if vector else x
        r, pivots = self.rref(np.hstack([a, b]))
        if any(p >= cols for p in pivots):
            return None
        x = self.zeros(cols, b.shape[1])
        for j, p in enumerate(pivots):
            x[p] = r[j, cols:]
        return x[:, 0] if vector else x

    def inverse(self, a):
        a = np.asarray(a, dtype=self.dtype)
        n, m = a.shape
        if n != m:
            raise SingularMatrix(culprit=f'{n}×{m}')
        x = self.solve(a, self.identity(n))
        if x is None or not self.equal(self.matmul(a, x), self.identity(n)):
            raise SingularMatrix()
        return x

    def is_invertible(self, a):
        a = np.asarray(a)
        return a.ndim == 2 and a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]

    def in_span(self, vectors, target):
        """Coefficients expressing *target* in terms of *vectors*, or *None*.

        Both *vectors* and *target* are flattened before solving.
        """
        target = np.asarray(target, dtype=self.dtype).reshape(-1)
        if not vectors:
            return [] if self.is_zero(target) else None
        a = np.column_stack([np.asarray(v, dtype=self.dtype).reshape(-1) for v in vectors])
        x = self.solve(a, target)
        return None if x is None else list(x)

    # sampling {{{2
    def coefficient_vectors(self, k, limit, seed, attempts):
        """Nonzero coefficient vectors of length *k*.

        Every vector is generated when the field is finite and it has at most
        *limit* of them, otherwise a seeded random sample is drawn.
        """
        if self.order and self.order ** k <= limit:
            elements = [self.scalar(e) for e in range(self.order)]
            for combo in itertools.product(elements, repeat=k):
                if any(combo):
                    yield list(combo)
            return
        rng = np.random.default_rng(seed)
        for i in range(k):
            yield [self.scalar(int(i == j)) for j in range(k)]
        for _ in range(attempts):
            values = rng.integers(-3, 4, size=k) if self.order is None else \
                rng.integers(0, self.order, size=k)
            yield [self.scalar(int(v)) for v in values]


# PrimeField {{{1
class PrimeField(Field):
    """The field with *p* elements."""

    dtype = np.int64

    def __init__(self, p):
        self.p = p
        self.order = p
        self.name = f'F{p}'

    def normalize(self, a):
        return np.mod(np.asarray(a, dtype=np.int64), self.p)

    def inv(self, x):
        x = int(x) % self.p
        if not x:
            raise SingularMatrix(culprit='0')
        return pow(x, self.p - 2, self.p)


# RationalField {{{1
_to_fraction = np.vectorize(Fraction, otypes=[object])


class RationalField(Field):
    """The rational numbers, with exact :class:`fractions.Fraction` entries."""

    dtype = object
    name = 'Q'

    def normalize(self, a):
        a = np.asarray(a, dtype=object)
        if a.size == 0:
            return a
        return _to_fraction(a)

    def inv(self, x):
        if x == 0:
            raise SingularMatrix(culprit='0')
        return 1 / Fraction(x)


# make_field {{{1
def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@lru_cache(maxsize=None)
def make_field(name):
    """Return the field named *name*: ``'Q'`` or ``'F<p>'``.

    :raises FieldError(GentleError, ValueError):
        *name* does not describe a supported field.
    """
    text = str(name).strip()
    if text.upper() in ('Q', 'QQ', 'RATIONALS'):
        return RationalField()
    if text[:1].upper() == 'F' and text[1:].isdigit() and _is_prime(int(text[1:])):
        return PrimeField(int(text[1:]))
    raise FieldError(name)


# find_invertible {{{1
def find_invertible(basis, combine, is_invertible, field=None):
    """Search the span of *basis* for an invertible element.

    *combine* maps a list of coefficients to the corresponding element and
    *is_invertible* decides invertibility.  The search is exhaustive when the
    span is small (see the *exhaustive_limit* preference), otherwise it draws
    seeded random combinations.  Returns the element found or *None*.
    """
    if not basis:
        return None
    field = field or Settings.field()
    vectors = field.coefficient_vectors(
        len(basis),
        Settings.get_pref('exhaustive_limit'),
        Settings.get_pref('seed'),
        Settings.get_pref('max_attempts'),
    )
    for coefficients in vectors:
        candidate = combine(coefficients)
        if is_invertible(candidate):
            return candidate
    return None
