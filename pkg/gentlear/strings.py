# encoding: utf8

# Description {{{1
"""
Walks, strings and bands.

A :class:`Walk` is a word in arrows and formal inverse arrows, stored in
composition order: the first letter is nearest the target of the walk.
Trivial walks carry a vertex and a sign.  Walks work over any object that
offers the quiver incidence protocol, so the same class serves the base
quiver and the repetitive quiver.

Literal syntax: letters separated by spaces, an inverse letter carries a
trailing ``-``; a trivial walk is written ``1:(x,+)`` or ``1:(x,-)``::

    >>> from gentlear import bundled, parse_walk, is_string, string_compose
    >>> q3 = bundled('Q3')
    >>> w = parse_walk(q3, 'a b-')
    >>> print(w, w.t, w.s, w.T, w.S)
    a b- 2 2 1 -1
    >>> is_string(w)
    True
    >>> q1 = bundled('Q1')
    >>> print(string_compose(parse_walk(q1, 'a'), parse_walk(q1, '1:(1,+)')))
    a
    >>> print(string_compose(parse_walk(q1, 'a'), parse_walk(q1, '1:(1,-)')))
    None

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
from .core import IdentityFailure, IndexOutOfRange, WalkError


# Letter {{{1
class Letter(namedtuple('Letter', 'arrow inverse')):
    """An arrow or its formal inverse."""
    __slots__ = ()

    def flipped(self):
        return Letter(self.arrow, not self.inverse)


def _sign_text(sign):
    return '+' if sign > 0 else '-'


# Walk {{{1
class Walk:
    """A word in arrows and inverse arrows over a quiver.

    :arg quiver:
        Any object with the quiver incidence protocol.
    :arg letters:
        Sequence of :class:`Letter` (or *(arrow, inverse)* pairs) in
        composition order.
    :arg vertex:
        The vertex of a trivial walk.
    :arg int sign:
        The sign (±1) of a trivial walk.

    :raises WalkError(GentleError, ValueError):
        consecutive letters do not compose or a trivial walk lacks its data.
    """

    def __init__(self, quiver, letters=(), vertex=None, sign=None):
        self.quiver = quiver
        self.letters = tuple(Letter(*l) for l in letters)
        if self.letters:
            for left, right in zip(self.letters, self.letters[1:]):
                if self.letter_source(left) != self.letter_target(right):
                    raise WalkError('letters do not compose', culprit=self._text())
            self.vertex = None
            self.sign = None
        else:
            if vertex is None or sign not in (1, -1):
                raise WalkError('trivial walk needs a vertex and a sign')
            self.vertex = vertex
            self.sign = sign

    # constructors {{{2
    @classmethod
    def trivial(cls, quiver, vertex, sign):
        return cls(quiver, (), vertex, sign)

    @classmethod
    def of_arrows(cls, quiver, arrows):
        """The walk of a path given by its arrows in composition order."""
        return cls(quiver, [Letter(a, False) for a in arrows])

    def _new(self, letters=(), vertex=None, sign=None):
        return type(self)(self.quiver, letters, vertex, sign)

    def recast(self, cls):
        """The same walk as an instance of *cls*."""
        return cls(self.quiver, self.letters, self.vertex, self.sign)

    # letter helpers {{{2
    def letter_source(self, letter):
        q = self.quiver
        return q.target(letter.arrow) if letter.inverse else q.source(letter.arrow)

    def letter_target(self, letter):
        q = self.quiver
        return q.source(letter.arrow) if letter.inverse else q.target(letter.arrow)

    def letter_S(self, letter):
        q = self.quiver
        return q.T(letter.arrow) if letter.inverse else q.S(letter.arrow)

    def letter_T(self, letter):
        q = self.quiver
        return q.S(letter.arrow) if letter.inverse else q.T(letter.arrow)

    # basic attributes {{{2
    @property
    def length(self):
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    @property
    def is_trivial(self):
        return not self.letters

    @property
    def t(self):
        return self.letter_target(self.letters[0]) if self.letters else self.vertex

    @property
    def s(self):
        return self.letter_source(self.letters[-1]) if self.letters else self.vertex

    @property
    def S(self):
        return self.letter_S(self.letters[-1]) if self.letters else self.sign

    @property
    def T(self):
        return self.letter_T(self.letters[0]) if self.letters else -self.sign

    def letter(self, i):
        """The letter α_i, counting from 1."""
        if not 1 <= i <= len(self.letters):
            raise IndexOutOfRange(i, bound=len(self.letters))
        return self.letters[i-1]

    @property
    def vertices(self):
        """Vertex at every position; position 0 is *t*, position ℓ is *s*."""
        if not self.letters:
            return [self.vertex]
        return [self.t] + [self.letter_source(l) for l in self.letters]

    @property
    def is_direct(self):
        """True for positive length walks made of arrows only."""
        return bool(self.letters) and not any(l.inverse for l in self.letters)

    @property
    def is_inverse_direct(self):
        """True for positive length walks made of inverse arrows only."""
        return bool(self.letters) and all(l.inverse for l in self.letters)

    @property
    def arrows(self):
        return tuple(l.arrow for l in self.letters)

    def inverse(self):
        if not self.letters:
            return self._new((), self.vertex, -self.sign)
        return self._new([l.flipped() for l in reversed(self.letters)])

    def concat(self, other):
        """Raw concatenation of two positive length walks (no validity test)."""
        return self._new(self.letters + other.letters)

    # identity {{{2
    def _identity(self):
        return (self.letters, self.vertex, self.sign)

    def __eq__(self, other):
        if not isinstance(other, Walk):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self):
        return hash(self._identity())

    def sort_key(self):
        """Length first, then lexicographic by arrow order, arrows first."""
        q = self.quiver
        if not self.letters:
            return (0, (q.vertex_key(self.vertex), 0 if self.sign > 0 else 1))
        return (len(self.letters), tuple((q.arrow_key(l.arrow), l.inverse) for l in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    # rendering {{{2
    def _text(self):
        if not self.letters:
            return f'1:({self.vertex},{_sign_text(self.sign)})'
        name = self.quiver.arrow_name
        return ' '.join(name(l.arrow) + ('-' if l.inverse else '') for l in self.letters)

    def __str__(self):
        return self._text()

    def __repr__(self):
        return f"{self.__class__.__name__}('{self._text()}')"


# parse_walk {{{1
_TRIVIAL = re.compile(r"1:\((?P<vertex>[^,()]+),\s*(?P<sign>[-+−]|[-+]?1)\)$")


def parse_walk(quiver, text, cls=Walk):
    """Read a walk literal.

    The quiver resolves arrow and vertex names through its *parse_arrow* and
    *parse_vertex* methods when it has them.

    :raises WalkError(GentleError, ValueError):
        the literal is malformed or names unknown arrows or vertices.
    """
    text = text.strip()
    match = _TRIVIAL.match(text)
    parse_vertex = getattr(quiver, 'parse_vertex', None)
    parse_arrow = getattr(quiver, 'parse_arrow', None)
    if match:
        vertex = match.group('vertex').strip()
        if parse_vertex:
            vertex = parse_vertex(vertex)
        elif not quiver.has_vertex(vertex):
            raise WalkError('unknown vertex', culprit=vertex)
        sign = -1 if match.group('sign') in ('-', '−', '-1') else 1
        return cls(quiver, (), vertex, sign)
    if not text:
        raise WalkError('empty walk literal')
    letters = []
    for token in text.split():
        inverse = token.endswith(('-', '⁻'))
        name = token[:-1] if inverse else token
        if parse_arrow:
            arrow = parse_arrow(name)
        elif quiver.has_arrow(name):
            arrow = name
        else:
            raise WalkError('unknown arrow', culprit=name)
        letters.append(Letter(arrow, inverse))
    return cls(quiver, letters)


# Direction runs {{{1
def direction_runs(w):
    """Split a walk into maximal runs of letters with the same direction.

    Returns a list of *(start, stop)* index pairs.
    """
    runs = []
    start = 0
    for i in range(1, len(w.letters) + 1):
        if i == len(w.letters) or w.letters[i].inverse != w.letters[start].inverse:
            runs.append((start, i))
            start = i
    return runs


def run_is_path(w, start, stop):
    """True when letters *start:stop* (one direction) form a path or inverse path."""
    letters = w.letters[start:stop]
    arrows = tuple(l.arrow for l in letters)
    if letters[0].inverse:
        arrows = arrows[::-1]
    return w.quiver.is_path(arrows)


def has_backtrack(w):
    return any(
        a.arrow == b.arrow and a.inverse != b.inverse
        for a, b in zip(w.letters, w.letters[1:])
    )


# is_string {{{1
def is_string(w):
    """True if *w* is a string: no backtracks, no relations or inverse relations."""
    if w.is_trivial:
        return True
    if has_backtrack(w):
        return False
    return all(run_is_path(w, a, b) for a, b in direction_runs(w))


def is_simple(w):
    """Trivial walks and paths of positive length."""
    return w.is_trivial or (w.is_direct and is_string(w))


def is_directed(w):
    return is_simple(w) or is_simple(w.inverse())


# string_compose {{{1
def string_compose(left, right):
    """Compose strings; returns *None* where the composition is undefined.

    Positive length strings compose when their concatenation is a string.
    ``ω·1_{x,ε}`` is defined iff *x = sω* and *ε = Sω*; ``1_{x,ε}·ω`` is
    defined iff *x = tω* and *ε = −Tω*.
    """
    if right.is_trivial:
        if right.vertex == left.s and right.sign == left.S:
            return left
        return None
    if left.is_trivial:
        if left.vertex == right.t and left.sign == -right.T:
            return right
        return None
    if left.s != right.t:
        return None
    result = left.concat(right)
    if not is_string(result):
        return None
    if left.S != -right.T:
        raise IdentityFailure(
            'composable strings with S = T', culprit=f'{left} · {right}'
        )
    return result


def compose_all(compose, *walks):
    """Fold a composition over several walks; *None* propagates."""
    result = walks[0]
    for w in walks[1:]:
        if result is None:
            return None
        result = compose(result, w)
    return result


# invert and substrings {{{1
def invert(w):
    return w.inverse()


def substring_t(w, i):
    """ω_{[i]}: the prefix of length *i*; ω_{[0]} = 1_{tω,−Tω}."""
    if not 0 <= i <= w.length:
        raise IndexOutOfRange(i, bound=w.length)
    if i == 0:
        return w._new((), w.t, -w.T)
    return w._new(w.letters[:i])


def substring_s(w, i):
    """_{[i]}ω: the suffix of length *ℓ − i*; _{[ℓ]}ω = 1_{sω,Sω}."""
    if not 0 <= i <= w.length:
        raise IndexOutOfRange(i, bound=w.length)
    if i == w.length:
        return w._new((), w.s, w.S)
    return w._new(w.letters[i:])


# bands {{{1
def power(w, n):
    return w._new(w.letters * n)


def is_primitive(w):
    n = len(w.letters)
    for d in range(1, n):
        if n % d == 0 and w.letters[:d] * (n // d) == w.letters:
            return False
    return True


def _powers_are(w, test):
    # a forbidden factor spans at most max_relation_length letters, so a
    # bounded number of copies covers every factor of every power
    copies = 2 + w.quiver.max_relation_length // max(len(w.letters), 1)
    return test(power(w, copies))


def is_band(w):
    """True if *w* is a band.

    >>> from gentlear import bundled, parse_walk, is_band
    >>> q3 = bundled('Q3')
    >>> is_band(parse_walk(q3, 'a b-')), is_band(parse_walk(q3, 'a b- a b-'))
    (True, False)

    """
    if w.is_trivial or w.s != w.t:
        return False
    first, last = w.letters[0], w.letters[-1]
    if first.inverse == last.inverse:
        return False
    if not _powers_are(w, is_string):
        return False
    return is_primitive(w)


# simple strings and sign tables {{{1
def simple_strings_from(quiver, x, eps, cls=Walk):
    """Σ_{x,ε}: simple strings σ with *sσ = x*, *Sσ = ε*, by increasing length."""
    result = [cls(quiver, (), x, eps)]
    frontier = [(a,) for a in quiver.arrows_from(x) if quiver.S(a) == eps]
    while frontier:
        result.extend(cls.of_arrows(quiver, p) for p in frontier)
        longer = []
        for p in frontier:
            for b in quiver.arrows_from(quiver.target(p[0])):
                if quiver.is_path((b,) + p):
                    longer.append((b,) + p)
        frontier = longer
    return result


def simple_strings_into(quiver, x, eps, cls=Walk):
    """Σ′_{x,ε}: simple strings σ with *tσ = x*, *Tσ = ε*, by increasing length."""
    result = [cls(quiver, (), x, -eps)]
    frontier = [(a,) for a in quiver.arrows_to(x) if quiver.T(a) == eps]
    while frontier:
        result.extend(cls.of_arrows(quiver, p) for p in frontier)
        longer = []
        for p in frontier:
            for b in quiver.arrows_to(quiver.source(p[-1])):
                if quiver.is_path(p + (b,)):
                    longer.append(p + (b,))
        frontier = longer
    return result


def _longest(strings, culprit):
    top = max(s.length for s in strings)
    best = [s for s in strings if s.length == top]
    if len(best) != 1:
        raise IdentityFailure('maximal simple string is not unique', culprit=culprit)
    return best[0]


def sigma(quiver, x, eps, cls=Walk):
    """σ_{x,ε}, the longest member of Σ_{x,ε}."""
    return _longest(simple_strings_from(quiver, x, eps, cls), f'Σ({x},{eps})')


def sigma_prime(quiver, x, eps, cls=Walk):
    """σ′_{x,ε}, the longest member of Σ′_{x,ε}."""
    return _longest(simple_strings_into(quiver, x, eps, cls), f"Σ′({x},{eps})")


def alpha(quiver, x, eps):
    """α_{x,ε}: the arrow in Σ_{x,ε}, or *None*."""
    found = [a for a in quiver.arrows_from(x) if quiver.S(a) == eps]
    return found[0] if found else None


def alpha_prime(quiver, x, eps):
    """α′_{x,ε}: the arrow in Σ′_{x,ε}, or *None*."""
    found = [a for a in quiver.arrows_to(x) if quiver.T(a) == eps]
    return found[0] if found else None


class SignTable:
    """The Σ, Σ′, α, α′, σ and σ′ tables of a finite quiver.

    Entries are looked up with the vertex and the sign, for example
    ``table.sigma[x, 1]``.

    >>> from gentlear import bundled, sign_table
    >>> table = sign_table(bundled('Q2'))
    >>> print(table.sigma['1', 1], table.alpha['2', 1])
    a b

    """

    def __init__(self, quiver):
        self.quiver = quiver
        self.Sigma, self.Sigma_prime = {}, {}
        self.alpha, self.alpha_prime = {}, {}
        self.sigma, self.sigma_prime = {}, {}
        for x in quiver.vertices:
            for eps in (1, -1):
                key = (x, eps)
                self.Sigma[key] = simple_strings_from(quiver, x, eps)
                self.Sigma_prime[key] = simple_strings_into(quiver, x, eps)
                self.alpha[key] = alpha(quiver, x, eps)
                self.alpha_prime[key] = alpha_prime(quiver, x, eps)
                self.sigma[key] = _longest(self.Sigma[key], f'Σ({x},{eps})')
                self.sigma_prime[key] = _longest(self.Sigma_prime[key], f"Σ′({x},{eps})")

    def is_chain(self):
        """True if every Σ and Σ′ is totally ordered by extension."""
        for table, prefix in ((self.Sigma, False), (self.Sigma_prime, True)):
            for strings in table.values():
                for shorter, longer in zip(strings[1:], strings[2:]):
                    if prefix:
                        ok = longer.letters[:shorter.length] == shorter.letters
                    else:
                        ok = longer.letters[-shorter.length:] == shorter.letters
                    if not ok:
                        return False
                if len({s.length for s in strings}) != len(strings):
                    return False
        return True


def sign_table(quiver):
    return SignTable(quiver)
